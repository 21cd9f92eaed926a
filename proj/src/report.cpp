#include "pclab/report.hpp"

#include <ostream>

#include "json.hpp"

namespace pclab {

const char* check_status_name(CheckStatus s)
{
    switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Warn: return "WARN";
    }
    return "?";
}

void Reporter::add(const std::string& id, CheckStatus status, const std::string& detail)
{
    lines_.push_back({id, status, detail});
    if (live_) {
        *live_ << "CHECK " << id << " " << check_status_name(status);
        if (!detail.empty())
            *live_ << " " << detail;
        *live_ << "\n" << std::flush;
    }
}

bool Reporter::all_pass() const
{
    return fail_count() == 0;
}

long Reporter::fail_count() const
{
    long n = 0;
    for (const auto& l : lines_)
        if (l.status == CheckStatus::Fail)
            ++n;
    return n;
}

long Reporter::warn_count() const
{
    long n = 0;
    for (const auto& l : lines_)
        if (l.status == CheckStatus::Warn)
            ++n;
    return n;
}

void Reporter::print(std::ostream& out) const
{
    for (const auto& l : lines_) {
        out << "CHECK " << l.id << " " << check_status_name(l.status);
        if (!l.detail.empty())
            out << " " << l.detail;
        out << "\n";
    }
}

std::string Reporter::json() const
{
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& l : lines_) {
        checks.push_back({{"id", l.id},
                          {"status", check_status_name(l.status)},
                          {"detail", l.detail}});
    }
    nlohmann::json doc = {
        {"checks", checks},
        {"summary",
         {{"total", size()},
          {"fail", fail_count()},
          {"warn", warn_count()},
          {"pass", size() - fail_count() - warn_count()}}},
    };
    return doc.dump(2);
}

}  // namespace pclab
