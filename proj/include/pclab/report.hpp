#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pclab {

enum class CheckStatus { Pass, Fail, Warn };

const char* check_status_name(CheckStatus s);

/*
 * Collects check outcomes and renders them as the one-line-per-check stream
 *   CHECK <id> <PASS|FAIL|WARN> [detail]
 * plus a JSON mirror.  WARN never affects all_pass().  With a live stream
 * attached, lines print as they arrive; all printing happens on the thread
 * calling add().
 */
class Reporter {
public:
    explicit Reporter(std::ostream* live = nullptr) : live_(live) {}

    void add(const std::string& id, CheckStatus status, const std::string& detail = "");

    bool all_pass() const;
    long fail_count() const;
    long warn_count() const;
    long size() const { return static_cast<long>(lines_.size()); }

    void print(std::ostream& out) const;

    // array of {id, status, detail} plus a summary object, as a JSON string
    std::string json() const;

    struct Line {
        std::string id;
        CheckStatus status;
        std::string detail;
    };
    const std::vector<Line>& lines() const { return lines_; }

private:
    std::vector<Line> lines_;
    std::ostream* live_;
};

}  // namespace pclab
