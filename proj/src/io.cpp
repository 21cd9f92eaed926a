#include "pclab/io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace pclab {

namespace {

constexpr const char* kCacheMagic = "pclab-table-cache";
constexpr int kCacheVersion = 1;

}  // namespace

std::string CacheKey::filename() const
{
    std::ostringstream name;
    name << kind;
    if (kind == "twocolor")
        name << "-ell" << ell;
    name << "-n" << nmax << "-m" << mod_w << ".v" << kCacheVersion << ".txt";
    return name.str();
}

std::filesystem::path resolve_cache_dir(const std::string& configured)
{
    if (const char* env = std::getenv("PCLAB_CACHE"); env && *env)
        return env;
    return configured;
}

std::optional<std::vector<Coefficient>> cache_load(const std::filesystem::path& dir,
                                                   const CacheKey& key)
{
    if (dir.empty())
        return std::nullopt;
    std::ifstream in(dir / key.filename());
    if (!in)
        return std::nullopt;

    std::string magic;
    int version = 0;
    in >> magic >> version;
    if (magic != kCacheMagic || version != kCacheVersion)
        return std::nullopt;  // stale format: recompute, never trust

    std::string field, kind;
    long ell = 0, nmax = -1;
    unsigned mod_w = 0;
    in >> field >> kind;
    if (field != "kind" || kind != key.kind)
        return std::nullopt;
    if (key.kind == "twocolor") {
        in >> field >> ell;
        if (field != "ell" || ell != key.ell)
            return std::nullopt;
    }
    in >> field >> nmax;
    if (field != "nmax" || nmax != key.nmax)
        return std::nullopt;
    in >> field >> mod_w;
    if (field != "mod" || mod_w != key.mod_w)
        return std::nullopt;
    std::string line;
    std::getline(in, line);  // rest of the mod line
    std::getline(in, line);  // generator note
    std::getline(in, line);
    if (line != "values")
        return std::nullopt;

    std::vector<Coefficient> values;
    values.reserve(static_cast<std::size_t>(nmax) + 1);
    std::string tok;
    while (in >> tok)
        values.emplace_back(tok);
    if (values.size() != static_cast<std::size_t>(nmax) + 1)
        return std::nullopt;
    return values;
}

void cache_store(const std::filesystem::path& dir, const CacheKey& key,
                 const std::vector<Coefficient>& values, const std::string& config_note)
{
    if (dir.empty())
        return;
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    std::ofstream out(dir / key.filename());
    if (!out)
        return;  // caching is best-effort; computation already succeeded
    out << kCacheMagic << " " << kCacheVersion << "\n";
    out << "kind " << key.kind << "\n";
    if (key.kind == "twocolor")
        out << "ell " << key.ell << "\n";
    out << "nmax " << key.nmax << "\n";
    out << "mod " << key.mod_w << "\n";
    out << "generator " << config_note << "\n";
    out << "values\n";
    for (const auto& v : values)
        out << v.get_str() << "\n";
}

PartitionTable partition_table_cached(const std::filesystem::path& dir, long nmax,
                                      const std::string& config_note)
{
    CacheKey key{"partition", 0, nmax, 0};
    if (auto cached = cache_load(dir, key)) {
        PartitionTable t;
        t.values = std::move(*cached);
        return t;
    }
    PartitionTable t = partition_count(nmax);
    cache_store(dir, key, t.values, config_note);
    return t;
}

ModTwoColorTable two_color_mod_cached(const std::filesystem::path& dir, long ell,
                                      long nmax, unsigned w,
                                      const std::string& config_note)
{
    CacheKey key{"twocolor", ell, nmax, w};
    if (auto cached = cache_load(dir, key)) {
        ModTwoColorTable t;
        t.ell = ell;
        t.w = w;
        t.modulus = 1;
        for (unsigned i = 0; i < w; ++i)
            t.modulus *= 7;
        t.values.reserve(cached->size());
        for (const auto& v : *cached)
            t.values.push_back(v.get_ui());
        return t;
    }
    ModTwoColorTable t = two_color_count_mod(ell, nmax, w);
    std::vector<Coefficient> values;
    values.reserve(t.values.size());
    for (auto v : t.values)
        values.emplace_back(static_cast<unsigned long>(v));
    cache_store(dir, key, values, config_note);
    return t;
}

void export_mtable_csv(MTable& m, long imax, long jmax, std::ostream& out)
{
    out << "i\\j";
    for (long j = 1; j <= jmax; ++j)
        out << "," << j;
    out << "\n";
    for (long i = 1; i <= imax; ++i) {
        out << i;
        for (long j = 1; j <= jmax; ++j)
            out << "," << m.at(i, j).get_str();
        out << "\n";
    }
}

void export_mtable_factored(MTable& m, long imax, long jmax, std::ostream& out)
{
    for (long i = 1; i <= imax; ++i) {
        out << "row " << i << ":";
        for (long j = 1; j <= jmax; ++j)
            out << " " << factored7(m.at(i, j));
        out << "\n";
    }
}

void export_mtable_json(MTable& m, long imax, long jmax, std::ostream& out)
{
    nlohmann::json rows = nlohmann::json::array();
    for (long i = 1; i <= imax; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (long j = 1; j <= jmax; ++j)
            row.push_back(m.at(i, j).get_str());
        rows.push_back(std::move(row));
    }
    out << nlohmann::json{{"imax", imax}, {"jmax", jmax}, {"entries", rows}}.dump(2)
        << "\n";
}

void export_values_csv(const std::vector<Coefficient>& values, const std::string& column,
                       std::ostream& out)
{
    out << "n," << column << "\n";
    for (std::size_t n = 0; n < values.size(); ++n)
        out << n << "," << values[n].get_str() << "\n";
}

void export_values_json(const std::vector<Coefficient>& values, const std::string& name,
                        std::ostream& out)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& v : values)
        arr.push_back(v.get_str());
    out << nlohmann::json{{name, arr}}.dump(2) << "\n";
}

}  // namespace pclab
