#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pclab/coeff.hpp"
#include "pclab/mtable.hpp"
#include "pclab/partition.hpp"

namespace pclab {

/*
 * On-disk table cache.  One file per (kind, parameters, format version),
 * decimal values one per line, with a header recording the generator config.
 * A version or parameter mismatch means the file is ignored and recomputed;
 * there is no partial reuse across differing extents.
 */
struct CacheKey {
    std::string kind;  // "partition" | "twocolor"
    long ell = 0;      // twocolor only
    long nmax = 0;
    unsigned mod_w = 0;  // 0 = exact values

    std::string filename() const;
};

// PCLAB_CACHE overrides any configured directory; empty result disables caching.
std::filesystem::path resolve_cache_dir(const std::string& configured);

std::optional<std::vector<Coefficient>> cache_load(const std::filesystem::path& dir,
                                                   const CacheKey& key);
void cache_store(const std::filesystem::path& dir, const CacheKey& key,
                 const std::vector<Coefficient>& values, const std::string& config_note);

// Cached table builders; with an empty dir they just compute.
PartitionTable partition_table_cached(const std::filesystem::path& dir, long nmax,
                                      const std::string& config_note);
ModTwoColorTable two_color_mod_cached(const std::filesystem::path& dir, long ell,
                                      long nmax, unsigned w,
                                      const std::string& config_note);

// ---- exports ----

// CSV with a header row; entries in plain decimal.
void export_mtable_csv(MTable& m, long imax, long jmax, std::ostream& out);
// Text report in the factored c*7^e style of the printed tables.
void export_mtable_factored(MTable& m, long imax, long jmax, std::ostream& out);
// JSON: values as decimal strings (they outgrow native numbers fast).
void export_mtable_json(MTable& m, long imax, long jmax, std::ostream& out);

void export_values_csv(const std::vector<Coefficient>& values, const std::string& column,
                       std::ostream& out);
void export_values_json(const std::vector<Coefficient>& values, const std::string& name,
                        std::ostream& out);

}  // namespace pclab
