#pragma once

#include <cstddef>
#include <string>

#include "pclab/mtable.hpp"
#include "pclab/partition.hpp"
#include "pclab/report.hpp"

namespace pclab {

struct RunConfig {
    enum class Profile { Quick, Full, Custom };

    Profile profile = Profile::Quick;
    std::size_t precision = 150;  // N for series comparisons
    long nmax = 50000;            // argument bound for congruence scans
    long gf_nmax = 100000;        // oracle extent for the identity checks
    unsigned kmin = 1;
    unsigned kmax = 2;
    unsigned betamin = 0;
    unsigned betamax = 1;
    unsigned val_betamax = 2;     // valuation sweeps go one deeper
    long val_jmax = 6;
    long mtable_imax = 12;
    long mtable_jmax = 14;
    unsigned jobs = 0;            // 0 = hardware concurrency
    std::string cache_dir;

    static RunConfig quick();
    static RunConfig full();
    std::string note() const;  // one-line description for cache headers
};

/*
 * Verification suites.  Each appends CHECK lines to the reporter and returns
 * whether it added no FAIL.  The shared PartitionTable pointer lets run-all
 * build the exact oracle once; suites build their own when given nullptr.
 */
bool run_mtable_suite(const RunConfig& cfg, MTable& m, Reporter& rep);
bool run_lemmas_suite(const RunConfig& cfg, MTable& m, Reporter& rep);
bool run_gf_suite(const RunConfig& cfg, MTable& m, Reporter& rep,
                  const PartitionTable* shared_p = nullptr);
bool run_congruence_suite(const RunConfig& cfg, Reporter& rep,
                          const PartitionTable* shared_p = nullptr);
bool run_valuation_suite(const RunConfig& cfg, MTable& m, Reporter& rep);
bool run_all_suites(const RunConfig& cfg, MTable& m, Reporter& rep);

}  // namespace pclab
