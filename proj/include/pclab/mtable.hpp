#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "pclab/coeff.hpp"
#include "pclab/series.hpp"

namespace pclab {

/*
 * The matrix M = (m_{i,j}).  Rows 1..7 (columns up to 14) are seeded from the
 * printed tables; everything beyond comes from the ten-term recurrence
 *
 *   m_{i,j} = 7 m_{i-3,j-1} + 35 m_{i-2,j-1} + 49 m_{i-1,j-1}
 *           + m_{i-7,j-2} + 7 m_{i-6,j-2} + 21 m_{i-5,j-2} + 49 m_{i-4,j-2}
 *           + 147 m_{i-3,j-2} + 343 m_{i-2,j-2} + 343 m_{i-1,j-2}
 *
 * with out-of-range indices contributing 0.  Two structural facts cut the
 * computed region down to the wedge i/4 < j <= 2i:
 *   - j > 2i  => m_{i,j} = 0: true on the seed rows, and the recurrence only
 *     references (i', j') with j' > 2i' there, so it propagates.
 *   - i >= 4j => m_{i,j} = 0: the stated boundary columns (m_{i,1} = 0 for
 *     i >= 4, m_{i,2} = 0 for i >= 8) extend column by column the same way.
 *
 * Growth is single-writer; share a populated table across threads read-only.
 */
class MTable {
public:
    MTable();

    // m_{i,j}; computes and caches on demand.  Any integer indices accepted
    // (zero outside the support wedge).
    const Coefficient& at(long i, long j);

    // The recurrence path by itself, for rows beyond the seeds.  Rejects
    // i <= 7 (those are seeds, not recurrence values).  j <= 2 returns the
    // stated boundary zeroes.
    Coefficient recurrence_value(long i, long j);

    // Replaces an entry (series-derived values are authoritative when a
    // printed seed disagrees).
    void set_entry(long i, long j, Coefficient v);

    // floor((7j - 2i - 1) / 4), the valuation floor for m_{i,j}.
    static long pi_lower_bound(long i, long j);

    // Every explicitly stored entry (seeds plus recurrence results).
    struct Entry {
        long i;
        long j;
        const Coefficient* value;
    };
    std::vector<Entry> computed_entries() const;

    std::size_t computed_count() const { return entries_.size() + seed_count_; }

private:
    bool trivially_zero(long i, long j) const;
    bool known(long i, long j) const;
    const Coefficient& lookup(long i, long j) const;
    void compute(long i, long j);

    static std::uint64_t pack(long i, long j);

    std::unordered_map<std::uint64_t, Coefficient> entries_;
    std::vector<std::vector<Coefficient>> seed_;  // rows 1..7, cols 1..14
    std::size_t seed_count_ = 0;
};

// Ground-truth derivation of one row from the huffing identity
// H(q^{2i} f49^i / f1^i) = sum_j m_{i,j} q^{7j} f49^{4j} / f7^{4j}:
// huff the compiled left side, substitute q^7 -> q, and read the m_{i,j}
// off the triangular basis q^j f7^{4j}/f1^{4j}.  With jmax >= 2i a zero
// final residual confirms the row support.
struct MRowDerivation {
    long i = 0;
    std::vector<Coefficient> values;  // m_{i,1..jmax}
    bool residual_zero = false;
    std::optional<std::size_t> stray_exponent;
};

MRowDerivation derive_m_row_from_series(long i, long jmax, std::size_t N);

// Precision the derivation wants for a given jmax.
std::size_t derivation_precision(long jmax);

// Expansion checks for the three huffing identities
//   H(q^{i+2} f7^{4i}  / f1^{4i+1}) = sum_j m_{4i+1,i+j} q^{7j} f49^{4j-1}/f7^{4j}
//   H(q^{i+4} f7^{4i}  / f1^{4i+2}) = sum_j m_{4i+2,i+j} q^{7j} f49^{4j-2}/f7^{4j}
//   H(q^{i}   f7^{4i}  / f1^{4i})   = sum_j m_{4i,i+j}   q^{7j} f49^{4j}  /f7^{4j}
enum class HuffVariant { FourIPlusOne, FourIPlusTwo, FourI };

const char* huff_variant_name(HuffVariant v);

struct HuffLemmaCheck {
    bool pass = false;
    // exponent of q in the original (pre-substitution) series
    std::optional<std::size_t> first_mismatch_exponent;
};

HuffLemmaCheck verify_huff_lemma(HuffVariant v, long i, std::size_t N, MTable& m);

}  // namespace pclab
