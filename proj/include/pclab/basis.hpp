#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pclab/series.hpp"

namespace pclab {

/*
 * The generating functions in play are all combinations of one family of
 * eta-quotient terms,
 *
 *     t_j = q^{j-1+qshift} * f7^{4j+num_off} / f1^{4j+den_off},   j >= 1,
 *
 * and consecutive terms differ by the fixed ratio q * f7^4 / f1^4.  The
 * ladder expands terms on demand and caches them.
 */
class QuotientLadder {
public:
    QuotientLadder(int num_off, int den_off, std::size_t qshift, std::size_t N);

    // 1-based; terms whose leading exponent j-1+qshift reaches N are zero
    // to precision and still returned as such.
    const TruncatedSeries& term(std::size_t j);

    std::size_t precision() const noexcept { return n_; }
    std::size_t qshift() const noexcept { return qshift_; }

private:
    std::size_t n_;
    std::size_t qshift_;
    TruncatedSeries ratio_;
    std::vector<TruncatedSeries> terms_;
};

// sum_j coeffs[j-1] * t_j, truncated to the ladder precision.
TruncatedSeries ladder_sum(QuotientLadder& ladder, const std::vector<Coefficient>& coeffs);

// Reads v_1..v_jmax off S = sum_j v_j t_j by triangular elimination: t_j has
// leading coefficient 1 at exponent j-1+qshift, so each pivot is read from the
// running residual and cleared.  Coefficients of S below the first pivot must
// vanish; `stray_exponent` reports the first one that does not.
// `residual_zero` tells whether anything of S remains after jmax pivots.
struct EliminationResult {
    std::vector<Coefficient> values;
    bool residual_zero = false;
    std::optional<std::size_t> stray_exponent;
};

EliminationResult eliminate_on_ladder(const TruncatedSeries& S, QuotientLadder& ladder,
                                      std::size_t jmax);

// The five right-hand-side shapes used throughout: terms carry
// q^{j-1} * f7^{4j+num_off} / f1^{4j+den_off} with the offsets below.
enum class SeriesId { H1, H2, G1, G3, G4 };

struct ShapeOffsets {
    int num_off;
    int den_off;
};

ShapeOffsets shape_offsets(SeriesId id);

const char* series_id_name(SeriesId id);

}  // namespace pclab
