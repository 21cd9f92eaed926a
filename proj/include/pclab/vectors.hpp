#pragma once

#include <optional>
#include <vector>

#include "pclab/basis.hpp"
#include "pclab/coeff.hpp"
#include "pclab/mtable.hpp"

namespace pclab {

/*
 * The coefficient vectors x_k, y^{(2k-1)}_s, y^{(2k)}_s.  Each recursion step
 * reads one row family of M:
 *
 *   successor_j = sum_i v_i * m_{4i+off, i+j},   off in {0, 1, 2}.
 *
 * Supports grow by a factor of ~7 per step, so exact values come through
 * three routes, picked per call:
 *   - full-support chains while the support stays small;
 *   - one M-step from a full predecessor (for a short prefix of the next
 *     vector; the M entries involved sit near the support boundary and stay
 *     small);
 *   - the huffing-step identity on the generating-function side: a
 *     predecessor prefix of length 7*jmax + O(1) pins the successor prefix
 *     of length jmax exactly, by triangular elimination.
 * Deep subscripts (valuation sweeps) use certified windows instead: residues
 * mod 7^W over j <= J plus the invariant that every entry beyond the window
 * has valuation >= W.
 */

enum class StepRows { FourI, FourIPlusOne, FourIPlusTwo };

long step_row_offset(StepRows rows);

// Support bound for the successor when the predecessor has support s.
long support_after(StepRows rows, long s);

// Row family used by each recursion:
StepRows x_rows(unsigned k);            // step x_k -> x_{k+1}
StepRows odd_rows(unsigned s);          // y^(odd) step s -> s+1 (always 4i+1)
StepRows even_rows(unsigned s);         // y^(even) step s -> s+1

// Generating-function shape each vector multiplies (used by the series route
// and by gf_rhs): x odd/even -> H1/H2; y odd -> G1; y even odd/even -> G3/G4.
SeriesId x_shape(unsigned k);
SeriesId odd_shape(unsigned s);
SeriesId even_shape(unsigned s);

// One exact M-step.  v must be the complete support of the predecessor.
std::vector<Coefficient> step_exact(MTable& m, const std::vector<Coefficient>& v,
                                    StepRows rows, long jmax);

// One exact series-step: expands sum_i v_i * (shape term i) to the needed
// precision, applies the huffing transform, substitutes q^7 -> q and reads
// the successor prefix off the substituted basis.  When `v_is_full` is false
// v must extend at least to index series_step_prefix(shape, jmax).
std::vector<Coefficient> step_series(const std::vector<Coefficient>& v, bool v_is_full,
                                     SeriesId pred_shape, long jmax);

long series_step_prefix(SeriesId pred_shape, long jmax);

// Exact vectors.  The jmax overloads return the prefix 1..jmax; the plain
// overloads return the full support (throwing std::invalid_argument when the
// full support is beyond desk scale).
std::vector<Coefficient> x_vector(MTable& m, unsigned k);
std::vector<Coefficient> x_vector(MTable& m, unsigned k, long jmax);
std::vector<Coefficient> y_odd(MTable& m, unsigned k, unsigned s);
std::vector<Coefficient> y_odd(MTable& m, unsigned k, unsigned s, long jmax);
std::vector<Coefficient> y_even(MTable& m, unsigned k, unsigned s);
std::vector<Coefficient> y_even(MTable& m, unsigned k, unsigned s, long jmax);

// Residues mod 7^W over a window j <= J, with the certified tail invariant
// "pi >= W for every j beyond the window".  window_from_exact verifies the
// invariant on the dropped entries; step_window renews it from the computed
// entry valuations plus the m_{i,j} valuation floor, and throws if the
// certificate cannot be renewed.
struct WindowVector {
    unsigned width = 0;  // W
    Coefficient modulus; // 7^W
    std::vector<Coefficient> residues;
};

WindowVector window_from_exact(const std::vector<Coefficient>& full, unsigned W,
                               std::size_t J);
WindowVector step_window(MTable& m, const WindowVector& v, StepRows rows);

// Valuation of the true entry j (1-based): exact when the residue is nonzero,
// nullopt when only "pi >= W" is known (zero residue or beyond the window).
std::optional<long> window_valuation(const WindowVector& v, std::size_t j);

}  // namespace pclab
