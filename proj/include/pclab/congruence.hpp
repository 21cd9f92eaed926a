#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pclab/basis.hpp"
#include "pclab/coeff.hpp"
#include "pclab/mtable.hpp"
#include "pclab/partition.hpp"
#include "pclab/series.hpp"
#include "pclab/vectors.hpp"

namespace pclab {

struct SevenValuation {
    bool infinite = false;
    long e = 0;

    static SevenValuation of(const Coefficient& n);
    bool at_least(long bound) const { return infinite || e >= bound; }
    std::string str() const;
};

/*
 * A claim p_{1,ell}(a n + b) == 0 (mod 7^t) for all n >= 0, carrying the
 * family (c1)..(c4) and parameters it came from.
 */
struct CongruenceClaim {
    int family = 1;  // 1..4
    unsigned k = 1;
    unsigned beta = 0;
    std::optional<int> r;  // c4 only: r in {3, 4, 6}

    Coefficient ell;
    Coefficient progression_a;
    Coefficient residue_b;
    unsigned seven_power = 1;  // t
    Coefficient modulus;       // 7^t

    std::string id() const;
};

// The six claims at one (k, beta): c1, c2, c3 and the three r-branches of c4.
// Division of each printed numerator by 24 is checked exactly; a non-integral
// residue throws std::logic_error.
std::vector<CongruenceClaim> claims_for(unsigned k, unsigned beta);

struct ClaimResult {
    bool pass = true;
    long instances = 0;          // number of n values checked
    std::optional<long> counterexample_n;
    SevenValuation counterexample_val;
    std::optional<long> min_val_seen;  // smallest valuation observed (data, no claim);
                                       // nullopt when every value vanished mod the table
    long spot_checked = 0;
};

// Scans all n with a*n + b <= nmax against a modular table (whose width must
// cover 7^t).  When exact_p covers the range, every spot_stride-th instance
// is recomputed exactly and must also match the table mod 7^w.
ClaimResult verify_congruence(const CongruenceClaim& claim, const ModTwoColorTable& table,
                              const PartitionTable* exact_p, long nmax,
                              long spot_stride = 20);

// The c2/c3 families at k=1 must reproduce the published p_{1,49}
// progressions 7^{2b+1} n + (5*7^{2b+1}+25)/12 mod 7^{b+1} and
// 7^{2b+2} n + (11*7^{2b+2}+25)/12 mod 7^{b+2} as identical (a, b, t) triples.
bool matches_published_p49_progressions(unsigned beta);

// ---- generating-function identities ----

struct GfProgression {
    Coefficient ell;  // 1 for the plain partition identities H1/H2
    Coefficient a;
    Coefficient b;
};

GfProgression gf_progression(SeriesId id, unsigned k, unsigned beta);

// Right-hand side sum_j v_j q^{j-1} f7^{..}/f1^{..} with the vector the
// identity calls for, expanded to N coefficients.
TruncatedSeries gf_rhs(SeriesId id, unsigned k, unsigned beta, std::size_t N, MTable& m);

struct GfResult {
    SeriesId id = SeriesId::H1;
    unsigned k = 1;
    unsigned beta = 0;
    GfProgression prog;
    long compared = 0;  // coefficients actually compared (oracle range permitting)
    bool pass = false;
    std::optional<long> first_mismatch;
};

// Left side from the oracle tables, right side from gf_rhs, compared exactly
// over min(N, oracle range) coefficients.
GfResult verify_gf_identity(SeriesId id, unsigned k, unsigned beta, std::size_t N,
                            MTable& m, const PartitionTable& p);

// ---- valuation lemmas ----

struct LemmaInstance {
    std::string lemma;   // "x-odd", "x-even", "y-odd", "y-even-odd-s", "y-even-even-s"
    unsigned k = 0;      // the lemma's k
    unsigned subscript = 0;  // x index or y subscript
    long j = 0;
    long bound = 0;
    std::optional<long> actual;  // nullopt: pi >= window width (or value 0)
    bool actual_exact = true;
    bool pass = false;
    bool known_erratum = false;  // the documented x_1 corner (k=1, s=1, j=2)
};

struct ValuationSweep {
    std::vector<LemmaInstance> instances;
    bool equalities_pass = false;  // pi(x_{1,1}) == 1 and pi(x_{1,2}) == 2
    long checked = 0;
    long failed = 0;
    long warned = 0;
};

// Checks the x-vector bounds on x_2..x_{2kmax+1} and the y-family bounds
// for k <= kmax, beta <= betamax, entries j <= jmax (full-support
// vectors are swept over their whole support).  Exact vectors everywhere
// except the even-family subscripts 5, 6 at k = 2, which run in window mode.
ValuationSweep check_valuation_lemmas(MTable& m, unsigned kmax, unsigned betamax,
                                      long jmax);

struct MFloorSweep {
    long checked = 0;
    long violations = 0;
    long min_slack = 0;  // over entries with a finite valuation
    bool min_slack_set = false;
    std::optional<std::pair<long, long>> first_violation;
};

// pi(m_{i,j}) >= floor((7j-2i-1)/4) over every computed entry of the table.
MFloorSweep check_m_valuation_floor(const MTable& m);

// ---- the Frobenius reduction behind the c4 family ----

struct FrobeniusReductionResult {
    unsigned k = 1;
    unsigned beta = 0;
    bool frobenius_pass = false;   // f1^7 == f7 (mod 7)
    bool reduction_pass = false;   // G4 rhs == y_1 * f7^4/f1^6 (mod 7^{k+beta+3})
    bool reduction_window = false; // reduction ran on certified window residues
    bool quotient_pass = false;    // f7^4/f1^6 == f7^3 f1 (mod 7)
    bool support_pass = false;     // f7^3 f1 has no exponents in {3,4,6} mod 7

    bool pass() const
    {
        return frobenius_pass && reduction_pass && quotient_pass && support_pass;
    }
};

FrobeniusReductionResult verify_frobenius_reduction(unsigned k, unsigned beta,
                                                    std::size_t N, MTable& m);

}  // namespace pclab
