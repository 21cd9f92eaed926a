#include "pclab/congruence.hpp"

#include <sstream>
#include <stdexcept>

#include "pclab/eta.hpp"

namespace pclab {

SevenValuation SevenValuation::of(const Coefficient& n)
{
    SevenValuation v;
    auto e = valuation7(n);
    if (!e) {
        v.infinite = true;
    } else {
        v.e = *e;
    }
    return v;
}

std::string SevenValuation::str() const
{
    return infinite ? "inf" : std::to_string(e);
}

std::string CongruenceClaim::id() const
{
    std::ostringstream out;
    out << "c" << family << ".k" << k << ".b" << beta;
    if (r)
        out << ".r" << *r;
    return out.str();
}

namespace {

Coefficient divide24(const Coefficient& numerator)
{
    if (!mpz_divisible_ui_p(numerator.get_mpz_t(), 24))
        throw std::logic_error("claim residue: numerator " + numerator.get_str() +
                               " is not divisible by 24");
    return numerator / 24;
}

long val7_u64(std::uint64_t v)
{
    long e = 0;
    while (v % 7 == 0) {
        v /= 7;
        ++e;
    }
    return e;
}

}  // namespace

std::vector<CongruenceClaim> claims_for(unsigned k, unsigned beta)
{
    if (k == 0)
        throw std::invalid_argument("claims_for: k must be >= 1");
    std::vector<CongruenceClaim> out;

    {
        CongruenceClaim c;
        c.family = 1;
        c.k = k;
        c.beta = beta;
        c.ell = pow7(2 * k - 1);
        c.progression_a = pow7(2 * k + beta - 1);
        c.residue_b = divide24(16 * c.progression_a + c.ell + 1);
        c.seven_power = k;
        c.modulus = pow7(c.seven_power);
        out.push_back(std::move(c));
    }
    {
        CongruenceClaim c;
        c.family = 2;
        c.k = k;
        c.beta = beta;
        c.ell = pow7(2 * k);
        c.progression_a = pow7(2 * k + 2 * beta - 1);
        c.residue_b = divide24(10 * c.progression_a + c.ell + 1);
        c.seven_power = k + beta;
        c.modulus = pow7(c.seven_power);
        out.push_back(std::move(c));
    }
    {
        CongruenceClaim c;
        c.family = 3;
        c.k = k;
        c.beta = beta;
        c.ell = pow7(2 * k);
        c.progression_a = pow7(2 * k + 2 * beta);
        c.residue_b = divide24(22 * c.progression_a + c.ell + 1);
        c.seven_power = k + beta + 1;
        c.modulus = pow7(c.seven_power);
        out.push_back(std::move(c));
    }
    for (int r : {3, 4, 6}) {
        CongruenceClaim c;
        c.family = 4;
        c.k = k;
        c.beta = beta;
        c.r = r;
        c.ell = pow7(2 * k);
        c.progression_a = pow7(2 * k + 2 * beta + 1);
        c.residue_b = divide24((24 * r + 22) * pow7(2 * k + 2 * beta) + c.ell + 1);
        c.seven_power = k + beta + 2;
        c.modulus = pow7(c.seven_power);
        out.push_back(std::move(c));
    }
    return out;
}

ClaimResult verify_congruence(const CongruenceClaim& claim, const ModTwoColorTable& table,
                              const PartitionTable* exact_p, long nmax, long spot_stride)
{
    if (table.w < claim.seven_power)
        throw std::invalid_argument("verify_congruence: table width below the claim modulus");
    if (Coefficient(table.ell) != claim.ell)
        throw std::invalid_argument("verify_congruence: table has the wrong color scale");
    if (nmax > table.max_n())
        throw std::invalid_argument("verify_congruence: table shorter than nmax");

    ClaimResult res;
    if (claim.residue_b > nmax)
        return res;  // no instances in range: vacuously true

    const long a = static_cast<long>(claim.progression_a.get_si());
    const long b = static_cast<long>(claim.residue_b.get_si());
    const long ell = static_cast<long>(claim.ell.get_si());
    std::uint64_t tmod = 1;
    for (unsigned i = 0; i < claim.seven_power; ++i)
        tmod *= 7;

    for (long n = 0;; ++n) {
        long arg = a * n + b;
        if (arg > nmax)
            break;
        std::uint64_t v = table.values[static_cast<std::size_t>(arg)];
        ++res.instances;

        if (v != 0) {
            long val = val7_u64(v);
            if (!res.min_val_seen || val < *res.min_val_seen)
                res.min_val_seen = val;
        }
        if (v % tmod != 0) {
            res.pass = false;
            res.counterexample_n = n;
            if (exact_p && arg <= exact_p->max_n())
                res.counterexample_val =
                    SevenValuation::of(two_color_at(*exact_p, ell, arg));
            else
                res.counterexample_val = SevenValuation{false, val7_u64(v)};
            return res;
        }

        if (exact_p && spot_stride > 0 && n % spot_stride == 0 && arg <= exact_p->max_n()) {
            Coefficient exact = two_color_at(*exact_p, ell, arg);
            Coefficient reduced;
            mpz_mod(reduced.get_mpz_t(), exact.get_mpz_t(),
                    Coefficient(table.modulus).get_mpz_t());
            if (reduced != Coefficient(v))
                throw std::logic_error("verify_congruence: modular table disagrees with "
                                       "the exact oracle at argument " + std::to_string(arg));
            if (!mpz_divisible_p(exact.get_mpz_t(), claim.modulus.get_mpz_t())) {
                res.pass = false;
                res.counterexample_n = n;
                res.counterexample_val = SevenValuation::of(exact);
                return res;
            }
            ++res.spot_checked;
        }
    }
    return res;
}

bool matches_published_p49_progressions(unsigned beta)
{
    auto claims = claims_for(1, beta);
    bool ok = true;
    for (const auto& c : claims) {
        if (c.family == 2) {
            Coefficient a = pow7(2 * beta + 1);
            Coefficient num = 5 * a + 25;
            ok = ok && c.progression_a == a && 12 * c.residue_b == num &&
                 c.seven_power == beta + 1;
        } else if (c.family == 3) {
            Coefficient a = pow7(2 * beta + 2);
            Coefficient num = 11 * a + 25;
            ok = ok && c.progression_a == a && 12 * c.residue_b == num &&
                 c.seven_power == beta + 2;
        }
    }
    return ok;
}

GfProgression gf_progression(SeriesId id, unsigned k, unsigned beta)
{
    if (k == 0)
        throw std::invalid_argument("gf_progression: k must be >= 1");
    GfProgression p;
    switch (id) {
    case SeriesId::H1:
        p.ell = 1;
        p.a = pow7(2 * k - 1);
        p.b = lambda(2 * k - 1);
        break;
    case SeriesId::H2:
        p.ell = 1;
        p.a = pow7(2 * k);
        p.b = lambda(2 * k);
        break;
    case SeriesId::G1:
        p.ell = pow7(2 * k - 1);
        p.a = pow7(2 * k + beta - 1);
        p.b = divide24(16 * p.a + p.ell + 1);
        break;
    case SeriesId::G3:
        p.ell = pow7(2 * k);
        p.a = pow7(2 * k + 2 * beta - 1);
        p.b = divide24(10 * p.a + p.ell + 1);
        break;
    case SeriesId::G4:
        p.ell = pow7(2 * k);
        p.a = pow7(2 * k + 2 * beta);
        p.b = divide24(22 * p.a + p.ell + 1);
        break;
    }
    return p;
}

TruncatedSeries gf_rhs(SeriesId id, unsigned k, unsigned beta, std::size_t N, MTable& m)
{
    long jmax = static_cast<long>(N);
    std::vector<Coefficient> v;
    switch (id) {
    case SeriesId::H1: v = x_vector(m, 2 * k - 1, jmax); break;
    case SeriesId::H2: v = x_vector(m, 2 * k, jmax); break;
    case SeriesId::G1: v = y_odd(m, k, beta + 1, jmax); break;
    case SeriesId::G3: v = y_even(m, k, 2 * beta + 1, jmax); break;
    case SeriesId::G4: v = y_even(m, k, 2 * beta + 2, jmax); break;
    }
    auto off = shape_offsets(id);
    QuotientLadder terms(off.num_off, off.den_off, 0, N);
    return ladder_sum(terms, v);
}

GfResult verify_gf_identity(SeriesId id, unsigned k, unsigned beta, std::size_t N,
                            MTable& m, const PartitionTable& p)
{
    GfResult res;
    res.id = id;
    res.k = k;
    res.beta = beta;
    res.prog = gf_progression(id, k, beta);

    // coefficients the oracle can supply: n with a*n + b <= max_n
    long navail = 0;
    if (res.prog.b <= p.max_n()) {
        Coefficient q = (Coefficient(p.max_n()) - res.prog.b) / res.prog.a;
        navail = static_cast<long>(q.get_si()) + 1;
    }
    long ncmp = std::min<long>(static_cast<long>(N), navail);
    if (ncmp <= 0) {
        res.pass = true;  // nothing in oracle range: vacuous
        return res;
    }
    res.compared = ncmp;

    TruncatedSeries rhs = gf_rhs(id, k, beta, static_cast<std::size_t>(ncmp), m);
    const long a = static_cast<long>(res.prog.a.get_si());
    const long b = static_cast<long>(res.prog.b.get_si());
    const long ell = static_cast<long>(res.prog.ell.get_si());
    for (long n = 0; n < ncmp; ++n) {
        long arg = a * n + b;
        Coefficient lhs = (ell == 1) ? p.at(arg) : two_color_at(p, ell, arg);
        if (lhs != rhs[static_cast<std::size_t>(n)]) {
            res.pass = false;
            res.first_mismatch = n;
            return res;
        }
    }
    res.pass = true;
    return res;
}

namespace {

constexpr unsigned kWindowWidth = 60;
constexpr std::size_t kWindowLen = 40;

template <typename BoundFn>
void sweep_values(std::vector<LemmaInstance>& out, const char* lemma, unsigned k,
                  unsigned subscript, const std::vector<Coefficient>& v, long jlimit,
                  BoundFn bound_fn)
{
    long n = static_cast<long>(v.size());
    if (jlimit >= 0)
        n = std::min(n, jlimit);
    for (long j = 1; j <= n; ++j) {
        LemmaInstance inst;
        inst.lemma = lemma;
        inst.k = k;
        inst.subscript = subscript;
        inst.j = j;
        inst.bound = bound_fn(j);
        auto val = valuation7(v[static_cast<std::size_t>(j - 1)]);
        if (val)
            inst.actual = *val;
        inst.actual_exact = true;
        inst.pass = !val || *val >= inst.bound;
        out.push_back(std::move(inst));
    }
}

template <typename BoundFn>
void sweep_window(std::vector<LemmaInstance>& out, const char* lemma, unsigned k,
                  unsigned subscript, const WindowVector& w, long jlimit, BoundFn bound_fn)
{
    long n = std::min<long>(static_cast<long>(w.residues.size()), jlimit);
    for (long j = 1; j <= n; ++j) {
        LemmaInstance inst;
        inst.lemma = lemma;
        inst.k = k;
        inst.subscript = subscript;
        inst.j = j;
        inst.bound = bound_fn(j);
        auto val = window_valuation(w, static_cast<std::size_t>(j));
        if (val) {
            inst.actual = *val;
            inst.actual_exact = true;
            inst.pass = *val >= inst.bound;
        } else {
            // only pi >= W known; W clears every bound in range
            inst.actual_exact = false;
            inst.pass = static_cast<long>(w.width) >= inst.bound;
        }
        out.push_back(std::move(inst));
    }
}

}  // namespace

ValuationSweep check_valuation_lemmas(MTable& m, unsigned kmax, unsigned betamax,
                                      long jmax)
{
    if (kmax == 0 || kmax > 2 || betamax > 2)
        throw std::invalid_argument("check_valuation_lemmas: supported ranges are "
                                    "1 <= kmax <= 2, betamax <= 2");
    ValuationSweep sweep;

    auto x1 = x_vector(m, 1);
    {
        auto v1 = valuation7(x1[0]);
        auto v2 = valuation7(x1[1]);
        sweep.equalities_pass = v1 && *v1 == 1 && v2 && *v2 == 2;
    }

    // x vectors: pi(x_{2K+1,j}) >= K+1+floor((7j-4)/4), pi(x_{2K,j}) >= K+1+floor((7j-6)/4)
    for (unsigned K = 1; K <= kmax; ++K) {
        std::vector<Coefficient> xeven =
            (K == 1) ? x_vector(m, 2) : x_vector(m, 4);
        sweep_values(sweep.instances, "x-even", K, 2 * K, xeven, -1,
                     [K](long j) { return static_cast<long>(K) + 1 + floor_div(7 * j - 6, 4); });
        std::vector<Coefficient> xodd =
            (K == 1) ? x_vector(m, 3) : x_vector(m, 5, jmax);
        sweep_values(sweep.instances, "x-odd", K, 2 * K + 1, xodd, (K == 1) ? -1 : jmax,
                     [K](long j) { return static_cast<long>(K) + 1 + floor_div(7 * j - 4, 4); });
    }

    // odd family: pi(y_{s,j}) >= k + floor((7j-4)/4), subscripts 1..betamax+1
    for (unsigned k = 1; k <= kmax; ++k) {
        for (unsigned s = 1; s <= betamax + 1; ++s) {
            bool full_ok = true;
            long supp = (k == 1) ? 2 : 100;
            for (unsigned t = 1; t < s; ++t) {
                supp = support_after(StepRows::FourIPlusOne, supp);
                if (supp > 1100)
                    full_ok = false;
            }
            auto v = full_ok ? y_odd(m, k, s) : y_odd(m, k, s, jmax);
            sweep_values(sweep.instances, "y-odd", k, s, v, full_ok ? -1 : jmax,
                         [k](long j) { return static_cast<long>(k) + floor_div(7 * j - 4, 4); });
        }
    }

    // even family: odd subscripts need k+b+floor((7j-6)/4), even ones one more
    for (unsigned k = 1; k <= kmax; ++k) {
        // window chain for the deep subscripts at k = 2
        std::optional<WindowVector> window;
        unsigned window_s = 0;
        auto window_to = [&](unsigned s) -> const WindowVector& {
            if (!window) {
                window = window_from_exact(y_even(m, k, 2), kWindowWidth, kWindowLen);
                window_s = 2;
            }
            while (window_s < s) {
                window = step_window(m, *window, even_rows(window_s));
                ++window_s;
            }
            return *window;
        };

        for (unsigned beta = 0; beta <= betamax; ++beta) {
            unsigned s_odd = 2 * beta + 1;
            unsigned s_even = 2 * beta + 2;
            auto bound_odd = [k, beta](long j) {
                return static_cast<long>(k + beta) + floor_div(7 * j - 6, 4);
            };
            auto bound_even = [k, beta](long j) {
                return static_cast<long>(k + beta) + 1 + floor_div(7 * j - 6, 4);
            };

            bool exact_odd = !(k == 2 && s_odd >= 5);
            if (exact_odd) {
                bool full_ok = true;
                long supp = (k == 1) ? 2 : 100;
                for (unsigned t = 1; t < s_odd; ++t) {
                    supp = support_after(even_rows(t), supp);
                    if (supp > 1100)
                        full_ok = false;
                }
                auto v = full_ok ? y_even(m, k, s_odd) : y_even(m, k, s_odd, jmax);
                sweep_values(sweep.instances, "y-even-odd-s", k, s_odd, v,
                             full_ok ? -1 : jmax, bound_odd);
            } else {
                sweep_window(sweep.instances, "y-even-odd-s", k, s_odd, window_to(s_odd),
                             jmax, bound_odd);
            }

            bool exact_even = !(k == 2 && s_even >= 5);
            if (exact_even) {
                bool full_ok = true;
                long supp = (k == 1) ? 2 : 100;
                for (unsigned t = 1; t < s_even; ++t) {
                    supp = support_after(even_rows(t), supp);
                    if (supp > 1100)
                        full_ok = false;
                }
                auto v = full_ok ? y_even(m, k, s_even) : y_even(m, k, s_even, jmax);
                sweep_values(sweep.instances, "y-even-even-s", k, s_even, v,
                             full_ok ? -1 : jmax, bound_even);
            } else {
                sweep_window(sweep.instances, "y-even-even-s", k, s_even,
                             window_to(s_even), jmax, bound_even);
            }
        }
    }

    // Grading: the generic base-case bound misses x_1's second entry
    // (pi(49) = 2 against a formula value of 3); x_1 is pinned by explicit
    // equalities instead.  That one corner is reported as a warning, with
    // the numbers; anything else failing is a hard failure.
    for (auto& inst : sweep.instances) {
        ++sweep.checked;
        if (inst.pass)
            continue;
        if ((inst.lemma == "y-odd" || inst.lemma == "y-even-odd-s") && inst.k == 1 &&
            inst.subscript == 1 && inst.j == 2 && inst.actual && *inst.actual == 2 &&
            inst.bound == 3) {
            inst.known_erratum = true;
            ++sweep.warned;
        } else {
            ++sweep.failed;
        }
    }
    return sweep;
}

MFloorSweep check_m_valuation_floor(const MTable& m)
{
    MFloorSweep sweep;
    for (const auto& entry : m.computed_entries()) {
        ++sweep.checked;
        if (*entry.value == 0)
            continue;  // pi = inf clears every bound
        long bound = MTable::pi_lower_bound(entry.i, entry.j);
        long val = split_pow7(*entry.value).first;
        if (val < bound) {
            ++sweep.violations;
            if (!sweep.first_violation)
                sweep.first_violation = {entry.i, entry.j};
        }
        long slack = val - bound;
        if (!sweep.min_slack_set || slack < sweep.min_slack) {
            sweep.min_slack = slack;
            sweep.min_slack_set = true;
        }
    }
    return sweep;
}

FrobeniusReductionResult verify_frobenius_reduction(unsigned k, unsigned beta,
                                                    std::size_t N, MTable& m)
{
    if (k == 0 || k > 2 || beta > 2)
        throw std::invalid_argument("verify_frobenius_reduction: supported ranges are "
                                    "k in {1,2}, beta <= 2");
    FrobeniusReductionResult res;
    res.k = k;
    res.beta = beta;

    TruncatedSeries f1 = eta_series(1, N);
    TruncatedSeries f7 = eta_series(7, N);

    {
        TruncatedSeries d = sub(power(f1, 7), f7);
        res.frobenius_pass = true;
        for (std::size_t i = 0; i < N; ++i)
            if (!mpz_divisible_ui_p(d[i].get_mpz_t(), 7)) {
                res.frobenius_pass = false;
                break;
            }
    }

    TruncatedSeries quot = mul(power(f7, 4), power(inverse(f1), 6));
    TruncatedSeries f73f1 = mul(power(f7, 3), f1);
    {
        TruncatedSeries d = sub(quot, f73f1);
        res.quotient_pass = true;
        for (std::size_t i = 0; i < N; ++i)
            if (!mpz_divisible_ui_p(d[i].get_mpz_t(), 7)) {
                res.quotient_pass = false;
                break;
            }
        res.support_pass = true;
        for (std::size_t e = 0; e < N; ++e) {
            unsigned rem = e % 7;
            if ((rem == 3 || rem == 4 || rem == 6) && f73f1[e] != 0) {
                res.support_pass = false;
                break;
            }
        }
    }

    {
        unsigned s = 2 * beta + 2;
        Coefficient mod = pow7(k + beta + 3);
        std::vector<Coefficient> v;
        if (k == 2 && beta >= 1) {
            // Exact subscript-4 tails are beyond desk scale here; residues
            // mod 7^60 decide a mod-7^{k+beta+3} congruence outright (tail
            // entries are certified == 0 mod 7^60).
            auto w = window_from_exact(y_even(m, k, 2), kWindowWidth, kWindowLen);
            for (unsigned t = 2; t < s; ++t)
                w = step_window(m, w, even_rows(t));
            v = w.residues;
            res.reduction_window = true;
        } else {
            v = y_even(m, k, s, static_cast<long>(N));
        }
        auto off = shape_offsets(SeriesId::G4);
        QuotientLadder terms(off.num_off, off.den_off, 0, N);
        TruncatedSeries rhs = ladder_sum(terms, v);
        TruncatedSeries d = sub(rhs, scale(quot, v.at(0)));
        res.reduction_pass = true;
        for (std::size_t i = 0; i < N; ++i)
            if (!mpz_divisible_p(d[i].get_mpz_t(), mod.get_mpz_t())) {
                res.reduction_pass = false;
                break;
            }
    }
    return res;
}

}  // namespace pclab
