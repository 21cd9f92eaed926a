#include "pclab/vectors.hpp"

#include <stdexcept>

#include "pclab/eta.hpp"

namespace pclab {

namespace {

// Full supports beyond this are not materialized; callers fall back to the
// prefix routes.
constexpr long kFullSupportCap = 1100;

void trim(std::vector<Coefficient>& v)
{
    while (!v.empty() && v.back() == 0)
        v.pop_back();
}

struct SeriesStep {
    int mult7;          // multiply by f7^mult7 before huffing
    std::size_t qs;     // multiply by q^qs before huffing
    int basis_num_off;  // substituted basis: q^j f7^{4j+off}/f1^{4j}
    StepRows rows;
};

SeriesStep series_step_params(SeriesId pred_shape)
{
    // Writing a shape term as q^{i+s} f7^{4i}/f1^{4i+d} times a power of q
    // and f7 reduces each step to one of the three huffing identities.
    switch (pred_shape) {
    case SeriesId::H1: return {1, 1, 0, StepRows::FourI};
    case SeriesId::H2: return {0, 3, -1, StepRows::FourIPlusOne};
    case SeriesId::G1: return {1, 3, -1, StepRows::FourIPlusOne};
    case SeriesId::G3: return {2, 1, 0, StepRows::FourI};
    case SeriesId::G4: return {0, 5, -2, StepRows::FourIPlusTwo};
    }
    throw std::logic_error("series_step_params: bad shape");
}

}  // namespace

long step_row_offset(StepRows rows)
{
    switch (rows) {
    case StepRows::FourI: return 0;
    case StepRows::FourIPlusOne: return 1;
    case StepRows::FourIPlusTwo: return 2;
    }
    throw std::logic_error("step_row_offset: bad rows");
}

long support_after(StepRows rows, long s)
{
    // m_{4i+off, i+j} vanishes for j > 7i + 2*off.
    return 7 * s + 2 * step_row_offset(rows);
}

StepRows x_rows(unsigned k)
{
    return (k % 2 == 1) ? StepRows::FourI : StepRows::FourIPlusOne;
}

StepRows odd_rows(unsigned)
{
    return StepRows::FourIPlusOne;
}

StepRows even_rows(unsigned s)
{
    return (s % 2 == 1) ? StepRows::FourI : StepRows::FourIPlusTwo;
}

SeriesId x_shape(unsigned k)
{
    return (k % 2 == 1) ? SeriesId::H1 : SeriesId::H2;
}

SeriesId odd_shape(unsigned)
{
    return SeriesId::G1;
}

SeriesId even_shape(unsigned s)
{
    return (s % 2 == 1) ? SeriesId::G3 : SeriesId::G4;
}

std::vector<Coefficient> step_exact(MTable& m, const std::vector<Coefficient>& v,
                                    StepRows rows, long jmax)
{
    if (jmax < 1)
        throw std::invalid_argument("step_exact: jmax must be >= 1");
    long off = step_row_offset(rows);
    std::vector<Coefficient> w(static_cast<std::size_t>(jmax));
    for (std::size_t idx = 0; idx < v.size(); ++idx) {
        if (v[idx] == 0)
            continue;
        long i = static_cast<long>(idx) + 1;
        for (long j = 1; j <= jmax; ++j) {
            const Coefficient& mij = m.at(4 * i + off, i + j);
            if (mij != 0)
                mpz_addmul(w[static_cast<std::size_t>(j - 1)].get_mpz_t(),
                           v[idx].get_mpz_t(), mij.get_mpz_t());
        }
    }
    return w;
}

long series_step_prefix(SeriesId pred_shape, long jmax)
{
    auto p = series_step_params(pred_shape);
    return 7 * jmax + static_cast<long>(p.qs) + 7;
}

std::vector<Coefficient> step_series(const std::vector<Coefficient>& v, bool v_is_full,
                                     SeriesId pred_shape, long jmax)
{
    if (jmax < 1)
        throw std::invalid_argument("step_series: jmax must be >= 1");
    auto p = series_step_params(pred_shape);
    std::size_t N = static_cast<std::size_t>(series_step_prefix(pred_shape, jmax));
    if (!v_is_full && v.size() < N)
        throw std::invalid_argument("step_series: predecessor prefix too short");

    auto off = shape_offsets(pred_shape);
    QuotientLadder terms(off.num_off, off.den_off, 0, N);
    TruncatedSeries S = ladder_sum(terms, v);
    if (p.mult7 > 0)
        S = mul(S, power(eta_series(7, N), p.mult7));
    TruncatedSeries E = extract_progression(shift(S, p.qs), 7, 0);

    QuotientLadder basis(p.basis_num_off, 0, 1, E.precision());
    EliminationResult elim =
        eliminate_on_ladder(E, basis, static_cast<std::size_t>(jmax));
    if (elim.stray_exponent)
        throw std::logic_error("step_series: huffed series off the expected support");
    return std::move(elim.values);
}

namespace {

// Shared chain driver.  rows_of(s) names the row family for the step from
// subscript s; shape_of(s) the GF shape of subscript s.
template <typename RowsOf, typename ShapeOf>
std::vector<Coefficient> chain(MTable& m, std::vector<Coefficient> base, long base_support,
                               unsigned target_s, std::optional<long> jmax,
                               RowsOf rows_of, ShapeOf shape_of)
{
    std::vector<Coefficient> v = std::move(base);
    long support = base_support;
    bool full = true;
    for (unsigned s = 1; s < target_s; ++s) {
        StepRows rows = rows_of(s);
        long next_support = support_after(rows, support);
        if (full && next_support <= kFullSupportCap) {
            v = step_exact(m, v, rows, next_support);
            trim(v);
            support = next_support;
            continue;
        }
        if (!jmax)
            throw std::invalid_argument("coefficient vector: full support beyond desk "
                                        "scale; request a prefix (jmax)");
        // Prefix of the remaining chain: the last step needs jmax entries, a
        // series step needs 7x its output plus slack from its predecessor.
        long need = *jmax;
        for (unsigned t = target_s - 1; t > s; --t)
            need = series_step_prefix(shape_of(t), need);
        if (full) {
            // One M-step from a full predecessor gives any prefix exactly.
            v = step_exact(m, v, rows, need);
            full = false;
        } else {
            v = step_series(v, false, shape_of(s), need);
        }
        support = next_support;
    }
    if (jmax) {
        v.resize(static_cast<std::size_t>(*jmax));
        if (!full)
            return v;
        // full vectors are simply truncated (entries beyond the support are 0)
    }
    return v;
}

std::vector<Coefficient> x_base()
{
    return {Coefficient(7), Coefficient(49)};
}

}  // namespace

std::vector<Coefficient> x_vector(MTable& m, unsigned k)
{
    if (k == 0)
        throw std::invalid_argument("x_vector: k must be >= 1");
    return chain(m, x_base(), 2, k, std::nullopt,
                 [](unsigned s) { return x_rows(s); },
                 [](unsigned s) { return x_shape(s); });
}

std::vector<Coefficient> x_vector(MTable& m, unsigned k, long jmax)
{
    if (k == 0)
        throw std::invalid_argument("x_vector: k must be >= 1");
    return chain(m, x_base(), 2, k, jmax,
                 [](unsigned s) { return x_rows(s); },
                 [](unsigned s) { return x_shape(s); });
}

std::vector<Coefficient> y_odd(MTable& m, unsigned k, unsigned s)
{
    if (k == 0 || s == 0)
        throw std::invalid_argument("y_odd: k and s must be >= 1");
    auto base = x_vector(m, 2 * k - 1);
    long supp = static_cast<long>(base.size());
    return chain(m, std::move(base), supp, s, std::nullopt,
                 [](unsigned t) { return odd_rows(t); },
                 [](unsigned t) { return odd_shape(t); });
}

std::vector<Coefficient> y_odd(MTable& m, unsigned k, unsigned s, long jmax)
{
    if (k == 0 || s == 0)
        throw std::invalid_argument("y_odd: k and s must be >= 1");
    auto base = x_vector(m, 2 * k - 1);
    long supp = static_cast<long>(base.size());
    return chain(m, std::move(base), supp, s, jmax,
                 [](unsigned t) { return odd_rows(t); },
                 [](unsigned t) { return odd_shape(t); });
}

std::vector<Coefficient> y_even(MTable& m, unsigned k, unsigned s)
{
    if (k == 0 || s == 0)
        throw std::invalid_argument("y_even: k and s must be >= 1");
    auto base = x_vector(m, 2 * k - 1);
    long supp = static_cast<long>(base.size());
    return chain(m, std::move(base), supp, s, std::nullopt,
                 [](unsigned t) { return even_rows(t); },
                 [](unsigned t) { return even_shape(t); });
}

std::vector<Coefficient> y_even(MTable& m, unsigned k, unsigned s, long jmax)
{
    if (k == 0 || s == 0)
        throw std::invalid_argument("y_even: k and s must be >= 1");
    auto base = x_vector(m, 2 * k - 1);
    long supp = static_cast<long>(base.size());
    return chain(m, std::move(base), supp, s, jmax,
                 [](unsigned t) { return even_rows(t); },
                 [](unsigned t) { return even_shape(t); });
}

WindowVector window_from_exact(const std::vector<Coefficient>& full, unsigned W,
                               std::size_t J)
{
    WindowVector w;
    w.width = W;
    w.modulus = pow7(W);
    for (std::size_t idx = 0; idx < full.size(); ++idx) {
        if (idx < J) {
            Coefficient r;
            mpz_mod(r.get_mpz_t(), full[idx].get_mpz_t(), w.modulus.get_mpz_t());
            w.residues.push_back(std::move(r));
        } else if (full[idx] != 0) {
            auto val = valuation7(full[idx]);
            if (val && *val < static_cast<long>(W))
                throw std::logic_error("window_from_exact: dropped entry below the "
                                       "certified valuation floor");
        }
    }
    w.residues.resize(J);  // entries past the support are genuine zeroes
    return w;
}

WindowVector step_window(MTable& m, const WindowVector& v, StepRows rows)
{
    const std::size_t J = v.residues.size();
    const long W = static_cast<long>(v.width);
    long off = step_row_offset(rows);

    // Certificate renewal: for every in-window term, pi(v_i) plus the m-bound
    // at column i + (J+1) must clear W; the bound grows with j, so j = J+1 is
    // the worst case.  Tail terms carry pi >= W already.
    for (std::size_t idx = 0; idx < J; ++idx) {
        long i = static_cast<long>(idx) + 1;
        auto vi = window_valuation(v, static_cast<std::size_t>(i));
        long vival = vi ? *vi : W;
        long mbound = std::max(0L, MTable::pi_lower_bound(4 * i + off,
                                                          i + static_cast<long>(J) + 1));
        if (vival + mbound < W)
            throw std::logic_error("step_window: tail certificate cannot be renewed; "
                                   "widen the window");
    }

    WindowVector w;
    w.width = v.width;
    w.modulus = v.modulus;
    w.residues.resize(J);
    Coefficient acc;
    for (std::size_t jdx = 0; jdx < J; ++jdx) {
        long j = static_cast<long>(jdx) + 1;
        acc = 0;
        for (std::size_t idx = 0; idx < J; ++idx) {
            if (v.residues[idx] == 0)
                continue;
            long i = static_cast<long>(idx) + 1;
            const Coefficient& mij = m.at(4 * i + off, i + j);
            if (mij != 0)
                mpz_addmul(acc.get_mpz_t(), v.residues[idx].get_mpz_t(), mij.get_mpz_t());
        }
        mpz_mod(w.residues[jdx].get_mpz_t(), acc.get_mpz_t(), w.modulus.get_mpz_t());
    }
    return w;
}

std::optional<long> window_valuation(const WindowVector& v, std::size_t j)
{
    if (j == 0)
        throw std::invalid_argument("window_valuation: 1-based index");
    if (j > v.residues.size() || v.residues[j - 1] == 0)
        return std::nullopt;  // only pi >= W known
    return valuation7(v.residues[j - 1]);
}

}  // namespace pclab
