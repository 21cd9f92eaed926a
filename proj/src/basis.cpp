#include "pclab/basis.hpp"

#include <stdexcept>

#include "pclab/eta.hpp"

namespace pclab {

QuotientLadder::QuotientLadder(int num_off, int den_off, std::size_t qshift,
                               std::size_t N)
    : n_(N), qshift_(qshift), ratio_(N)
{
    TruncatedSeries f7 = eta_series(7, N);
    TruncatedSeries inv_f1 = inverse(eta_series(1, N));
    ratio_ = truncated(shift(mul(power(f7, 4), power(inv_f1, 4)), 1), N);

    // t_1 = q^{qshift} f7^{4+num_off} / f1^{4+den_off}
    TruncatedSeries t1 = mul(power(f7, 4 + num_off), power(inv_f1, 4 + den_off));
    if (qshift > 0)
        t1 = truncated(shift(t1, qshift), N);
    terms_.push_back(std::move(t1));
}

const TruncatedSeries& QuotientLadder::term(std::size_t j)
{
    if (j == 0)
        throw std::invalid_argument("QuotientLadder::term: 1-based index");
    while (terms_.size() < j)
        terms_.push_back(mul(terms_.back(), ratio_));
    return terms_[j - 1];
}

TruncatedSeries ladder_sum(QuotientLadder& ladder, const std::vector<Coefficient>& coeffs)
{
    TruncatedSeries acc(ladder.precision());
    for (std::size_t j = 1; j <= coeffs.size(); ++j) {
        if (j - 1 + ladder.qshift() >= ladder.precision())
            break;  // term starts beyond precision
        if (coeffs[j - 1] == 0)
            continue;
        acc = add(acc, scale(ladder.term(j), coeffs[j - 1]));
    }
    return acc;
}

EliminationResult eliminate_on_ladder(const TruncatedSeries& S, QuotientLadder& ladder,
                                      std::size_t jmax)
{
    if (jmax + ladder.qshift() > S.precision())
        throw std::invalid_argument("eliminate_on_ladder: precision too small for jmax");
    EliminationResult res;
    TruncatedSeries residual = S;
    for (std::size_t e = 0; e < ladder.qshift(); ++e) {
        if (residual[e] != 0) {
            res.stray_exponent = e;
            return res;
        }
    }
    for (std::size_t j = 1; j <= jmax; ++j) {
        const Coefficient& pivot = residual[j - 1 + ladder.qshift()];
        res.values.push_back(pivot);
        if (pivot != 0)
            residual = sub(residual, scale(ladder.term(j), pivot));
    }
    res.residual_zero = residual.is_zero();
    return res;
}

ShapeOffsets shape_offsets(SeriesId id)
{
    switch (id) {
    case SeriesId::H1: return {-1, 0};
    case SeriesId::H2: return {0, 1};
    case SeriesId::G1: return {-1, 1};
    case SeriesId::G3: return {-2, 0};
    case SeriesId::G4: return {0, 2};
    }
    throw std::logic_error("shape_offsets: bad id");
}

const char* series_id_name(SeriesId id)
{
    switch (id) {
    case SeriesId::H1: return "H1";
    case SeriesId::H2: return "H2";
    case SeriesId::G1: return "G1";
    case SeriesId::G3: return "G3";
    case SeriesId::G4: return "G4";
    }
    return "?";
}

}  // namespace pclab
