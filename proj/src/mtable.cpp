#include "pclab/mtable.hpp"

#include <stdexcept>

#include "pclab/basis.hpp"
#include "pclab/eta.hpp"

namespace pclab {

namespace {

struct SeedEntry {
    long c;
    unsigned e;  // value = c * 7^e
};

// Rows 1..7, columns 1..14, exactly as printed (tables list entries as
// c x 7^e; plain numbers have e = 0).
constexpr SeedEntry kSeed[7][14] = {
    {{7, 0},  {1, 2},    {0, 0},     {0, 0},      {0, 0},      {0, 0},      {0, 0},
     {0, 0},  {0, 0},    {0, 0},     {0, 0},      {0, 0},      {0, 0},      {0, 0}},
    {{10, 0}, {9, 2},    {2, 4},     {1, 5},      {0, 0},      {0, 0},      {0, 0},
     {0, 0},  {0, 0},    {0, 0},     {0, 0},      {0, 0},      {0, 0},      {0, 0}},
    {{3, 0},  {114, 1},  {85, 3},    {24, 5},     {3, 7},      {1, 8},      {0, 0},
     {0, 0},  {0, 0},    {0, 0},     {0, 0},      {0, 0},      {0, 0},      {0, 0}},
    {{0, 0},  {82, 1},   {176, 3},   {845, 4},    {272, 6},    {46, 8},     {4, 10},
     {1, 11}, {0, 0},    {0, 0},     {0, 0},      {0, 0},      {0, 0},      {0, 0}},
    {{0, 0},  {190, 0},  {1265, 2},  {1895, 4},   {1233, 6},   {3025, 7},   {620, 9},
     {75, 11},{5, 13},   {1, 14},    {0, 0},      {0, 0},      {0, 0},      {0, 0}},
    {{0, 0},  {27, 0},   {736, 2},   {16782, 3},  {20424, 5},  {12825, 7},  {4770, 9},
     {7830, 10}, {1178, 12}, {111, 14}, {6, 16},  {1, 17},     {0, 0},      {0, 0}},
    {{0, 0},  {1, 0},    {253, 2},   {1902, 4},   {4246, 6},   {31540, 7},  {19302, 9},
     {7501, 11}, {1944, 13}, {2397, 14}, {285, 16}, {22, 18},  {1, 20},     {1, 20}},
};

struct RecurrenceTerm {
    long di;
    long dj;
    long coeff;
};

constexpr RecurrenceTerm kRecurrence[10] = {
    {3, 1, 7},  {2, 1, 35}, {1, 1, 49},
    {7, 2, 1},  {6, 2, 7},  {5, 2, 21}, {4, 2, 49},
    {3, 2, 147}, {2, 2, 343}, {1, 2, 343},
};

const Coefficient kZero = 0;

}  // namespace

MTable::MTable()
{
    seed_.resize(7);
    for (int i = 0; i < 7; ++i) {
        seed_[static_cast<std::size_t>(i)].resize(14);
        for (int j = 0; j < 14; ++j) {
            const auto& s = kSeed[i][j];
            seed_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                Coefficient(s.c) * pow7(s.e);
            ++seed_count_;
        }
    }
}

std::uint64_t MTable::pack(long i, long j)
{
    return (static_cast<std::uint64_t>(i) << 32) | static_cast<std::uint64_t>(j);
}

bool MTable::trivially_zero(long i, long j) const
{
    return i < 1 || j < 1 || j > 2 * i || i >= 4 * j;
}

bool MTable::known(long i, long j) const
{
    return trivially_zero(i, j) || i <= 7 || entries_.contains(pack(i, j));
}

const Coefficient& MTable::lookup(long i, long j) const
{
    if (trivially_zero(i, j))
        return kZero;
    if (i <= 7)
        return seed_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
    return entries_.at(pack(i, j));
}

void MTable::compute(long i0, long j0)
{
    std::vector<std::pair<long, long>> work{{i0, j0}};
    while (!work.empty()) {
        auto [i, j] = work.back();
        if (known(i, j)) {
            work.pop_back();
            continue;
        }
        bool ready = true;
        for (const auto& t : kRecurrence) {
            long pi = i - t.di;
            long pj = j - t.dj;
            if (!known(pi, pj)) {
                work.push_back({pi, pj});
                ready = false;
            }
        }
        if (!ready)
            continue;
        work.pop_back();
        Coefficient v = 0;
        for (const auto& t : kRecurrence) {
            const Coefficient& p = lookup(i - t.di, j - t.dj);
            if (p != 0)
                v += t.coeff * p;
        }
        entries_.emplace(pack(i, j), std::move(v));
    }
}

const Coefficient& MTable::at(long i, long j)
{
    if (trivially_zero(i, j))
        return kZero;
    if (i <= 7)
        return seed_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
    auto it = entries_.find(pack(i, j));
    if (it != entries_.end())
        return it->second;
    compute(i, j);
    return entries_.at(pack(i, j));
}

Coefficient MTable::recurrence_value(long i, long j)
{
    if (i <= 7)
        throw std::invalid_argument("recurrence_value: rows 1..7 are seeds");
    if (j < 1)
        throw std::invalid_argument("recurrence_value: column must be >= 1");
    if (j <= 2)
        return 0;  // stated boundary: m_{i,1} = 0 (i >= 4), m_{i,2} = 0 (i >= 8)
    Coefficient v = 0;
    for (const auto& t : kRecurrence) {
        const Coefficient& p = at(i - t.di, j - t.dj);
        if (p != 0)
            v += t.coeff * p;
    }
    return v;
}

void MTable::set_entry(long i, long j, Coefficient v)
{
    if (i >= 1 && i <= 7 && j >= 1 && j <= 14)
        seed_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = std::move(v);
    else
        entries_[pack(i, j)] = std::move(v);
}

long MTable::pi_lower_bound(long i, long j)
{
    return floor_div(7 * j - 2 * i - 1, 4);
}

std::vector<MTable::Entry> MTable::computed_entries() const
{
    std::vector<Entry> out;
    out.reserve(computed_count());
    for (long i = 1; i <= 7; ++i)
        for (long j = 1; j <= 14; ++j)
            out.push_back({i, j,
                           &seed_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]});
    for (const auto& [key, value] : entries_) {
        long i = static_cast<long>(key >> 32);
        long j = static_cast<long>(key & 0xffffffffu);
        out.push_back({i, j, &value});
    }
    return out;
}

std::size_t derivation_precision(long jmax)
{
    return static_cast<std::size_t>(7 * jmax + 14);
}

MRowDerivation derive_m_row_from_series(long i, long jmax, std::size_t N)
{
    if (i < 1 || jmax < 1)
        throw std::invalid_argument("derive_m_row_from_series: bad indices");
    if (N < static_cast<std::size_t>(7 * jmax + 2))
        throw std::invalid_argument("derive_m_row_from_series: precision too small");

    EtaQuotientSpec xi_inv;
    xi_inv.q_prefactor = static_cast<std::size_t>(2 * i);
    xi_inv.factors = {{49, i}, {1, -i}};
    TruncatedSeries lhs = huff7(compile(xi_inv, N));

    // After q^7 -> q the right side reads sum_j m_{i,j} q^j f7^{4j}/f1^{4j}.
    TruncatedSeries sub = extract_progression(lhs, 7, 0);
    QuotientLadder basis(0, 0, 1, sub.precision());
    EliminationResult elim = eliminate_on_ladder(sub, basis, static_cast<std::size_t>(jmax));

    MRowDerivation out;
    out.i = i;
    out.values = std::move(elim.values);
    out.residual_zero = elim.residual_zero;
    out.stray_exponent = elim.stray_exponent;
    if (out.stray_exponent)
        throw std::logic_error("derive_m_row_from_series: huffed series has support "
                               "off the multiples of 7");
    return out;
}

const char* huff_variant_name(HuffVariant v)
{
    switch (v) {
    case HuffVariant::FourIPlusOne: return "4i+1";
    case HuffVariant::FourIPlusTwo: return "4i+2";
    case HuffVariant::FourI: return "4i";
    }
    return "?";
}

HuffLemmaCheck verify_huff_lemma(HuffVariant v, long i, std::size_t N, MTable& m)
{
    if (i < 1)
        throw std::invalid_argument("verify_huff_lemma: i must be >= 1");

    long row = 0;
    EtaQuotientSpec lhs_spec;
    int rhs_num_off = 0;
    switch (v) {
    case HuffVariant::FourIPlusOne:
        row = 4 * i + 1;
        lhs_spec.q_prefactor = static_cast<std::size_t>(i + 2);
        lhs_spec.factors = {{7, 4 * i}, {1, -(4 * i + 1)}};
        rhs_num_off = -1;
        break;
    case HuffVariant::FourIPlusTwo:
        row = 4 * i + 2;
        lhs_spec.q_prefactor = static_cast<std::size_t>(i + 4);
        lhs_spec.factors = {{7, 4 * i}, {1, -(4 * i + 2)}};
        rhs_num_off = -2;
        break;
    case HuffVariant::FourI:
        row = 4 * i;
        lhs_spec.q_prefactor = static_cast<std::size_t>(i);
        lhs_spec.factors = {{7, 4 * i}, {1, -(4 * i)}};
        rhs_num_off = 0;
        break;
    }

    TruncatedSeries lhs = extract_progression(huff7(compile(lhs_spec, N)), 7, 0);

    // Row support ends at column 2*row, i.e. j <= 2*row - i.
    long jmax = 2 * row - i;
    std::vector<Coefficient> coeffs;
    for (long j = 1; j <= jmax; ++j)
        coeffs.push_back(m.at(row, i + j));
    QuotientLadder basis(rhs_num_off, 0, 1, lhs.precision());
    TruncatedSeries rhs = ladder_sum(basis, coeffs);

    HuffLemmaCheck out;
    auto diff = first_difference(lhs, rhs);
    out.pass = !diff.has_value();
    if (diff)
        out.first_mismatch_exponent = *diff * 7;
    return out;
}

}  // namespace pclab
