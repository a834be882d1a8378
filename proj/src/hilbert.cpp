#include "pureres/hilbert.hpp"
#include "pureres/errors.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <unordered_map>

namespace pureres {

namespace {

/// Coordinates of (R / m^{D+1})^{beta0}: monomials by ascending degree, then
/// component. A smaller index never has a larger degree.
class TruncatedBasis {
public:
    TruncatedBasis(std::size_t nvars, std::size_t components, int max_degree)
        : nvars_(nvars), components_(components), max_degree_(max_degree)
    {
        for (int d = 0; d <= max_degree; ++d) {
            block_start_.push_back(monomials_.size());
            for (auto& m : monomials_of_degree(nvars, d)) {
                index_.emplace(m, monomials_.size());
                monomials_.push_back(std::move(m));
            }
        }
        block_start_.push_back(monomials_.size());
    }

    std::size_t nvars() const { return nvars_; }
    int max_degree() const { return max_degree_; }
    std::size_t index(const Monomial& m, std::size_t comp) const { return index_.at(m) * components_ + comp; }
    int degree_of(std::size_t index) const { return monomials_[index / components_].degree(); }
    /// Monomials of degree exactly d.
    std::span<const Monomial> degree_block(int d) const
    {
        return std::span<const Monomial>(monomials_).subspan(block_start_[d], block_start_[d + 1] - block_start_[d]);
    }

private:
    std::size_t nvars_;
    std::size_t components_;
    int max_degree_;
    std::vector<Monomial> monomials_;
    std::vector<std::size_t> block_start_;
    std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
};

using SparseRow = std::vector<std::pair<std::size_t, Scalar>>;

/// Semi-echelon form with pivots at the smallest index of each row.
class LowestTermEchelon {
public:
    explicit LowestTermEchelon(Field field) : field_(field) {}

    /// Reduces and stores the row; returns its pivot index if independent.
    std::optional<std::size_t> add(SparseRow row)
    {
        while (!row.empty()) {
            auto it = pivots_.find(row.front().first);
            if (it == pivots_.end()) {
                const Scalar s = field_.inv(row.front().second);
                for (auto& [idx, c] : row)
                    c = field_.mul(c, s);
                const std::size_t pivot = row.front().first;
                pivots_.emplace(pivot, std::move(row));
                return pivot;
            }
            row = subtract(row, row.front().second, it->second);
        }
        return std::nullopt;
    }

    const std::map<std::size_t, SparseRow>& pivots() const { return pivots_; }

private:
    SparseRow subtract(const SparseRow& a, const Scalar& factor, const SparseRow& b) const
    {
        SparseRow out;
        out.reserve(a.size() + b.size());
        std::size_t i = 0;
        std::size_t j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
                out.push_back(a[i++]);
            } else if (i == a.size() || b[j].first < a[i].first) {
                out.emplace_back(b[j].first, field_.neg(field_.mul(factor, b[j].second)));
                ++j;
            } else {
                Scalar c = field_.sub(a[i].second, field_.mul(factor, b[j].second));
                if (c != 0)
                    out.emplace_back(a[i].first, std::move(c));
                ++i;
                ++j;
            }
        }
        return out;
    }

    Field field_;
    std::map<std::size_t, SparseRow> pivots_;
};

/// u * column, truncated to the basis.
SparseRow shifted_column(const TruncatedBasis& basis, const std::vector<Polynomial>& column, const Monomial& u)
{
    SparseRow row;
    for (std::size_t comp = 0; comp < column.size(); ++comp)
        for (const auto& t : column[comp].terms()) {
            if (t.monomial.degree() + u.degree() > basis.max_degree())
                continue;
            row.emplace_back(basis.index(t.monomial * u, comp), t.coeff);
        }
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return row;
}

/// Feeds u * col_j for every column and every u with min_shift(j) <= deg u
/// and deg u + ord(col_j) <= D, in ascending degree of the product.
template <class MinShift>
void eliminate_submodule(const TruncatedBasis& basis, const PolyMatrix& phi, LowestTermEchelon& echelon,
                         MinShift min_shift)
{
    struct Source {
        std::vector<Polynomial> column;
        int order;
        int min_u;
    };
    std::vector<Source> sources;
    for (std::size_t j = 0; j < phi.cols(); ++j) {
        auto col = phi.column(j);
        Order ord = Order::infinity();
        for (const auto& f : col)
            ord = std::min(ord, order_of(f));
        if (ord.is_infinite())
            continue;
        sources.push_back({std::move(col), ord.value(), std::max(0, min_shift(ord.value()))});
    }
    for (int total = 0; total <= basis.max_degree(); ++total)
        for (const auto& s : sources) {
            const int du = total - s.order;
            if (du < s.min_u)
                continue;
            for (const auto& u : basis.degree_block(du))
                echelon.add(shifted_column(basis, s.column, u));
        }
}

std::vector<std::int64_t> lengths_from_pivots(const TruncatedBasis& basis, const LowestTermEchelon& echelon,
                                              std::size_t beta0, int kmax)
{
    std::vector<std::int64_t> pivots_at(static_cast<std::size_t>(kmax) + 1, 0);
    for (const auto& [idx, row] : echelon.pivots())
        ++pivots_at[static_cast<std::size_t>(basis.degree_of(idx))];
    std::vector<std::int64_t> out;
    std::int64_t free_dim = 0;
    std::int64_t rank = 0;
    for (int k = 0; k <= kmax; ++k) {
        free_dim += static_cast<std::int64_t>(beta0 * basis.degree_block(k).size());
        rank += pivots_at[static_cast<std::size_t>(k)];
        out.push_back(free_dim - rank);
    }
    return out;
}

} // namespace

std::vector<std::int64_t> truncated_quotient_lengths_by_elimination(const PolyMatrix& phi1, int kmax)
{
    if (kmax < 0)
        throw std::invalid_argument("kmax must be non-negative");
    const TruncatedBasis basis(phi1.nvars(), phi1.rows(), kmax);
    LowestTermEchelon echelon(phi1.field());
    eliminate_submodule(basis, phi1, echelon, [](int) { return 0; });
    return lengths_from_pivots(basis, echelon, phi1.rows(), kmax);
}

std::vector<std::pair<std::size_t, Monomial>> tangent_cone_leads(const PolyMatrix& phi1)
{
    const std::size_t n = phi1.nvars();
    const Field field = phi1.field();
    std::vector<ModuleElement> homogenized;
    for (std::size_t j = 0; j < phi1.cols(); ++j) {
        int top = -1;
        for (std::size_t r = 0; r < phi1.rows(); ++r)
            top = std::max(top, phi1(r, j).total_degree());
        if (top < 0)
            continue;
        ModuleElement col;
        for (std::size_t r = 0; r < phi1.rows(); ++r) {
            Polynomial h(field, n + 1);
            for (const auto& t : phi1(r, j).terms()) {
                std::vector<int> e{top - t.monomial.degree()};
                e.insert(e.end(), t.monomial.exponents().begin(), t.monomial.exponents().end());
                h += Polynomial::term(field, Monomial(std::move(e)), t.coeff);
            }
            col.push_back(std::move(h));
        }
        homogenized.push_back(std::move(col));
    }
    ModuleOrder order;
    order.shifts.assign(phi1.rows(), 0);
    order.monomial_order.kind = MonomialOrderKind::HomogenizedLocal;
    const GroebnerBasis gb = buchberger(homogenized, order, field, n + 1);

    std::vector<std::pair<std::size_t, Monomial>> leads;
    for (const auto& [comp, m] : gb.leading_terms())
        leads.emplace_back(comp, Monomial(std::vector<int>(m.exponents().begin() + 1, m.exponents().end())));
    return leads;
}

std::vector<std::int64_t> truncated_quotient_lengths(const PolyMatrix& phi1, int kmax)
{
    if (kmax < 0)
        throw std::invalid_argument("kmax must be non-negative");
    const auto leads = tangent_cone_leads(phi1);
    std::vector<std::int64_t> out;
    std::int64_t total = 0;
    for (int k = 0; k <= kmax; ++k) {
        for (const auto& m : monomials_of_degree(phi1.nvars(), k))
            for (std::size_t comp = 0; comp < phi1.rows(); ++comp) {
                const bool standard = std::none_of(leads.begin(), leads.end(), [&](const auto& lt) {
                    return lt.first == comp && lt.second.divides(m);
                });
                total += standard ? 1 : 0;
            }
        out.push_back(total);
    }
    return out;
}

std::int64_t truncated_quotient_length(const PolyMatrix& phi1, int k)
{
    return truncated_quotient_lengths(phi1, k).back();
}

HilbertSamuelData hilbert_samuel(const PolyMatrix& phi1, const HilbertOptions& options)
{
    const std::size_t n = phi1.nvars();
    const int window = options.effective_window(n);
    if (window < 2 || options.kmax < window)
        throw std::invalid_argument("Hilbert-Samuel needs kmax >= window >= 2");

    HilbertSamuelData data;
    data.lengths = truncated_quotient_lengths(phi1, options.kmax);
    const auto len = data.lengths.size();
    data.differences.push_back(data.lengths);
    for (std::size_t j = 1; j <= n; ++j) {
        const auto& prev = data.differences.back();
        std::vector<std::int64_t> row(len, 0);
        for (std::size_t k = 0; k < len; ++k)
            row[k] = prev[k] - (k > 0 ? prev[k - 1] : 0);
        data.differences.push_back(std::move(row));
    }

    if (data.lengths.front() == 0) {
        data.dimension = -1;
        data.multiplicity = 0;
        return data;
    }

    for (std::size_t d = 0; d <= n; ++d) {
        const auto& row = data.differences[d];
        const std::size_t first = len - static_cast<std::size_t>(window);
        const std::int64_t value = row.back();
        if (!std::all_of(row.begin() + static_cast<long>(first), row.end(),
                         [value](std::int64_t v) { return v == value; }))
            continue;
        if (value <= 0)
            throw std::logic_error("non-positive leading Hilbert-Samuel coefficient for a nonzero module");
        std::size_t start = first;
        while (start > 0 && row[start - 1] == value)
            --start;
        data.dimension = static_cast<int>(d);
        data.multiplicity = value;
        data.stabilization_index = static_cast<int>(start);
        return data;
    }
    throw NoStabilizationError("Hilbert-Samuel differences did not stabilize within kmax = " +
                               std::to_string(options.kmax) + " (window " + std::to_string(window) + ")");
}

int local_dimension(std::span<const Polynomial> gens, Field field, std::size_t nvars, const HilbertOptions& options)
{
    std::vector<Polynomial> nonzero;
    for (const auto& g : gens) {
        if (g.constant_coefficient() != 0)
            return kUnitIdealDimension;
        if (!g.is_zero())
            nonzero.push_back(g);
    }
    if (nonzero.empty())
        return static_cast<int>(nvars);
    PolyMatrix row(field, nvars, 1, nonzero.size());
    for (std::size_t j = 0; j < nonzero.size(); ++j)
        row(0, j) = nonzero[j];
    return hilbert_samuel(row, options).dimension;
}

namespace {

std::vector<std::pair<std::size_t, Monomial>> presentation_leads(const GradedMatrix& presentation)
{
    presentation.require_homogeneous();
    const PolyMatrix& m = presentation.matrix;
    std::vector<ModuleElement> cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        cols.push_back(m.column(c));
    ModuleOrder order;
    order.shifts = presentation.row_shifts;
    return buchberger(cols, order, m.field(), m.nvars()).leading_terms();
}

std::int64_t count_standard(const GradedMatrix& presentation,
                            const std::vector<std::pair<std::size_t, Monomial>>& leads, int j)
{
    std::int64_t count = 0;
    for (std::size_t comp = 0; comp < presentation.matrix.rows(); ++comp)
        for (const auto& mono : monomials_of_degree(presentation.matrix.nvars(), j - presentation.row_shifts[comp])) {
            const bool standard = std::none_of(leads.begin(), leads.end(), [&](const auto& lt) {
                return lt.first == comp && lt.second.divides(mono);
            });
            count += standard ? 1 : 0;
        }
    return count;
}

} // namespace

std::vector<std::int64_t> graded_hilbert_values(const GradedMatrix& presentation, int jmax)
{
    const auto leads = presentation_leads(presentation);
    std::vector<std::int64_t> out;
    for (int j = 0; j <= jmax; ++j)
        out.push_back(count_standard(presentation, leads, j));
    return out;
}

std::int64_t graded_hilbert_function(const GradedMatrix& presentation, int j)
{
    return count_standard(presentation, presentation_leads(presentation), j);
}

KPolynomial k_polynomial_invariants(const BettiTable& table)
{
    KPolynomial k;
    int top = 0;
    for (const auto& [key, count] : table) {
        if (key.second < 0)
            throw std::invalid_argument("negative shifts are not supported in K(t)");
        top = std::max(top, key.second);
    }
    k.coefficients.assign(static_cast<std::size_t>(top) + 1, 0);
    for (const auto& [key, count] : table) {
        const mpz_class b(static_cast<unsigned long>(count));
        if (key.first % 2 == 0)
            k.coefficients[static_cast<std::size_t>(key.second)] += b;
        else
            k.coefficients[static_cast<std::size_t>(key.second)] -= b;
    }
    while (!k.coefficients.empty() && k.coefficients.back() == 0)
        k.coefficients.pop_back();
    if (k.coefficients.empty())
        return k;

    // Repeated synthetic division by (t - 1); K = (t - 1)^c Q', Q = (-1)^c Q'.
    std::vector<mpz_class> q = k.coefficients;
    auto value_at_one = [](const std::vector<mpz_class>& p) {
        mpz_class s = 0;
        for (const auto& c : p)
            s += c;
        return s;
    };
    while (q.size() > 1 && value_at_one(q) == 0) {
        std::vector<mpz_class> next(q.size() - 1);
        mpz_class carry = 0;
        for (std::size_t i = q.size() - 1; i >= 1; --i) {
            carry += q[i];
            next[i - 1] = carry;
        }
        q = std::move(next);
        ++k.codimension;
    }
    k.multiplicity = value_at_one(q);
    if (k.codimension % 2 == 1)
        k.multiplicity = -k.multiplicity;
    k.consistent = k.multiplicity > 0;
    return k;
}

KPolynomial k_polynomial_invariants(const FreeComplex& graded)
{
    if (graded.flavor() != Flavor::Graded)
        throw std::invalid_argument("K(t) needs a graded complex");
    BettiTable table;
    const auto betti = graded.ranks();
    for (std::size_t i = 0; i < betti.size(); ++i)
        table[{static_cast<int>(i), graded.shifts()[i]}] += betti[i];
    return k_polynomial_invariants(table);
}

Scalar hk_multiplicity(std::size_t beta0, std::span<const int> d)
{
    Scalar num(static_cast<unsigned long>(beta0));
    Scalar den(1);
    for (std::size_t i = 0; i < d.size(); ++i) {
        num *= d[i];
        den *= static_cast<long>(i + 1);
    }
    Scalar out = num / den;
    out.canonicalize();
    return out;
}

FiltrationCheck truncated_filtration_check(const FreeComplex& local, int kmax)
{
    if (kmax < 0)
        throw std::invalid_argument("kmax must be non-negative");
    const PolyMatrix& phi = local.map(1);
    FiltrationCheck check;
    check.order = order_of_map(phi);
    check.kmax = kmax;
    const int s = check.order;
    const TruncatedBasis basis(phi.nvars(), phi.rows(), kmax + 1);

    LowestTermEchelon image(phi.field());
    eliminate_submodule(basis, phi, image, [](int) { return 0; });
    std::vector<std::size_t> pivots_at(static_cast<std::size_t>(kmax) + 2, 0);
    for (const auto& [idx, row] : image.pivots())
        ++pivots_at[static_cast<std::size_t>(basis.degree_of(idx))];

    for (int i = 0; i <= kmax; ++i) {
        FiltrationCheck::Row row;
        row.index = i;
        for (int d = i; d <= kmax + 1; ++d)
            row.dim_filtration += pivots_at[static_cast<std::size_t>(d)];
        LowestTermEchelon power(phi.field());
        eliminate_submodule(basis, phi, power, [i, s](int) { return i - s; });
        row.dim_power = power.pivots().size();
        row.equal = row.dim_filtration == row.dim_power;
        if (!row.equal && !check.first_failure)
            check.first_failure = i;
        check.rows.push_back(row);
    }
    return check;
}

} // namespace pureres
