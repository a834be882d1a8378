#include "pureres/groebner.hpp"
#include "pureres/errors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace pureres {

using detail::ModuleTerm;
using detail::SparseVector;

int ModuleOrder::compare(std::size_t ca, const Monomial& a, std::size_t cb, const Monomial& b) const
{
    if (elimination_block > 0) {
        const bool high_a = ca < elimination_block;
        const bool high_b = cb < elimination_block;
        if (high_a != high_b)
            return high_a ? 1 : -1;
    }
    const int position = ca == cb ? 0 : (ca < cb ? 1 : -1);
    if (mode == Mode::PositionOverTerm && position != 0)
        return position;
    if (monomial_order.kind != MonomialOrderKind::Lex) {
        const int da = degree(ca, a);
        const int db = degree(cb, b);
        if (da != db)
            return da < db ? -1 : 1;
    }
    if (const int c = monomial_order.compare(a, b); c != 0)
        return c;
    return position;
}

bool is_zero(const ModuleElement& v)
{
    return std::all_of(v.begin(), v.end(), [](const Polynomial& p) { return p.is_zero(); });
}

namespace {

class Engine {
public:
    Engine(Field field, std::size_t nvars, const ModuleOrder& order) : field_(field), nvars_(nvars), order_(order) {}

    SparseVector to_sparse(const ModuleElement& v) const
    {
        if (v.size() != order_.rank())
            throw ShapeError("module element has " + std::to_string(v.size()) + " components, expected " +
                             std::to_string(order_.rank()));
        SparseVector out;
        for (std::size_t c = 0; c < v.size(); ++c)
            for (const auto& t : v[c].terms())
                out.push_back({c, t.monomial, field_.reduce(t.coeff)});
        sort(out);
        return out;
    }

    ModuleElement to_dense(const SparseVector& v) const
    {
        std::vector<std::vector<Term>> per(order_.rank());
        for (const auto& t : v)
            per[t.comp].push_back({t.monomial, t.coeff});
        ModuleElement out;
        out.reserve(per.size());
        for (auto& terms : per)
            out.push_back(Polynomial::from_terms(field_, nvars_, std::move(terms)));
        return out;
    }

    void sort(SparseVector& v) const
    {
        std::sort(v.begin(), v.end(), [this](const ModuleTerm& a, const ModuleTerm& b) {
            return order_.compare(a.comp, a.monomial, b.comp, b.monomial) > 0;
        });
    }

    /// a - c * m * b
    SparseVector sub_mul(const SparseVector& a, const Scalar& c, const Monomial& m, const SparseVector& b,
                         std::size_t a_from = 0) const
    {
        SparseVector out;
        out.reserve(a.size() - a_from + b.size());
        auto i = a.begin() + static_cast<std::ptrdiff_t>(a_from);
        auto j = b.begin();
        while (i != a.end() || j != b.end()) {
            if (j == b.end()) {
                out.push_back(*i++);
                continue;
            }
            Monomial bm = j->monomial * m;
            int cmp = i == a.end() ? -1 : order_.compare(i->comp, i->monomial, j->comp, bm);
            if (cmp > 0) {
                out.push_back(*i++);
            } else if (cmp < 0) {
                out.push_back({j->comp, std::move(bm), field_.neg(field_.mul(c, j->coeff))});
                ++j;
            } else {
                Scalar v = field_.sub(i->coeff, field_.mul(c, j->coeff));
                if (v != 0)
                    out.push_back({i->comp, i->monomial, std::move(v)});
                ++i;
                ++j;
            }
        }
        return out;
    }

    void make_monic(SparseVector& v) const
    {
        if (v.empty() || v.front().coeff == 1)
            return;
        const Scalar inv = field_.inv(v.front().coeff);
        for (auto& t : v)
            t.coeff = field_.mul(t.coeff, inv);
    }

    /// Index of the first basis element whose leading term divides (comp, m).
    std::ptrdiff_t find_reducer(const std::vector<SparseVector>& basis, const std::vector<std::size_t>& active,
                                std::size_t comp, const Monomial& m) const
    {
        for (std::size_t k : active) {
            const auto& lead = basis[k].front();
            if (lead.comp == comp && lead.monomial.divides(m))
                return static_cast<std::ptrdiff_t>(k);
        }
        return -1;
    }

    /// Full reduction against basis[active]; basis elements are monic.
    SparseVector reduce(SparseVector f, const std::vector<SparseVector>& basis,
                        const std::vector<std::size_t>& active) const
    {
        SparseVector result;
        std::size_t start = 0;
        while (start < f.size()) {
            const ModuleTerm& t = f[start];
            const std::ptrdiff_t k = find_reducer(basis, active, t.comp, t.monomial);
            if (k < 0) {
                result.push_back(t);
                ++start;
                continue;
            }
            const auto& g = basis[static_cast<std::size_t>(k)];
            const Monomial m = t.monomial.quotient(g.front().monomial);
            const Scalar c = t.coeff;
            f = sub_mul(f, c, m, g, start);
            start = 0;
        }
        return result;
    }

    struct Pair {
        std::size_t i;
        std::size_t j;
        Monomial lcm;
        int degree;
    };

    GroebnerBasis run(std::span<const ModuleElement> gens)
    {
        std::vector<SparseVector> inputs;
        for (const auto& g : gens) {
            SparseVector v = to_sparse(g);
            if (!v.empty())
                inputs.push_back(std::move(v));
        }
        std::stable_sort(inputs.begin(), inputs.end(), [this](const SparseVector& a, const SparseVector& b) {
            return order_.compare(a.front().comp, a.front().monomial, b.front().comp, b.front().monomial) < 0;
        });
        for (auto& v : inputs) {
            SparseVector h = reduce(std::move(v), basis_, active_);
            if (!h.empty())
                insert(std::move(h));
        }
        while (!pairs_.empty()) {
            auto best = std::min_element(pairs_.begin(), pairs_.end(), [](const Pair& a, const Pair& b) {
                if (a.degree != b.degree)
                    return a.degree < b.degree;
                if (a.j != b.j)
                    return a.j < b.j;
                return a.i < b.i;
            });
            const Pair p = *best;
            pairs_.erase(best);
            SparseVector s = spoly(p);
            SparseVector h = reduce(std::move(s), basis_, active_);
            if (!h.empty())
                insert(std::move(h));
        }
        return GroebnerBasis(field_, nvars_, order_, interreduce());
    }

private:
    SparseVector spoly(const Pair& p) const
    {
        const auto& f = basis_[p.i];
        const auto& g = basis_[p.j];
        SparseVector lhs;
        const Monomial mf = p.lcm.quotient(f.front().monomial);
        lhs.reserve(f.size());
        for (const auto& t : f)
            lhs.push_back({t.comp, t.monomial * mf, t.coeff});
        const Monomial mg = p.lcm.quotient(g.front().monomial);
        return sub_mul(lhs, Scalar(1), mg, g);
    }

    void insert(SparseVector h)
    {
        make_monic(h);
        const std::size_t hi = basis_.size();
        const std::size_t comp = h.front().comp;
        const Monomial& hm = h.front().monomial;
        const bool ideal = order_.rank() == 1;

        // New candidate pairs (k, h).
        std::vector<Pair> fresh;
        for (std::size_t k = 0; k < hi; ++k) {
            const auto& lead = basis_[k].front();
            if (lead.comp != comp)
                continue;
            Monomial l = lead.monomial.lcm(hm);
            const int deg = order_.degree(comp, l);
            fresh.push_back({k, hi, std::move(l), deg});
        }
        auto is_coprime = [&](const Pair& p) { return ideal && basis_[p.i].front().monomial.coprime(hm); };

        // Chain criterion among the new pairs; coprime pairs are kept as witnesses.
        std::vector<Pair> kept;
        std::vector<bool> taken(fresh.size(), false);
        for (std::size_t a = 0; a < fresh.size(); ++a) {
            bool drop = false;
            if (!is_coprime(fresh[a])) {
                for (std::size_t b = 0; b < fresh.size() && !drop; ++b) {
                    if (b == a || (b < a && !taken[b]))
                        continue;
                    if (fresh[b].lcm.divides(fresh[a].lcm))
                        drop = true;
                }
            }
            if (!drop) {
                kept.push_back(fresh[a]);
                taken[a] = true;
            }
        }

        // Old pairs made redundant by h.
        std::vector<Pair> survivors;
        for (auto& p : pairs_) {
            if (basis_[p.i].front().comp == comp && hm.divides(p.lcm)) {
                const Monomial l1 = basis_[p.i].front().monomial.lcm(hm);
                const Monomial l2 = basis_[p.j].front().monomial.lcm(hm);
                if (!(l1 == p.lcm) && !(l2 == p.lcm))
                    continue;
            }
            survivors.push_back(std::move(p));
        }
        pairs_ = std::move(survivors);
        for (auto& p : kept)
            if (!is_coprime(p))
                pairs_.push_back(std::move(p));

        basis_.push_back(std::move(h));
        active_.push_back(hi);
    }

    std::vector<SparseVector> interreduce()
    {
        std::vector<std::size_t> minimal;
        for (std::size_t k = 0; k < basis_.size(); ++k) {
            const auto& lk = basis_[k].front();
            bool redundant = false;
            for (std::size_t j = 0; j < basis_.size() && !redundant; ++j) {
                if (j == k)
                    continue;
                const auto& lj = basis_[j].front();
                if (lj.comp != lk.comp || !lj.monomial.divides(lk.monomial))
                    continue;
                if (!(lj.monomial == lk.monomial) || j < k)
                    redundant = true;
            }
            if (!redundant)
                minimal.push_back(k);
        }
        std::vector<SparseVector> out;
        for (std::size_t k : minimal) {
            std::vector<std::size_t> others;
            for (std::size_t j : minimal)
                if (j != k)
                    others.push_back(j);
            SparseVector r = reduce(basis_[k], basis_, others);
            make_monic(r);
            out.push_back(std::move(r));
        }
        std::sort(out.begin(), out.end(), [this](const SparseVector& a, const SparseVector& b) {
            return order_.compare(a.front().comp, a.front().monomial, b.front().comp, b.front().monomial) < 0;
        });
        return out;
    }

    Field field_;
    std::size_t nvars_;
    const ModuleOrder& order_;
    std::vector<SparseVector> basis_;
    std::vector<std::size_t> active_;
    std::vector<Pair> pairs_;

    friend ModuleElement normal_form(const ModuleElement&, const GroebnerBasis&);
};

} // namespace

GroebnerBasis::GroebnerBasis(Field field, std::size_t nvars, ModuleOrder order, std::vector<SparseVector> elements)
    : field_(field), nvars_(nvars), order_(std::move(order)), elements_(std::move(elements))
{
}

std::vector<ModuleElement> GroebnerBasis::generators() const
{
    Engine engine(field_, nvars_, order_);
    std::vector<ModuleElement> out;
    out.reserve(elements_.size());
    for (const auto& e : elements_)
        out.push_back(engine.to_dense(e));
    return out;
}

std::vector<std::pair<std::size_t, Monomial>> GroebnerBasis::leading_terms() const
{
    std::vector<std::pair<std::size_t, Monomial>> out;
    out.reserve(elements_.size());
    for (const auto& e : elements_)
        out.emplace_back(e.front().comp, e.front().monomial);
    return out;
}

GroebnerBasis buchberger(std::span<const ModuleElement> gens, const ModuleOrder& order, Field field,
                         std::size_t nvars)
{
    if (order.rank() == 0)
        throw std::invalid_argument("module order of rank 0");
    Engine engine(field, nvars, order);
    return engine.run(gens);
}

GroebnerBasis ideal_basis(std::span<const Polynomial> gens, Field field, std::size_t nvars, MonomialOrder mo)
{
    std::vector<ModuleElement> elems;
    elems.reserve(gens.size());
    for (const auto& g : gens)
        elems.push_back({g});
    return buchberger(elems, ModuleOrder::for_ideal(mo), field, nvars);
}

ModuleElement normal_form(const ModuleElement& f, const GroebnerBasis& gb)
{
    Engine engine(gb.field(), gb.nvars(), gb.order());
    std::vector<std::size_t> all(gb.size());
    std::iota(all.begin(), all.end(), std::size_t{0});
    return engine.to_dense(engine.reduce(engine.to_sparse(f), gb.elements(), all));
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb)
{
    return normal_form(ModuleElement{f}, gb).front();
}

bool is_member(const ModuleElement& f, const GroebnerBasis& gb)
{
    return is_zero(normal_form(f, gb));
}

int quotient_dimension(std::span<const Polynomial> gens, Field field, std::size_t nvars, MonomialOrder mo)
{
    const GroebnerBasis gb = ideal_basis(gens, field, nvars, mo);
    std::vector<unsigned long> supports;
    for (const auto& [comp, m] : gb.leading_terms()) {
        if (m.is_one())
            return kUnitIdealDimension;
        supports.push_back(m.support_mask());
    }
    if (nvars >= 8 * sizeof(unsigned long))
        throw std::invalid_argument("too many variables for subset enumeration");
    int best = 0;
    for (unsigned long subset = 0; subset < (1UL << nvars); ++subset) {
        const int size = __builtin_popcountl(subset);
        if (size <= best)
            continue;
        const bool independent = std::none_of(supports.begin(), supports.end(),
                                              [subset](unsigned long s) { return (s & ~subset) == 0; });
        if (independent)
            best = size;
    }
    return best;
}

namespace {

int element_degree(const ModuleElement& v, const std::vector<int>& shifts)
{
    for (std::size_t c = 0; c < v.size(); ++c)
        if (!v[c].is_zero())
            return v[c].total_degree() + shifts[c];
    return 0;
}

} // namespace

std::vector<ModuleElement> minimal_generators(std::span<const ModuleElement> gens, const std::vector<int>& shifts,
                                              Field field, std::size_t nvars)
{
    std::vector<ModuleElement> sorted;
    for (const auto& g : gens)
        if (!is_zero(g))
            sorted.push_back(g);
    std::stable_sort(sorted.begin(), sorted.end(), [&](const ModuleElement& a, const ModuleElement& b) {
        return element_degree(a, shifts) < element_degree(b, shifts);
    });
    const ModuleOrder order{shifts};
    std::vector<ModuleElement> kept;
    for (auto& g : sorted) {
        if (!kept.empty() && is_member(g, buchberger(kept, order, field, nvars)))
            continue;
        kept.push_back(std::move(g));
    }
    return kept;
}

GradedMatrix syzygy_module(const GradedMatrix& m, bool graded)
{
    const PolyMatrix& a = m.matrix;
    if (graded)
        m.require_homogeneous();
    const std::size_t r = a.rows();
    const std::size_t c = a.cols();
    const Field field = a.field();
    const std::size_t n = a.nvars();

    GradedMatrix out{PolyMatrix(field, n, c, 0), m.col_shifts, {}};
    if (c == 0)
        return out;

    ModuleOrder order;
    order.shifts = m.row_shifts;
    order.shifts.insert(order.shifts.end(), m.col_shifts.begin(), m.col_shifts.end());
    order.elimination_block = r;

    std::vector<ModuleElement> gens;
    gens.reserve(c);
    for (std::size_t j = 0; j < c; ++j) {
        ModuleElement v(r + c, Polynomial(field, n));
        for (std::size_t i = 0; i < r; ++i)
            v[i] = a(i, j);
        v[r + j] = Polynomial::constant(field, n, Scalar(1));
        gens.push_back(std::move(v));
    }
    const GroebnerBasis gb = buchberger(gens, order, field, n);

    std::vector<ModuleElement> kernel;
    for (const auto& g : gb.generators()) {
        if (!is_zero(ModuleElement(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(r))))
            continue;
        kernel.emplace_back(g.begin() + static_cast<std::ptrdiff_t>(r), g.end());
    }
    if (graded)
        kernel = minimal_generators(kernel, m.col_shifts, field, n);

    out.matrix = PolyMatrix::from_columns(field, n, c, kernel);
    for (const auto& k : kernel)
        out.col_shifts.push_back(element_degree(k, m.col_shifts));
    return out;
}

BettiTable GradedResolutionData::betti_table() const
{
    BettiTable table;
    for (int s : base_shifts)
        ++table[{0, s}];
    for (std::size_t i = 0; i < differentials.size(); ++i)
        for (int s : differentials[i].col_shifts)
            ++table[{static_cast<int>(i + 1), s}];
    return table;
}

namespace {

bool find_unit(const GradedResolutionData& data, std::size_t& map, std::size_t& row, std::size_t& col)
{
    for (std::size_t i = 0; i < data.differentials.size(); ++i) {
        const PolyMatrix& a = data.differentials[i].matrix;
        for (std::size_t r = 0; r < a.rows(); ++r)
            for (std::size_t c = 0; c < a.cols(); ++c)
                if (!a(r, c).is_zero() && a(r, c).is_constant()) {
                    map = i;
                    row = r;
                    col = c;
                    return true;
                }
    }
    return false;
}

std::vector<std::size_t> all_but(std::size_t n, std::size_t skip)
{
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
        if (i != skip)
            idx.push_back(i);
    return idx;
}

template <class T>
std::vector<T> erase_at(std::vector<T> v, std::size_t k)
{
    v.erase(v.begin() + static_cast<std::ptrdiff_t>(k));
    return v;
}

} // namespace

void minimize_complex(GradedResolutionData& data)
{
    std::size_t i = 0, a = 0, b = 0;
    while (find_unit(data, i, a, b)) {
        GradedMatrix& d = data.differentials[i];
        const PolyMatrix& m = d.matrix;
        const Field field = m.field();
        const Scalar u_inv = field.inv(m(a, b).constant_coefficient());

        // d_i' = d_i - d_i[:, b] * u^{-1} * d_i[a, :], without row a and column b.
        const auto rows = all_but(m.rows(), a);
        const auto cols = all_but(m.cols(), b);
        PolyMatrix reduced(field, m.nvars(), rows.size(), cols.size());
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < cols.size(); ++c) {
                Polynomial e = m(rows[r], cols[c]);
                if (!m(rows[r], b).is_zero() && !m(a, cols[c]).is_zero())
                    e -= (m(rows[r], b) * m(a, cols[c])).scaled(u_inv);
                reduced(r, c) = std::move(e);
            }
        d.matrix = std::move(reduced);
        d.row_shifts = erase_at(d.row_shifts, a);
        d.col_shifts = erase_at(d.col_shifts, b);

        if (i == 0) {
            data.base_shifts = erase_at(data.base_shifts, a);
        } else {
            GradedMatrix& prev = data.differentials[i - 1];
            const auto keep = all_but(prev.matrix.cols(), a);
            const auto all_rows = all_but(prev.matrix.rows(), prev.matrix.rows());
            prev.matrix = prev.matrix.submatrix(all_rows, keep);
            prev.col_shifts = erase_at(prev.col_shifts, a);
        }
        if (i + 1 < data.differentials.size()) {
            GradedMatrix& next = data.differentials[i + 1];
            const auto keep = all_but(next.matrix.rows(), b);
            const auto all_cols = all_but(next.matrix.cols(), next.matrix.cols());
            next.matrix = next.matrix.submatrix(keep, all_cols);
            next.row_shifts = erase_at(next.row_shifts, b);
        }
    }
    while (!data.differentials.empty() && data.differentials.back().matrix.cols() == 0)
        data.differentials.pop_back();
}

GradedResolutionData minimal_graded_resolution(const GradedMatrix& presentation)
{
    presentation.require_homogeneous();
    const PolyMatrix& p = presentation.matrix;
    const Field field = p.field();
    const std::size_t n = p.nvars();

    GradedResolutionData data;
    data.base_shifts = presentation.row_shifts;

    std::vector<ModuleElement> columns;
    for (std::size_t c = 0; c < p.cols(); ++c)
        columns.push_back(p.column(c));
    const auto gens = minimal_generators(columns, presentation.row_shifts, field, n);
    if (gens.empty())
        return data;

    GradedMatrix current{PolyMatrix::from_columns(field, n, p.rows(), gens), presentation.row_shifts, {}};
    for (const auto& g : gens)
        current.col_shifts.push_back(element_degree(g, presentation.row_shifts));
    data.differentials.push_back(current);

    for (std::size_t step = 0;; ++step) {
        if (step > n + 1)
            throw std::logic_error("resolution exceeded the Hilbert syzygy bound");
        GradedMatrix next = syzygy_module(current);
        if (next.matrix.cols() == 0)
            break;
        data.differentials.push_back(next);
        current = std::move(next);
    }
    minimize_complex(data);
    return data;
}

} // namespace pureres
