#pragma once

#include "pureres/poly_matrix.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace pureres {

/// HomogenizedLocal reads variable 0 as a homogenizing variable t: total
/// degree first, then the larger power of t, then degrevlex. On homogenized
/// input it picks lowest-degree terms of the dehomogenization as leaders.
enum class MonomialOrderKind { DegRevLex, Lex, HomogenizedLocal };

struct MonomialOrder {
    MonomialOrderKind kind = MonomialOrderKind::DegRevLex;

    int compare(const Monomial& a, const Monomial& b) const
    {
        switch (kind) {
        case MonomialOrderKind::Lex:
            return compare_lex(a, b);
        case MonomialOrderKind::HomogenizedLocal:
            if (a.degree() == b.degree() && a[0] != b[0])
                return a[0] > b[0] ? 1 : -1;
            return compare_degrevlex(a, b);
        case MonomialOrderKind::DegRevLex:
            break;
        }
        return compare_degrevlex(a, b);
    }
};

/// Order on terms (component, monomial) of a free module with generator
/// degrees `shifts`.
///
/// TermOverPosition compares the shifted degree deg(m) + shifts[c] first
/// (skipped for lex), then the monomial order, then the component with lower
/// indices larger. PositionOverTerm compares components first. When
/// `elimination_block` is k > 0, every term in components < k is larger than
/// every term in components >= k; this is the block order used to read off
/// syzygies.
struct ModuleOrder {
    enum class Mode { TermOverPosition, PositionOverTerm };

    std::vector<int> shifts;
    MonomialOrder monomial_order{};
    Mode mode = Mode::TermOverPosition;
    std::size_t elimination_block = 0;

    static ModuleOrder for_ideal(MonomialOrder mo = {}) { return ModuleOrder{{0}, mo}; }

    std::size_t rank() const { return shifts.size(); }
    int degree(std::size_t comp, const Monomial& m) const { return m.degree() + shifts[comp]; }
    int compare(std::size_t ca, const Monomial& a, std::size_t cb, const Monomial& b) const;
};

/// Element of a free module R^rank, one polynomial per component.
using ModuleElement = std::vector<Polynomial>;

bool is_zero(const ModuleElement& v);

namespace detail {

struct ModuleTerm {
    std::size_t comp;
    Monomial monomial;
    Scalar coeff;
};

/// Terms sorted descending in a ModuleOrder, no zero coefficients.
using SparseVector = std::vector<ModuleTerm>;

} // namespace detail

/// Reduced Groebner basis of a submodule of a free module. Leading
/// coefficients are 1 and generators are listed by increasing leading term.
class GroebnerBasis {
public:
    GroebnerBasis(Field field, std::size_t nvars, ModuleOrder order, std::vector<detail::SparseVector> elements);

    const Field& field() const { return field_; }
    std::size_t nvars() const { return nvars_; }
    const ModuleOrder& order() const { return order_; }
    std::size_t rank() const { return order_.rank(); }
    std::size_t size() const { return elements_.size(); }
    bool reduced() const { return true; }

    std::vector<ModuleElement> generators() const;
    /// (component, monomial) of each generator's leading term.
    std::vector<std::pair<std::size_t, Monomial>> leading_terms() const;
    const std::vector<detail::SparseVector>& elements() const { return elements_; }

private:
    Field field_;
    std::size_t nvars_;
    ModuleOrder order_;
    std::vector<detail::SparseVector> elements_;
};

/// Buchberger's algorithm with Gebauer-Moeller pair elimination. Pairs are
/// processed by (shifted degree of the lcm, generator indices). The product
/// criterion is only applied for ideals (rank 1).
GroebnerBasis buchberger(std::span<const ModuleElement> gens, const ModuleOrder& order, Field field,
                         std::size_t nvars);
GroebnerBasis ideal_basis(std::span<const Polynomial> gens, Field field, std::size_t nvars, MonomialOrder mo = {});

/// Fully reduced remainder of f against gb.
ModuleElement normal_form(const ModuleElement& f, const GroebnerBasis& gb);
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);
bool is_member(const ModuleElement& f, const GroebnerBasis& gb);

/// Dimension value reported for the unit ideal, where R/I = 0.
inline constexpr int kUnitIdealDimension = -1;

/// Krull dimension of R/I from the leading monomials of a Groebner basis:
/// the largest set S of variables such that no leading monomial uses only
/// variables of S. Returns kUnitIdealDimension for I = R.
int quotient_dimension(std::span<const Polynomial> gens, Field field, std::size_t nvars, MonomialOrder mo = {});

/// Generators of the kernel of m as a graded map. Output rows index the
/// columns of m; output column shifts are the generator degrees. The
/// generating set is minimal. With `graded` false the homogeneity check is
/// skipped and minimization is not attempted.
GradedMatrix syzygy_module(const GradedMatrix& m, bool graded = true);

/// Minimal homogeneous generating set, ordered by degree, of the submodule
/// spanned by `gens` in a free module with the given generator degrees.
std::vector<ModuleElement> minimal_generators(std::span<const ModuleElement> gens, const std::vector<int>& shifts,
                                              Field field, std::size_t nvars);

/// (homological degree, shift) -> rank.
using BettiTable = std::map<std::pair<int, int>, std::size_t>;

struct GradedResolutionData {
    /// Generator degrees of F_0.
    std::vector<int> base_shifts;
    /// d_1 .. d_p, d_i : F_i -> F_{i-1}.
    std::vector<GradedMatrix> differentials;

    std::size_t length() const { return differentials.size(); }
    BettiTable betti_table() const;
};

/// Cancels unit entries of a graded complex until no nonzero constant entry
/// remains. Pivots are taken as the first constant entry in a row-major scan
/// of d_1, d_2, ... in that order.
void minimize_complex(GradedResolutionData& data);

/// Minimal graded free resolution of coker(presentation) by iterated minimal
/// syzygies followed by unit cancellation.
GradedResolutionData minimal_graded_resolution(const GradedMatrix& presentation);

} // namespace pureres
