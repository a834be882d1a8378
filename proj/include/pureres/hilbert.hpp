#pragma once

#include "pureres/filtration.hpp"
#include "pureres/groebner.hpp"
#include "pureres/hilbert_options.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace pureres {

/// l_k = length of M / m^{k+1} M for M = coker(phi1) over K[[X]], for
/// k = 0..kmax, counted as standard monomials of degree <= k of the
/// tangent-cone leading module. That module comes from a Groebner basis of
/// the homogenized columns (HomogenizedLocal order), dehomogenized.
std::vector<std::int64_t> truncated_quotient_lengths(const PolyMatrix& phi1, int kmax);
std::int64_t truncated_quotient_length(const PolyMatrix& phi1, int k);

/// Same lengths by row reduction on the monomial basis of
/// (R/m^{kmax+1})^{beta_0} with pivots at the lowest-degree term.
std::vector<std::int64_t> truncated_quotient_lengths_by_elimination(const PolyMatrix& phi1, int kmax);

/// Leading terms (component, monomial in the original variables) of a
/// standard basis of the column span of phi1 for the local degree order.
std::vector<std::pair<std::size_t, Monomial>> tangent_cone_leads(const PolyMatrix& phi1);

struct HilbertSamuelData {
    std::vector<std::int64_t> lengths;
    /// differences[j][k] is the j-th backward difference at index k, taking
    /// l_{-1} = 0; row 1 is the Hilbert function of the associated graded module.
    std::vector<std::vector<std::int64_t>> differences;
    /// -1 for the zero module.
    int dimension = -1;
    std::int64_t multiplicity = 0;
    /// First k from which the dimension-th difference row stays constant.
    int stabilization_index = 0;
};

/// Throws NoStabilizationError when no difference row of order <= nvars is
/// constant over the last `window` values, and std::invalid_argument unless
/// kmax >= window >= 2.
HilbertSamuelData hilbert_samuel(const PolyMatrix& phi1, const HilbertOptions& options = {});

/// Dimension of K[[X]] / I, or kUnitIdealDimension when a generator has a
/// nonzero constant term.
int local_dimension(std::span<const Polynomial> gens, Field field, std::size_t nvars,
                    const HilbertOptions& options = {});

/// dim_K of the degree-j part of coker(presentation), counted as standard
/// monomials of the leading-term module. Throws NotHomogeneousError.
std::int64_t graded_hilbert_function(const GradedMatrix& presentation, int j);
/// H(0) .. H(jmax) from a single Groebner basis computation.
std::vector<std::int64_t> graded_hilbert_values(const GradedMatrix& presentation, int jmax);

struct KPolynomial {
    /// Coefficients of K(t) = sum_i (-1)^i t^{shift}, index = power of t.
    std::vector<mpz_class> coefficients;
    /// Multiplicity of t = 1 as a root; equals the codimension when the complex is acyclic.
    int codimension = 0;
    /// Q(1) where K = (1 - t)^c Q.
    mpz_class multiplicity;
    /// False when K vanishes or Q(1) <= 0.
    bool consistent = false;
};

KPolynomial k_polynomial_invariants(const FreeComplex& graded);
KPolynomial k_polynomial_invariants(const BettiTable& table);

/// beta_0 * (d_1 * ... * d_p) / p!
Scalar hk_multiplicity(std::size_t beta0, std::span<const int> d);

struct FiltrationCheck {
    struct Row {
        int index = 0;
        std::size_t dim_filtration = 0; ///< dim of the image of m^i F_0 cap N
        std::size_t dim_power = 0;      ///< dim of the image of m^{i-s} N
        bool equal = false;
    };

    int order = 0; ///< s = v(phi_1)
    int kmax = 0;
    std::vector<Row> rows;
    std::optional<int> first_failure;

    bool passed() const { return !first_failure.has_value(); }
};

/// Compares m^i F_0 cap N with m^{i-s} N (N = image of phi_1) inside
/// F_0 / m^{kmax+2} F_0 for i = 0..kmax.
FiltrationCheck truncated_filtration_check(const FreeComplex& local, int kmax);

} // namespace pureres
