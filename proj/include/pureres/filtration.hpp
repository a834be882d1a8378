#pragma once

#include "pureres/hilbert_options.hpp"
#include "pureres/poly_matrix.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pureres {

/// LOCAL complexes live over K[[X]] (entries are finite power series),
/// GRADED ones over K[X] with F_i = R(-d_i)^{beta_i}.
enum class Flavor { Local, Graded };

/// 0 -> F_p -> ... -> F_1 -> F_0 -> 0 with maps(i-1) = phi_i : F_i -> F_{i-1}
/// of shape beta_{i-1} x beta_i.
class FreeComplex {
public:
    /// Throws ShapeError on an empty map list, broken shape chaining, or a
    /// shift list that does not have p + 1 entries in the graded flavor.
    FreeComplex(Ring ring, std::vector<PolyMatrix> maps, Flavor flavor = Flavor::Local, std::vector<int> shifts = {});

    const Ring& ring() const { return ring_; }
    Flavor flavor() const { return flavor_; }
    std::size_t length() const { return maps_.size(); }
    /// phi_i for 1 <= i <= p.
    const PolyMatrix& map(std::size_t i) const { return maps_.at(i - 1); }
    const std::vector<PolyMatrix>& maps() const { return maps_; }
    /// beta_0 .. beta_p.
    std::vector<std::size_t> ranks() const;
    /// d_0 = 0, d_1 .. d_p for graded complexes; empty for local ones.
    const std::vector<int>& shifts() const { return shifts_; }
    /// phi_i with row shifts d_{i-1} and column shifts d_i (graded only).
    GradedMatrix graded_map(std::size_t i) const;

private:
    Ring ring_;
    std::vector<PolyMatrix> maps_;
    Flavor flavor_;
    std::vector<int> shifts_;
};

/// c_i = v(phi_i) and d_i = c_1 + ... + c_i, both indexed from 1 (c[0] = c_1).
struct ShiftData {
    std::vector<int> c;
    std::vector<int> d;
};

/// v(phi): least order of an entry. Throws ZeroMapError for the zero map.
int order_of_map(const PolyMatrix& phi);
/// Entry-wise homogeneous component of degree v(phi), the lowest one.
PolyMatrix initial_form(const PolyMatrix& phi);
ShiftData shift_data(const FreeComplex& local);

/// in(F): maps in(phi_i), shifts (0, d_1, .., d_p). Throws ZeroMapError or
/// CompositionNonzeroError.
FreeComplex build_in_complex(const FreeComplex& local);

struct LocalValidation {
    enum class Failure { None, CompositionNonzero, ZeroRowOrColumn, MinimalityViolation, RankMismatch, GradeDeficient };

    struct MapCheck {
        std::size_t index = 0;
        std::size_t rank = 0;
        long expected_rank = 0;
        /// Local dimension of A / I_{r_i}(phi_i); unset when skipped.
        std::optional<int> local_dimension;
        /// grade_A(I_{r_i}); unset when skipped or infinite (unit ideal).
        std::optional<int> grade;
        bool grade_infinite = false;
        bool ok = false;
    };

    Failure failure = Failure::None;
    std::string detail;
    std::vector<MapCheck> exactness;

    bool ok() const { return failure == Failure::None; }
};

std::string to_string(LocalValidation::Failure f);

/// Composition, minimality (no zero rows or columns, no unit entries) and
/// exactness over A via expected ranks and local grades of minor ideals.
/// Stops at the first violated condition.
LocalValidation validate_local_resolution(const FreeComplex& local, const HilbertOptions& options = {});

/// Complex with maps theta_{i-1} * phi_i * theta_i^{-1} for theta_0 .. theta_p.
/// The inverse is the Neumann series of the constant-normalized matrix; it is
/// exact when the series terminates and is otherwise truncated (with the
/// result maps) at degree (max degree in F and theta) + d_p + 2.
/// Throws SingularBasisChangeError when a constant part is singular.
FreeComplex change_basis_equivalent(const FreeComplex& local, std::span<const PolyMatrix> theta);

/// Seeded theta_0 .. theta_p of the form P * D * U: a permutation, a diagonal
/// of small nonzero integers, and a unitriangular matrix with polynomial
/// off-diagonal entries. Their inverses are polynomial.
std::vector<PolyMatrix> random_basis_change(const FreeComplex& local, std::uint64_t seed);

/// Koszul complex of f_1 .. f_p with the exterior-algebra sign convention.
FreeComplex koszul_complex(const Ring& ring, std::span<const Polynomial> sequence);

} // namespace pureres
