#pragma once

#include "pureres/filtration.hpp"
#include "pureres/groebner.hpp"
#include "pureres/hilbert.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pureres {

struct ExpectedRanks {
    /// r_1 .. r_p with r_i = sum_{j >= i} (-1)^{j-i} beta_j.
    std::vector<long> ranks;
    /// False when some r_i <= 0, impossible for an acyclic complex of nonzero maps.
    bool feasible = true;
};

ExpectedRanks expected_ranks(std::span<const std::size_t> betti);

struct AcyclicityResult {
    struct MapCheck {
        std::size_t index = 0;
        std::size_t rank = 0;
        long expected_rank = 0;
        bool rank_ok = false;
        /// Dimension of R/I (graded) or A/I (local) for I = I_{r_i}(phi_i);
        /// unset when the rank check failed first.
        std::optional<int> dimension;
        std::optional<int> grade;
        bool grade_infinite = false;
        bool grade_ok = false;
    };

    bool acyclic = false;
    std::vector<MapCheck> maps;

    /// Human-readable reason for the first failing map, e.g.
    /// "grade(I_1(in φ_2)) = 1 < 2", with `label` naming the maps.
    std::string failure_detail(const std::string& label) const;
};

/// Buchsbaum-Eisenbud: acyclic iff rank(phi_i) = r_i and grade I_{r_i}(phi_i) >= i
/// for all i. Grades are n - quotient_dimension (Graded) or n - local_dimension (Local).
AcyclicityResult buchsbaum_eisenbud_acyclic(const FreeComplex& complex, Flavor mode,
                                            const HilbertOptions& options = {});

/// Direct check that ker(phi_i) is contained in im(phi_{i+1}) for every i >= 1,
/// using minimal syzygies and normal forms. Graded complexes only.
struct HomologyCheck {
    bool exact = true;
    std::optional<std::size_t> first_nonzero;
};
HomologyCheck homology_vanishes(const FreeComplex& graded);

struct HerzogKuhlResult {
    struct Check {
        std::size_t index = 0;
        Scalar expected;
        std::size_t actual = 0;
        bool ok = false;
    };
    std::vector<Check> checks;
    bool ok = false;
};

/// beta_i == (-1)^{i+1} beta_0 prod_{j != i} d_j / (d_j - d_i) for i = 1..p.
/// `d` holds d_1 .. d_p and must be strictly increasing and positive.
HerzogKuhlResult herzog_kuhl_check(std::span<const std::size_t> betti, std::span<const int> d);

struct PureType {
    std::vector<int> degrees; ///< 0, d_1, .., d_p
    std::vector<std::size_t> betti;
};

enum class Verdict { Pure, NotPure, PreconditionFailed };

std::string to_string(Verdict v);

struct MultiplicityCheck {
    std::int64_t e0 = 0;
    Scalar formula;
    bool ok = false;
};

struct CertificationReport {
    LocalValidation validation;
    std::optional<HilbertSamuelData> hilbert;
    int expected_dimension = 0; ///< n - p
    bool cohen_macaulay = false;

    std::optional<ShiftData> shifts;
    std::optional<FreeComplex> in_complex;
    std::vector<std::size_t> betti;

    std::optional<AcyclicityResult> acyclicity;  ///< condition (a)
    std::optional<HerzogKuhlResult> herzog_kuhl; ///< condition (b)
    std::optional<MultiplicityCheck> multiplicity; ///< condition (c)

    Verdict verdict = Verdict::PreconditionFailed;
    std::optional<PureType> pure_type;
    /// 'a', 'b' or 'c' for NotPure.
    char failed_condition = 0;
    std::string detail;
};

struct CertifyOptions {
    HilbertOptions hilbert;
};

/// Decides whether the associated graded module of M = coker(phi_1) has a
/// pure resolution, given a minimal free resolution of a Cohen-Macaulay M.
/// All three conditions are evaluated even after one fails.
CertificationReport certify_pure(const FreeComplex& local, const CertifyOptions& options = {});

struct BettiComparison {
    BettiTable oracle;
    BettiTable in_complex;
    bool match = false;
};

/// Minimal graded resolution of coker(in(phi_1)) compared, as a Betti table,
/// with the table of in(F).
BettiComparison verify_theorem_first(const FreeComplex& local);

BettiTable betti_table(const FreeComplex& graded);

} // namespace pureres
