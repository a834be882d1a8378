#include "pureres/complex_file.hpp"
#include "pureres/purity.hpp"

#include <doctest.h>

#include <filesystem>

using namespace pureres;

namespace {

const Ring xyz({"x", "y", "z"});
const Ring xy({"x", "y"});

PolyMatrix M(std::size_t rows, std::size_t cols, const std::vector<std::string>& e, const Ring& r = xyz)
{
    PolyMatrix m(r.field(), r.nvars(), rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = parse_polynomial(e[i * cols + j], r);
    return m;
}

FreeComplex fixture(const std::string& name)
{
    return to_free_complex(read_complex_file(std::filesystem::path(FIXTURE_DIR) / name));
}

FreeComplex koszul(const Ring& r, const std::vector<std::string>& forms)
{
    std::vector<Polynomial> seq;
    for (const auto& f : forms)
        seq.push_back(parse_polynomial(f, r));
    return koszul_complex(r, seq);
}

} // namespace

TEST_CASE("expected ranks")
{
    CHECK(expected_ranks(std::vector<std::size_t>{2, 4, 2}).ranks == std::vector<long>{2, 2});
    CHECK(expected_ranks(std::vector<std::size_t>{1, 3, 3, 1}).ranks == std::vector<long>{1, 2, 1});
    CHECK(expected_ranks(std::vector<std::size_t>{1, 2, 1}).ranks == std::vector<long>{1, 1});
    CHECK(expected_ranks(std::vector<std::size_t>{1, 2, 1}).feasible);
    CHECK_FALSE(expected_ranks(std::vector<std::size_t>{1, 1, 2}).feasible);
}

TEST_CASE("Buchsbaum-Eisenbud acyclicity")
{
    const FreeComplex in5 = build_in_complex(fixture("pure_rank2.cx"));
    const auto ok = buchsbaum_eisenbud_acyclic(in5, Flavor::Graded);
    CHECK(ok.acyclic);
    REQUIRE(ok.maps.size() == 2);
    CHECK(ok.maps[0].rank == 2);
    CHECK(ok.maps[1].rank == 2);
    CHECK(ok.maps[1].grade == 2);
    CHECK(*ok.maps[0].grade >= 1);

    const FreeComplex in_np = build_in_complex(fixture("not_pure.cx"));
    const auto bad = buchsbaum_eisenbud_acyclic(in_np, Flavor::Graded);
    CHECK_FALSE(bad.acyclic);
    CHECK(bad.maps[1].grade == 1);
    CHECK(bad.failure_detail("in φ") == "grade(I_1(in φ_2)) = 1 < 2");

    const FreeComplex k3 = koszul(xyz, {"x", "y", "z"});
    CHECK(buchsbaum_eisenbud_acyclic(k3, Flavor::Local).acyclic);
    CHECK(buchsbaum_eisenbud_acyclic(FreeComplex(xyz, k3.maps(), Flavor::Graded, {0, 1, 2, 3}), Flavor::Graded)
              .acyclic);

    // The local flavor ignores components away from the origin.
    const FreeComplex local(xy, {M(1, 1, {"x*(1+y)"}, xy)});
    CHECK(buchsbaum_eisenbud_acyclic(local, Flavor::Local).acyclic);

    const FreeComplex rank_short(xy, {M(1, 2, {"x", "y"}, xy)});
    const auto rs = buchsbaum_eisenbud_acyclic(rank_short, Flavor::Local);
    CHECK_FALSE(rs.acyclic);
    CHECK_FALSE(rs.maps[0].rank_ok);
    CHECK_FALSE(rs.maps[0].dimension.has_value());
}

TEST_CASE("homology vanishing agrees with the acyclicity criterion")
{
    for (const char* name : {"pure_rank2.cx", "not_pure.cx", "ci_x4_y2z2.cx", "hypersurface.cx", "koszul_xy.cx",
                             "koszul_perturbed.cx", "koszul_mixed_degrees.cx", "not_cohen_macaulay.cx",
                             "koszul_a2_p3.cx", "zp_pure_rank2.cx"}) {
        CAPTURE(name);
        const FreeComplex in = build_in_complex(fixture(name));
        const bool be = buchsbaum_eisenbud_acyclic(in, Flavor::Graded).acyclic;
        const auto direct = homology_vanishes(in);
        CHECK(be == direct.exact);
    }
    const auto np = homology_vanishes(build_in_complex(fixture("not_pure.cx")));
    CHECK(np.first_nonzero == std::optional<std::size_t>(1));
}

TEST_CASE("Herzog-Kuehl equations")
{
    const auto five = herzog_kuhl_check(std::vector<std::size_t>{2, 4, 2}, std::vector<int>{2, 4});
    CHECK(five.ok);
    REQUIRE(five.checks.size() == 2);
    CHECK(five.checks[0].expected == 4);
    CHECK(five.checks[1].expected == 2);

    CHECK(herzog_kuhl_check(std::vector<std::size_t>{1, 2, 1}, std::vector<int>{1, 2}).ok);

    const auto off = herzog_kuhl_check(std::vector<std::size_t>{1, 2, 1}, std::vector<int>{2, 3});
    CHECK_FALSE(off.ok);
    CHECK(off.checks[0].expected == 3);
    CHECK(off.checks[0].actual == 2);

    CHECK(herzog_kuhl_check(std::vector<std::size_t>{1, 3, 3, 1}, std::vector<int>{2, 4, 6}).ok);
}

TEST_CASE("purity certificates")
{
    const auto pure = certify_pure(fixture("pure_rank2.cx"));
    CHECK(pure.verdict == Verdict::Pure);
    REQUIRE(pure.pure_type.has_value());
    CHECK(pure.pure_type->degrees == std::vector<int>{0, 2, 4});
    CHECK(pure.pure_type->betti == std::vector<std::size_t>{2, 4, 2});
    CHECK(pure.multiplicity->e0 == 8);
    CHECK(pure.multiplicity->formula == 8);
    CHECK(pure.hilbert->dimension == 1);
    CHECK(to_string(pure.verdict) == "PURE");

    const auto np = certify_pure(fixture("not_pure.cx"));
    CHECK(np.verdict == Verdict::NotPure);
    CHECK(np.failed_condition == 'a');
    CHECK(np.detail == "(a) fails: grade(I_1(in φ_2)) = 1 < 2");
    // Every condition is still evaluated.
    CHECK(np.herzog_kuhl.has_value());
    REQUIRE(np.multiplicity.has_value());
    CHECK(np.multiplicity->e0 == 5);
    CHECK_FALSE(np.multiplicity->ok);

    const auto ncm = certify_pure(fixture("not_cohen_macaulay.cx"));
    CHECK(ncm.verdict == Verdict::PreconditionFailed);
    CHECK(ncm.detail == "M not Cohen-Macaulay: dim 1, n − p = 0");

    const auto mixed = certify_pure(fixture("koszul_mixed_degrees.cx"));
    CHECK(mixed.verdict == Verdict::NotPure);

    const auto invalid = certify_pure(FreeComplex(xy, {M(1, 2, {"1+x", "y"}, xy)}));
    CHECK(invalid.verdict == Verdict::PreconditionFailed);

    CHECK(certify_pure(fixture("hypersurface.cx")).verdict == Verdict::Pure);
    CHECK(certify_pure(fixture("zp_pure_rank2.cx")).verdict == Verdict::Pure);
    // Equal-degree complete intersection: pure of type (0, 4, 8).
    const auto ci = certify_pure(fixture("ci_x4_y2z2.cx"));
    CHECK(ci.verdict == Verdict::Pure);
    CHECK(ci.pure_type->degrees == std::vector<int>{0, 4, 8});
    CHECK(ci.hilbert->multiplicity == 16);
}

TEST_CASE("Koszul complexes on powers of linear forms")
{
    const std::vector<std::string> forms{"x", "x+y", "y+z"};
    for (int a = 1; a <= 3; ++a)
        for (std::size_t p = 1; p <= 3; ++p) {
            CAPTURE(a);
            CAPTURE(p);
            std::vector<std::string> seq;
            for (std::size_t i = 0; i < p; ++i)
                seq.push_back("(" + forms[i] + ")^" + std::to_string(a));
            const auto report = certify_pure(koszul(xyz, seq));
            CHECK(report.verdict == Verdict::Pure);
            std::int64_t power = 1;
            for (std::size_t i = 0; i < p; ++i)
                power *= a;
            CHECK(report.hilbert->multiplicity == power);
            for (std::size_t i = 1; i <= p; ++i)
                CHECK(report.pure_type->degrees[i] == static_cast<int>(i) * a);
        }
}

TEST_CASE("the minimal resolution of the initial module matches in(F)")
{
    const auto five = verify_theorem_first(fixture("pure_rank2.cx"));
    CHECK(five.match);
    CHECK(five.oracle == BettiTable{{{0, 0}, 2}, {{1, 2}, 4}, {{2, 4}, 2}});

    const auto hyper = verify_theorem_first(fixture("hypersurface.cx"));
    CHECK(hyper.match);
    CHECK(hyper.oracle == BettiTable{{{0, 0}, 1}, {{1, 1}, 1}});

    const auto perturbed = verify_theorem_first(fixture("koszul_perturbed.cx"));
    CHECK(perturbed.match);
    CHECK(perturbed.in_complex == BettiTable{{{0, 0}, 1}, {{1, 1}, 2}, {{2, 2}, 1}});

    // For a non-pure input the tables differ: the initial module needs y^4.
    CHECK_FALSE(verify_theorem_first(fixture("not_pure.cx")).match);
}

TEST_CASE("Huneke-Miller: closed-form multiplicity equals the K-polynomial multiplicity")
{
    for (const char* name : {"pure_rank2.cx", "hypersurface.cx", "koszul_xy.cx", "koszul_perturbed.cx",
                             "koszul_a1_p3.cx", "koszul_a2_p2.cx", "koszul_a3_p3.cx", "zp_pure_rank2.cx"}) {
        CAPTURE(name);
        const auto report = certify_pure(fixture(name));
        REQUIRE(report.herzog_kuhl.has_value());
        if (!report.herzog_kuhl->ok)
            continue;
        const auto k = k_polynomial_invariants(*report.in_complex);
        const auto& d = report.shifts->d;
        CHECK(hk_multiplicity(report.betti[0], d) == Scalar(k.multiplicity));
    }
}
