// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "oracle.hpp"
#include "pureres/commands.hpp"
#include "pureres/complex_file.hpp"
#include "pureres/purity.hpp"

#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>

using namespace pureres;
using nlohmann::json;

namespace {

std::filesystem::path fx(const std::string& name) { return std::filesystem::path(FIXTURE_DIR) / name; }

FreeComplex fixture(const std::string& name) { return to_free_complex(read_complex_file(fx(name))); }

bool contains(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

/// Collects failed expectations for one criterion.
class Criterion {
public:
    void expect(bool ok, const std::string& what)
    {
        if (!ok)
            failures_.push_back(what);
    }
    const std::vector<std::string>& failures() const { return failures_; }

private:
    std::vector<std::string> failures_;
};

int run(int number, const std::string& title, const std::function<void(Criterion&)>& body)
{
    Criterion c;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.expect(seconds < 60.0, "took longer than 60 s");
    const bool ok = c.failures().empty();
    std::ostringstream line;
    line.precision(2);
    line << std::fixed << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << title << " (" << seconds
         << " s)";
    std::cout << line.str() << '\n';
    for (const auto& f : c.failures())
        std::cout << "     - " << f << '\n';
    return ok ? 0 : 1;
}

PolyMatrix M(const Ring& r, std::size_t rows, std::size_t cols, const std::vector<std::string>& e)
{
    PolyMatrix m(r.field(), r.nvars(), rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = parse_polynomial(e[i * cols + j], r);
    return m;
}

const std::vector<std::string> kComplexFixtures{
    "pure_rank2.cx",   "zp_pure_rank2.cx",   "ci_x4_y2z2.cx",         "hypersurface.cx",
    "koszul_xy.cx",    "koszul_perturbed.cx", "koszul_mixed_degrees.cx", "not_pure.cx",
    "not_cohen_macaulay.cx", "koszul_a1_p1.cx", "koszul_a1_p2.cx", "koszul_a1_p3.cx",
    "koszul_a2_p1.cx", "koszul_a2_p2.cx",     "koszul_a2_p3.cx",       "koszul_a3_p1.cx",
    "koszul_a3_p2.cx", "koszul_a3_p3.cx"};

} // namespace

int main()
{
    const Ring xyz({"x", "y", "z"});
    int failed = 0;

    failed += run(1, "end-to-end check of the rank-two example", [&](Criterion& c) {
        const auto r = cmd_check(fx("pure_rank2.cx"));
        c.expect(r.exit_code == kExitPure, "exit code " + std::to_string(r.exit_code));
        const json doc = json::parse(r.json);
        c.expect(doc["verdict"] == "PURE", "verdict");
        c.expect(doc["pure_type"]["degrees"] == json::array({"0", "2", "4"}), "type (0,2,4)");
        c.expect(doc["pure_type"]["betti"] == json::array({"2", "4", "2"}), "betti (2,4,2)");
        const auto report = certify_pure(fixture("pure_rank2.cx"));
        c.expect(report.acyclicity && report.acyclicity->acyclic, "in(F) acyclic");
    });

    failed += run(2, "initial forms and orders", [&](Criterion& c) {
        const ComplexFile printed = parse_complex_text(cmd_initial(fx("pure_rank2.cx")).text);
        const Ring& r = printed.ring;
        c.expect(printed.find("in_phi") && printed.find("in_phi")->matrix ==
                                               M(r, 2, 4, {"y^2", "x^2", "0", "0", "0", "0", "z^2", "x^2"}),
                 "in(phi)");
        c.expect(printed.find("in_psi") && printed.find("in_psi")->matrix ==
                                               M(r, 4, 2, {"-x^2", "0", "y^2", "0", "0", "-x^2", "0", "z^2"}),
                 "in(psi)");
        const auto single = cmd_initial(fx("single_map.cx"));
        c.expect(contains(single.text, "v(phi) = 2"), "v(phi) = 2");
        const ComplexFile s = parse_complex_text(single.text);
        c.expect(s.matrices.size() == 1 &&
                     s.matrices[0].matrix ==
                         M(s.ring, 3, 3, {"X1^2", "0", "X3^2", "0", "0", "X1*X3", "0", "0", "0"}),
                 "single-map in(phi)");
        const ComplexFile raw = read_complex_file(fx("single_map.cx"));
        c.expect(order_of_map(raw.matrices[0].matrix) == 2, "order_of_map");
    });

    failed += run(3, "Fitting ideal and dimension", [&](Criterion& c) {
        const FreeComplex f = fixture("pure_rank2.cx");
        const auto ms = minors(f.map(1), 2).distinct;
        std::vector<Polynomial> want;
        for (const char* s : {"y^2*z^2", "x^2*y^2", "x^2*z^2", "x^4", "x^2*z^3"})
            want.push_back(parse_polynomial(s, xyz));
        bool same = ms.size() == want.size();
        for (const auto& w : want)
            same = same && std::any_of(ms.begin(), ms.end(), [&](const Polynomial& g) { return g == w || g == -w; });
        c.expect(same, "minors up to sign");
        c.expect(quotient_dimension(ms, xyz.field(), 3) == 1, "dim = 1");
    });

    failed += run(4, "multiplicities e(M) = 8, e(T) = 16, e(N) = 24", [&](Criterion& c) {
        const auto m = hilbert_samuel(fixture("pure_rank2.cx").map(1));
        const auto t = hilbert_samuel(fixture("ci_x4_y2z2.cx").map(1));
        c.expect(m.multiplicity == 8 && m.dimension == 1, "e(M) = " + std::to_string(m.multiplicity));
        c.expect(t.multiplicity == 16 && t.dimension == 1, "e(T) = " + std::to_string(t.multiplicity));
        c.expect(2 * t.multiplicity - m.multiplicity == 24, "e(N) by additivity");
        for (int k = 0; k <= 6; ++k)
            c.expect(m.lengths[static_cast<std::size_t>(k)] == oracle::truncated_length(fixture("pure_rank2.cx").map(1), k),
                     "dense oracle length at k = " + std::to_string(k));
    });

    failed += run(5, "minimal resolution of the initial module", [&](Criterion& c) {
        CommandOptions options;
        options.oracle = true;
        const auto r = cmd_check(fx("pure_rank2.cx"), options);
        const json doc = json::parse(r.json);
        c.expect(r.exit_code == kExitPure, "exit code");
        c.expect(doc["oracle"]["match"] == true, "tables match");
        const auto report = verify_theorem_first(fixture("pure_rank2.cx"));
        const BettiTable expected{{{0, 0}, 2}, {{1, 2}, 4}, {{2, 4}, 2}};
        c.expect(report.oracle == expected, "oracle table");
        c.expect(report.in_complex == expected, "in(F) table");
    });

    failed += run(6, "Herzog-Kuehl and multiplicity identities, Koszul sweep", [&](Criterion& c) {
        const auto hk = herzog_kuhl_check(std::vector<std::size_t>{2, 4, 2}, std::vector<int>{2, 4});
        c.expect(hk.ok && hk.checks[0].expected == 4 && hk.checks[1].expected == 2, "expected betti (4, 2)");
        c.expect(hk_multiplicity(2, std::vector<int>{2, 4}) == 8, "beta0 prod d / p! = 8");
        for (int a = 1; a <= 3; ++a)
            for (int p = 1; p <= 3; ++p) {
                const std::string name = "koszul_a" + std::to_string(a) + "_p" + std::to_string(p) + ".cx";
                const auto report = certify_pure(fixture(name));
                std::int64_t power = 1;
                for (int i = 0; i < p; ++i)
                    power *= a;
                c.expect(report.verdict == Verdict::Pure, name + " not PURE");
                c.expect(report.hilbert && report.hilbert->multiplicity == power, name + " e0 != a^p");
            }
    });

    failed += run(7, "negative controls", [&](Criterion& c) {
        const auto ncm = cmd_check(fx("not_cohen_macaulay.cx"));
        c.expect(ncm.exit_code == kExitPrecondition, "(x^2, xy) exit " + std::to_string(ncm.exit_code));
        c.expect(contains(ncm.text, "M not Cohen-Macaulay: dim 1, n − p = 0"), "CM message");
        const auto np = cmd_check(fx("not_pure.cx"));
        c.expect(np.exit_code == kExitNotPure, "(x^2+y^3, xy) exit " + std::to_string(np.exit_code));
        c.expect(contains(np.text, "(a) fails: grade(I_1(in φ_2)) = 1 < 2"), "condition (a) message");
    });

    failed += run(8, "invariance under change of basis", [&](Criterion& c) {
        const FreeComplex f = fixture("pure_rank2.cx");
        const auto base = certify_pure(f);
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            const FreeComplex g = change_basis_equivalent(f, random_basis_change(f, seed));
            const auto report = certify_pure(g);
            const std::string tag = "seed " + std::to_string(seed);
            c.expect(report.verdict == base.verdict, tag + " verdict");
            c.expect(report.shifts && report.shifts->c == base.shifts->c, tag + " orders");
            c.expect(report.shifts && report.shifts->d == base.shifts->d, tag + " shifts");
            c.expect(report.betti == base.betti, tag + " ranks");
        }
    });

    failed += run(9, "filtration check up to i = 10", [&](Criterion& c) {
        const auto check = truncated_filtration_check(fixture("pure_rank2.cx"), 10);
        c.expect(check.passed(), "first failure at " + std::to_string(check.first_failure.value_or(-1)));
        c.expect(check.rows.size() == 11, "rows 0..10");
    });

    failed += run(10, "engine cross-validation", [&](Criterion& c) {
        std::mt19937_64 rng(20261015);
        for (const auto& name : kComplexFixtures) {
            const FreeComplex local = fixture(name);
            const FreeComplex in = build_in_complex(local);
            const bool be = buchsbaum_eisenbud_acyclic(in, Flavor::Graded).acyclic;
            const bool direct = homology_vanishes(in).exact;
            c.expect(be == direct, name + ": acyclicity criterion and homology disagree");

            // Normal forms modulo the ideal of entries of phi_1.
            const PolyMatrix& phi = local.map(1);
            std::vector<Polynomial> gens;
            for (std::size_t i = 0; i < phi.rows(); ++i)
                for (std::size_t j = 0; j < phi.cols(); ++j)
                    if (!phi(i, j).is_zero())
                        gens.push_back(phi(i, j));
            const Field& field = local.ring().field();
            const std::size_t n = local.ring().nvars();
            const auto gb = ideal_basis(gens, field, n);
            int bad = 0;
            for (int trial = 0; trial < 100; ++trial) {
                const Polynomial f = oracle::random_polynomial(rng, field, n, 6, 6);
                Polynomial member(field, n);
                for (const auto& g : gens)
                    member += oracle::random_polynomial(rng, field, n, 2, 3) * g;
                const Polynomial r = normal_form(f, gb);
                bad += normal_form(r, gb) == r ? 0 : 1;
                bad += normal_form(member, gb).is_zero() ? 0 : 1;
                bad += normal_form(f + member, gb) == r ? 0 : 1;
                for (const auto& t : r.terms())
                    for (const auto& lead : gb.leading_terms())
                        bad += lead.second.divides(t.monomial) ? 1 : 0;
            }
            c.expect(bad == 0, name + ": " + std::to_string(bad) + " normal-form violations");
        }
    });

    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
    return failed == 0 ? 0 : 1;
}
