#include "pureres/commands.hpp"
#include "pureres/complex_file.hpp"
#include "pureres/errors.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <random>

using namespace pureres;
using nlohmann::json;

namespace {

std::filesystem::path fx(const std::string& name) { return std::filesystem::path(FIXTURE_DIR) / name; }

bool contains(const std::string& haystack, const std::string& needle)
{
    return haystack.find(needle) != std::string::npos;
}

std::filesystem::path write_temp(const std::string& name, const std::string& text)
{
    const auto path = std::filesystem::temp_directory_path() / ("pureres_test_" + name);
    std::ofstream(path) << text;
    return path;
}

} // namespace

TEST_CASE("parsing fixture files")
{
    const ComplexFile f = read_complex_file(fx("pure_rank2.cx"));
    CHECK(f.ring.names() == std::vector<std::string>{"x", "y", "z"});
    CHECK(f.matrices.size() == 2);
    CHECK(f.complex_name == std::optional<std::string>("F"));
    CHECK(to_free_complex(f).ranks() == std::vector<std::size_t>{2, 4, 2});
    CHECK(f.find("psi") != nullptr);
    CHECK(f.find("chi") == nullptr);

    const ComplexFile zp = read_complex_file(fx("zp_pure_rank2.cx"));
    CHECK(zp.ring.field().name() == "zp 32003");

    const ComplexFile ring_only = read_complex_file(fx("ring_only.cx"));
    CHECK(ring_only.matrices.empty());
    CHECK_THROWS_WITH_AS(to_free_complex(ring_only), "no complex declaration", ShapeError);
}

TEST_CASE("grammar errors")
{
    CHECK_THROWS_AS(parse_complex_text("ring q 2 x y\nmap phi 2 4\nx y x y\nx y x\n"), ShapeError);
    CHECK_THROWS_WITH_AS(to_free_complex(parse_complex_text("ring q 2 x y\nmap phi 1 1\nx\ncomplex F\n")),
                         "at least one map required", ShapeError);

    try {
        parse_complex_text("ring q 2 x y\nmap phi 1 1\nx\ncomplex F phi chi\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(contains(e.what(), "unknown matrix 'chi'"));
        CHECK(e.line() == 4);
        CHECK(e.column() == 15);
    }
    try {
        parse_complex_text("ring q 2 x y\nmap phi 1 2\nx   y+w\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(contains(e.what(), "unknown variable 'w'"));
        CHECK(e.line() == 3);
        CHECK(e.column() == 7);
    }
    CHECK_THROWS_AS(parse_complex_text("map phi 1 1\nx\n"), ParseError);
    CHECK_THROWS_AS(parse_complex_text("ring r 2 x y\n"), ParseError);
    CHECK_THROWS_AS(parse_complex_text("ring zp 6 2 x y\n"), ParseError);
    CHECK_THROWS_AS(parse_complex_text("ring q 3 x y\n"), ParseError);
    CHECK_THROWS_AS(parse_complex_text("ring q 2 x y\nmap phi 1 1\nx y\n"), ShapeError);
    CHECK_THROWS_AS(parse_complex_text("ring q 2 x y\nmap phi 1 1\nx*\n"), ParseError);
    CHECK_THROWS_AS(parse_complex_text("ring q 2 x y\nmap a 1 1\nx\nmap b 2 1\nx\ny\ncomplex F a b\n"), ShapeError);
    // Juxtaposition is not a product.
    CHECK_THROWS_AS(parse_complex_text("ring q 2 x y\nmap a 1 1\n2x\n"), ParseError);

    const ComplexFile commented = parse_complex_text("# header\nring q 2 x y   # trailing\nmap a 1 2 # note\nx\n\ny^2\n");
    CHECK(commented.matrices.front().matrix(0, 1) == parse_polynomial("y^2", commented.ring));
}

TEST_CASE("format_complex round-trips")
{
    const ComplexFile f = read_complex_file(fx("pure_rank2.cx"));
    const ComplexFile again = parse_complex_text(format_complex(f.ring, f.matrices, f.complex_name));
    REQUIRE(again.matrices.size() == f.matrices.size());
    for (std::size_t i = 0; i < f.matrices.size(); ++i)
        CHECK(again.matrices[i].matrix == f.matrices[i].matrix);
    CHECK(again.complex_maps == std::vector<std::string>{"phi", "psi"});

    const Ring r({"a", "b", "c"});
    std::mt19937_64 rng(8);
    PolyMatrix m(r.field(), 3, 3, 2);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            Polynomial p(r.field(), 3);
            for (int t = 0; t < 3; ++t) {
                std::vector<int> e{static_cast<int>(rng() % 3), static_cast<int>(rng() % 3), static_cast<int>(rng() % 3)};
                p += Polynomial::term(r.field(), Monomial(e), Scalar(static_cast<long>(rng() % 11) - 5, 1 + rng() % 4));
            }
            m(i, j) = p;
        }
    const ComplexFile parsed = parse_complex_text(format_complex(r, {{"m", m}}));
    CHECK(parsed.matrices.front().matrix == m);
}

TEST_CASE("check command")
{
    const auto pure = cmd_check(fx("pure_rank2.cx"));
    CHECK(pure.exit_code == kExitPure);
    CHECK(contains(pure.text, "verdict: PURE"));
    CHECK(contains(pure.text, "type: (0, 2, 4)"));
    CHECK(contains(pure.text, "betti: (2, 4, 2)"));

    const json doc = json::parse(pure.json);
    CHECK(doc["verdict"] == "PURE");
    CHECK(doc["tool"] == "pureres");
    CHECK(doc["input"]["sha256"] == file_digest(fx("pure_rank2.cx")));
    CHECK(doc["input"]["sha256"].get<std::string>().size() == 64);
    CHECK(doc["pure_type"]["degrees"] == json::array({"0", "2", "4"}));
    CHECK(doc["hilbert"]["multiplicity"] == "8");

    const auto np = cmd_check(fx("not_pure.cx"));
    CHECK(np.exit_code == kExitNotPure);
    CHECK(contains(np.text, "(a) fails: grade(I_1(in φ_2)) = 1 < 2"));
    CHECK(json::parse(np.json)["verdict"] == "NOT_PURE");

    const auto ncm = cmd_check(fx("not_cohen_macaulay.cx"));
    CHECK(ncm.exit_code == kExitPrecondition);
    CHECK(contains(ncm.text, "M not Cohen-Macaulay: dim 1, n − p = 0"));
    CHECK(json::parse(ncm.json)["verdict"] == "PRECONDITION_FAILED");

    const auto missing = cmd_check(fx("missing.cx"));
    CHECK(missing.exit_code == kExitError);
    CHECK(json::parse(missing.json)["verdict"] == "ERROR");

    CommandOptions with_oracle;
    with_oracle.oracle = true;
    with_oracle.seed = 1;
    const auto full = cmd_check(fx("pure_rank2.cx"), with_oracle);
    CHECK(full.exit_code == kExitPure);
    const json fd = json::parse(full.json);
    CHECK(fd["oracle"]["match"] == true);
    CHECK(fd["basis_change_trials"].size() == 5);

    // Deterministic given the input and options.
    CHECK(cmd_check(fx("pure_rank2.cx"), with_oracle).json == full.json);
}

TEST_CASE("input errors map to exit 3")
{
    const auto bad = write_temp("bad.cx", "ring q 2 x y\nmap phi 1 2\nx   y+w\n");
    const auto r = cmd_check(bad);
    CHECK(r.exit_code == kExitError);
    CHECK(contains(r.text, ":3:7: unknown variable 'w'"));

    const auto empty = write_temp("empty.cx", "ring q 2 x y\ncomplex F\n");
    const auto e = cmd_check(empty);
    CHECK(e.exit_code == kExitError);
    CHECK(contains(e.text, "at least one map required"));

    CommandOptions tight;
    tight.hilbert = {4, 4};
    const auto h = cmd_hilbert(fx("pure_rank2.cx"), tight);
    CHECK(h.exit_code == kExitError);
    CHECK(contains(h.text, "--kmax"));
    std::filesystem::remove(bad);
    std::filesystem::remove(empty);
}

TEST_CASE("initial command")
{
    const auto five = cmd_initial(fx("pure_rank2.cx"));
    CHECK(five.exit_code == 0);
    CHECK(contains(five.text, "# shifts d = (0, 2, 4)"));
    const ComplexFile printed = parse_complex_text(five.text);
    const Ring& r = printed.ring;
    const auto* in_phi = printed.find("in_phi");
    const auto* in_psi = printed.find("in_psi");
    REQUIRE(in_phi);
    REQUIRE(in_psi);
    auto P = [&](const char* s) { return parse_polynomial(s, r); };
    CHECK(in_phi->matrix(0, 0) == P("y^2"));
    CHECK(in_phi->matrix(0, 1) == P("x^2"));
    CHECK(in_phi->matrix(0, 2).is_zero());
    CHECK(in_phi->matrix(1, 2) == P("z^2"));
    CHECK(in_phi->matrix(1, 3) == P("x^2"));
    CHECK(in_psi->matrix(0, 0) == P("-x^2"));
    CHECK(in_psi->matrix(1, 0) == P("y^2"));
    CHECK(in_psi->matrix(1, 1).is_zero());
    CHECK(in_psi->matrix(2, 1) == P("-x^2"));
    CHECK(in_psi->matrix(3, 1) == P("z^2"));

    const auto single = cmd_initial(fx("single_map.cx"));
    CHECK(single.exit_code == 0);
    CHECK(contains(single.text, "v(phi) = 2"));
    const ComplexFile s = parse_complex_text(single.text);
    const auto& m = s.matrices.front().matrix;
    CHECK(m(0, 0) == parse_polynomial("X1^2", s.ring));
    CHECK(m(0, 2) == parse_polynomial("X3^2", s.ring));
    CHECK(m(1, 2) == parse_polynomial("X1*X3", s.ring));
    CHECK(m(1, 1).is_zero());
    CHECK(m(2, 0).is_zero());

    // A homogeneous complex is its own initial form.
    const auto ci = cmd_initial(fx("ci_x4_y2z2.cx"));
    const ComplexFile cf = parse_complex_text(ci.text);
    const ComplexFile orig = read_complex_file(fx("ci_x4_y2z2.cx"));
    CHECK(cf.matrices[0].matrix == orig.matrices[0].matrix);
    CHECK(cf.matrices[1].matrix == orig.matrices[1].matrix);
    CHECK(contains(ci.text, "# shifts d = (0, 4, 8)"));
}

TEST_CASE("hilbert command")
{
    const auto five = cmd_hilbert(fx("pure_rank2.cx"));
    CHECK(five.exit_code == 0);
    CHECK(contains(five.text, "dim 1, e0 8"));
    const auto t = cmd_hilbert(fx("ci_x4_y2z2.cx"));
    CHECK(contains(t.text, "dim 1, e0 16"));

    const auto ring = cmd_hilbert(fx("ring_only.cx"));
    CHECK(ring.exit_code == 0);
    const json doc = json::parse(ring.json);
    const auto& lengths = doc["hilbert"]["lengths"];
    for (int k = 0; k <= 30; ++k) {
        const long expected = static_cast<long>(k + 1) * (k + 2) * (k + 3) / 6;
        CHECK(lengths[static_cast<std::size_t>(k)] == std::to_string(expected));
    }
    CHECK(doc["verdict"] == "NOT_EVALUATED");
}

TEST_CASE("betti command")
{
    const auto five = cmd_betti(fx("pure_rank2.cx"));
    CHECK(five.exit_code == 0);
    CHECK(json::parse(five.json)["betti_table"] ==
          json::array({json::array({"0", "0", "2"}), json::array({"1", "2", "4"}), json::array({"2", "4", "2"})}));

    const auto koszul = cmd_betti(fx("koszul_xy.cx"));
    CHECK(json::parse(koszul.json)["betti_table"] ==
          json::array({json::array({"0", "0", "1"}), json::array({"1", "1", "2"}), json::array({"2", "2", "1"})}));

    const auto mono = cmd_betti(fx("monomial_x2_xy_y4.cx"));
    CHECK(json::parse(mono.json)["betti_table"] ==
          json::array({json::array({"0", "0", "1"}), json::array({"1", "2", "2"}), json::array({"1", "4", "1"}),
                       json::array({"2", "3", "1"}), json::array({"2", "5", "1"})}));
}
