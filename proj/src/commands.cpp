#include "pureres/commands.hpp"
#include "pureres/complex_file.hpp"
#include "pureres/errors.hpp"
#include "pureres/purity.hpp"

#include <json.hpp>
#include <openssl/evp.h>

#include <array>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

#ifndef PURERES_VERSION
#define PURERES_VERSION "0.0.0"
#endif

namespace pureres {

using nlohmann::json;

namespace {

constexpr int kBasisChangeTrials = 5;

template <class T>
std::string num(const T& v)
{
    if constexpr (std::is_same_v<T, Scalar>)
        return to_string(v);
    else if constexpr (std::is_same_v<T, mpz_class>)
        return v.get_str();
    else
        return std::to_string(v);
}

template <class Range>
json num_array(const Range& r)
{
    json out = json::array();
    for (const auto& v : r)
        out.push_back(num(v));
    return out;
}

template <class Range>
std::string tuple_text(const Range& r)
{
    std::string out = "(";
    bool first = true;
    for (const auto& v : r) {
        if (!first)
            out += ", ";
        out += num(v);
        first = false;
    }
    return out + ")";
}

json matrix_json(const PolyMatrix& m, const Ring& ring)
{
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(to_string(m(r, c), ring));
        rows.push_back(std::move(row));
    }
    return {{"rows", num(m.rows())}, {"cols", num(m.cols())}, {"entries", std::move(rows)}};
}

json betti_json(const BettiTable& table)
{
    json out = json::array();
    for (const auto& [key, rank] : table)
        out.push_back({num(key.first), num(key.second), num(rank)});
    return out;
}

std::string betti_text(const BettiTable& table)
{
    std::string out = "{";
    bool first = true;
    for (const auto& [key, rank] : table) {
        if (!first)
            out += ", ";
        out += "(" + num(key.first) + "," + num(key.second) + "," + num(rank) + ")";
        first = false;
    }
    return out + "}";
}

json hilbert_json(const HilbertSamuelData& h, const HilbertOptions& options, std::size_t nvars)
{
    json diffs = json::array();
    for (const auto& row : h.differences)
        diffs.push_back(num_array(row));
    return {{"kmax", num(options.kmax)},
            {"window", num(options.effective_window(nvars))},
            {"lengths", num_array(h.lengths)},
            {"differences", std::move(diffs)},
            {"dimension", num(h.dimension)},
            {"multiplicity", num(h.multiplicity)},
            {"stabilization_index", num(h.stabilization_index)}};
}

std::string hilbert_text(const HilbertSamuelData& h, const HilbertOptions& options, std::size_t nvars)
{
    std::ostringstream out;
    const std::size_t len = h.lengths.size();
    std::size_t width = 2;
    for (const auto& row : h.differences)
        for (auto v : row)
            width = std::max(width, num(v).size());
    auto emit = [&](const std::string& label, const std::vector<std::int64_t>& row) {
        out << std::left << std::setw(7) << label << std::right;
        for (std::size_t k = 0; k < len; ++k)
            out << ' ' << std::setw(static_cast<int>(width)) << num(row[k]);
        out << '\n';
    };
    std::vector<std::int64_t> ks(len);
    for (std::size_t k = 0; k < len; ++k)
        ks[k] = static_cast<std::int64_t>(k);
    emit("k", ks);
    emit("l_k", h.lengths);
    for (std::size_t j = 1; j < h.differences.size(); ++j)
        emit("diff" + std::to_string(j), h.differences[j]);
    out << "dim " << h.dimension << ", e0 " << h.multiplicity;
    if (h.dimension >= 0)
        out << " (difference row " << h.dimension << " constant from k = " << h.stabilization_index << ")";
    out << "; kmax " << options.kmax << ", window " << options.effective_window(nvars) << '\n';
    return out.str();
}

json document(const std::string& command, const std::filesystem::path& path)
{
    json doc;
    doc["tool"] = "pureres";
    doc["version"] = PURERES_VERSION;
    doc["command"] = command;
    doc["input"] = {{"path", path.string()}, {"sha256", file_digest(path)}};
    return doc;
}

json ring_json(const Ring& ring)
{
    return {{"field", ring.field().name()}, {"variables", ring.names()}};
}

/// Runs body, mapping every exception to exit 3 with a message.
CommandResult guarded(const std::string& command, const std::filesystem::path& path,
                      const std::function<CommandResult()>& body)
{
    try {
        return body();
    } catch (const std::exception& e) {
        std::string message = e.what();
        if (const auto* pe = dynamic_cast<const ParseError*>(&e); pe && pe->line() > 0)
            message = path.string() + ":" + std::to_string(pe->line()) + ":" + std::to_string(pe->column()) + ": " +
                      message;
        if (dynamic_cast<const NoStabilizationError*>(&e))
            message += "; retry with a larger --kmax";
        json doc = {{"tool", "pureres"}, {"version", PURERES_VERSION}, {"command", command},
                    {"input", {{"path", path.string()}}}, {"verdict", "ERROR"}, {"error", message}};
        return {kExitError, "error: " + message + "\n", doc.dump(2)};
    }
}

/// phi_1 of the declared complex, else the first matrix, else the 1x0
/// presentation of A itself.
PolyMatrix presentation_of(const ComplexFile& file)
{
    if (file.complex_name && !file.complex_maps.empty())
        return file.find(file.complex_maps.front())->matrix;
    if (!file.matrices.empty())
        return file.matrices.front().matrix;
    return PolyMatrix(file.ring.field(), file.ring.nvars(), 1, 0);
}

/// A presentation whose rows sit in degree 0 and whose columns are
/// homogeneous already defines a graded module equal to its associated
/// graded module; otherwise the initial form with uniform column degree.
GradedMatrix graded_presentation(const PolyMatrix& phi)
{
    std::vector<int> col_shifts(phi.cols(), 0);
    bool graded = true;
    for (std::size_t c = 0; c < phi.cols() && graded; ++c) {
        std::optional<int> degree;
        for (std::size_t r = 0; r < phi.rows() && graded; ++r) {
            const Polynomial& f = phi(r, c);
            if (f.is_zero())
                continue;
            graded = f.is_homogeneous() && (!degree || *degree == f.total_degree());
            degree = f.total_degree();
        }
        col_shifts[c] = degree.value_or(0);
    }
    if (graded)
        return {phi, std::vector<int>(phi.rows(), 0), std::move(col_shifts)};
    const int s = order_of_map(phi);
    return {initial_form(phi), std::vector<int>(phi.rows(), 0), std::vector<int>(phi.cols(), s)};
}

struct Invariants {
    std::vector<int> c;
    std::vector<int> d;
    std::vector<std::size_t> betti;
    Verdict verdict;

    bool operator==(const Invariants&) const = default;
};

json invariants_json(const Invariants& inv)
{
    return {{"c", num_array(inv.c)},
            {"d", num_array(inv.d)},
            {"betti", num_array(inv.betti)},
            {"verdict", to_string(inv.verdict)}};
}

} // namespace

std::string file_digest(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open " + path.string());
    std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
    if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1)
        throw Error("SHA-256 unavailable");
    std::array<char, 8192> buf{};
    while (in) {
        in.read(buf.data(), buf.size());
        EVP_DigestUpdate(ctx.get(), buf.data(), static_cast<std::size_t>(in.gcount()));
    }
    std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
    unsigned int len = 0;
    EVP_DigestFinal_ex(ctx.get(), md.data(), &len);
    std::ostringstream hex;
    for (unsigned int i = 0; i < len; ++i)
        hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
    return hex.str();
}

CommandResult cmd_check(const std::filesystem::path& path, const CommandOptions& options)
{
    return guarded("check", path, [&]() {
        const ComplexFile file = read_complex_file(path);
        const FreeComplex local = to_free_complex(file);
        const Ring& ring = local.ring();
        const CertifyOptions copts{options.hilbert};
        const CertificationReport rep = certify_pure(local, copts);

        json doc = document("check", path);
        doc["ring"] = ring_json(ring);
        doc["verdict"] = to_string(rep.verdict);
        doc["detail"] = rep.detail;
        std::ostringstream text;
        text << "verdict: " << to_string(rep.verdict) << '\n';

        json validation = {{"ok", rep.validation.ok()},
                           {"failure", to_string(rep.validation.failure)},
                           {"detail", rep.validation.detail}};
        json vmaps = json::array();
        for (const auto& m : rep.validation.exactness)
            vmaps.push_back({{"index", num(m.index)},
                             {"rank", num(m.rank)},
                             {"expected_rank", num(m.expected_rank)},
                             {"local_dimension", m.local_dimension ? json(num(*m.local_dimension)) : json(nullptr)},
                             {"grade", m.grade_infinite ? json("infinite") : m.grade ? json(num(*m.grade)) : json(nullptr)},
                             {"ok", m.ok}});
        validation["maps"] = std::move(vmaps);
        doc["preconditions"]["resolution"] = std::move(validation);
        if (rep.hilbert) {
            doc["preconditions"]["cohen_macaulay"] = {{"dimension", num(rep.hilbert->dimension)},
                                                      {"expected_dimension", num(rep.expected_dimension)},
                                                      {"ok", rep.cohen_macaulay}};
            doc["hilbert"] = hilbert_json(*rep.hilbert, options.hilbert, ring.nvars());
        }

        if (rep.verdict == Verdict::PreconditionFailed) {
            text << "precondition failed: " << rep.detail << '\n';
            return CommandResult{kExitPrecondition, text.str(), doc.dump(2)};
        }

        const auto& sd = *rep.shifts;
        doc["shifts"] = {{"c", num_array(sd.c)}, {"d", num_array(sd.d)}};
        doc["betti"] = num_array(rep.betti);
        json in_maps = json::array();
        for (std::size_t i = 1; i <= rep.in_complex->length(); ++i)
            in_maps.push_back(matrix_json(rep.in_complex->map(i), ring));
        doc["in_complex"] = {{"shifts", num_array(rep.in_complex->shifts())}, {"maps", std::move(in_maps)}};

        text << "betti: " << tuple_text(rep.betti) << '\n';
        text << "orders c: " << tuple_text(sd.c) << ", shifts d: " << tuple_text(sd.d) << '\n';
        text << "Hilbert-Samuel: dim " << rep.hilbert->dimension << " = n - p, e0 " << rep.hilbert->multiplicity
             << '\n';

        const auto& acyc = *rep.acyclicity;
        json amaps = json::array();
        text << "(a) in(F) acyclic: " << (acyc.acyclic ? "pass" : "FAIL") << '\n';
        for (const auto& m : acyc.maps) {
            std::string grade = m.grade_infinite ? "infinite" : m.grade ? num(*m.grade) : "-";
            amaps.push_back({{"index", num(m.index)},
                             {"rank", num(m.rank)},
                             {"expected_rank", num(m.expected_rank)},
                             {"rank_ok", m.rank_ok},
                             {"grade", m.grade_infinite ? json("infinite") : m.grade ? json(grade) : json(nullptr)},
                             {"grade_ok", m.grade_ok}});
            text << "    in φ_" << m.index << ": rank " << m.rank << " (r = " << m.expected_rank << "), grade "
                 << grade << '\n';
        }
        doc["conditions"]["a"] = {{"ok", acyc.acyclic}, {"maps", std::move(amaps)}};

        const auto& hk = *rep.herzog_kuhl;
        json hchecks = json::array();
        text << "(b) Herzog-Kühl: " << (hk.ok ? "pass" : "FAIL") << '\n';
        for (const auto& c : hk.checks) {
            hchecks.push_back({{"index", num(c.index)},
                               {"expected", num(c.expected)},
                               {"actual", num(c.actual)},
                               {"ok", c.ok}});
            text << "    β_" << c.index << " = " << c.actual << ", expected " << to_string(c.expected) << '\n';
        }
        doc["conditions"]["b"] = {{"ok", hk.ok}, {"checks", std::move(hchecks)}};

        const auto& mult = *rep.multiplicity;
        doc["conditions"]["c"] = {{"ok", mult.ok}, {"e0", num(mult.e0)}, {"formula", num(mult.formula)}};
        text << "(c) multiplicity: " << (mult.ok ? "pass" : "FAIL") << ", e0 = " << mult.e0
             << ", β_0 Π d_i / p! = " << to_string(mult.formula) << '\n';

        int exit_code = kExitNotPure;
        if (rep.verdict == Verdict::Pure) {
            exit_code = kExitPure;
            doc["pure_type"] = {{"degrees", num_array(rep.pure_type->degrees)},
                                {"betti", num_array(rep.pure_type->betti)}};
            text << "type: " << tuple_text(rep.pure_type->degrees) << '\n';
        } else {
            doc["failed_condition"] = std::string(1, rep.failed_condition);
            text << rep.detail << '\n';
        }

        if (options.oracle && rep.verdict == Verdict::Pure) {
            const BettiComparison th = verify_theorem_first(local);
            doc["oracle"] = {{"resolution_betti_table", betti_json(th.oracle)},
                             {"in_complex_betti_table", betti_json(th.in_complex)},
                             {"match", th.match}};
            text << "oracle: " << betti_text(th.oracle) << (th.match ? " matches " : " DIFFERS FROM ")
                 << betti_text(th.in_complex) << '\n';
            if (!th.match) {
                text << "error: mismatched Betti tables\n";
                exit_code = kExitError;
            }
        } else if (options.oracle) {
            doc["oracle"] = nullptr;
            text << "oracle: skipped (verdict is not PURE)\n";
        }

        if (options.seed) {
            const Invariants base{sd.c, sd.d, rep.betti, rep.verdict};
            json trials = json::array();
            bool all_equal = true;
            for (int t = 0; t < kBasisChangeTrials; ++t) {
                const std::uint64_t seed = *options.seed + static_cast<std::uint64_t>(t);
                const auto theta = random_basis_change(local, seed);
                const FreeComplex changed = change_basis_equivalent(local, theta);
                const ShiftData csd = shift_data(changed);
                const Invariants inv{csd.c, csd.d, changed.ranks(), certify_pure(changed, copts).verdict};
                const bool equal = inv == base;
                all_equal = all_equal && equal;
                json entry = invariants_json(inv);
                entry["seed"] = num(seed);
                entry["unchanged"] = equal;
                trials.push_back(std::move(entry));
            }
            doc["basis_change_trials"] = std::move(trials);
            text << "basis-change trials (" << kBasisChangeTrials << ", seed " << *options.seed
                 << "): " << (all_equal ? "invariant" : "CHANGED") << '\n';
            if (!all_equal) {
                text << "error: invariants changed under a basis change\n";
                exit_code = kExitError;
            }
        }
        return CommandResult{exit_code, text.str(), doc.dump(2)};
    });
}

CommandResult cmd_initial(const std::filesystem::path& path)
{
    return guarded("initial", path, [&]() {
        const ComplexFile file = read_complex_file(path);
        json doc = document("initial", path);
        doc["verdict"] = "NOT_EVALUATED";
        doc["ring"] = ring_json(file.ring);
        std::ostringstream text;

        std::vector<NamedMatrix> in_maps;
        std::optional<std::string> complex_name;
        json maps = json::array();
        if (file.complex_name) {
            const FreeComplex local = to_free_complex(file);
            const FreeComplex in = build_in_complex(local);
            const ShiftData sd = shift_data(local);
            text << "# orders c = " << tuple_text(sd.c) << "\n";
            text << "# shifts d = " << tuple_text(in.shifts()) << "\n";
            text << "# ranks beta = " << tuple_text(in.ranks()) << "\n";
            doc["shifts"] = {{"c", num_array(sd.c)}, {"d", num_array(sd.d)}};
            doc["betti"] = num_array(in.ranks());
            for (std::size_t i = 1; i <= in.length(); ++i) {
                in_maps.push_back({"in_" + file.complex_maps[i - 1], in.map(i)});
                json m = matrix_json(in.map(i), file.ring);
                m["name"] = in_maps.back().name;
                m["order"] = num(sd.c[i - 1]);
                maps.push_back(std::move(m));
            }
            complex_name = "in_" + *file.complex_name;
        } else {
            for (const auto& nm : file.matrices) {
                const int v = order_of_map(nm.matrix);
                text << "# v(" << nm.name << ") = " << v << "\n";
                in_maps.push_back({"in_" + nm.name, initial_form(nm.matrix)});
                json m = matrix_json(in_maps.back().matrix, file.ring);
                m["name"] = in_maps.back().name;
                m["order"] = num(v);
                maps.push_back(std::move(m));
            }
        }
        doc["initial_forms"] = std::move(maps);
        text << format_complex(file.ring, in_maps, complex_name);
        return CommandResult{0, text.str(), doc.dump(2)};
    });
}

CommandResult cmd_hilbert(const std::filesystem::path& path, const CommandOptions& options)
{
    return guarded("hilbert", path, [&]() {
        const ComplexFile file = read_complex_file(path);
        const PolyMatrix phi = presentation_of(file);
        const HilbertSamuelData h = hilbert_samuel(phi, options.hilbert);
        json doc = document("hilbert", path);
        doc["verdict"] = "NOT_EVALUATED";
        doc["ring"] = ring_json(file.ring);
        doc["hilbert"] = hilbert_json(h, options.hilbert, file.ring.nvars());
        return CommandResult{0, hilbert_text(h, options.hilbert, file.ring.nvars()), doc.dump(2)};
    });
}

CommandResult cmd_betti(const std::filesystem::path& path)
{
    return guarded("betti", path, [&]() {
        const ComplexFile file = read_complex_file(path);
        const GradedMatrix pres = graded_presentation(presentation_of(file));
        const GradedResolutionData res = minimal_graded_resolution(pres);
        const BettiTable table = res.betti_table();
        json doc = document("betti", path);
        doc["verdict"] = "NOT_EVALUATED";
        doc["ring"] = ring_json(file.ring);
        doc["betti_table"] = betti_json(table);
        std::ostringstream text;
        text << "i shift rank\n";
        for (const auto& [key, rank] : table)
            text << key.first << ' ' << key.second << ' ' << rank << '\n';
        return CommandResult{0, text.str(), doc.dump(2)};
    });
}

} // namespace pureres
