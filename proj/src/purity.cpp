#include "pureres/purity.hpp"
#include "pureres/errors.hpp"

#include <stdexcept>

namespace pureres {

ExpectedRanks expected_ranks(std::span<const std::size_t> betti)
{
    ExpectedRanks out;
    for (std::size_t i = 1; i < betti.size(); ++i) {
        long r = 0;
        for (std::size_t j = i; j < betti.size(); ++j)
            r += ((j - i) % 2 == 0 ? 1 : -1) * static_cast<long>(betti[j]);
        out.ranks.push_back(r);
        if (r <= 0)
            out.feasible = false;
    }
    return out;
}

std::string AcyclicityResult::failure_detail(const std::string& label) const
{
    for (const auto& m : maps) {
        const std::string name = label + "_" + std::to_string(m.index);
        if (!m.rank_ok)
            return "rank(" + name + ") = " + std::to_string(m.rank) + " ≠ r_" + std::to_string(m.index) + " = " +
                   std::to_string(m.expected_rank);
        if (!m.grade_ok)
            return "grade(I_" + std::to_string(m.rank) + "(" + name + ")) = " + std::to_string(*m.grade) + " < " +
                   std::to_string(m.index);
    }
    return {};
}

AcyclicityResult buchsbaum_eisenbud_acyclic(const FreeComplex& complex, Flavor mode, const HilbertOptions& options)
{
    AcyclicityResult result;
    result.acyclic = true;
    const auto betti = complex.ranks();
    const ExpectedRanks er = expected_ranks(betti);
    const Field field = complex.ring().field();
    const std::size_t n = complex.ring().nvars();
    for (std::size_t i = 1; i <= complex.length(); ++i) {
        AcyclicityResult::MapCheck check;
        check.index = i;
        check.expected_rank = er.ranks[i - 1];
        check.rank = rank(complex.map(i));
        check.rank_ok = check.expected_rank > 0 && static_cast<long>(check.rank) == check.expected_rank;
        if (check.rank_ok) {
            const auto ideal = minor_ideal(complex.map(i), check.rank);
            const int dim = mode == Flavor::Graded ? quotient_dimension(ideal, field, n)
                                                   : local_dimension(ideal, field, n, options);
            check.dimension = dim;
            if (dim == kUnitIdealDimension) {
                check.grade_infinite = true;
                check.grade_ok = true;
            } else {
                check.grade = static_cast<int>(n) - dim;
                check.grade_ok = *check.grade >= static_cast<int>(i);
            }
        }
        result.acyclic = result.acyclic && check.rank_ok && check.grade_ok;
        result.maps.push_back(check);
    }
    return result;
}

HomologyCheck homology_vanishes(const FreeComplex& graded)
{
    HomologyCheck out;
    for (std::size_t i = 1; i <= graded.length(); ++i) {
        const GradedMatrix kernel = syzygy_module(graded.graded_map(i));
        if (kernel.matrix.cols() == 0)
            continue;
        bool contained = false;
        if (i < graded.length()) {
            const PolyMatrix& next = graded.map(i + 1);
            std::vector<ModuleElement> cols;
            for (std::size_t c = 0; c < next.cols(); ++c)
                cols.push_back(next.column(c));
            ModuleOrder order;
            order.shifts.assign(next.rows(), graded.shifts()[i]);
            const GroebnerBasis gb = buchberger(cols, order, next.field(), next.nvars());
            contained = true;
            for (std::size_t c = 0; c < kernel.matrix.cols() && contained; ++c)
                contained = is_member(kernel.matrix.column(c), gb);
        }
        if (!contained) {
            out.exact = false;
            out.first_nonzero = i;
            return out;
        }
    }
    return out;
}

HerzogKuhlResult herzog_kuhl_check(std::span<const std::size_t> betti, std::span<const int> d)
{
    if (betti.size() != d.size() + 1)
        throw std::invalid_argument("need beta_0 .. beta_p and d_1 .. d_p");
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] <= 0 || (i > 0 && d[i] <= d[i - 1]))
            throw std::invalid_argument("degree sequence must be positive and strictly increasing");
    HerzogKuhlResult out;
    out.ok = true;
    for (std::size_t i = 1; i <= d.size(); ++i) {
        Scalar value(static_cast<unsigned long>(betti[0]));
        if (i % 2 == 0)
            value = -value;
        const int di = d[i - 1];
        for (std::size_t j = 1; j <= d.size(); ++j)
            if (j != i)
                value *= Scalar(d[j - 1]) / Scalar(d[j - 1] - di);
        value.canonicalize();
        HerzogKuhlResult::Check c{i, value, betti[i], value == Scalar(static_cast<unsigned long>(betti[i]))};
        out.ok = out.ok && c.ok;
        out.checks.push_back(std::move(c));
    }
    return out;
}

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::Pure:
        return "PURE";
    case Verdict::NotPure:
        return "NOT_PURE";
    case Verdict::PreconditionFailed:
        return "PRECONDITION_FAILED";
    }
    return "UNKNOWN";
}

BettiTable betti_table(const FreeComplex& graded)
{
    if (graded.flavor() != Flavor::Graded)
        throw std::invalid_argument("Betti table needs a graded complex");
    BettiTable table;
    const auto betti = graded.ranks();
    for (std::size_t i = 0; i < betti.size(); ++i)
        if (betti[i] > 0)
            table[{static_cast<int>(i), graded.shifts()[i]}] += betti[i];
    return table;
}

CertificationReport certify_pure(const FreeComplex& local, const CertifyOptions& options)
{
    CertificationReport report;
    report.validation = validate_local_resolution(local, options.hilbert);
    if (!report.validation.ok()) {
        report.verdict = Verdict::PreconditionFailed;
        report.detail = report.validation.detail;
        return report;
    }

    const int n = static_cast<int>(local.ring().nvars());
    const int p = static_cast<int>(local.length());
    report.hilbert = hilbert_samuel(local.map(1), options.hilbert);
    report.expected_dimension = n - p;
    report.cohen_macaulay = report.hilbert->dimension == report.expected_dimension;
    if (!report.cohen_macaulay) {
        report.verdict = Verdict::PreconditionFailed;
        report.detail = "M not Cohen-Macaulay: dim " + std::to_string(report.hilbert->dimension) + ", n − p = " +
                        std::to_string(report.expected_dimension);
        return report;
    }

    report.shifts = shift_data(local);
    report.in_complex = build_in_complex(local);
    report.betti = local.ranks();
    const auto& d = report.shifts->d;

    report.acyclicity = buchsbaum_eisenbud_acyclic(*report.in_complex, Flavor::Graded, options.hilbert);
    report.herzog_kuhl = herzog_kuhl_check(report.betti, d);
    MultiplicityCheck mult;
    mult.e0 = report.hilbert->multiplicity;
    mult.formula = hk_multiplicity(report.betti[0], d);
    mult.ok = mult.formula == Scalar(static_cast<long>(mult.e0));
    report.multiplicity = mult;

    if (!report.acyclicity->acyclic) {
        report.failed_condition = 'a';
        report.detail = "(a) fails: " + report.acyclicity->failure_detail("in φ");
    } else if (!report.herzog_kuhl->ok) {
        report.failed_condition = 'b';
        for (const auto& c : report.herzog_kuhl->checks)
            if (!c.ok) {
                report.detail = "(b) fails: β_" + std::to_string(c.index) + " = " + std::to_string(c.actual) +
                                " ≠ " + to_string(c.expected);
                break;
            }
    } else if (!mult.ok) {
        report.failed_condition = 'c';
        report.detail = "(c) fails: e0 = " + std::to_string(mult.e0) + " ≠ " + to_string(mult.formula);
    }

    if (report.failed_condition == 0) {
        report.verdict = Verdict::Pure;
        PureType type;
        type.degrees.push_back(0);
        type.degrees.insert(type.degrees.end(), d.begin(), d.end());
        type.betti = report.betti;
        report.pure_type = std::move(type);
    } else {
        report.verdict = Verdict::NotPure;
    }
    return report;
}

BettiComparison verify_theorem_first(const FreeComplex& local)
{
    BettiComparison out;
    const FreeComplex in = build_in_complex(local);
    const GradedResolutionData res = minimal_graded_resolution(in.graded_map(1));
    out.oracle = res.betti_table();
    out.in_complex = betti_table(in);
    out.match = out.oracle == out.in_complex;
    return out;
}

} // namespace pureres
