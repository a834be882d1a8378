#include "pureres/filtration.hpp"
#include "pureres/errors.hpp"
#include "pureres/groebner.hpp"
#include "pureres/hilbert.hpp"
#include "pureres/purity.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace pureres {

FreeComplex::FreeComplex(Ring ring, std::vector<PolyMatrix> maps, Flavor flavor, std::vector<int> shifts)
    : ring_(std::move(ring)), maps_(std::move(maps)), flavor_(flavor), shifts_(std::move(shifts))
{
    if (maps_.empty())
        throw ShapeError("at least one map required");
    for (std::size_t i = 0; i < maps_.size(); ++i) {
        if (maps_[i].nvars() != ring_.nvars() || !(maps_[i].field() == ring_.field()))
            throw ShapeError("map " + std::to_string(i + 1) + " is not over the complex's ring");
        if (i + 1 < maps_.size() && maps_[i].cols() != maps_[i + 1].rows())
            throw ShapeError("map " + std::to_string(i + 1) + " has " + std::to_string(maps_[i].cols()) +
                             " columns but map " + std::to_string(i + 2) + " has " +
                             std::to_string(maps_[i + 1].rows()) + " rows");
    }
    if (flavor_ == Flavor::Graded) {
        if (shifts_.size() != maps_.size() + 1)
            throw ShapeError("a graded complex of length p needs p + 1 shifts");
    } else if (!shifts_.empty()) {
        throw ShapeError("local complexes carry no shifts");
    }
}

std::vector<std::size_t> FreeComplex::ranks() const
{
    std::vector<std::size_t> b{maps_.front().rows()};
    for (const auto& m : maps_)
        b.push_back(m.cols());
    return b;
}

GradedMatrix FreeComplex::graded_map(std::size_t i) const
{
    if (flavor_ != Flavor::Graded)
        throw std::logic_error("graded_map on a local complex");
    const PolyMatrix& m = map(i);
    return {m, std::vector<int>(m.rows(), shifts_[i - 1]), std::vector<int>(m.cols(), shifts_[i])};
}

int order_of_map(const PolyMatrix& phi)
{
    Order best = Order::infinity();
    for (std::size_t r = 0; r < phi.rows(); ++r)
        for (std::size_t c = 0; c < phi.cols(); ++c)
            best = std::min(best, order_of(phi(r, c)));
    if (best.is_infinite())
        throw ZeroMapError("the order of the zero map is undefined");
    return best.value();
}

PolyMatrix initial_form(const PolyMatrix& phi)
{
    const int s = order_of_map(phi);
    PolyMatrix in(phi.field(), phi.nvars(), phi.rows(), phi.cols());
    for (std::size_t r = 0; r < phi.rows(); ++r)
        for (std::size_t c = 0; c < phi.cols(); ++c)
            in(r, c) = homogeneous_component(phi(r, c), s);
    return in;
}

ShiftData shift_data(const FreeComplex& local)
{
    ShiftData data;
    int sum = 0;
    for (const auto& m : local.maps()) {
        const int c = order_of_map(m);
        sum += c;
        data.c.push_back(c);
        data.d.push_back(sum);
    }
    return data;
}

FreeComplex build_in_complex(const FreeComplex& local)
{
    const ShiftData sd = shift_data(local);
    std::vector<PolyMatrix> maps;
    for (const auto& m : local.maps())
        maps.push_back(initial_form(m));
    for (std::size_t i = 0; i + 1 < maps.size(); ++i)
        if (!(maps[i] * maps[i + 1]).is_zero())
            throw CompositionNonzeroError("in(phi_" + std::to_string(i + 1) + ") * in(phi_" + std::to_string(i + 2) +
                                          ") is not zero");
    std::vector<int> shifts{0};
    shifts.insert(shifts.end(), sd.d.begin(), sd.d.end());
    FreeComplex in(local.ring(), std::move(maps), Flavor::Graded, std::move(shifts));
    for (std::size_t i = 1; i <= in.length(); ++i)
        in.graded_map(i).require_homogeneous();
    return in;
}

std::string to_string(LocalValidation::Failure f)
{
    switch (f) {
    case LocalValidation::Failure::None:
        return "none";
    case LocalValidation::Failure::CompositionNonzero:
        return "CompositionNonzero";
    case LocalValidation::Failure::ZeroRowOrColumn:
        return "ZeroRowOrColumn";
    case LocalValidation::Failure::MinimalityViolation:
        return "MinimalityViolation";
    case LocalValidation::Failure::RankMismatch:
        return "RankMismatch";
    case LocalValidation::Failure::GradeDeficient:
        return "GradeDeficient";
    }
    return "unknown";
}

LocalValidation validate_local_resolution(const FreeComplex& local, const HilbertOptions& options)
{
    LocalValidation v;
    const auto& maps = local.maps();
    const std::size_t p = maps.size();

    for (std::size_t i = 0; i + 1 < p; ++i) {
        if (!(maps[i] * maps[i + 1]).is_zero()) {
            v.failure = LocalValidation::Failure::CompositionNonzero;
            v.detail = "φ_" + std::to_string(i + 1) + "·φ_" + std::to_string(i + 2) + " ≠ 0";
            return v;
        }
    }

    for (std::size_t i = 0; i < p; ++i) {
        const PolyMatrix& m = maps[i];
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c)
                if (m(r, c).constant_coefficient() != 0) {
                    v.failure = LocalValidation::Failure::MinimalityViolation;
                    v.detail = "entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ") of φ_" +
                               std::to_string(i + 1) + " has a nonzero constant term";
                    return v;
                }
        for (std::size_t r = 0; r < m.rows(); ++r) {
            bool zero = true;
            for (std::size_t c = 0; c < m.cols() && zero; ++c)
                zero = m(r, c).is_zero();
            if (zero) {
                v.failure = LocalValidation::Failure::ZeroRowOrColumn;
                v.detail = "row " + std::to_string(r + 1) + " of φ_" + std::to_string(i + 1) + " is zero";
                return v;
            }
        }
        for (std::size_t c = 0; c < m.cols(); ++c) {
            bool zero = true;
            for (std::size_t r = 0; r < m.rows() && zero; ++r)
                zero = m(r, c).is_zero();
            if (zero) {
                v.failure = LocalValidation::Failure::ZeroRowOrColumn;
                v.detail = "column " + std::to_string(c + 1) + " of φ_" + std::to_string(i + 1) + " is zero";
                return v;
            }
        }
    }

    const auto betti = local.ranks();
    const ExpectedRanks er = expected_ranks(betti);
    const std::size_t n = local.ring().nvars();
    for (std::size_t i = 1; i <= p; ++i) {
        LocalValidation::MapCheck check;
        check.index = i;
        check.expected_rank = er.ranks[i - 1];
        check.rank = rank(local.map(i));
        if (static_cast<long>(check.rank) != check.expected_rank || check.expected_rank <= 0) {
            v.exactness.push_back(check);
            v.failure = LocalValidation::Failure::RankMismatch;
            v.detail = "rank(φ_" + std::to_string(i) + ") = " + std::to_string(check.rank) + " ≠ r_" +
                       std::to_string(i) + " = " + std::to_string(check.expected_rank);
            return v;
        }
        const auto ideal = minor_ideal(local.map(i), check.rank);
        const int dim = local_dimension(ideal, local.ring().field(), n, options);
        check.local_dimension = dim;
        if (dim == kUnitIdealDimension) {
            check.grade_infinite = true;
            check.ok = true;
        } else {
            check.grade = static_cast<int>(n) - dim;
            check.ok = *check.grade >= static_cast<int>(i);
        }
        v.exactness.push_back(check);
        if (!check.ok) {
            v.failure = LocalValidation::Failure::GradeDeficient;
            v.detail = "grade_A(I_" + std::to_string(check.rank) + "(φ_" + std::to_string(i) +
                       ")) = " + std::to_string(*check.grade) + " < " + std::to_string(i);
            return v;
        }
    }
    return v;
}

namespace {

using DenseMatrix = std::vector<std::vector<Scalar>>;

DenseMatrix constant_part(const PolyMatrix& m)
{
    DenseMatrix c(m.rows(), std::vector<Scalar>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t j = 0; j < m.cols(); ++j)
            c[r][j] = m(r, j).constant_coefficient();
    return c;
}

DenseMatrix invert(DenseMatrix a, const Field& field)
{
    const std::size_t n = a.size();
    DenseMatrix inv(n, std::vector<Scalar>(n));
    for (std::size_t i = 0; i < n; ++i)
        inv[i][i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0)
            ++piv;
        if (piv == n)
            throw SingularBasisChangeError("constant part of the basis change is singular");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        const Scalar s = field.inv(a[col][col]);
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] = field.mul(a[col][j], s);
            inv[col][j] = field.mul(inv[col][j], s);
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0)
                continue;
            const Scalar f = a[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] = field.sub(a[r][j], field.mul(f, a[col][j]));
                inv[r][j] = field.sub(inv[r][j], field.mul(f, inv[col][j]));
            }
        }
    }
    return inv;
}

PolyMatrix to_poly(const DenseMatrix& d, const Field& field, std::size_t nvars)
{
    const std::size_t rows = d.size();
    const std::size_t cols = rows == 0 ? 0 : d[0].size();
    PolyMatrix m(field, nvars, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = Polynomial::constant(field, nvars, d[r][c]);
    return m;
}

int max_degree(const PolyMatrix& m)
{
    int best = 0;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            best = std::max(best, m(r, c).total_degree());
    return best;
}

struct SeriesInverse {
    PolyMatrix inverse;
    bool exact = true;
};

/// theta = C (I + X) with X = C^{-1} (theta - C); theta^{-1} = (sum_k (-X)^k) C^{-1}.
SeriesInverse series_inverse(const PolyMatrix& theta, int truncation)
{
    const Field field = theta.field();
    const std::size_t n = theta.nvars();
    const std::size_t size = theta.rows();
    const DenseMatrix c = constant_part(theta);
    const PolyMatrix c_poly = to_poly(c, field, n);
    const PolyMatrix c_inv = to_poly(invert(c, field), field, n);
    PolyMatrix neg_x = PolyMatrix(field, n, size, size) - c_inv * (theta - c_poly);

    PolyMatrix nilpotency_probe = PolyMatrix::identity(field, n, size);
    for (std::size_t k = 0; k < size; ++k)
        nilpotency_probe = nilpotency_probe * neg_x;
    const bool exact = nilpotency_probe.is_zero();

    PolyMatrix acc = PolyMatrix::identity(field, n, size);
    PolyMatrix power = acc;
    for (int k = 1;; ++k) {
        power = power * neg_x;
        if (!exact)
            power = power.truncated(truncation);
        if (power.is_zero())
            break;
        acc = acc + power;
        if (exact && k > static_cast<int>(size))
            throw std::logic_error("nilpotent series failed to terminate");
    }
    SeriesInverse out{acc * c_inv, exact};
    if (!exact)
        out.inverse = out.inverse.truncated(truncation);
    return out;
}

} // namespace

FreeComplex change_basis_equivalent(const FreeComplex& local, std::span<const PolyMatrix> theta)
{
    const auto betti = local.ranks();
    if (theta.size() != betti.size())
        throw ShapeError("need one basis change per free module (p + 1 matrices)");
    int degree_bound = 0;
    for (std::size_t i = 0; i < theta.size(); ++i) {
        if (theta[i].rows() != betti[i] || theta[i].cols() != betti[i])
            throw ShapeError("basis change " + std::to_string(i) + " must be square of size " +
                             std::to_string(betti[i]));
        degree_bound = std::max(degree_bound, max_degree(theta[i]));
    }
    for (const auto& m : local.maps())
        degree_bound = std::max(degree_bound, max_degree(m));
    const ShiftData sd = shift_data(local);
    const int truncation = degree_bound + sd.d.back() + 2;

    std::vector<SeriesInverse> inverses;
    bool exact = true;
    for (const auto& t : theta) {
        inverses.push_back(series_inverse(t, truncation));
        exact = exact && inverses.back().exact;
    }
    std::vector<PolyMatrix> maps;
    for (std::size_t i = 1; i <= local.length(); ++i) {
        PolyMatrix psi = theta[i - 1] * local.map(i) * inverses[i].inverse;
        if (!exact)
            psi = psi.truncated(truncation);
        maps.push_back(std::move(psi));
    }
    return FreeComplex(local.ring(), std::move(maps), Flavor::Local);
}

std::vector<PolyMatrix> random_basis_change(const FreeComplex& local, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    const Ring& ring = local.ring();
    const Field field = ring.field();
    const std::size_t n = ring.nvars();
    auto pick = [&rng](std::uint64_t k) { return static_cast<long>(rng() % k); };

    std::vector<PolyMatrix> out;
    for (std::size_t size : local.ranks()) {
        PolyMatrix u = PolyMatrix::identity(field, n, size);
        for (std::size_t r = 0; r < size; ++r)
            for (std::size_t c = r + 1; c < size; ++c) {
                Polynomial e = Polynomial::constant(field, n, Scalar(pick(3) - 1));
                if (pick(2) == 0) {
                    std::vector<int> exps(n, 0);
                    const long deg = 1 + pick(2);
                    for (long k = 0; k < deg; ++k)
                        ++exps[static_cast<std::size_t>(pick(n))];
                    e += Polynomial::term(field, Monomial(exps), Scalar(pick(2) == 0 ? 1 : -1));
                }
                u(r, c) = std::move(e);
            }
        PolyMatrix d(field, n, size, size);
        for (std::size_t r = 0; r < size; ++r) {
            const long mag = 1 + pick(3);
            d(r, r) = Polynomial::constant(field, n, Scalar(pick(2) == 0 ? mag : -mag));
            if (d(r, r).is_zero())
                d(r, r) = Polynomial::constant(field, n, Scalar(1));
        }
        std::vector<std::size_t> perm(size);
        for (std::size_t k = 0; k < size; ++k)
            perm[k] = k;
        for (std::size_t k = size; k > 1; --k)
            std::swap(perm[k - 1], perm[static_cast<std::size_t>(pick(k))]);
        PolyMatrix p(field, n, size, size);
        for (std::size_t k = 0; k < size; ++k)
            p(perm[k], k) = Polynomial::constant(field, n, Scalar(1));
        out.push_back(p * d * u);
    }
    return out;
}

FreeComplex koszul_complex(const Ring& ring, std::span<const Polynomial> sequence)
{
    const std::size_t p = sequence.size();
    if (p == 0)
        throw ShapeError("at least one map required");
    const Field field = ring.field();
    const std::size_t n = ring.nvars();
    std::vector<PolyMatrix> maps;
    for (std::size_t i = 1; i <= p; ++i) {
        const auto targets = combinations(p, i - 1);
        const auto sources = combinations(p, i);
        PolyMatrix m(field, n, targets.size(), sources.size());
        for (std::size_t col = 0; col < sources.size(); ++col) {
            const auto& s = sources[col];
            for (std::size_t k = 0; k < s.size(); ++k) {
                std::vector<std::size_t> rest;
                for (std::size_t q = 0; q < s.size(); ++q)
                    if (q != k)
                        rest.push_back(s[q]);
                const auto row = static_cast<std::size_t>(
                    std::find(targets.begin(), targets.end(), rest) - targets.begin());
                m(row, col) = k % 2 == 0 ? sequence[s[k]] : -sequence[s[k]];
            }
        }
        maps.push_back(std::move(m));
    }
    return FreeComplex(ring, std::move(maps), Flavor::Local);
}

} // namespace pureres
