#include "pureres/poly_matrix.hpp"
#include "pureres/errors.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace pureres {

PolyMatrix::PolyMatrix(Field field, std::size_t nvars, std::size_t rows, std::size_t cols)
    : field_(field), nvars_(nvars), rows_(rows), cols_(cols), entries_(rows * cols, Polynomial(field, nvars))
{
}

PolyMatrix PolyMatrix::identity(Field field, std::size_t nvars, std::size_t size)
{
    PolyMatrix m(field, nvars, size, size);
    for (std::size_t i = 0; i < size; ++i)
        m(i, i) = Polynomial::constant(field, nvars, Scalar(1));
    return m;
}

PolyMatrix PolyMatrix::from_columns(Field field, std::size_t nvars, std::size_t rows,
                                    const std::vector<std::vector<Polynomial>>& columns)
{
    PolyMatrix m(field, nvars, rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows)
            throw ShapeError("column " + std::to_string(c) + " has the wrong length");
        for (std::size_t r = 0; r < rows; ++r)
            m(r, c) = columns[c][r];
    }
    return m;
}

std::vector<Polynomial> PolyMatrix::column(std::size_t c) const
{
    std::vector<Polynomial> col;
    col.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        col.push_back((*this)(r, c));
    return col;
}

bool PolyMatrix::is_zero() const
{
    for (const auto& e : entries_)
        if (!e.is_zero())
            return false;
    return true;
}

bool PolyMatrix::is_constant() const
{
    for (const auto& e : entries_)
        if (!e.is_constant())
            return false;
    return true;
}

PolyMatrix PolyMatrix::submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const
{
    PolyMatrix m(field_, nvars_, rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            m(i, j) = (*this)(rows[i], cols[j]);
    return m;
}

PolyMatrix PolyMatrix::transposed() const
{
    PolyMatrix m(field_, nvars_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            m(j, i) = (*this)(i, j);
    return m;
}

PolyMatrix PolyMatrix::truncated(int max_degree) const
{
    PolyMatrix m(*this);
    for (auto& e : m.entries_)
        e = e.truncated(max_degree);
    return m;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b)
{
    if (a.cols_ != b.rows_)
        throw ShapeError("cannot multiply " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) + " by " +
                         std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
    PolyMatrix m(a.field_, a.nvars_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Polynomial& lhs = a(i, k);
            if (lhs.is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero())
                    m(i, j) += lhs * b(k, j);
        }
    return m;
}

namespace {

void require_same_shape(const PolyMatrix& a, const PolyMatrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ShapeError("matrix shapes differ");
}

} // namespace

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b)
{
    require_same_shape(a, b);
    PolyMatrix m(a);
    for (std::size_t i = 0; i < m.entries_.size(); ++i)
        m.entries_[i] += b.entries_[i];
    return m;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b)
{
    require_same_shape(a, b);
    PolyMatrix m(a);
    for (std::size_t i = 0; i < m.entries_.size(); ++i)
        m.entries_[i] -= b.entries_[i];
    return m;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b)
{
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

bool GradedMatrix::is_homogeneous() const
{
    for (std::size_t r = 0; r < matrix.rows(); ++r)
        for (std::size_t c = 0; c < matrix.cols(); ++c) {
            const Polynomial& e = matrix(r, c);
            if (e.is_zero())
                continue;
            if (!e.is_homogeneous() || e.total_degree() != col_shifts[c] - row_shifts[r])
                return false;
        }
    return true;
}

void GradedMatrix::require_homogeneous() const
{
    if (row_shifts.size() != matrix.rows() || col_shifts.size() != matrix.cols())
        throw ShapeError("shift vectors do not match the matrix shape");
    for (std::size_t r = 0; r < matrix.rows(); ++r)
        for (std::size_t c = 0; c < matrix.cols(); ++c) {
            const Polynomial& e = matrix(r, c);
            if (e.is_zero())
                continue;
            if (!e.is_homogeneous() || e.total_degree() != col_shifts[c] - row_shifts[r])
                throw NotHomogeneousError("entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) +
                                          ") is not homogeneous of degree " +
                                          std::to_string(col_shifts[c] - row_shifts[r]));
        }
}

namespace {

Polynomial bareiss(PolyMatrix m)
{
    const std::size_t n = m.rows();
    const Field field = m.field();
    Polynomial prev = Polynomial::constant(field, m.nvars(), Scalar(1));
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k).is_zero()) {
            std::size_t swap_with = k + 1;
            while (swap_with < n && m(swap_with, k).is_zero())
                ++swap_with;
            if (swap_with == n)
                return Polynomial(field, m.nvars());
            for (std::size_t j = 0; j < n; ++j)
                std::swap(m(k, j), m(swap_with, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Polynomial num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                m(i, j) = exact_divide(num, prev);
            }
            m(i, k) = Polynomial(field, m.nvars());
        }
        prev = m(k, k);
    }
    Polynomial det = m(n - 1, n - 1);
    return negate ? -det : det;
}

} // namespace

Polynomial determinant(const PolyMatrix& a)
{
    if (a.rows() != a.cols())
        throw ShapeError("determinant of a non-square matrix");
    const std::size_t n = a.rows();
    switch (n) {
    case 0:
        return Polynomial::constant(a.field(), a.nvars(), Scalar(1));
    case 1:
        return a(0, 0);
    case 2:
        return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    case 3:
        return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) - a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
               a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
    default:
        return bareiss(a);
    }
}

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k)
{
    std::vector<std::vector<std::size_t>> out;
    if (k > n)
        return out;
    std::vector<std::size_t> cur(k);
    for (std::size_t i = 0; i < k; ++i)
        cur[i] = i;
    for (;;) {
        out.push_back(cur);
        std::size_t i = k;
        while (i > 0 && cur[i - 1] == n - k + (i - 1))
            --i;
        if (i == 0)
            break;
        ++cur[i - 1];
        for (std::size_t j = i; j < k; ++j)
            cur[j] = cur[j - 1] + 1;
    }
    return out;
}

MinorSet minors(const PolyMatrix& a, std::size_t r)
{
    if (r == 0 || r > a.rows() || r > a.cols())
        throw std::out_of_range("minor size " + std::to_string(r) + " out of range for a " + std::to_string(a.rows()) +
                                "x" + std::to_string(a.cols()) + " matrix");
    MinorSet set;
    const auto row_sets = combinations(a.rows(), r);
    const auto col_sets = combinations(a.cols(), r);
    for (const auto& rs : row_sets)
        for (const auto& cs : col_sets) {
            Polynomial d = determinant(a.submatrix(rs, cs));
            if (!d.is_zero()) {
                bool seen = false;
                for (const auto& q : set.distinct)
                    if (q == d || q == -d) {
                        seen = true;
                        break;
                    }
                if (!seen)
                    set.distinct.push_back(d);
            }
            set.raw.push_back(std::move(d));
        }
    return set;
}

std::vector<Polynomial> minor_ideal(const PolyMatrix& a, std::size_t r)
{
    if (r == 0)
        return {Polynomial::constant(a.field(), a.nvars(), Scalar(1))};
    if (r > a.rows() || r > a.cols())
        return {};
    return minors(a, r).distinct;
}

namespace {

bool has_nonzero_minor(const PolyMatrix& a, std::size_t r)
{
    for (const auto& rs : combinations(a.rows(), r))
        for (const auto& cs : combinations(a.cols(), r))
            if (!determinant(a.submatrix(rs, cs)).is_zero())
                return true;
    return false;
}

} // namespace

std::size_t rank(const PolyMatrix& a)
{
    const std::size_t limit = std::min(a.rows(), a.cols());
    std::size_t r = 0;
    while (r < limit && has_nonzero_minor(a, r + 1))
        ++r;
    return r;
}

} // namespace pureres
