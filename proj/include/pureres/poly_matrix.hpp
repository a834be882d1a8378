#pragma once

#include "pureres/polynomial.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace pureres {

/// Dense row-major matrix of polynomials. Empty shapes (0 rows or columns)
/// are allowed; they show up as the presentation of a free module.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(Field field, std::size_t nvars, std::size_t rows, std::size_t cols);

    static PolyMatrix identity(Field field, std::size_t nvars, std::size_t size);
    /// Builds a matrix whose columns are the given vectors of length `rows`.
    static PolyMatrix from_columns(Field field, std::size_t nvars, std::size_t rows,
                                   const std::vector<std::vector<Polynomial>>& columns);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return field_; }
    std::size_t nvars() const { return nvars_; }

    const Polynomial& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    /// Mutable access; assigned values must use this matrix's field.
    Polynomial& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

    std::vector<Polynomial> column(std::size_t c) const;
    bool is_zero() const;
    bool is_constant() const;

    PolyMatrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;
    PolyMatrix transposed() const;
    PolyMatrix truncated(int max_degree) const;

    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

private:
    Field field_;
    std::size_t nvars_ = 0;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Polynomial> entries_;
};

/// A matrix R^cols -> R^rows between graded free modules. Entry (r, c) must
/// be homogeneous of degree col_shifts[c] - row_shifts[r] or zero.
struct GradedMatrix {
    PolyMatrix matrix;
    std::vector<int> row_shifts;
    std::vector<int> col_shifts;

    bool is_homogeneous() const;
    /// Throws NotHomogeneousError naming the first offending entry.
    void require_homogeneous() const;
};

/// Determinant of a square matrix: cofactor expansion up to 3x3, Bareiss
/// fraction-free elimination beyond.
Polynomial determinant(const PolyMatrix& a);

struct MinorSet {
    /// One entry per (row subset, column subset) pair in lexicographic order,
    /// zeros included.
    std::vector<Polynomial> raw;
    /// Nonzero minors with duplicates removed up to sign, first occurrence kept.
    std::vector<Polynomial> distinct;
};

/// All r x r minors; throws std::out_of_range unless 1 <= r <= min(rows, cols).
MinorSet minors(const PolyMatrix& a, std::size_t r);

/// Ideal of r x r minors as a generator list (distinct nonzero minors).
/// r = 0 gives the unit ideal by convention.
std::vector<Polynomial> minor_ideal(const PolyMatrix& a, std::size_t r);

/// Largest r with a nonzero r x r minor (rank over the fraction field).
std::size_t rank(const PolyMatrix& a);

/// k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k);

} // namespace pureres
