#pragma once

#include "pureres/field.hpp"

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pureres {

/// K[X1..Xn] with named variables. The same object describes the power
/// series ring K[[X1..Xn]]; only the interpretation of elements differs.
class Ring {
public:
    /// Throws std::invalid_argument on an empty or repeated name list.
    explicit Ring(std::vector<std::string> names, Field field = Field::rationals());

    std::size_t nvars() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const Field& field() const { return field_; }
    std::optional<std::size_t> index_of(std::string_view name) const;

    friend bool operator==(const Ring&, const Ring&) = default;

private:
    std::vector<std::string> names_;
    Field field_;
};

/// Exponent vector; total degree is cached.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<int> exps);
    Monomial(std::initializer_list<int> exps) : Monomial(std::vector<int>(exps)) {}

    static Monomial variable(std::size_t nvars, std::size_t i, int power = 1);

    std::size_t size() const { return exps_.size(); }
    int operator[](std::size_t i) const { return exps_[i]; }
    int degree() const { return degree_; }
    bool is_one() const { return degree_ == 0; }
    const std::vector<int>& exponents() const { return exps_; }

    bool divides(const Monomial& other) const;
    /// Requires divides(other) to hold for `other / *this`.
    Monomial quotient(const Monomial& divisor) const;
    Monomial lcm(const Monomial& other) const;
    bool coprime(const Monomial& other) const;
    /// Bit i set when variable i occurs.
    unsigned long support_mask() const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

private:
    std::vector<int> exps_;
    int degree_ = 0;
};

/// Degree reverse lexicographic comparison, x1 > x2 > ... > xn.
/// Returns <0, 0, >0.
int compare_degrevlex(const Monomial& a, const Monomial& b);
int compare_lex(const Monomial& a, const Monomial& b);

/// All monomials of total degree exactly d in n variables, lexicographically descending.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, int d);

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept;
};

} // namespace pureres
