#pragma once

#include "pureres/field.hpp"
#include "pureres/ring.hpp"

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace pureres {

struct Term {
    Monomial monomial;
    Scalar coeff;
};

/// Sparse polynomial with exact coefficients. Terms are kept sorted by
/// degrevlex, largest first, with no zero coefficients. A polynomial also
/// stands for a power series with finite support.
class Polynomial {
public:
    /// Zero over Q with no recorded variable count; adopts the context of
    /// whatever it is combined with.
    Polynomial() = default;
    Polynomial(Field field, std::size_t nvars) : field_(field), nvars_(nvars) {}

    static Polynomial constant(Field field, std::size_t nvars, const Scalar& c);
    static Polynomial term(Field field, const Monomial& m, const Scalar& c);
    static Polynomial variable(const Ring& ring, std::size_t i);
    /// Combines duplicate monomials and drops zeros.
    static Polynomial from_terms(Field field, std::size_t nvars, std::vector<Term> terms);

    const Field& field() const { return field_; }
    std::size_t nvars() const { return nvars_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
    Scalar constant_coefficient() const;
    /// -1 for the zero polynomial.
    int total_degree() const { return terms_.empty() ? -1 : terms_.front().monomial.degree(); }
    bool is_homogeneous() const;
    /// Degrevlex-leading term; requires a non-zero polynomial.
    const Term& leading_term() const { return terms_.front(); }

    Polynomial operator-() const;
    Polynomial scaled(const Scalar& c) const;
    Polynomial multiplied(const Monomial& m, const Scalar& c) const;
    /// Drops every term of total degree above `max_degree`.
    Polynomial truncated(int max_degree) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b);

private:
    Polynomial add_scaled(const Polynomial& o, const Scalar& factor) const;

    Field field_;
    std::size_t nvars_ = 0;
    std::vector<Term> terms_;
};

/// m-adic order: least total degree of a term, or infinity for zero.
class Order {
public:
    static Order infinity() { return Order(); }
    explicit Order(int value) : value_(value), finite_(true) {}

    bool is_infinite() const { return !finite_; }
    /// Throws std::logic_error when infinite.
    int value() const;

    friend Order operator+(Order a, Order b);
    friend bool operator==(const Order&, const Order&) = default;
    friend std::strong_ordering operator<=>(const Order& a, const Order& b);

private:
    Order() = default;
    int value_ = 0;
    bool finite_ = false;
};

Order order_of(const Polynomial& f);
/// Sum of the terms of total degree exactly d.
Polynomial homogeneous_component(const Polynomial& f, int d);
/// Exact quotient a / b; throws std::domain_error if b does not divide a.
Polynomial exact_divide(const Polynomial& a, const Polynomial& b);

/// Grammar: integers, variable names, `^` with a non-negative integer
/// exponent, `*`, `+`, `-`, parentheses, and `a/b` between integer literals.
/// Throws ParseError (column of the offending character) on bad input.
Polynomial parse_polynomial(std::string_view text, const Ring& ring);
/// Text that parse_polynomial maps back to the same polynomial, without spaces.
std::string to_string(const Polynomial& f, const Ring& ring);

} // namespace pureres
