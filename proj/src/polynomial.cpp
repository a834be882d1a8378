#include "pureres/polynomial.hpp"
#include "pureres/errors.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <unordered_map>

namespace pureres {

namespace {

bool term_greater(const Term& a, const Term& b)
{
    return compare_degrevlex(a.monomial, b.monomial) > 0;
}

} // namespace

Polynomial Polynomial::constant(Field field, std::size_t nvars, const Scalar& c)
{
    return term(field, Monomial(nvars), c);
}

Polynomial Polynomial::term(Field field, const Monomial& m, const Scalar& c)
{
    Polynomial p(field, m.size());
    Scalar r = field.reduce(c);
    if (r != 0)
        p.terms_.push_back({m, std::move(r)});
    return p;
}

Polynomial Polynomial::variable(const Ring& ring, std::size_t i)
{
    return term(ring.field(), Monomial::variable(ring.nvars(), i), Scalar(1));
}

Polynomial Polynomial::from_terms(Field field, std::size_t nvars, std::vector<Term> terms)
{
    std::unordered_map<Monomial, Scalar, MonomialHash> acc;
    for (auto& t : terms) {
        auto [it, inserted] = acc.try_emplace(t.monomial, t.coeff);
        if (!inserted)
            it->second += t.coeff;
    }
    Polynomial p(field, nvars);
    for (auto& [m, c] : acc) {
        Scalar r = field.reduce(c);
        if (r != 0)
            p.terms_.push_back({m, std::move(r)});
    }
    std::sort(p.terms_.begin(), p.terms_.end(), term_greater);
    return p;
}

Scalar Polynomial::constant_coefficient() const
{
    if (!terms_.empty() && terms_.back().monomial.is_one())
        return terms_.back().coeff;
    return Scalar(0);
}

bool Polynomial::is_homogeneous() const
{
    for (const auto& t : terms_)
        if (t.monomial.degree() != terms_.front().monomial.degree())
            return false;
    return true;
}

Polynomial Polynomial::operator-() const
{
    Polynomial r(*this);
    for (auto& t : r.terms_)
        t.coeff = field_.neg(t.coeff);
    return r;
}

Polynomial Polynomial::scaled(const Scalar& c) const
{
    return multiplied(Monomial(nvars_), c);
}

Polynomial Polynomial::multiplied(const Monomial& m, const Scalar& c) const
{
    Polynomial r(field_, nvars_);
    const Scalar cr = field_.reduce(c);
    if (cr == 0)
        return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        r.terms_.push_back({t.monomial * m, field_.mul(t.coeff, cr)});
    return r;
}

Polynomial Polynomial::truncated(int max_degree) const
{
    Polynomial r(field_, nvars_);
    for (const auto& t : terms_)
        if (t.monomial.degree() <= max_degree)
            r.terms_.push_back(t);
    return r;
}

Polynomial Polynomial::add_scaled(const Polynomial& o, const Scalar& factor) const
{
    const bool self_is_blank = nvars_ == 0 && terms_.empty();
    const Field field = self_is_blank ? o.field_ : field_;
    Polynomial r(field, self_is_blank ? o.nvars_ : nvars_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    auto i = terms_.begin();
    auto j = o.terms_.begin();
    while (i != terms_.end() || j != o.terms_.end()) {
        int cmp;
        if (i == terms_.end())
            cmp = -1;
        else if (j == o.terms_.end())
            cmp = 1;
        else
            cmp = compare_degrevlex(i->monomial, j->monomial);
        if (cmp > 0) {
            r.terms_.push_back(*i++);
        } else if (cmp < 0) {
            r.terms_.push_back({j->monomial, field.mul(j->coeff, factor)});
            ++j;
        } else {
            Scalar c = field.add(i->coeff, field.mul(j->coeff, factor));
            if (c != 0)
                r.terms_.push_back({i->monomial, std::move(c)});
            ++i;
            ++j;
        }
    }
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
    *this = add_scaled(o, Scalar(1));
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o)
{
    *this = add_scaled(o, Scalar(-1));
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    const bool a_blank = a.nvars_ == 0 && a.terms_.empty();
    const Field field = a_blank ? b.field_ : a.field_;
    const std::size_t n = a_blank ? b.nvars_ : a.nvars_;
    if (a.is_zero() || b.is_zero())
        return Polynomial(field, n);
    if (b.terms_.size() == 1)
        return a.multiplied(b.terms_[0].monomial, b.terms_[0].coeff);
    if (a.terms_.size() == 1)
        return b.multiplied(a.terms_[0].monomial, a.terms_[0].coeff);
    std::unordered_map<Monomial, Scalar, MonomialHash> acc;
    acc.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_) {
        for (const auto& t : b.terms_) {
            auto [it, inserted] = acc.try_emplace(s.monomial * t.monomial, s.coeff * t.coeff);
            if (!inserted)
                it->second += s.coeff * t.coeff;
        }
    }
    Polynomial r(field, n);
    for (auto& [m, c] : acc) {
        Scalar v = field.reduce(c);
        if (v != 0)
            r.terms_.push_back({m, std::move(v)});
    }
    std::sort(r.terms_.begin(), r.terms_.end(), term_greater);
    return r;
}

bool operator==(const Polynomial& a, const Polynomial& b)
{
    if (a.terms_.size() != b.terms_.size())
        return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (!(a.terms_[i].monomial == b.terms_[i].monomial) || a.terms_[i].coeff != b.terms_[i].coeff)
            return false;
    return true;
}

int Order::value() const
{
    if (!finite_)
        throw std::logic_error("order of the zero polynomial is infinite");
    return value_;
}

Order operator+(Order a, Order b)
{
    if (!a.finite_ || !b.finite_)
        return Order::infinity();
    return Order(a.value_ + b.value_);
}

std::strong_ordering operator<=>(const Order& a, const Order& b)
{
    if (!a.finite_ || !b.finite_)
        return static_cast<int>(!a.finite_) <=> static_cast<int>(!b.finite_);
    return a.value_ <=> b.value_;
}

Order order_of(const Polynomial& f)
{
    if (f.is_zero())
        return Order::infinity();
    return Order(f.terms().back().monomial.degree());
}

Polynomial homogeneous_component(const Polynomial& f, int d)
{
    std::vector<Term> kept;
    for (const auto& t : f.terms())
        if (t.monomial.degree() == d)
            kept.push_back(t);
    return Polynomial::from_terms(f.field(), f.nvars(), std::move(kept));
}

Polynomial exact_divide(const Polynomial& a, const Polynomial& b)
{
    if (b.is_zero())
        throw std::domain_error("division by the zero polynomial");
    const Field& field = b.field();
    Polynomial quotient(field, b.nvars());
    Polynomial rest = a;
    const Term& lead = b.leading_term();
    const Scalar lead_inv = field.inv(lead.coeff);
    while (!rest.is_zero()) {
        const Term& t = rest.leading_term();
        if (!lead.monomial.divides(t.monomial))
            throw std::domain_error("inexact polynomial division");
        Polynomial q = Polynomial::term(field, t.monomial.quotient(lead.monomial), field.mul(t.coeff, lead_inv));
        rest -= q * b;
        quotient += q;
    }
    return quotient;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class ExprParser {
public:
    ExprParser(std::string_view text, const Ring& ring) : text_(text), ring_(ring) {}

    Polynomial parse()
    {
        Polynomial p = expr();
        skip_space();
        if (pos_ != text_.size())
            fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const
    {
        throw ParseError(msg + " at column " + std::to_string(pos_ + 1), 0, pos_ + 1);
    }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(char c)
    {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Polynomial zero() const { return Polynomial(ring_.field(), ring_.nvars()); }

    Polynomial expr()
    {
        Polynomial acc = zero();
        bool first = true;
        for (;;) {
            bool negate = false;
            if (accept('-'))
                negate = true;
            else if (!accept('+') && !first)
                break;
            Polynomial t = term();
            acc = negate ? acc - t : acc + t;
            first = false;
        }
        return acc;
    }

    Polynomial term()
    {
        Polynomial acc = factor();
        while (accept('*'))
            acc = acc * factor();
        return acc;
    }

    Polynomial factor()
    {
        Polynomial base = primary();
        if (accept('^')) {
            skip_space();
            mpz_class e = integer_literal();
            if (e > 10000)
                fail("exponent too large");
            Polynomial r = Polynomial::constant(ring_.field(), ring_.nvars(), Scalar(1));
            for (long i = 0; i < e.get_si(); ++i)
                r = r * base;
            return r;
        }
        return base;
    }

    mpz_class integer_literal()
    {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected integer");
        return mpz_class(std::string(text_.substr(start, pos_ - start)));
    }

    Polynomial primary()
    {
        skip_space();
        if (pos_ >= text_.size())
            fail("unexpected end of expression");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial inner = expr();
            if (!accept(')'))
                fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class num = integer_literal();
            Scalar value(num);
            const std::size_t save = pos_;
            if (accept('/')) {
                skip_space();
                mpz_class den = integer_literal();
                if (den == 0)
                    fail("zero denominator");
                value = Scalar(num, den);
                value.canonicalize();
            } else {
                pos_ = save;
            }
            return Polynomial::constant(ring_.field(), ring_.nvars(), value);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            const std::string_view name = text_.substr(start, pos_ - start);
            auto idx = ring_.index_of(name);
            if (!idx) {
                pos_ = start;
                fail("unknown variable '" + std::string(name) + "'");
            }
            return Polynomial::variable(ring_, *idx);
        }
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    const Ring& ring_;
    std::size_t pos_ = 0;
};

} // namespace

Polynomial parse_polynomial(std::string_view text, const Ring& ring)
{
    return ExprParser(text, ring).parse();
}

std::string to_string(const Polynomial& f, const Ring& ring)
{
    if (f.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& t : f.terms()) {
        Scalar c = t.coeff;
        const bool negative = c < 0;
        if (negative)
            c = -c;
        if (negative)
            out += '-';
        else if (!first)
            out += '+';
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < t.monomial.size(); ++i) {
            const int e = t.monomial[i];
            if (e == 0)
                continue;
            if (!mono.empty())
                mono += '*';
            mono += ring.names()[i];
            if (e > 1)
                mono += '^' + std::to_string(e);
        }
        if (mono.empty()) {
            out += c.get_str();
        } else if (c == 1) {
            out += mono;
        } else {
            out += c.get_str() + '*' + mono;
        }
    }
    return out;
}

} // namespace pureres
