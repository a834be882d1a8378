#include "pureres/ring.hpp"
#include "pureres/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace pureres {

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : Error(what), line_(line), column_(column)
{
}

Ring::Ring(std::vector<std::string> names, Field field) : names_(std::move(names)), field_(field)
{
    if (names_.empty())
        throw std::invalid_argument("a ring needs at least one variable");
    std::set<std::string> seen;
    for (const auto& n : names_) {
        if (n.empty())
            throw std::invalid_argument("empty variable name");
        if (!seen.insert(n).second)
            throw std::invalid_argument("repeated variable name '" + n + "'");
    }
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const
{
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name)
            return i;
    return std::nullopt;
}

Monomial::Monomial(std::vector<int> exps) : exps_(std::move(exps))
{
    for (int e : exps_) {
        if (e < 0)
            throw std::invalid_argument("negative exponent");
        degree_ += e;
    }
}

Monomial Monomial::variable(std::size_t nvars, std::size_t i, int power)
{
    Monomial m(nvars);
    m.exps_[i] = power;
    m.degree_ = power;
    return m;
}

bool Monomial::divides(const Monomial& other) const
{
    if (degree_ > other.degree_)
        return false;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i])
            return false;
    return true;
}

Monomial Monomial::quotient(const Monomial& divisor) const
{
    Monomial q(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i)
        q.exps_[i] -= divisor.exps_[i];
    q.degree_ = degree_ - divisor.degree_;
    return q;
}

Monomial Monomial::lcm(const Monomial& other) const
{
    Monomial l(*this);
    l.degree_ = 0;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        l.exps_[i] = std::max(exps_[i], other.exps_[i]);
        l.degree_ += l.exps_[i];
    }
    return l;
}

bool Monomial::coprime(const Monomial& other) const
{
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > 0 && other.exps_[i] > 0)
            return false;
    return true;
}

unsigned long Monomial::support_mask() const
{
    unsigned long mask = 0;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > 0)
            mask |= 1UL << i;
    return mask;
}

Monomial operator*(const Monomial& a, const Monomial& b)
{
    if (a.exps_.empty())
        return b;
    if (b.exps_.empty())
        return a;
    Monomial r(a);
    for (std::size_t i = 0; i < r.exps_.size(); ++i)
        r.exps_[i] += b.exps_[i];
    r.degree_ += b.degree_;
    return r;
}

int compare_degrevlex(const Monomial& a, const Monomial& b)
{
    if (a.degree() != b.degree())
        return a.degree() < b.degree() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i])
            return a[i] < b[i] ? 1 : -1;
    }
    return 0;
}

int compare_lex(const Monomial& a, const Monomial& b)
{
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i])
            return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

namespace {

void fill_degree(std::size_t nvars, std::size_t var, int remaining, std::vector<int>& cur,
                 std::vector<Monomial>& out)
{
    if (var + 1 == nvars) {
        cur[var] = remaining;
        out.emplace_back(cur);
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        cur[var] = e;
        fill_degree(nvars, var + 1, remaining - e, cur, out);
    }
    cur[var] = 0;
}

} // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, int d)
{
    std::vector<Monomial> out;
    if (d < 0 || nvars == 0)
        return out;
    std::vector<int> cur(nvars, 0);
    fill_degree(nvars, 0, d, cur, out);
    return out;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept
{
    std::size_t h = 1469598103934665603ULL;
    for (int e : m.exponents()) {
        h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ULL;
        h *= 1099511628211ULL;
    }
    return h;
}

} // namespace pureres
