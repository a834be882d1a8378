#include "pureres/field.hpp"

#include <stdexcept>

namespace pureres {

Field Field::prime(std::uint64_t p)
{
    mpz_class z(std::to_string(p));
    if (p < 2 || mpz_probab_prime_p(z.get_mpz_t(), 40) == 0)
        throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
    Field f;
    f.kind_ = Kind::Prime;
    f.p_ = p;
    return f;
}

Scalar Field::reduce(const Scalar& a) const
{
    if (kind_ == Kind::Rationals) {
        Scalar r(a);
        r.canonicalize();
        return r;
    }
    const mpz_class p(std::to_string(p_));
    mpz_class den = a.get_den() % p;
    if (den == 0)
        throw std::domain_error("denominator vanishes in Z/" + std::to_string(p_));
    mpz_class den_inv;
    mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    mpz_class num = a.get_num() % p;
    mpz_class r = (num * den_inv) % p;
    if (r < 0)
        r += p;
    return Scalar(r);
}

Scalar Field::add(const Scalar& a, const Scalar& b) const
{
    Scalar r = a + b;
    return kind_ == Kind::Rationals ? r : reduce(r);
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const
{
    Scalar r = a - b;
    return kind_ == Kind::Rationals ? r : reduce(r);
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const
{
    Scalar r = a * b;
    return kind_ == Kind::Rationals ? r : reduce(r);
}

Scalar Field::neg(const Scalar& a) const
{
    Scalar r = -a;
    return kind_ == Kind::Rationals ? r : reduce(r);
}

Scalar Field::inv(const Scalar& a) const
{
    if (a == 0)
        throw std::domain_error("division by zero");
    if (kind_ == Kind::Rationals)
        return Scalar(1) / a;
    return reduce(Scalar(mpz_class(1), a.get_num()));
}

std::string Field::name() const
{
    return kind_ == Kind::Rationals ? std::string("q") : "zp " + std::to_string(p_);
}

std::string to_string(const Scalar& a)
{
    return a.get_str();
}

} // namespace pureres
