#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace pureres {

/// Exact field element. Over Z/p the value is kept as the canonical
/// residue in [0, p) with denominator 1.
using Scalar = mpq_class;

/// Coefficient field descriptor: the rationals or a prime field Z/p.
class Field {
public:
    enum class Kind { Rationals, Prime };

    Field() = default;

    static Field rationals() { return Field(); }
    /// Throws std::invalid_argument unless p is prime.
    static Field prime(std::uint64_t p);

    Kind kind() const { return kind_; }
    bool is_prime_field() const { return kind_ == Kind::Prime; }
    /// 0 for the rationals.
    std::uint64_t characteristic() const { return p_; }

    /// Maps an arbitrary rational into the field (residue of num/den mod p).
    Scalar reduce(const Scalar& a) const;
    Scalar from_int(long v) const { return reduce(Scalar(v)); }

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar inv(const Scalar& a) const;
    Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

    /// "q" or "zp <p>", the spelling used by the complex-file grammar.
    std::string name() const;

    friend bool operator==(const Field& a, const Field& b) { return a.kind_ == b.kind_ && a.p_ == b.p_; }

private:
    Kind kind_ = Kind::Rationals;
    std::uint64_t p_ = 0;
};

std::string to_string(const Scalar& a);

} // namespace pureres
