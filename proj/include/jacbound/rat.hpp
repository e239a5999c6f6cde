#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

#include "jacbound/error.hpp"

namespace jacbound {

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator. All arithmetic is exact; there is no rounding
/// anywhere in this type.
class Rat {
public:
    Rat() : q_(0) {}
    Rat(int n) : q_(n) {}
    Rat(long n) : q_(static_cast<signed long>(n)) {}
    Rat(const mpz_class& n) : q_(n) {}
    Rat(long num, long den);
    Rat(const mpz_class& num, const mpz_class& den);

    /// Accepts "123", "-4/7", and finite decimals like "0.25" (parsed
    /// exactly, never through a float).
    static Rat parse(std::string_view s);

    const mpz_class& num() const { return q_.get_num(); }
    const mpz_class& den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    int sign() const { return sgn(q_); }
    bool is_integer() const { return q_.get_den() == 1; }

    Rat operator-() const { return Rat(mpq_class(-q_)); }
    Rat abs() const { return sign() < 0 ? -*this : *this; }

    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.q_ >= b.q_; }

    /// Exact integer power. Negative exponents invert (ZeroToNegativePower
    /// on a zero base); 0^0 = 1.
    static Rat pow(const Rat& base, long e);

    /// Nearest double (GMP rounds toward zero; error below one ulp).
    double to_double() const { return q_.get_d(); }

    /// "num" or "num/den".
    std::string str() const { return q_.get_str(); }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r);

private:
    explicit Rat(mpq_class q) : q_(std::move(q)) {}

    mpq_class q_; // canonical at all times
};

} // namespace jacbound
