#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "jacbound/interval.hpp"

namespace jacbound {

/// Exact value of the form coeff * sqrt(radicand) with rational coeff and
/// rational radicand >= 0. Every closed-form constant in the Jacobian
/// estimates (2^(j/2) delta^p / ..., the exceptional-table rows, C_n, the
/// P evaluations) has this shape, so bounds can be carried exactly and
/// only converted to an enclosure at the final comparison.
class Surd {
public:
    Surd() : coeff_(0), radicand_(0) {}
    explicit Surd(const Rat& rational) : coeff_(rational), radicand_(rational.is_zero() ? Rat(0) : Rat(1)) {}
    Surd(Rat coeff, Rat radicand);

    const Rat& coeff() const { return coeff_; }
    const Rat& radicand() const { return radicand_; }

    bool is_zero() const { return coeff_.is_zero(); }
    int sign() const { return coeff_.sign(); }

    Surd operator*(const Surd& o) const { return Surd(coeff_ * o.coeff_, radicand_ * o.radicand_); }
    Surd operator*(const Rat& r) const { return Surd(coeff_ * r, radicand_); }
    Surd operator/(const Rat& r) const { return Surd(coeff_ / r, radicand_); }

    /// Exact comparison: c1*sqrt(r1) vs c2*sqrt(r2) decided through signs
    /// and the rational invariant c^2 * r. Returns -1, 0, +1.
    static int compare(const Surd& a, const Surd& b);
    bool operator==(const Surd& o) const { return compare(*this, o) == 0; }
    bool operator<(const Surd& o) const { return compare(*this, o) < 0; }
    bool operator<=(const Surd& o) const { return compare(*this, o) <= 0; }

    /// The exact rational c^2 * r with the sign of c; equals value^2 for
    /// nonnegative values. Useful for exact squared comparisons.
    Rat signed_square() const;

    /// Exact rational value when the radicand is a perfect square.
    std::optional<Rat> try_rational() const;

    Interval enclosure(unsigned prec) const;
    double to_double() const;

    /// Exact form "c", "sqrt(r)" or "c*sqrt(r)"; round-trips through parse.
    std::string str() const;
    static Surd parse(std::string_view s);

private:
    Rat coeff_;
    Rat radicand_;
};

} // namespace jacbound
