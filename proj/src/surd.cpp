#include "jacbound/surd.hpp"

#include <cmath>

namespace jacbound {

Surd::Surd(Rat coeff, Rat radicand) : coeff_(std::move(coeff)), radicand_(std::move(radicand)) {
    if (radicand_.sign() < 0)
        throw Error(ErrorCode::NegativeRadicand, "surd radicand " + radicand_.str());
    if (coeff_.is_zero() || radicand_.is_zero()) {
        coeff_ = Rat(0);
        radicand_ = Rat(0);
    }
}

Rat Surd::signed_square() const {
    Rat sq = coeff_ * coeff_ * radicand_;
    return coeff_.sign() < 0 ? -sq : sq;
}

int Surd::compare(const Surd& a, const Surd& b) {
    Rat sa = a.signed_square(), sb = b.signed_square();
    if (sa < sb) return -1;
    if (sb < sa) return 1;
    return 0;
}

std::optional<Rat> Surd::try_rational() const {
    if (is_zero()) return Rat(0);
    if (mpz_perfect_square_p(radicand_.num().get_mpz_t()) &&
        mpz_perfect_square_p(radicand_.den().get_mpz_t())) {
        mpz_class sn, sd;
        mpz_sqrt(sn.get_mpz_t(), radicand_.num().get_mpz_t());
        mpz_sqrt(sd.get_mpz_t(), radicand_.den().get_mpz_t());
        return coeff_ * Rat(sn, sd);
    }
    return std::nullopt;
}

Interval Surd::enclosure(unsigned prec) const {
    if (is_zero()) return Interval::point(Rat(0));
    return iv_mul(Interval::point(coeff_), iv_sqrt(Interval::point(radicand_), prec));
}

double Surd::to_double() const {
    return coeff_.to_double() * std::sqrt(radicand_.to_double());
}

std::string Surd::str() const {
    if (is_zero()) return "0";
    if (radicand_ == Rat(1)) return coeff_.str();
    std::string root = "sqrt(" + radicand_.str() + ")";
    if (coeff_ == Rat(1)) return root;
    return coeff_.str() + "*" + root;
}

Surd Surd::parse(std::string_view s) {
    auto fail = [&] { throw Error(ErrorCode::ParseError, "not an exact form: '" + std::string(s) + "'"); };
    size_t star = s.find('*');
    size_t root = s.find("sqrt(");
    if (root == std::string_view::npos) {
        if (star != std::string_view::npos) fail();
        return Surd(Rat::parse(s));
    }
    if (!s.ends_with(")")) fail();
    std::string_view inner = s.substr(root + 5, s.size() - root - 6);
    Rat radicand = Rat::parse(inner);
    if (star == std::string_view::npos) {
        if (root != 0) fail();
        return Surd(Rat(1), radicand);
    }
    if (star > root) fail();
    Rat coeff = Rat::parse(s.substr(0, star));
    return Surd(coeff, radicand);
}

} // namespace jacbound
