#include "jacbound/rat.hpp"

#include <cctype>
#include <ostream>

namespace jacbound {

const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::DomainError: return "DomainError";
        case ErrorCode::ParamError: return "ParamError";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::DivisionByIntervalContainingZero: return "DivisionByIntervalContainingZero";
        case ErrorCode::NegativeRadicand: return "NegativeRadicand";
        case ErrorCode::NegativeBaseFractionalExponent: return "NegativeBaseFractionalExponent";
        case ErrorCode::ZeroToNegativePower: return "ZeroToNegativePower";
        case ErrorCode::PoleError: return "PoleError";
        case ErrorCode::UnsupportedCase: return "UnsupportedCase";
        case ErrorCode::UnsupportedField: return "UnsupportedField";
        case ErrorCode::DegenerateCase: return "DegenerateCase";
        case ErrorCode::NoSignChange: return "NoSignChange";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::NotFoundWithinCap: return "NotFoundWithinCap";
        case ErrorCode::ShapeMismatch: return "ShapeMismatch";
        case ErrorCode::NotPSD: return "NotPSD";
        case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
    }
    return "Error";
}

Rat::Rat(long num, long den) : q_() {
    if (den == 0) throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
    q_ = mpq_class(static_cast<signed long>(num), static_cast<signed long>(den));
    q_.canonicalize();
}

Rat::Rat(const mpz_class& num, const mpz_class& den) : q_() {
    if (den == 0) throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero rational");
    q_ /= o.q_;
    return *this;
}

Rat Rat::parse(std::string_view s) {
    auto fail = [&] { throw Error(ErrorCode::ParseError, "not a rational: '" + std::string(s) + "'"); };

    size_t i = 0;
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    size_t end = s.size();
    while (end > i && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
    if (i >= end) fail();
    std::string_view body = s.substr(i, end - i);

    bool negative = false;
    if (body.front() == '+' || body.front() == '-') {
        negative = body.front() == '-';
        body.remove_prefix(1);
        if (body.empty()) fail();
    }

    auto digits_only = [](std::string_view v) {
        if (v.empty()) return false;
        for (char c : v)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };

    Rat result;
    if (size_t slash = body.find('/'); slash != std::string_view::npos) {
        std::string_view num = body.substr(0, slash);
        std::string_view den = body.substr(slash + 1);
        if (!digits_only(num) || !digits_only(den)) fail();
        mpz_class n{std::string(num)};
        mpz_class d{std::string(den)};
        if (d == 0) fail();
        result = Rat(n, d);
    } else if (size_t dot = body.find('.'); dot != std::string_view::npos) {
        std::string_view ip = body.substr(0, dot);
        std::string_view fp = body.substr(dot + 1);
        if (ip.empty() && fp.empty()) fail();
        if (!ip.empty() && !digits_only(ip)) fail();
        if (!fp.empty() && !digits_only(fp)) fail();
        mpz_class scaled(std::string(ip) + std::string(fp), 10);
        mpz_class den(1);
        for (size_t k = 0; k < fp.size(); ++k) den *= 10;
        result = Rat(scaled, den);
    } else {
        if (!digits_only(body)) fail();
        result = Rat(mpz_class(std::string(body)));
    }
    return negative ? -result : result;
}

Rat Rat::pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    bool invert = e < 0;
    unsigned long ue = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    if (invert && base.is_zero())
        throw Error(ErrorCode::ZeroToNegativePower, "0 raised to a negative power");
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), ue);
    mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), ue);
    return invert ? Rat(d, n) : Rat(n, d); // num/den already coprime, stays canonical
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

} // namespace jacbound
