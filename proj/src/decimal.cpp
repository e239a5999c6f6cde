#include "jacbound/decimal.hpp"

namespace jacbound {

namespace {

// Nearest integer to num/den (den > 0), ties to even.
mpz_class round_nearest(const mpz_class& num, const mpz_class& den) {
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    mpz_class twice = 2 * r;
    int c = cmp(twice, den);
    if (c > 0 || (c == 0 && mpz_odd_p(q.get_mpz_t()))) q += 1;
    return q;
}

mpz_class pow10(unsigned long k) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, k);
    return p;
}

// floor(log10(|x|)) for x != 0.
long decimal_exponent(const Rat& x) {
    mpz_class a = abs(x.num());
    const mpz_class& b = x.den();
    long e = static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 10)) -
             static_cast<long>(mpz_sizeinbase(b.get_mpz_t(), 10));
    // sizeinbase can overshoot by one; settle by exact comparison
    auto cmp_pow = [&](long k) {
        // compare |x| with 10^k
        if (k >= 0) return cmp(a, b * pow10(static_cast<unsigned long>(k)));
        return cmp(a * pow10(static_cast<unsigned long>(-k)), b);
    };
    while (cmp_pow(e) < 0) --e;
    while (cmp_pow(e + 1) >= 0) ++e;
    return e;
}

} // namespace

std::string rat_to_fixed(const Rat& x, int places) {
    if (places < 0) throw Error(ErrorCode::ParamError, "negative decimal places");
    bool neg = x.sign() < 0;
    Rat ax = x.abs();
    mpz_class scaled = round_nearest(ax.num() * pow10(static_cast<unsigned long>(places)), ax.den());
    std::string digits = scaled.get_str();
    if (static_cast<int>(digits.size()) <= places)
        digits = std::string(places + 1 - digits.size(), '0') + digits;
    std::string out = digits.substr(0, digits.size() - places);
    if (places > 0) out += "." + digits.substr(digits.size() - places);
    if (neg && scaled != 0) out = "-" + out;
    return out;
}

std::string rat_to_sig(const Rat& x, int sig) {
    if (sig < 1) throw Error(ErrorCode::ParamError, "need at least one significant digit");
    if (x.is_zero()) return "0";
    bool neg = x.sign() < 0;
    Rat ax = x.abs();
    long e = decimal_exponent(ax);

    // mantissa with `sig` digits: round(|x| * 10^(sig-1-e))
    long shift = sig - 1 - e;
    mpz_class num = ax.num(), den = ax.den();
    if (shift >= 0) num *= pow10(static_cast<unsigned long>(shift));
    else den *= pow10(static_cast<unsigned long>(-shift));
    mpz_class mant = round_nearest(num, den);
    std::string digits = mant.get_str();
    if (static_cast<int>(digits.size()) > sig) { // rounded up to the next power
        digits = digits.substr(0, sig);
        ++e;
    }

    std::string out;
    if (e >= -4 && e < sig + 6) {
        if (e >= sig - 1) { // integer with possible trailing zeros
            out = digits + std::string(e - (sig - 1), '0');
        } else if (e >= 0) {
            out = digits.substr(0, e + 1) + "." + digits.substr(e + 1);
        } else {
            out = "0." + std::string(-e - 1, '0') + digits;
        }
    } else {
        out = digits.substr(0, 1);
        if (sig > 1) out += "." + digits.substr(1);
        out += (e < 0 ? "e-" : "e+") + std::to_string(e < 0 ? -e : e);
    }
    return neg ? "-" + out : out;
}

std::optional<std::string> decimal_from_interval(const Interval& iv, int sig) {
    std::string a = rat_to_sig(iv.lo, sig);
    std::string b = rat_to_sig(iv.hi, sig);
    if (a == b) return a;
    return std::nullopt;
}

std::optional<std::string> fixed_from_interval(const Interval& iv, int places) {
    std::string a = rat_to_fixed(iv.lo, places);
    std::string b = rat_to_fixed(iv.hi, places);
    if (a == b) return a;
    return std::nullopt;
}

} // namespace jacbound
