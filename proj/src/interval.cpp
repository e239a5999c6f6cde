#include "jacbound/interval.hpp"

#include <algorithm>

namespace jacbound {

Interval::Interval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
    if (hi < lo) throw Error(ErrorCode::DomainError, "interval with lo > hi");
}

Interval iv_add(const Interval& a, const Interval& b) {
    return Interval(a.lo + b.lo, a.hi + b.hi);
}

Interval iv_sub(const Interval& a, const Interval& b) {
    return Interval(a.lo - b.hi, a.hi - b.lo);
}

Interval iv_mul(const Interval& a, const Interval& b) {
    Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    Rat lo = std::min(std::min(p1, p2), std::min(p3, p4));
    Rat hi = std::max(std::max(p1, p2), std::max(p3, p4));
    return Interval(std::move(lo), std::move(hi));
}

Interval iv_div(const Interval& a, const Interval& b) {
    if (b.lo.sign() <= 0 && b.hi.sign() >= 0)
        throw Error(ErrorCode::DivisionByIntervalContainingZero, "divisor interval " + b.str());
    return iv_mul(a, Interval(Rat(1) / b.hi, Rat(1) / b.lo));
}

Interval iv_arith(IvOp op, const Interval& a, const Interval& b) {
    switch (op) {
        case IvOp::Add: return iv_add(a, b);
        case IvOp::Sub: return iv_sub(a, b);
        case IvOp::Mul: return iv_mul(a, b);
        case IvOp::Div: return iv_div(a, b);
    }
    throw Error(ErrorCode::ParamError, "bad interval op");
}

namespace {

// Floor of the k-th root of x = n/d, with exactness flag. Scales to
// integers: root(n/d) = root(n * d^(k-1)) / d, then shifts by 2^prec for
// the resolution. The result r satisfies r <= x^(1/k) < r + ulp with
// ulp = 1/(d * 2^prec).
struct RootDown {
    Rat value;
    Rat ulp;
    bool exact;
};

RootDown kth_root_down(const Rat& x, unsigned long k, unsigned prec) {
    if (x.sign() < 0) throw Error(ErrorCode::NegativeRadicand, "root of negative rational " + x.str());
    if (k == 0) throw Error(ErrorCode::ParamError, "0-th root");
    if (x.is_zero()) return {Rat(0), Rat(0), true};

    const mpz_class& n = x.num();
    const mpz_class& d = x.den();

    mpz_class scaled; // n * d^(k-1) * 2^(k*prec)
    mpz_pow_ui(scaled.get_mpz_t(), d.get_mpz_t(), k - 1);
    scaled *= n;
    mpz_class shift;
    mpz_ui_pow_ui(shift.get_mpz_t(), 2, static_cast<unsigned long>(k) * prec);
    scaled *= shift;

    mpz_class root, rem;
    if (k == 2) {
        mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), scaled.get_mpz_t());
    } else {
        mpz_rootrem(root.get_mpz_t(), rem.get_mpz_t(), scaled.get_mpz_t(), k);
    }

    mpz_class denom_scale;
    mpz_ui_pow_ui(denom_scale.get_mpz_t(), 2, prec);
    denom_scale *= d;

    return {Rat(root, denom_scale), Rat(mpz_class(1), denom_scale), rem == 0};
}

Rat kth_root_up(const Rat& x, unsigned long k, unsigned prec) {
    RootDown r = kth_root_down(x, k, prec);
    return r.exact ? r.value : r.value + r.ulp;
}

} // namespace

Rat sqrt_round_down(const Rat& x, unsigned prec) { return kth_root_down(x, 2, prec + 1).value; }
Rat sqrt_round_up(const Rat& x, unsigned prec) { return kth_root_up(x, 2, prec + 1); }

Interval iv_sqrt(const Interval& a, unsigned prec) {
    if (a.lo.sign() < 0)
        throw Error(ErrorCode::NegativeRadicand, "sqrt of interval " + a.str());
    return Interval(sqrt_round_down(a.lo, prec), sqrt_round_up(a.hi, prec));
}

Interval iv_kth_root(const Interval& a, unsigned long k, unsigned prec) {
    if (a.lo.sign() < 0)
        throw Error(ErrorCode::NegativeRadicand, "root of interval " + a.str());
    return Interval(kth_root_down(a.lo, k, prec + 1).value, kth_root_up(a.hi, k, prec + 1));
}

namespace {

Interval iv_pow_int(const Interval& a, long e) {
    if (e == 0) return Interval::point(Rat(1));
    if (e < 0) {
        if (a.lo.sign() <= 0 && a.hi.sign() >= 0)
            throw Error(ErrorCode::ZeroToNegativePower, "negative power of interval containing 0");
        return iv_pow_int(Interval(Rat(1) / a.hi, Rat(1) / a.lo), -e);
    }
    Rat plo = Rat::pow(a.lo, e), phi = Rat::pow(a.hi, e);
    if (e % 2 != 0 || a.lo.sign() >= 0) return Interval(std::move(plo), std::move(phi));
    if (a.hi.sign() <= 0) return Interval(std::move(phi), std::move(plo));
    // even power straddling zero
    return Interval(Rat(0), std::max(plo, phi));
}

} // namespace

Interval iv_pow(const Interval& a, const Rat& e, unsigned prec) {
    if (!mpz_fits_slong_p(e.num().get_mpz_t()))
        throw Error(ErrorCode::DomainError, "exponent out of range: " + e.str());
    if (e.is_integer()) return iv_pow_int(a, e.num().get_si());
    if (e.den() != 2)
        throw Error(ErrorCode::DomainError, "exponent must be integer or half-integer, got " + e.str());
    if (a.lo.sign() < 0)
        throw Error(ErrorCode::NegativeBaseFractionalExponent,
                    "fractional power of interval " + a.str());
    // a^(k/2) = sqrt(a^k); k odd by canonicality
    return iv_sqrt(iv_pow_int(a, e.num().get_si()), prec);
}

const char* compare_cert_name(CompareCert c) {
    switch (c) {
        case CompareCert::CertifiedLess: return "CertifiedLess";
        case CompareCert::CertifiedGreaterEq: return "CertifiedGreaterEq";
        case CompareCert::Inconclusive: return "Inconclusive";
    }
    return "?";
}

CompareCert certify_compare(const Interval& a, const Rat& threshold) {
    if (a.hi < threshold) return CompareCert::CertifiedLess;
    if (a.lo >= threshold) return CompareCert::CertifiedGreaterEq;
    return CompareCert::Inconclusive;
}

CertifyResult certify_with_refinement(const std::function<Interval(unsigned)>& make_enclosure,
                                      const Rat& threshold,
                                      unsigned start_prec,
                                      unsigned max_prec) {
    if (start_prec == 0) start_prec = kDefaultPrec;
    CertifyResult result;
    for (unsigned prec = start_prec;; prec *= 2) {
        result.enclosure = make_enclosure(prec);
        result.prec_used = prec;
        result.cert = certify_compare(result.enclosure, threshold);
        if (result.cert != CompareCert::Inconclusive || prec >= max_prec) return result;
    }
}

} // namespace jacbound
