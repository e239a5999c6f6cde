#pragma once

#include <functional>
#include <string>

#include "jacbound/rat.hpp"

namespace jacbound {

/// Closed interval [lo, hi] with exact rational endpoints. Every operation
/// returns an interval containing the exact image of its operands, so a
/// chain of operations is a machine-checkable enclosure of the true value.
struct Interval {
    Rat lo, hi;

    Interval() = default;
    Interval(Rat l, Rat h);

    static Interval point(const Rat& x) { return Interval(x, x); }

    Rat width() const { return hi - lo; }
    bool is_point() const { return lo == hi; }
    bool contains(const Rat& x) const { return lo <= x && x <= hi; }
    bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
    Rat midpoint() const { return (lo + hi) / Rat(2); }

    std::string str() const { return "[" + lo.str() + ", " + hi.str() + "]"; }
};

Interval iv_add(const Interval& a, const Interval& b);
Interval iv_sub(const Interval& a, const Interval& b);
Interval iv_mul(const Interval& a, const Interval& b);
/// Throws DivisionByIntervalContainingZero when 0 is in b.
Interval iv_div(const Interval& a, const Interval& b);

enum class IvOp { Add, Sub, Mul, Div };
Interval iv_arith(IvOp op, const Interval& a, const Interval& b);

/// Enclosure of {sqrt(x) : x in a}. Endpoint rounding is at most
/// 2^-(prec+1), i.e. well inside a 2^-prec * max(1, hi) budget. Perfect
/// squares come back as exact points. Requires a.lo >= 0.
Interval iv_sqrt(const Interval& a, unsigned prec);

/// Enclosure of {x^(1/k) : x in a} for k >= 1, same rounding budget as
/// iv_sqrt. Requires a.lo >= 0; exact k-th powers come back as points.
Interval iv_kth_root(const Interval& a, unsigned long k, unsigned prec);

/// x^e for integer or half-integer e (den(e) in {1, 2}). Integer powers are
/// exact; half-integer powers route through iv_sqrt at `prec`.
Interval iv_pow(const Interval& a, const Rat& e, unsigned prec = 128);

enum class CompareCert { CertifiedLess, CertifiedGreaterEq, Inconclusive };
const char* compare_cert_name(CompareCert c);

/// CertifiedLess iff hi < threshold, CertifiedGreaterEq iff lo >= threshold;
/// anything else is Inconclusive and the caller should refine.
CompareCert certify_compare(const Interval& a, const Rat& threshold);

inline constexpr unsigned kDefaultPrec = 128;
inline constexpr unsigned kMaxPrec = 4096;

struct CertifyResult {
    CompareCert cert = CompareCert::Inconclusive;
    Interval enclosure;
    unsigned prec_used = 0;
};

/// Evaluates `make_enclosure` at doubling precisions (start_prec up to
/// max_prec) until certify_compare against `threshold` decides. A result
/// still Inconclusive at max_prec is returned as such; callers choose
/// whether that is an error.
CertifyResult certify_with_refinement(const std::function<Interval(unsigned)>& make_enclosure,
                                      const Rat& threshold,
                                      unsigned start_prec = kDefaultPrec,
                                      unsigned max_prec = kMaxPrec);

// Directed-rounding square/k-th roots of a single rational (round down /
// round up). Exposed for tests; iv_sqrt and iv_kth_root are built on these.
Rat sqrt_round_down(const Rat& x, unsigned prec);
Rat sqrt_round_up(const Rat& x, unsigned prec);

} // namespace jacbound
