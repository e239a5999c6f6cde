#include "jacbound/gap_engine.hpp"

namespace jacbound {

DeltaBound corlette_delta_bound(int d, int n, bool is_lattice) {
    if (d == 1 || d == 2)
        throw Error(ErrorCode::UnsupportedField,
                    "the critical-exponent gap holds only over the quaternions and octonions");
    if (d != 4 && d != 8) throw Error(ErrorCode::ParamError, "d must be 4 or 8");
    if (n < 2) throw Error(ErrorCode::ParamError, "needs n >= 2");
    if (d == 8 && n != 2) throw Error(ErrorCode::ParamError, "the Cayley plane has n = 2");

    DeltaBound b{d, n, is_lattice, Rat(0)};
    if (d == 4) b.delta_bound = Rat(is_lattice ? 4 * n + 2 : 4 * n);
    else b.delta_bound = Rat(is_lattice ? 22 : 16);
    return b;
}

VanishingReport vanishing_degrees(int d, int n, const EvalMode& mode) {
    if (d == 1 || d == 2)
        throw Error(ErrorCode::UnsupportedField,
                    "homology vanishing of this kind is false over R and C; "
                    "only d = 4 and d = 8 are in scope");
    const Rat delta = corlette_delta_bound(d, n, /*is_lattice=*/false).delta_bound;

    VanishingReport report;
    report.d = d;
    report.n = n;
    report.delta_used = delta;

    // Tabulated codimensions: j = 1 certifies for d = 4 (j = 2 is reported
    // but exceeds 1); j = 1, 2, 3 all certify for the Cayley plane.
    std::vector<int> js;
    if (d == 4) js = (n >= 3) ? std::vector<int>{1, 2} : std::vector<int>{1};
    else js = {1, 2, 3};

    EvalMode eval = mode.is_certified() ? mode : EvalMode::certified(mode.prec ? mode.prec : kDefaultPrec);
    for (int j : js) {
        DegreeRow row;
        row.j = j;
        row.degree = d * n - j;
        row.report = jacobian_bound(SpaceParams(d, n, j), delta, eval);
        if (row.report.certified_lt_one == Cert::Yes)
            report.vanishing_degrees.insert(row.degree);
        report.per_degree.push_back(std::move(row));
    }
    return report;
}

Interval critical_exponent_enclosure(const HomDimQuery& q, unsigned prec) {
    const long dn = static_cast<long>(q.d) * q.n;
    const long hd = q.hd;
    if (q.n <= 2) throw Error(ErrorCode::ParamError, "needs n > 2");
    if (hd < 3) throw Error(ErrorCode::ParamError, "needs hd >= 3");
    if (hd > 1000000) throw Error(ErrorCode::ParamError, "hd out of range");
    if (hd <= dn - q.d) throw Error(ErrorCode::ParamError, "needs hd > dn - d");
    const long j = dn - hd;

    // bound^(2 hd) = (hd-2)^(2j) * (hd-2+d)^(2(2hd-dn)) / 2^j, all exact.
    Rat inner = Rat::pow(Rat(hd - 2), 2 * j) * Rat::pow(Rat(hd - 2 + q.d), 2 * (2 * hd - dn)) /
                Rat::pow(Rat(2), j);
    return iv_kth_root(Interval::point(inner), static_cast<unsigned long>(2 * hd), prec);
}

Scalar critical_exponent_lower_bound(const HomDimQuery& q, const EvalMode& mode) {
    if (mode.is_certified()) return Scalar::of(critical_exponent_enclosure(q, mode.prec));
    return Scalar::of(critical_exponent_enclosure(q, 64).midpoint().to_double());
}

Rat kapovich_bound(long hd) {
    if (hd < 1) throw Error(ErrorCode::ParamError, "needs hd >= 1");
    return Rat(hd - 1);
}

namespace {

// Exact certified check of bound(d, n, hd) >= hd - 2 + d - eps, by raising
// both sides to the (2 hd)-th power.
bool cfm_bound_at_least(int d, long n, long hd, const Rat& eps) {
    const long dn = static_cast<long>(d) * n;
    const long j = dn - hd;
    Rat target = Rat(hd - 2 + d) - eps;
    if (target.sign() <= 0) return true;
    Rat lhs = Rat::pow(Rat(hd - 2), 2 * j) * Rat::pow(Rat(hd - 2 + d), 2 * (2 * hd - dn));
    Rat rhs = Rat::pow(Rat(2), j) * Rat::pow(target, 2 * hd);
    return lhs >= rhs;
}

} // namespace

long epsilon_threshold(int d, const Rat& epsilon, long cap) {
    if (d != 2 && d != 4 && d != 8)
        throw Error(ErrorCode::ParamError, "d must be one of 2, 4, 8");
    if (epsilon.sign() <= 0) throw Error(ErrorCode::ParamError, "epsilon must be > 0");
    for (long n = 3; n <= cap; ++n) {
        const long dn = static_cast<long>(d) * n;
        bool all_ok = true;
        for (long hd = dn - d + 1; hd <= dn; ++hd) {
            if (!cfm_bound_at_least(d, n, hd, epsilon)) {
                all_ok = false;
                break;
            }
        }
        if (all_ok) return n;
    }
    throw Error(ErrorCode::NotFoundWithinCap,
                "no n <= " + std::to_string(cap) + " satisfies the bound for epsilon = " + epsilon.str());
}

} // namespace jacbound
