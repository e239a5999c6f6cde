#pragma once

#include <set>
#include <vector>

#include "jacbound/bound_kernels.hpp"

namespace jacbound {

/// The critical-exponent gap: for quaternionic groups delta = 4n+2
/// (lattice) or delta <= 4n; for the Cayley plane delta = 22 or delta <= 16.
struct DeltaBound {
    int d = 4;
    int n = 2;
    bool is_lattice = false;
    Rat delta_bound; // exact value for lattices, upper bound otherwise
};

/// Throws UnsupportedField for d in {1, 2} (no gap there); d = 8 requires
/// n = 2.
DeltaBound corlette_delta_bound(int d, int n, bool is_lattice);

struct DegreeRow {
    int degree = 0; // p = dn - j
    int j = 0;
    BoundReport report;
};

struct VanishingReport {
    int d = 4;
    int n = 2;
    Rat delta_used;
    std::vector<DegreeRow> per_degree;
    std::set<int> vanishing_degrees; // degrees with certified_lt_one == yes
};

/// Applies the non-lattice delta bound and certifies each tabulated degree.
/// Degrees enter vanishing_degrees only when certified below 1; rows whose
/// bound is not below 1 (d = 4, j = 2) stay in per_degree with
/// certified_lt_one = no. Preconditions: (d = 4, n >= 2) or (d = 8, n = 2);
/// d in {1, 2} is rejected with the scope message.
VanishingReport vanishing_degrees(int d, int n, const EvalMode& mode);

struct HomDimQuery {
    int d = 4;
    int n = 3;
    int hd = 0; // homological dimension
};

/// The lower bound ((hd-2)/sqrt2)^(dn/hd - 1) * (hd-2+d)^(2 - dn/hd),
/// computed without transcendental functions: the whole expression is the
/// (2 hd)-th root of the exact rational
/// (hd-2)^(2j) (hd-2+d)^(2(2hd-dn)) / 2^j with j = dn - hd. Exact when the
/// rational is a perfect (2 hd)-th power (e.g. hd = dn).
/// Requires hd > dn - d, n > 2, hd >= 3.
Interval critical_exponent_enclosure(const HomDimQuery& q, unsigned prec);
Scalar critical_exponent_lower_bound(const HomDimQuery& q, const EvalMode& mode);

/// hd - 1.
Rat kapovich_bound(long hd);

/// Smallest n > 2 such that for every integer hd with dn-d < hd <= dn the
/// critical-exponent bound is at least hd - 2 + d - epsilon. Each check is
/// an exact rational power comparison, so success is certified. Throws
/// NotFoundWithinCap past the cap.
long epsilon_threshold(int d, const Rat& epsilon, long cap = 1000000);

} // namespace jacbound
