#pragma once

#include <cstdint>
#include <vector>

#include "jacbound/bound_kernels.hpp"

namespace jacbound {

/// An isolating bracket for the unique root of Q in (0, 1/(p-j)). The signs
/// at the endpoints are exact rational evaluations, so the bracket is a
/// proof object: Q(lo) > 0 > Q(hi) and Q has exactly one root inside.
struct RootBracket {
    SpaceParams params;
    Interval interval;
    int sign_lo = 0;
    int sign_hi = 0;
};

/// Bisects the unique root of Q down to the requested bracket width using
/// exact rational midpoints and exact sign evaluations only. Throws
/// DegenerateCase for (d,n,j) = (2,2,1) where Q = -2 lambda^2 never changes
/// sign, and NoSignChange when no positive starting point exists.
RootBracket isolate_Q_root(const SpaceParams& params, const Rat& width);

/// The closed-form root of Q maximizing P in the n = 2, j = 1 cases:
/// lambda = 2(d-2) / (3 + d(-7+3d) + sqrt(-7 + d(22 + d(-17 + d(2+d))))).
/// Defined for d in {4, 8}; d = 2 is the degenerate case.
Interval appB1_root_enclosure(int d, unsigned prec);
Scalar appB1_root(int d, const EvalMode& mode);

enum class MaxMethod { EndpointOverestimate, RootBracketing };
const char* max_method_name(MaxMethod m);

/// Certificate for the global maximum of P(lambda) on [0, 1/(p-j)].
struct MaxCertificate {
    SpaceParams params;
    Interval arg_bracket;     // contains the maximizing lambda
    Interval value_bound;     // encloses max P (lo: attained value, hi: over-estimate)
    Surd value_over_estimate; // the over-estimate in exact form
    MaxMethod method = MaxMethod::EndpointOverestimate;
};

/// Non-exceptional parameters: certifies by exact sign checks that the
/// maximizer lies in (2/p - 1/(p-j), 1/p) and returns the over-estimate
/// P(1/p, 2/p) = 2^(j/2) p^(p/2) / ((p-2)^j (p+d-2)^(p-j)).
/// Exceptional pairs return the bracket-based over-estimates P(1/9,13/37),
/// P(12/203,3/17), P(3/50,1/5), P(7/125,1/6), and 1/2 for (2,2,1).
MaxCertificate max_P_certified(const SpaceParams& params, const EvalMode& mode);

/// Exhaustive float-mode maximization of objective_f over the lattice
/// {0, 1/grid, ..., 1}^p with coordinate sum <= 1 (trailing dn - p entries
/// are zero). Deterministic; throws BudgetExceeded past dn <= 8, grid <= 60
/// or ~2.5e8 lattice points.
struct SimplexMax {
    std::vector<Rat> argmax; // length dn
    Scalar value;            // float-mode objective value at the argmax
    std::uint64_t points_evaluated = 0;
};
SimplexMax brute_force_simplex_max(const SpaceParams& params, int grid);

/// Brute-forces all pairings of ascending a with permutations of b and
/// reports whether the sorted-with-sorted matching minimizes
/// prod_i (a_i + b_pi(i)). Lengths up to 8.
struct MatchingReport {
    std::vector<std::size_t> best_perm;
    Rat best_value;
    Rat identity_value;
    bool identity_minimal = false;
    std::uint64_t permutations_checked = 0;
};
MatchingReport verify_sorted_matching(const std::vector<Rat>& a, const std::vector<Rat>& b);

/// The structure of the k-variable factor optimization: the sigma-threshold
/// for d, whether (d, k, sigma) satisfies the hypothesis, the critical
/// points c_0 = sigma/2 and c_+- (d >= 2), and an optional grid check that
/// the constrained maximum sits at the equal-coordinates point.
struct EachOptReport {
    int d = 1;
    int k = 2;
    Rat sigma;
    Interval threshold;          // {2sqrt2-2, 1/sqrt2, (1+2sqrt2)/7, (3+4sqrt2)/23}
    bool hypothesis_holds = false;
    bool crit_points_real = false; // c_+- real and distinct from c_0
    Interval c0, c_plus, c_minus;  // c_plus/c_minus only meaningful when real
    bool grid_checked = false;
    std::vector<Rat> grid_argmax;
    bool grid_max_at_equal_point = false;
};
EachOptReport each_opt_structure(int d, int k, const Rat& sigma, const EvalMode& mode,
                                 int grid_resolution = 0);

} // namespace jacbound
