#pragma once

#include <vector>

#include "jacbound/scalar.hpp"
#include "jacbound/space_params.hpp"

namespace jacbound {

/// Q(lambda), the cubic whose sign controls dP^2/dlambda. Coefficients are
/// exact integers derived from (d, n, j).
struct CubicPoly {
    Rat c3, c2, c1, c0;

    Rat eval(const Rat& x) const { return ((c3 * x + c2) * x + c1) * x + c0; }
};

enum class Formula { GeneralCFM, ExceptionalTable, GenericBCG };
const char* formula_name(Formula f);

enum class Cert { Yes, No, Inconclusive };
const char* cert_name(Cert c);

/// A Jacobian bound evaluation with its provenance and certification state.
struct BoundReport {
    SpaceParams params;
    Rat delta;
    Surd exact;     // the bound as an exact coeff*sqrt(radicand)
    Scalar value;   // exact rendered in the requested mode
    Formula formula = Formula::GeneralCFM;
    Cert certified_lt_one = Cert::Inconclusive;
};

// --- P and Q -------------------------------------------------------------

/// P(lambda, sigma) = lambda^((p-j)/2) sigma^(j/2)
///                    / ((1+(d-2)lambda)^(p-j) (1-sigma)^j).
/// Requires lambda >= 0 and 0 <= sigma < 1.
Surd eval_P2_exact(const SpaceParams& params, const Rat& lambda, const Rat& sigma);
Scalar eval_P2(const SpaceParams& params, const Rat& lambda, const Rat& sigma, const EvalMode& mode);

/// The one-variable reduction P(lambda) obtained by substituting
/// sigma = (1-(p-j)lambda)/j. Requires j >= 1 and (p-j)lambda <= 1. For
/// j = 1 the lambda^2 factor is cancelled analytically, which makes the
/// value finite at lambda = 0 (where the sigma substitution itself poles).
Surd eval_P_reduced_exact(const SpaceParams& params, const Rat& lambda);
Scalar eval_P_reduced(const SpaceParams& params, const Rat& lambda, const EvalMode& mode);

CubicPoly build_Q(const SpaceParams& params); // requires j >= 1
Rat eval_Q(const SpaceParams& params, const Rat& lambda);

// --- Jacobian bounds -----------------------------------------------------

/// The n > 2 closed form 2^(j/2) delta^(dn-j)
/// / ((dn-j-2)^j (dn+d-j-2)^(dn-2j)), evaluated as an exact surd. This is
/// the bare formula: callers that need the applicability preconditions use
/// jacobian_bound instead.
Surd general_cfm_exact(const SpaceParams& params, const Rat& delta);

/// The P-bound rows of the exceptional list (n = 2 cases), as exact surds.
Surd exceptional_P_bound(const SpaceParams& params);

/// Exceptional Jacobian bound = exceptional_P_bound * delta^p / p^(p/2).
Surd exceptional_jac_exact(const SpaceParams& params, const Rat& delta);

/// The Jacobian estimate with preconditions enforced: j <= min(dn-3, d),
/// delta > 0; n = 2 must be an exceptional pair (UnsupportedCase
/// otherwise), n > 2 uses the general formula. In Certified mode
/// certified_lt_one is decided by interval refinement.
BoundReport jacobian_bound(const SpaceParams& params, const Rat& delta, const EvalMode& mode);

/// The older curvature -1 estimate (delta/(dn-j-1))^(dn-j).
Rat bcg_bound_exact(const SpaceParams& params, const Rat& delta);
Scalar bcg_bound(const SpaceParams& params, const Rat& delta, const EvalMode& mode);

// --- The sequence C_n ----------------------------------------------------

/// C_n = (4n/(4n+1))^(4n-2) * (sqrt(2) * 4n/(4n-3)), n >= 1.
Surd seq_C_exact(long n);
Scalar seq_C(long n, const EvalMode& mode);

/// Enclosure of lim C_n = sqrt(2)/e, hardcoded to width below 1e-11.
Interval seq_C_limit();

// --- The simplex objective -----------------------------------------------

/// f(x) = x_1...x_p / (prod_{i=j+1}^p (1-x_i+(d-1)x_{dn+1-i})^2
///                     * prod_{i=1}^j (1-x_i)^2)
/// over a vector of dn entries in [0,1] (entries past p are ignored by the
/// formula). Throws PoleError when a denominator factor vanishes.
Rat objective_f_exact(const SpaceParams& params, const std::vector<Rat>& x);
Scalar objective_f(const SpaceParams& params, const std::vector<Rat>& x, const EvalMode& mode);

/// Fast float path for grid enumeration; x has length >= p. Returns -1 for
/// points within 1e-9 of a denominator pole (callers skip those).
double objective_f_f64(const SpaceParams& params, const double* x);

} // namespace jacbound
