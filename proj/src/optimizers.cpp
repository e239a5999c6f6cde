#include "jacbound/optimizers.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace jacbound {

const char* max_method_name(MaxMethod m) {
    switch (m) {
        case MaxMethod::EndpointOverestimate: return "EndpointOverestimate";
        case MaxMethod::RootBracketing: return "RootBracketing";
    }
    return "?";
}

RootBracket isolate_Q_root(const SpaceParams& params, const Rat& width) {
    if (params.j < 1 || params.p - params.j < 1)
        throw Error(ErrorCode::ParamError, "root isolation needs j >= 1 and p > j");
    if (params.d == 2 && params.n == 2 && params.j == 1)
        throw Error(ErrorCode::DegenerateCase,
                    "(2,2,1) has Q = -2 lambda^2 with no sign change; the maximum sits at lambda = 0");
    if (width.sign() <= 0) throw Error(ErrorCode::ParamError, "width must be > 0");

    const CubicPoly q = build_Q(params);
    const Rat right(1, params.p - params.j);
    if (q.eval(right).sign() >= 0)
        throw Error(ErrorCode::NoSignChange, "Q(1/(p-j)) is not negative for " + params.str());

    Rat lo(0), hi = right;
    if (params.j >= 2) {
        // Q(0) = j - 1 > 0
        lo = Rat(0);
    } else {
        // Q(0) = 0 with Q'(0) = p - 3 > 0: scan halving probes for a
        // positive sign; probes with negative sign tighten hi instead.
        Rat probe = right / Rat(2);
        bool found = false;
        for (int iter = 0; iter < 256; ++iter) {
            int s = q.eval(probe).sign();
            if (s > 0) {
                lo = probe;
                found = true;
                break;
            }
            if (s < 0) hi = probe;
            probe = probe / Rat(2);
        }
        if (!found)
            throw Error(ErrorCode::NoSignChange, "no positive value of Q found near 0 for " + params.str());
    }

    while (hi - lo > width) {
        Rat mid = (lo + hi) / Rat(2);
        int s = q.eval(mid).sign();
        if (s > 0) {
            lo = mid;
        } else if (s < 0) {
            hi = mid;
        } else {
            // landed exactly on the root: shrink a symmetric bracket around it
            Rat h = width / Rat(2);
            lo = std::max(lo, mid - h);
            hi = std::min(hi, mid + h);
            break;
        }
    }

    RootBracket bracket{params, Interval(lo, hi), q.eval(lo).sign(), q.eval(hi).sign()};
    if (bracket.sign_lo <= 0 || bracket.sign_hi >= 0)
        throw Error(ErrorCode::NoSignChange, "bracket lost its sign change for " + params.str());
    return bracket;
}

Interval appB1_root_enclosure(int d, unsigned prec) {
    if (d != 4 && d != 8)
        throw Error(ErrorCode::DomainError,
                    "closed-form root defined for d in {4, 8}; d = 2 is the degenerate case");
    const long A = 3 + d * (-7 + 3 * d);
    const long B = -7 + d * (22 + d * (-17 + d * (2 + d)));
    Interval denom = iv_add(Interval::point(Rat(A)), iv_sqrt(Interval::point(Rat(B)), prec));
    return iv_div(Interval::point(Rat(2 * (d - 2))), denom);
}

Scalar appB1_root(int d, const EvalMode& mode) {
    if (mode.is_certified()) return Scalar::of(appB1_root_enclosure(d, mode.prec));
    return Scalar::of(appB1_root_enclosure(d, 64).midpoint().to_double());
}

namespace {

struct ExceptionalBracket {
    Rat lambda_lo, lambda_hi, sigma_hi;
};

// Published isolating intervals for the root of Q, with the sigma value at
// the left endpoint (sigma = (1 - (p-j)lambda)/j is decreasing in lambda,
// so P(lambda_hi, sigma_hi) over-estimates the maximum).
ExceptionalBracket exceptional_bracket(const SpaceParams& params) {
    if (params.d == 4) return {Rat(4, 37), Rat(1, 9), Rat(13, 37)};
    if (params.j == 1) return {Rat(1, 17), Rat(12, 203), Rat(3, 17)};
    if (params.j == 2) return {Rat(1, 20), Rat(3, 50), Rat(1, 5)};
    return {Rat(1, 20), Rat(7, 125), Rat(1, 6)}; // (8, 3)
}

} // namespace

MaxCertificate max_P_certified(const SpaceParams& params, const EvalMode& mode) {
    const int d = params.d, j = params.j, p = params.p, n = params.n;
    if (d == 1 || j < 1 || j >= d)
        throw Error(ErrorCode::ParamError, "needs d in {2,4,8} and 0 < j < d; got " + params.str());
    if (d == 8 && n != 2)
        throw Error(ErrorCode::ParamError, "d = 8 is covered only for n = 2; got " + params.str());
    if (p < 3) throw Error(ErrorCode::ParamError, "needs p = dn - j >= 3");
    const unsigned prec = mode.is_certified() ? mode.prec : kDefaultPrec;

    MaxCertificate cert;
    cert.params = params;

    if (params.exceptional_pair()) {
        if (d == 2) {
            // Q = -2 lambda^2: the maximum P(0) = 1/2 is attained at lambda = 0.
            cert.arg_bracket = Interval::point(Rat(0));
            cert.value_over_estimate = Surd(Rat(1, 2));
            cert.value_bound = Interval::point(Rat(1, 2));
            cert.method = MaxMethod::EndpointOverestimate;
            return cert;
        }
        ExceptionalBracket b = exceptional_bracket(params);
        const CubicPoly q = build_Q(params);
        if (q.eval(b.lambda_lo).sign() <= 0 || q.eval(b.lambda_hi).sign() >= 0)
            throw Error(ErrorCode::NoSignChange, "published bracket lost its sign change");
        cert.arg_bracket = Interval(b.lambda_lo, b.lambda_hi);
        cert.value_over_estimate = eval_P2_exact(params, b.lambda_hi, b.sigma_hi);
        cert.method = MaxMethod::RootBracketing;
        Interval attained = eval_P_reduced_exact(params, b.lambda_lo).enclosure(prec);
        cert.value_bound = Interval(attained.lo, cert.value_over_estimate.enclosure(prec).hi);
        return cert;
    }

    // Non-exceptional: certify the maximizer window by exact signs,
    // Q(2/p - 1/(p-j)) >= 0 and Q(1/p) < 0.
    const Rat window_lo = Rat(2, p) - Rat(1, p - j);
    const Rat window_hi = Rat(1, p);
    if (eval_Q(params, window_lo).sign() < 0)
        throw Error(ErrorCode::DomainError,
                    "window certification failed: Q(2/p - 1/(p-j)) < 0 for " + params.str());
    if (eval_Q(params, window_hi).sign() >= 0)
        throw Error(ErrorCode::DomainError,
                    "window certification failed: Q(1/p) >= 0 for " + params.str());

    cert.arg_bracket = Interval(std::max(Rat(0), window_lo), window_hi);
    cert.value_over_estimate = eval_P2_exact(params, Rat(1, p), Rat(2, p));
    cert.method = MaxMethod::EndpointOverestimate;
    Interval attained = eval_P_reduced_exact(params, cert.arg_bracket.midpoint()).enclosure(prec);
    cert.value_bound = Interval(attained.lo, cert.value_over_estimate.enclosure(prec).hi);
    return cert;
}

namespace {

double lattice_point_count(int grid, int p) {
    // #{t in Z_{>=1}^p : sum t <= grid} = C(grid, p)
    double c = 1.0;
    for (int i = 0; i < p; ++i) c = c * (grid - i) / (i + 1);
    return c;
}

} // namespace

SimplexMax brute_force_simplex_max(const SpaceParams& params, int grid) {
    const int dn = params.d * params.n, p = params.p;
    if (dn > 8 || grid > 60)
        throw Error(ErrorCode::BudgetExceeded, "grid search limited to dn <= 8 and grid <= 60");
    if (grid < p)
        throw Error(ErrorCode::BudgetExceeded, "grid must be at least p for an interior point");
    if (lattice_point_count(grid, p) > 2.5e8)
        throw Error(ErrorCode::BudgetExceeded, "too many lattice points");

    std::vector<double> lattice(grid + 1);
    for (int t = 0; t <= grid; ++t) lattice[t] = static_cast<double>(t) / grid;

    std::vector<int> t(p, 0), best_t(p, 0);
    std::vector<double> x(p, 0.0);
    double best = -1.0;
    std::uint64_t count = 0;

    // Coordinates equal to zero make f vanish, and an all-positive point
    // exists, so the enumeration starts every slot at 1.
    auto recurse = [&](auto&& self, int idx, int remaining) -> void {
        if (idx == p - 1) {
            for (int v = 1; v <= remaining; ++v) {
                t[idx] = v;
                x[idx] = lattice[v];
                ++count;
                double f = objective_f_f64(params, x.data());
                if (f > best) {
                    best = f;
                    best_t = t;
                }
            }
            return;
        }
        for (int v = 1; v <= remaining - (p - 1 - idx); ++v) {
            t[idx] = v;
            x[idx] = lattice[v];
            self(self, idx + 1, remaining - v);
        }
    };
    recurse(recurse, 0, grid);

    SimplexMax result;
    result.argmax.assign(dn, Rat(0));
    for (int i = 0; i < p; ++i) result.argmax[i] = Rat(best_t[i], grid);
    result.value = Scalar::of(best);
    result.points_evaluated = count;
    return result;
}

MatchingReport verify_sorted_matching(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    if (a.size() != b.size()) throw Error(ErrorCode::ParamError, "length mismatch");
    if (a.empty()) throw Error(ErrorCode::ParamError, "empty input");
    if (a.size() > 8) throw Error(ErrorCode::BudgetExceeded, "lengths above 8 are too expensive");
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].sign() < 0 || a[i] > Rat(1))
            throw Error(ErrorCode::ParamError, "a entries must lie in [0, 1]");
        if (b[i].sign() < 0) throw Error(ErrorCode::ParamError, "b entries must be >= 0");
        if (i > 0 && (a[i] < a[i - 1] || b[i] < b[i - 1]))
            throw Error(ErrorCode::ParamError, "inputs must be ascending");
    }

    const std::size_t m = a.size();
    std::vector<std::size_t> perm(m);
    std::iota(perm.begin(), perm.end(), 0);

    auto product = [&](const std::vector<std::size_t>& pi) {
        Rat prod(1);
        for (std::size_t i = 0; i < m; ++i) prod *= a[i] + b[pi[i]];
        return prod;
    };

    MatchingReport report;
    report.identity_value = product(perm);
    report.best_value = report.identity_value;
    report.best_perm = perm;
    report.permutations_checked = 1;
    while (std::next_permutation(perm.begin(), perm.end())) {
        ++report.permutations_checked;
        Rat v = product(perm);
        if (v < report.best_value) {
            report.best_value = v;
            report.best_perm = perm;
        }
    }
    report.identity_minimal = report.best_value == report.identity_value;
    return report;
}

namespace {

// sigma-thresholds of the k-variable lemma, all of the form (a + b sqrt2)/c.
struct ThresholdForm {
    long a, b, c;
    int k_min;
};

ThresholdForm threshold_form(int d) {
    switch (d) {
        case 1: return {-2, 2, 1, 3};  // 2 sqrt2 - 2
        case 2: return {0, 1, 2, 4};   // 1/sqrt2 = sqrt2/2
        case 4: return {1, 2, 7, 4};   // (1 + 2 sqrt2)/7
        case 8: return {3, 4, 23, 6};  // (3 + 4 sqrt2)/23
    }
    throw Error(ErrorCode::ParamError, "d must be one of 1, 2, 4, 8");
}

Interval threshold_enclosure(const ThresholdForm& f, unsigned prec) {
    Interval sqrt2 = iv_sqrt(Interval::point(Rat(2)), prec);
    Interval num = iv_add(Interval::point(Rat(f.a)), iv_mul(Interval::point(Rat(f.b)), sqrt2));
    return iv_div(num, Interval::point(Rat(f.c)));
}

// sigma <= threshold, decided by refinement (the threshold is irrational,
// so this always terminates).
bool sigma_below_threshold(const Rat& sigma, const ThresholdForm& f) {
    for (unsigned prec = kDefaultPrec; prec <= kMaxPrec; prec *= 2) {
        Interval t = threshold_enclosure(f, prec);
        if (sigma < t.lo) return true;
        if (sigma > t.hi) return false;
    }
    throw Error(ErrorCode::PrecisionExhausted, "comparison against sigma threshold undecided");
}

double each_opt_f(int d, int k, const double* x) {
    double num = 1.0, den = 1.0;
    for (int i = 0; i < k; ++i) {
        num *= x[i];
        double factor = 1.0 - x[i] + (d - 1) * x[k - 1 - i];
        if (factor < 1e-9) return -1.0;
        den *= factor;
    }
    return std::sqrt(num) / den;
}

} // namespace

EachOptReport each_opt_structure(int d, int k, const Rat& sigma, const EvalMode& mode,
                                 int grid_resolution) {
    if (k < 2) throw Error(ErrorCode::ParamError, "needs k >= 2");
    if (sigma.sign() <= 0 || sigma > Rat(1))
        throw Error(ErrorCode::ParamError, "needs 0 < sigma <= 1");
    const ThresholdForm tf = threshold_form(d);
    const unsigned prec = mode.is_certified() ? mode.prec : kDefaultPrec;

    EachOptReport report;
    report.d = d;
    report.k = k;
    report.sigma = sigma;
    report.threshold = threshold_enclosure(tf, prec);
    report.hypothesis_holds = k >= tf.k_min || sigma_below_threshold(sigma, tf);

    if (d >= 2) {
        report.c0 = Interval::point(sigma / Rat(2));
        // c_+- = sigma/2 +- sqrt(disc)/(2d); real and distinct from c_0
        // exactly when disc > 0, i.e. sigma > 2(sqrt2 d + d - 2)/(d(d+4)-4).
        Rat disc = sigma * sigma * Rat(d * d + 4 * d - 4) - Rat(4 * (d - 2)) * sigma - Rat(4);
        report.crit_points_real = disc.sign() > 0;
        if (report.crit_points_real) {
            Interval root = iv_sqrt(Interval::point(disc), prec);
            Interval offset = iv_div(root, Interval::point(Rat(2 * d)));
            report.c_plus = iv_add(report.c0, offset);
            report.c_minus = iv_sub(report.c0, offset);
        }
    }

    if (grid_resolution > 0) {
        if (k > 6 || grid_resolution > 40)
            throw Error(ErrorCode::BudgetExceeded, "grid check limited to k <= 6, resolution <= 40");
        const int G = grid_resolution;
        if (G < k) throw Error(ErrorCode::BudgetExceeded, "resolution must be at least k");
        const double sig = sigma.to_double();

        std::vector<int> t(k), best_t(k);
        std::vector<double> x(k);
        double best = -1.0;
        auto recurse = [&](auto&& self, int idx, int remaining) -> void {
            if (idx == k - 1) {
                for (int v = 1; v <= remaining; ++v) {
                    t[idx] = v;
                    x[idx] = sig * v / G;
                    double f = each_opt_f(d, k, x.data());
                    if (f > best) {
                        best = f;
                        best_t = t;
                    }
                }
                return;
            }
            for (int v = 1; v <= remaining - (k - 1 - idx); ++v) {
                t[idx] = v;
                x[idx] = sig * v / G;
                self(self, idx + 1, remaining - v);
            }
        };
        recurse(recurse, 0, G);

        report.grid_checked = true;
        report.grid_argmax.clear();
        bool equal_point = true;
        for (int i = 0; i < k; ++i) {
            report.grid_argmax.push_back(sigma * Rat(best_t[i], G));
            if (std::abs(best_t[i] * k - G) > k) equal_point = false; // |x_i - sigma/k| <= sigma/G
        }
        report.grid_max_at_equal_point = equal_point;
    }
    return report;
}

} // namespace jacbound
