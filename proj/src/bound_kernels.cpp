#include "jacbound/bound_kernels.hpp"

namespace jacbound {

const char* formula_name(Formula f) {
    switch (f) {
        case Formula::GeneralCFM: return "GeneralCFM";
        case Formula::ExceptionalTable: return "ExceptionalTable";
        case Formula::GenericBCG: return "GenericBCG";
    }
    return "?";
}

const char* cert_name(Cert c) {
    switch (c) {
        case Cert::Yes: return "yes";
        case Cert::No: return "no";
        case Cert::Inconclusive: return "inconclusive";
    }
    return "?";
}

Surd eval_P2_exact(const SpaceParams& params, const Rat& lambda, const Rat& sigma) {
    if (lambda.sign() < 0) throw Error(ErrorCode::DomainError, "lambda must be >= 0");
    if (sigma.sign() < 0 || sigma >= Rat(1))
        throw Error(ErrorCode::DomainError, "sigma must lie in [0, 1)");
    const int pj = params.p - params.j;
    Rat base = Rat(1) + Rat(params.d - 2) * lambda;
    if (base.is_zero()) throw Error(ErrorCode::DomainError, "denominator 1+(d-2)lambda vanishes");
    Rat radicand = Rat::pow(lambda, pj) * Rat::pow(sigma, params.j);
    Rat coeff = Rat(1) / (Rat::pow(base, pj) * Rat::pow(Rat(1) - sigma, params.j));
    return Surd(coeff, radicand);
}

Scalar eval_P2(const SpaceParams& params, const Rat& lambda, const Rat& sigma, const EvalMode& mode) {
    return Scalar::from_surd(eval_P2_exact(params, lambda, sigma), mode);
}

Surd eval_P_reduced_exact(const SpaceParams& params, const Rat& lambda) {
    const int j = params.j, p = params.p, d = params.d;
    if (j < 1) throw Error(ErrorCode::ParamError, "reduction needs j >= 1");
    if (p < 3 || p - j < 1) throw Error(ErrorCode::ParamError, "reduction needs p >= 3 and p > j");
    if (lambda.sign() < 0 || lambda > Rat(1))
        throw Error(ErrorCode::DomainError, "lambda must lie in [0, 1]");
    if (Rat(p - j) * lambda > Rat(1))
        throw Error(ErrorCode::DomainError, "(p-j)lambda > 1 gives a negative radicand");
    Rat base = Rat(1) + Rat(d - 2) * lambda;
    if (base.is_zero()) throw Error(ErrorCode::DomainError, "denominator 1+(d-2)lambda vanishes");

    if (j == 1) {
        // P^2 = lambda^(p-3) (1-(p-1)lambda) / ((p-1)^2 (1+(d-2)lambda)^(2(p-1)))
        Rat radicand = Rat::pow(lambda, p - 3) * (Rat(1) - Rat(p - 1) * lambda);
        Rat coeff = Rat(1) / (Rat(p - 1) * Rat::pow(base, p - 1));
        return Surd(coeff, radicand);
    }
    Rat radicand = Rat::pow(Rat(j), j) * Rat::pow(lambda, p - j) *
                   Rat::pow(Rat(1) - Rat(p - j) * lambda, j);
    Rat coeff = Rat(1) / (Rat::pow(Rat(j - 1) + lambda * Rat(p - j), j) * Rat::pow(base, p - j));
    return Surd(coeff, radicand);
}

Scalar eval_P_reduced(const SpaceParams& params, const Rat& lambda, const EvalMode& mode) {
    return Scalar::from_surd(eval_P_reduced_exact(params, lambda), mode);
}

CubicPoly build_Q(const SpaceParams& params) {
    if (params.j < 1) throw Error(ErrorCode::ParamError, "Q is defined for j >= 1");
    const long d = params.d, j = params.j, p = params.p;
    CubicPoly q;
    q.c3 = Rat(p * (d - 2) * (p - j));
    q.c2 = Rat(j * (d - 2 - 2 * j * (d - 1)) + p * (d * (j - 2) + j + 4) - p * p);
    q.c1 = Rat(p * (2 - j) - j * (d + 1) + d - 2);
    q.c0 = Rat(j - 1);
    return q;
}

Rat eval_Q(const SpaceParams& params, const Rat& lambda) {
    return build_Q(params).eval(lambda);
}

Surd general_cfm_exact(const SpaceParams& params, const Rat& delta) {
    if (delta.sign() <= 0) throw Error(ErrorCode::ParamError, "delta must be > 0");
    const int j = params.j, p = params.p, d = params.d;
    if (p - 2 <= 0) throw Error(ErrorCode::ParamError, "formula needs p > 2");
    Rat coeff = Rat::pow(Rat(2), j / 2) * Rat::pow(delta, p) /
                (Rat::pow(Rat(p - 2), j) * Rat::pow(Rat(p + d - 2), p - j));
    return Surd(coeff, Rat(j % 2 != 0 ? 2 : 1));
}

Surd exceptional_P_bound(const SpaceParams& params) {
    if (!params.exceptional_pair())
        throw Error(ErrorCode::UnsupportedCase,
                    params.str() + " is not in the exceptional table");
    const int d = params.d, j = params.j;
    auto ip = [](long b, long e) { return Rat::pow(Rat(b), e); };
    if (d == 2) return Surd(Rat(1, 2), Rat(1));
    if (d == 4) return Surd(ip(3, 5) / (ip(2, 3) * ip(11, 6)), Rat(13 * 37));
    if (j == 1) return Surd(ip(2, 13) * ip(3, 7) * ip(7, 6) * ip(29, 7) / (ip(5, 28) * ip(11, 14)),
                            Rat(3 * 17));
    if (j == 2) return Surd(ip(3, 6) * ip(5, 13) / (ip(2, 22) * ip(17, 12)), Rat(1));
    return Surd(Rat(6) * ip(5, 12) * ip(7, 5) / ip(167, 10), Rat(6)); // (8, 3)
}

Surd exceptional_jac_exact(const SpaceParams& params, const Rat& delta) {
    if (delta.sign() <= 0) throw Error(ErrorCode::ParamError, "delta must be > 0");
    const int p = params.p;
    // delta^p / p^(p/2), with sqrt(1/p) split off for odd p
    Surd scale = (p % 2 == 0)
                     ? Surd(Rat::pow(delta, p) / Rat::pow(Rat(p), p / 2))
                     : Surd(Rat::pow(delta, p) / Rat::pow(Rat(p), (p - 1) / 2), Rat(1, p));
    return exceptional_P_bound(params) * scale;
}

BoundReport jacobian_bound(const SpaceParams& params, const Rat& delta, const EvalMode& mode) {
    if (!params.jacobian_estimate_applicable())
        throw Error(ErrorCode::ParamError,
                    "estimate needs j <= min(dn-3, d); violated by " + params.str());
    if (delta.sign() <= 0) throw Error(ErrorCode::ParamError, "delta must be > 0");

    BoundReport report{params, delta, Surd(), Scalar(), Formula::GeneralCFM, Cert::Inconclusive};
    if (params.n == 2) {
        if (!params.exceptional_pair())
            throw Error(ErrorCode::UnsupportedCase,
                        "n = 2 has explicit bounds only for (d,j) in "
                        "{(2,1),(4,1),(8,1),(8,2),(8,3)}; got " + params.str());
        report.exact = exceptional_jac_exact(params, delta);
        report.formula = Formula::ExceptionalTable;
    } else {
        report.exact = general_cfm_exact(params, delta);
        report.formula = Formula::GeneralCFM;
    }

    if (mode.is_certified()) {
        CertifyResult cr = certify_with_refinement(
            [&](unsigned prec) { return report.exact.enclosure(prec); }, Rat(1), mode.prec);
        report.value = Scalar::of(cr.enclosure);
        switch (cr.cert) {
            case CompareCert::CertifiedLess: report.certified_lt_one = Cert::Yes; break;
            case CompareCert::CertifiedGreaterEq: report.certified_lt_one = Cert::No; break;
            case CompareCert::Inconclusive: report.certified_lt_one = Cert::Inconclusive; break;
        }
    } else {
        report.value = Scalar::from_surd(report.exact, mode);
    }
    return report;
}

Rat bcg_bound_exact(const SpaceParams& params, const Rat& delta) {
    const int base = params.p - 1; // dn - j - 1
    if (base <= 0) throw Error(ErrorCode::ParamError, "needs dn - j - 1 > 0");
    if (delta.sign() <= 0) throw Error(ErrorCode::ParamError, "delta must be > 0");
    return Rat::pow(delta / Rat(base), params.p);
}

Scalar bcg_bound(const SpaceParams& params, const Rat& delta, const EvalMode& mode) {
    return Scalar::from_rat(bcg_bound_exact(params, delta), mode);
}

Surd seq_C_exact(long n) {
    if (n < 1) throw Error(ErrorCode::ParamError, "C_n needs n >= 1");
    Rat coeff = Rat::pow(Rat(4 * n, 4 * n + 1), 4 * n - 2) * Rat(4 * n, 4 * n - 3);
    return Surd(coeff, Rat(2));
}

Scalar seq_C(long n, const EvalMode& mode) {
    return Scalar::from_surd(seq_C_exact(n), mode);
}

Interval seq_C_limit() {
    // sqrt(2)/e = 0.52026009502288889636...; enclosure of width 4e-12 whose
    // endpoints agree on the first 11 significant digits
    return Interval(Rat::parse("0.520260095020"), Rat::parse("0.520260095024"));
}

Rat objective_f_exact(const SpaceParams& params, const std::vector<Rat>& x) {
    const int dn = params.d * params.n, p = params.p, j = params.j, d = params.d;
    if (static_cast<int>(x.size()) != dn)
        throw Error(ErrorCode::ParamError, "x must have dn entries");
    for (const Rat& xi : x)
        if (xi.sign() < 0 || xi > Rat(1))
            throw Error(ErrorCode::DomainError, "entries must lie in [0, 1]");

    Rat denom(1);
    for (int i = j + 1; i <= p; ++i) {
        Rat factor = Rat(1) - x[i - 1] + Rat(d - 1) * x[dn - i]; // pairs with x_{dn+1-i}
        if (factor.is_zero()) throw Error(ErrorCode::PoleError, "denominator factor vanishes");
        denom *= factor;
    }
    for (int i = 1; i <= j; ++i) {
        Rat factor = Rat(1) - x[i - 1];
        if (factor.is_zero()) throw Error(ErrorCode::PoleError, "denominator factor vanishes");
        denom *= factor;
    }
    Rat num(1);
    for (int i = 0; i < p; ++i) num *= x[i];
    return num / (denom * denom);
}

Scalar objective_f(const SpaceParams& params, const std::vector<Rat>& x, const EvalMode& mode) {
    return Scalar::from_rat(objective_f_exact(params, x), mode);
}

double objective_f_f64(const SpaceParams& params, const double* x) {
    const int dn = params.d * params.n, p = params.p, j = params.j;
    const double dm1 = params.d - 1;
    double denom = 1.0;
    for (int i = j + 1; i <= p; ++i) {
        double factor = 1.0 - x[i - 1] + dm1 * x[dn - i];
        if (factor < 1e-9 && factor > -1e-9) return -1.0;
        denom *= factor;
    }
    for (int i = 1; i <= j; ++i) {
        double factor = 1.0 - x[i - 1];
        if (factor < 1e-9 && factor > -1e-9) return -1.0;
        denom *= factor;
    }
    double num = 1.0;
    for (int i = 0; i < p; ++i) num *= x[i];
    return num / (denom * denom);
}

} // namespace jacbound
