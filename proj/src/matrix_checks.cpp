#include "jacbound/matrix_checks.hpp"

#include <algorithm>

#include "jacbound/error.hpp"

namespace jacbound {

bool SpectrumPair::interlacing_ok(double tol) const {
    const int p = static_cast<int>(lambdas.size());
    const int nd = static_cast<int>(betas.size());
    for (int i = 1; i <= p; ++i) {
        if (lambdas(i - 1) > betas(nd - i) + tol) return false;
    }
    return true;
}

namespace {

Eigen::VectorXd ascending_psd_spectrum(const Eigen::MatrixXd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
    Eigen::VectorXd ev = es.eigenvalues(); // ascending
    if (ev(0) < -1e-10)
        throw Error(ErrorCode::NotPSD, "matrix has eigenvalue " + std::to_string(ev(0)));
    for (int i = 0; i < ev.size(); ++i) ev(i) = std::max(ev(i), 0.0);
    return ev;
}

void require_symmetric(const Eigen::MatrixXd& m) {
    if (m.rows() != m.cols()) throw Error(ErrorCode::ShapeMismatch, "matrix is not square");
    double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-10 * scale)
        throw Error(ErrorCode::ShapeMismatch, "matrix is not symmetric");
}

} // namespace

FiedlerReport fiedler_check(const std::vector<Eigen::MatrixXd>& matrices, double tol) {
    if (matrices.empty()) throw Error(ErrorCode::ShapeMismatch, "no matrices given");
    const Eigen::Index size = matrices.front().rows();
    if (size > 12) throw Error(ErrorCode::ShapeMismatch, "sizes above 12 are out of budget");
    for (const auto& m : matrices) {
        require_symmetric(m);
        if (m.rows() != size) throw Error(ErrorCode::ShapeMismatch, "matrices differ in size");
    }

    Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(size, size);
    std::vector<Eigen::VectorXd> spectra;
    spectra.reserve(matrices.size());
    for (const auto& m : matrices) {
        spectra.push_back(ascending_psd_spectrum(m));
        sum += m;
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sum);
    double det = 1.0;
    for (int i = 0; i < size; ++i) det *= es.eigenvalues()(i);

    double product = 1.0;
    for (int i = 0; i < size; ++i) {
        double s = 0.0;
        for (const auto& spec : spectra) s += spec(i);
        product *= s;
    }

    FiedlerReport report;
    report.det_of_sum = det;
    report.eigenvalue_product = product;
    report.margin = det - product;
    report.pass = report.margin >= -tol;
    return report;
}

Eigen::MatrixXd random_psd(Rng& rng, int size, double trace) {
    if (size < 1) throw Error(ErrorCode::ParamError, "size must be >= 1");
    if (trace < 0) throw Error(ErrorCode::ParamError, "trace must be >= 0");
    const bool strict = std::abs(trace - 1.0) < 1e-15; // eigenvalues < 1 requested
    if (strict && size == 1)
        throw Error(ErrorCode::ParamError,
                    "a 1x1 PSD matrix with trace 1 cannot have eigenvalues strictly below 1");

    for (int attempt = 0; attempt < 64; ++attempt) {
        Eigen::VectorXd w(size);
        double total = 0.0;
        for (int i = 0; i < size; ++i) {
            w(i) = rng.uniform_pos();
            total += w(i);
        }
        w *= trace / total;
        if (strict && w.maxCoeff() >= 1.0) continue; // reject and redraw
        Eigen::MatrixXd q = random_orthogonal(rng, size);
        Eigen::MatrixXd m = q * w.asDiagonal() * q.transpose();
        return (m + m.transpose()) / 2.0; // kill rounding asymmetry
    }
    throw Error(ErrorCode::ParamError, "rejection sampling failed");
}

Eigen::MatrixXd random_psd(int size, const Rat& trace, std::uint64_t seed) {
    Rng rng(seed);
    return random_psd(rng, size, trace.to_double());
}

Eigen::MatrixXd random_orthogonal(Rng& rng, int size) {
    Eigen::MatrixXd g(size, size);
    for (int i = 0; i < size; ++i)
        for (int k = 0; k < size; ++k) g(i, k) = rng.gaussian();
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
    return qr.householderQ();
}

Eigen::MatrixXd random_complex_structure(Rng& rng, int size) {
    if (size % 2 != 0) throw Error(ErrorCode::ShapeMismatch, "complex structures need even size");
    Eigen::MatrixXd j0 = Eigen::MatrixXd::Zero(size, size);
    for (int b = 0; b < size; b += 2) {
        j0(b, b + 1) = -1.0;
        j0(b + 1, b) = 1.0;
    }
    Eigen::MatrixXd q = random_orthogonal(rng, size);
    return q * j0 * q.transpose();
}

KxwInstanceResult kxw_check_instance(int d, const Eigen::MatrixXd& h,
                                     const std::vector<Eigen::MatrixXd>& structures,
                                     const Eigen::MatrixXd& w, double tol) {
    if (d != 2 && d != 4 && d != 8) throw Error(ErrorCode::ParamError, "d must be 2, 4 or 8");
    require_symmetric(h);
    const Eigen::Index nd = h.rows();
    if (static_cast<int>(structures.size()) != d - 1)
        throw Error(ErrorCode::ShapeMismatch, "need d - 1 structure maps");
    if (w.rows() != nd || w.cols() < 1 || w.cols() > nd)
        throw Error(ErrorCode::ShapeMismatch, "subspace basis has wrong shape");
    const Eigen::Index p = w.cols();

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es_h(h);
    Eigen::VectorXd betas = es_h.eigenvalues(); // ascending

    Eigen::MatrixXd k = Eigen::MatrixXd::Identity(nd, nd) - h;
    bool summands_ok = true;
    for (const auto& jmat : structures) {
        if (jmat.rows() != nd || jmat.cols() != nd)
            throw Error(ErrorCode::ShapeMismatch, "structure map has wrong shape");
        Eigen::MatrixXd summand = -jmat * h * jmat; // PSD with h's spectrum
        k += summand;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es_s((summand + summand.transpose()) / 2.0);
        if (es_s.eigenvalues()(0) < -1e-8) summands_ok = false;
        if ((es_s.eigenvalues() - betas).cwiseAbs().maxCoeff() > 1e-8) summands_ok = false;
    }

    Eigen::MatrixXd h_w = w.transpose() * h * w;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es_hw((h_w + h_w.transpose()) / 2.0);
    Eigen::VectorXd lambdas = es_hw.eigenvalues().reverse(); // descending

    Eigen::MatrixXd k_w = w.transpose() * k * w;
    k_w = (k_w + k_w.transpose()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es_kw(k_w);
    double det = 1.0;
    for (int i = 0; i < p; ++i) det *= es_kw.eigenvalues()(i);

    double rhs = 1.0;
    for (int i = 0; i < p; ++i) rhs *= 1.0 - lambdas(i) + (d - 1) * betas(i);

    KxwInstanceResult result;
    result.spectra = SpectrumPair{lambdas, betas};
    result.det_kw = det;
    result.rhs_product = rhs;
    result.margin = det - rhs;
    result.det_ok = result.margin >= -tol;
    result.interlacing_holds = result.spectra.interlacing_ok();
    result.summands_psd_same_spectrum = summands_ok;
    return result;
}

KxwReport kxw_inequality_check(int d, int nd, int p, int trials, std::uint64_t seed) {
    if (nd % 2 != 0 || nd < 2 || nd > 16)
        throw Error(ErrorCode::ShapeMismatch, "nd must be even and within [2, 16]");
    if (p < 1 || p > nd) throw Error(ErrorCode::ShapeMismatch, "need 1 <= p <= nd");
    if (trials < 1) throw Error(ErrorCode::ParamError, "need at least one trial");

    KxwReport report;
    report.trials = trials;
    report.min_margin = std::numeric_limits<double>::infinity();
    for (int t = 0; t < trials; ++t) {
        Rng rng(seed ^ static_cast<std::uint64_t>(t));
        Eigen::MatrixXd h = random_psd(rng, nd, 1.0);
        std::vector<Eigen::MatrixXd> structures;
        for (int i = 0; i < d - 1; ++i) structures.push_back(random_complex_structure(rng, nd));
        Eigen::MatrixXd g(nd, p);
        for (int r = 0; r < nd; ++r)
            for (int c = 0; c < p; ++c) g(r, c) = rng.gaussian();
        Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
        Eigen::MatrixXd w = Eigen::MatrixXd(qr.householderQ()).leftCols(p);

        KxwInstanceResult r = kxw_check_instance(d, h, structures, w);
        report.min_margin = std::min(report.min_margin, r.margin);
        if (!r.pass()) {
            ++report.failures;
            if (report.first_failure.empty()) {
                report.first_failure = "trial " + std::to_string(t) +
                                       (r.det_ok ? "" : " det") +
                                       (r.interlacing_holds ? "" : " interlacing") +
                                       (r.summands_psd_same_spectrum ? "" : " summands");
            }
        }
    }
    report.pass = report.failures == 0;
    return report;
}

} // namespace jacbound
