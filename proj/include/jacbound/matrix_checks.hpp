#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "jacbound/rat.hpp"
#include "jacbound/rng.hpp"

namespace jacbound {

/// Eigenvalue data for one compression: lambdas are the descending
/// eigenvalues of the compressed operator (length p), betas the ascending
/// eigenvalues of the ambient operator (length nd).
struct SpectrumPair {
    Eigen::VectorXd lambdas;
    Eigen::VectorXd betas;

    /// The min-max constraint lambda_i <= beta_{nd-i+1}, within tol.
    bool interlacing_ok(double tol = 1e-10) const;
};

struct FiedlerReport {
    bool pass = false;
    double det_of_sum = 0.0;
    double eigenvalue_product = 0.0; // prod_i sum_j alpha_{i,j}
    double margin = 0.0;             // det - product
};

/// Checks det(sum A_j) >= prod_i (sum_j alpha_{i,j}) for PSD symmetric
/// matrices with ascending spectra alpha_{., j}. Matrices must be square,
/// of one common size <= 12 (ShapeMismatch) and PSD within -1e-10 (NotPSD;
/// slightly negative eigenvalues are clamped to 0).
FiedlerReport fiedler_check(const std::vector<Eigen::MatrixXd>& matrices, double tol = 1e-9);

/// Deterministic random symmetric PSD matrix with the given trace, built
/// as Q diag(w) Q^T from a seeded orthogonal Q and positive weights. When
/// trace = 1 and size >= 2 the eigenvalues are strictly below 1 (rejection
/// sampled); size 1 with trace 1 cannot satisfy that and is rejected.
Eigen::MatrixXd random_psd(int size, const Rat& trace, std::uint64_t seed);
Eigen::MatrixXd random_psd(Rng& rng, int size, double trace);

/// Haar-ish random orthogonal matrix (QR of a Gaussian matrix).
Eigen::MatrixXd random_orthogonal(Rng& rng, int size);

/// Random orthogonal complex structure J (J^2 = -I) obtained by
/// conjugating the standard block structure by a random orthogonal matrix.
/// Needs even size.
Eigen::MatrixXd random_complex_structure(Rng& rng, int size);

struct KxwInstanceResult {
    bool det_ok = false;
    bool interlacing_holds = false;
    bool summands_psd_same_spectrum = false;
    double det_kw = 0.0;
    double rhs_product = 0.0;
    double margin = 0.0;
    SpectrumPair spectra;
    bool pass() const { return det_ok && interlacing_holds && summands_psd_same_spectrum; }
};

/// One instance of the compression inequality: with k = I - h - sum J_i h J_i,
/// checks det(W^T k W) >= prod_{i=1}^p (1 - lambda_i + (d-1) beta_i), the
/// interlacing constraint, and that each -J_i h J_i is PSD with h's spectrum.
/// W must have orthonormal columns; structures.size() == d - 1.
KxwInstanceResult kxw_check_instance(int d, const Eigen::MatrixXd& h,
                                     const std::vector<Eigen::MatrixXd>& structures,
                                     const Eigen::MatrixXd& w, double tol = 1e-9);

struct KxwReport {
    int trials = 0;
    int failures = 0;
    double min_margin = 0.0;
    std::string first_failure; // empty when pass
    bool pass = false;
};

/// Runs seeded random trials of kxw_check_instance at dimension nd (even,
/// <= 16) with a p-dimensional random subspace. Trial t uses seed XOR t, so
/// results are independent of execution order.
KxwReport kxw_inequality_check(int d, int nd, int p, int trials, std::uint64_t seed);

} // namespace jacbound
