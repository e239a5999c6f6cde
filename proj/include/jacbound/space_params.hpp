#pragma once

#include <string>

#include "jacbound/error.hpp"

namespace jacbound {

/// The discrete data (d, n, j) of a K-hyperbolic space H^n_K and a
/// codimension j, with p = dn - j cached. d = dim_R K in {1, 2, 4, 8},
/// rank n >= 2, j >= 0, and p >= 1.
struct SpaceParams {
    int d = 1;
    int n = 2;
    int j = 0;
    int p = 2; // d*n - j

    SpaceParams() = default;
    SpaceParams(int d_, int n_, int j_) : d(d_), n(n_), j(j_), p(d_ * n_ - j_) {
        if (d != 1 && d != 2 && d != 4 && d != 8)
            throw Error(ErrorCode::ParamError, "d must be one of 1, 2, 4, 8; got " + std::to_string(d));
        if (n < 2) throw Error(ErrorCode::ParamError, "rank n must be >= 2; got " + std::to_string(n));
        if (n > 100000000) throw Error(ErrorCode::ParamError, "rank n out of range");
        if (j < 0) throw Error(ErrorCode::ParamError, "codimension j must be >= 0; got " + std::to_string(j));
        if (p < 1) throw Error(ErrorCode::ParamError, "p = dn - j must be >= 1");
    }

    /// The Jacobian estimate requires j <= min(dn - 3, d).
    bool jacobian_estimate_applicable() const { return j <= d && j <= d * n - 3; }

    /// The five explicitly tabulated n = 2 cases:
    /// (d, j) in {(2,1), (4,1), (8,1), (8,2), (8,3)}.
    bool exceptional_pair() const {
        if (n != 2) return false;
        if (j == 1 && (d == 2 || d == 4 || d == 8)) return true;
        return d == 8 && (j == 2 || j == 3);
    }

    std::string str() const {
        return "(d=" + std::to_string(d) + ", n=" + std::to_string(n) + ", j=" + std::to_string(j) + ")";
    }
};

} // namespace jacbound
