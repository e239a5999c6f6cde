#pragma once

#include <cmath>
#include <cstdint>

namespace jacbound {

/// Deterministic, platform-independent generator (splitmix64). The library
/// avoids std::uniform_real_distribution so that identical seeds give
/// byte-identical results everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform in (0, 1).
    double uniform_pos() {
        double u = uniform();
        while (u <= 0.0) u = uniform();
        return u;
    }

    /// Standard normal via Box-Muller.
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u = uniform_pos();
        double v = uniform();
        double r = std::sqrt(-2.0 * std::log(u));
        double theta = 2.0 * 3.141592653589793238462643 * v;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

} // namespace jacbound
