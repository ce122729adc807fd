#pragma once

#include <cstdint>

#include "bmoa/analytic.hpp"

namespace bmoa {

/// Small splitmix64-based generator. Distributions are written out by hand so
/// that seeded streams are identical across platforms and library versions.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0,1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    int uniform_int(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    /// Uniform on the square [-s,s]^2.
    cplx complex_box(double s) { return cplx(uniform(-s, s), uniform(-s, s)); }

    /// Uniform on the disc of radius s (area measure).
    cplx complex_disc(double s) {
        const double r = s * std::sqrt(uniform());
        const double t = uniform(0.0, 6.283185307179586476925286766559);
        return cplx(r * std::cos(t), r * std::sin(t));
    }

  private:
    std::uint64_t state_;
};

}  // namespace bmoa
