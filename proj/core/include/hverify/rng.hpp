#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace hverify {

/// Deterministic RNG wrapper.
///
/// mt19937_64 is fully specified by the standard, and all variate
/// transformations below are hand-rolled, so identical seeds produce
/// identical streams on every platform (std::uniform_real_distribution
/// makes no such promise).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    /// Log-uniform on [a, b], a, b > 0.
    double log_uniform(double a, double b) {
        return a * std::exp(uniform() * std::log(b / a));
    }

    /// Standard normal via Box-Muller (pairs cached).
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform(), u2 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925287 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

private:
    std::mt19937_64 eng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace hverify
