#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <string>

namespace hverify {

/// Cylindrical function handle f(r, t), r >= 0, with decay metadata used by
/// the quadrature tail bounds: |f(xi)| <= C_decay * rho^{-decay_exponent}
/// for gauge radius rho >= R_decay.
struct CylFunc {
    std::function<double(double, double)> eval;
    double decay_exponent = 0.0;
    double C_decay = 1.0;
    double R_decay = 1.0;

    double operator()(double r, double t) const { return eval(r, t); }
};

/// Builds a CylFunc and spot-checks the decay bound on a coarse grid of
/// rays with rho in [R_decay, 10 R_decay]. Throws if the bound fails.
CylFunc make_cylfunc(std::function<double(double, double)> eval,
                     double decay_exponent, double C_decay, double R_decay);

/// A cylindrical function together with its asymptotic constant
/// u_infinity = lim rho^{Q-alpha} f.
struct FuncWithLimit {
    CylFunc f;
    double u_infinity = 0.0;
};

/// Half space Sigma_lambda = { (z,t) : t >= lambda }.
struct HalfSpace {
    double lambda = 0.0;
};

/// Knobs of the singular quadrature engine.
struct QuadConfig {
    double delta = 0.3;       // singularity split radius (gauge units)
    double R_trunc = 80.0;    // outer truncation radius (gauge units)
    int nodes_rho = 20;       // Gauss nodes per radial panel
    int nodes_angle = 24;     // Gauss nodes in phi; psi trapezoid base = 2x
    int nodes_outer = 20;     // Gauss nodes per panel in outer 2D regions
    std::uint64_t mc_samples = 2'000'000;
    std::uint64_t seed = 42;
    double tol = 1e-3;        // target relative tolerance

    void validate() const;
};

/// gauge norm of a cylindrical point, (r^4 + t^2)^{1/4}.
inline double gauge2(double r, double t) {
    double z2 = r * r;
    return std::sqrt(std::hypot(z2, t));
}

}  // namespace hverify
