#pragma once

#include <cstddef>
#include <utility>

#include "hverify/hpoint.hpp"

namespace hverify {

/// Parameters of the integral equation u = G_alpha * u^p on H^n.
struct KernelParams {
    std::size_t n = 1;
    int Q = 4;          // 2n + 2
    double alpha = 2.0; // 0 < alpha < Q
    double p = 3.0;     // 1 < p <= sigma
    double sigma = 3.0; // (Q + alpha)/(Q - alpha), always recomputed

    double kernel_exponent() const { return static_cast<double>(Q) - alpha; }
};

/// Validates and builds KernelParams; sigma is computed, never stored
/// independently of (Q, alpha).
KernelParams make_kernel_params(std::size_t n, double alpha, double p);

/// Parameters of the HLS inequality statement.
struct HLSParams {
    std::size_t n = 1;
    int Q = 4;
    double lambda = 2.0; // 0 < lambda < Q
    double p_hls = 4.0 / 3.0; // 2Q/(2Q - lambda)
};

HLSParams make_hls_params(std::size_t n, double lambda);

/// Riesz-type kernel G_alpha(zeta, xi) = |zeta^{-1} xi|^{-(Q-alpha)}.
/// Throws std::domain_error on coincident points.
double green_kernel(const KernelParams& kp, const HPoint& zeta, const HPoint& xi);

/// Returns the pair (G(delta_s zeta, delta_s xi), s^{-(Q-alpha)} G(zeta, xi))
/// for the caller to compare.
std::pair<double, double> kernel_scaling(const KernelParams& kp, double s,
                                         const HPoint& zeta, const HPoint& xi);

/// Angularly reduced kernel for cylindrical integrands (n = 1):
///   K(rt, tt, r, t) = int_0^{2pi} [ (r^2+rt^2-2 r rt cos psi)^2
///                                 + (t - tt + 2 r rt sin psi)^2 ]^{-(Q-a)/4} dpsi
/// evaluated by the periodic trapezoid rule, node count doubled from
/// base_nodes until successive values agree to rel_tol.
/// Throws std::domain_error on (near-)coincident singular input.
double reduced_kernel_cyl(const KernelParams& kp, double r_tilde, double t_tilde,
                          double r, double t, int base_nodes = 32,
                          double rel_tol = 1e-10);

/// Difference of two reduced kernels sharing the axis distance r_tilde but
/// with different heights, accumulated inside one psi-integral:
///   int_0^{2pi} (A_1(psi)^{-b/4} - A_2(psi)^{-b/4}) dpsi.
double reduced_kernel_cyl_diff(const KernelParams& kp, double r_tilde,
                               double t_tilde_1, double t_tilde_2, double r,
                               double t, int base_nodes = 32,
                               double rel_tol = 1e-10);

/// Fundamental-solution constant of the conformal fractional sub-Laplacian:
///   2^{n+1-3a/2} Gamma((2n+2-a)/4)^2 / (pi^{n+1} Gamma(a/2)).
double frac_fundamental_constant(std::size_t n, double alpha);

/// Sharp HLS constant
///   (pi^{n+1}/(2^{n-1} n!))^{lambda/Q} n! Gamma((Q-2)/2) / Gamma((2Q-lambda)/4)^2.
double hls_constant(std::size_t n, double lambda);

/// HLS extremizer H(z,t) = ((1+|z|^2)^2 + t^2)^{-(2Q-lambda)/4}.
double hls_extremizer(std::size_t n, double lambda, const HPoint& xi);

/// Cylindrical form of the extremizer, H(r,t).
double hls_extremizer_cyl(std::size_t n, double lambda, double r, double t);

}  // namespace hverify
