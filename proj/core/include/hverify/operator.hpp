#pragma once

#include <cstdint>

#include "hverify/cylfunc.hpp"
#include "hverify/hpoint.hpp"
#include "hverify/kernel.hpp"

namespace hverify {

/// Quadrature value together with the analytic bound on the truncated tail.
/// The tail bound is part of the error budget and is never silently dropped;
/// the wrappers below throw when it exceeds half the target tolerance.
struct OperatorResult {
    double value = 0.0;
    double tail_bound = 0.0;
};

/// T[f](zeta) = int_{H^1} G_alpha(zeta, xi) f(xi)^p dxi.
///
/// The singularity at xi = zeta is absorbed exactly by zeta-centered
/// Heisenberg-polar coordinates (radial weight rho^{alpha-1}); the far field
/// uses the same parametrization on geometric panels up to cfg.R_trunc, and
/// the remainder is bounded analytically from the decay metadata.
double apply_operator(const KernelParams& kp, const CylFunc& f, const HPoint& zeta,
                      const QuadConfig& cfg);
OperatorResult apply_operator_detailed(const KernelParams& kp, const CylFunc& f,
                                       const HPoint& zeta, const QuadConfig& cfg);

/// Same operator restricted to the gauge ball B(0, s_ball). The evaluation
/// point may lie inside or outside the ball but not within 2% of its
/// boundary (gauge margin), where the rim quadrature degenerates.
double apply_operator_ball(const KernelParams& kp, const CylFunc& f, double s_ball,
                           const HPoint& zeta, const QuadConfig& cfg);

/// Moving-plane difference operator over Sigma_lambda = { t >= lambda }:
///   int_{Sigma} (G(zeta, xi) - G(zeta_lambda, xi)) (f(xi)^p - f_lambda(xi)^p) dxi
/// with zeta_lambda the H-reflection of zeta and f_lambda(r,t) = f(r, 2l-t).
/// Supported for zeta on the t-axis; both kernels are evaluated inside one
/// angular reduction there.
double apply_operator_halfspace(const KernelParams& kp, const CylFunc& f,
                                const HalfSpace& hs, const HPoint& zeta,
                                const QuadConfig& cfg);

/// ||f||_p over H^1, cylindrical reduction with analytic tail bound.
/// Requires decay_exponent * p_exp > Q.
double lp_norm(const CylFunc& f, double p_exp, const QuadConfig& cfg);

struct MCResult {
    double value = 0.0;
    double std_error = 0.0;
    std::uint64_t samples = 0;
};

/// Monte-Carlo estimate of the HLS double integral
///   I = iint f(xi) g(eta) |xi^{-1} eta|^{-lambda} dxi deta
/// with importance sampling: xi from a heavy-tailed gauge-radial proposal,
/// eta = xi o eta' with the kernel singularity absorbed into the radial law
/// of eta'. Deterministic for a fixed cfg.seed.
MCResult hls_double_integral(const HLSParams& hp, const CylFunc& f, const CylFunc& g,
                             const QuadConfig& cfg);

/// Measure of the gauge ball B(0, R) computed through the same gauge-polar
/// parametrization used by the quadratures (Jacobian check hook).
double gauge_ball_measure(double R, const QuadConfig& cfg);

}  // namespace hverify
