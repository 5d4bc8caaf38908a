#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hverify/cylfunc.hpp"
#include "hverify/fd.hpp"
#include "hverify/hpoint.hpp"
#include "hverify/kernel.hpp"
#include "hverify/solutions.hpp"

namespace hverify {

struct VerifySample {
    std::string input;
    double lhs = 0.0;
    double rhs = 0.0;
    double residual = 0.0;
};

struct VerifyReport {
    std::string check_name;
    std::map<std::string, std::string> params;
    std::vector<VerifySample> samples;  // worst offenders for large sweeps
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::int64_t runtime_ms = 0;
};

/// |lhs-rhs| / max(|lhs|+|rhs|, floor); symmetric cases with both sides
/// below the floor count as zero residual.
double relative_residual(double lhs, double rhs, double floor_abs = 1e-10);

/// Group axioms and norm identities, `cases` random samples per dimension:
/// associativity, identity/inverse, norm homogeneity, left-invariant
/// distance, rotation invariance, reflection norm mirroring.
VerifyReport check_group_axioms(const std::vector<std::size_t>& ns,
                                std::size_t cases, std::uint64_t seed,
                                double tolerance = 1e-11);

/// The CR inversion identity |xi||xihat^{-1}(-eta)| = |eta||etahat^{-1} xi|
/// over random pairs with log-uniform gauge radii in [1e-2, 1e2].
VerifyReport check_heisenberg_identity(const std::vector<std::size_t>& ns,
                                       std::size_t cases, std::uint64_t seed,
                                       double tolerance = 1e-11);

/// Point-level CR inversion properties: |xihat| = 1/|xi| and double
/// inversion = (-z, t).
VerifyReport check_cr_inversion_points(const std::vector<std::size_t>& ns,
                                       std::size_t cases, std::uint64_t seed,
                                       double tolerance = 1e-12);

/// Closed-form grid identity u0 = u0-bar (inversion symmetry of the
/// standard solution), no quadrature involved.
VerifyReport check_u0_inversion_grid(const KernelParams& kp, double tolerance = 1e-12);

/// Kernel invariances under simultaneous left translation and dilation of
/// both arguments (random sweeps).
VerifyReport check_kernel_invariances(const KernelParams& kp, std::size_t cases,
                                      std::uint64_t seed, double tolerance = 1e-12);

/// Fixed-point residual r(z) = |u(z) - T[u^p](z)| / u(z) at the given points.
VerifyReport check_fixed_point(const KernelParams& kp, const FuncWithLimit& u,
                               const std::vector<HPoint>& points,
                               const QuadConfig& cfg);

/// Fixed-point residuals of the dilated family members (u)_s, Lemma-level
/// scaling invariance.
VerifyReport check_scaling_invariance(const KernelParams& kp, const FuncWithLimit& u,
                                      const std::vector<double>& scales,
                                      const std::vector<HPoint>& points,
                                      const QuadConfig& cfg);

/// Moving-plane difference identity: u(z)-u_l(z) against the half-space
/// integral, normalized by |u(z)| + |u_l(z)|.
VerifyReport check_reflection_difference(const KernelParams& kp, const CylFunc& u,
                                         double lambda,
                                         const std::vector<HPoint>& points,
                                         const QuadConfig& cfg);

/// Split identities over the gauge ball B(0,s) and its inverted complement,
/// both orderings (roles of u and its sphere inversion swapped).
VerifyReport check_split_identity(const KernelParams& kp, const FuncWithLimit& u,
                                  double s_ball, const std::vector<HPoint>& points,
                                  const QuadConfig& cfg);

/// Closed-form inversion symmetry with s^{Q-a} = u_inf/u(0): the identity
/// u(sr, s^2 t) = rho^{-(Q-a)} u(sr/rho^2, s^2 t/rho^4) on a grid.
VerifyReport check_inversion_symmetry(const KernelParams& kp, const FuncWithLimit& u,
                                      double tolerance = 1e-9);

/// Order of the FD sub-Laplacian: log-log slope of the residual on a test
/// function with closed-form image; passes iff the slope lies in [1.9, 2.1].
VerifyReport check_fd_convergence(const FDConfig& fd_base);

/// Constancy of -Delta_H u0 / u0^3 across random points (alpha = 2) and the
/// constant bookkeeping against the fractional fundamental-solution constant.
VerifyReport check_fd_ratio(const KernelParams& kp, double C0,
                            std::uint64_t seed, const FDConfig& fd,
                            double tol_constancy = 1e-5,
                            double tol_bookkeeping = 1e-3);

/// |Delta_H u - G u| at matched points for cylindrical u (s = 1 Grushin
/// correspondence), absolute tolerance.
VerifyReport check_grushin_correspondence(const CylFunc& u,
                                          const std::vector<HPoint>& points,
                                          const FDConfig& fd,
                                          double tolerance = 1e-6);

/// HLS sharpness probe: extremizer ratio to the sharp constant (MC with
/// error bars), invariance under translation-dilation of the extremizer,
/// and strict sub-unity for non-extremizers.
VerifyReport check_hls(const HLSParams& hp, const QuadConfig& cfg);

/// Picard iteration probe v_{k+1} = T[v_k^p] on an interpolation grid.
struct PicardGrid {
    double R_grid = 6.0;
    double T_grid = 18.0;
    int nr = 14;
    int nt = 19;
};
struct PicardStep {
    int iteration = 0;
    double max_residual = 0.0;  // max over sample points of |T[v]-v|/|v|
    double sup_sample = 0.0;    // max grid value of the new iterate
};
struct PicardTrace {
    std::vector<PicardStep> steps;
    bool overflow = false;
    PicardGrid grid;
};
PicardTrace picard_probe(const KernelParams& kp, const CylFunc& u_init,
                         int iterations, const std::vector<HPoint>& points,
                         const QuadConfig& cfg, const PicardGrid& grid = {});

/// Report adapter; when assert_tolerance > 0 the trace passes iff every
/// iteration residual stays below it (used with u_init = u0).
VerifyReport picard_report(const PicardTrace& trace, double assert_tolerance);

}  // namespace hverify
