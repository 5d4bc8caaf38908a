#pragma once

#include <string>
#include <vector>

#include "hverify/cylfunc.hpp"
#include "hverify/hpoint.hpp"
#include "hverify/kernel.hpp"

namespace hverify {

/// Member of the explicit solution family: C0 times the standard shape,
/// dilated by s and left-translated by xi0 (composition order:
/// u(xi) = C0 s^{(Q-a)/2} h(delta_s(xi0 o xi))).
/// xi0 must lie on the t-axis so the member stays cylindrical.
struct StandardSolutionParams {
    double C0 = 1.0;
    double s = 1.0;
    HPoint xi0 = HPoint(0.0, 0.0, 0.0);
};

/// The bare standard shape h(r,t) = ((1+r^2)^2 + t^2)^{-(Q-alpha)/4} as a
/// CylFunc (decay bound h <= rho^{-(Q-alpha)} holds everywhere).
CylFunc standard_shape(const KernelParams& kp);

/// The family member with its asymptotic constant u_infinity = C0 s^{-(Q-a)/2}.
FuncWithLimit standard_solution(const StandardSolutionParams& ps, const KernelParams& kp);

/// Numerical derivation of C0 from the fixed-point requirement
/// C0 = (h(zeta)/T[h^sigma](zeta))^{1/(sigma-1)}, with a constancy
/// certificate across six sample points (spread must stay within 2*cfg.tol).
struct C0Certificate {
    double C0 = 0.0;      // mean over the sample points
    double spread = 0.0;  // (max-min)/mean
    std::vector<std::pair<std::string, double>> samples;
};
C0Certificate derive_C0(const KernelParams& kp, const QuadConfig& cfg);

/// CR inversion of a cylindrical function:
/// f_inv(r,t) = rho^{-(Q-a)} f(r/rho^2, -t/rho^4), rho = (r^4+t^2)^{1/4}.
CylFunc cr_invert_function(const CylFunc& f, const KernelParams& kp);

/// f_s(r,t) = s^{(Q-a)/2} f(s r, s^2 t).
CylFunc scale_function(double s, const CylFunc& f, const KernelParams& kp);

/// f_lambda(r,t) = f(r, 2 lambda - t).
CylFunc reflect_function(double lambda, const CylFunc& f);

/// CR inversion with respect to the CC sphere of radius s:
/// f_inv(r,t) = (s^{Q-a}/rho^{Q-a}) f(s^2 r/rho^2, -s^4 t/rho^4).
/// Coincides with cr_invert_function at s = 1.
CylFunc sphere_invert_function(double s, const CylFunc& f, const KernelParams& kp);

/// Scale s with s^{(Q-a)/2} = f.u_infinity / target, so that
/// scale_function(s, f) has asymptotic constant target_uinf.
double translate_limit_params(const FuncWithLimit& f, double target_uinf,
                              const KernelParams& kp);

/// Richardson estimate of lim rho^{Q-a} f along the r- and t-axis rays.
struct UInfinityEstimate {
    double value = 0.0;
    double ray_disagreement = 0.0;  // relative spread between the two rays
};
UInfinityEstimate measure_u_infinity(const CylFunc& f, const KernelParams& kp,
                                     double rho = 1e3);

}  // namespace hverify
