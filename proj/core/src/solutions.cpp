#include "hverify/solutions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hverify/operator.hpp"

namespace hverify {

namespace {

double shape_value(double Qa, double r, double t) {
    const double a = 1.0 + r * r;
    return std::pow(a * a + t * t, -0.25 * Qa);
}

// sup of f over the closed unit gauge ball, sampled on polar rays; used for
// the decay coefficient of inverted functions.
double sup_on_unit_ball(const CylFunc& f) {
    double m = 0.0;
    for (int iq = 1; iq <= 8; ++iq) {
        const double q = iq / 8.0;
        for (int ip = 0; ip <= 12; ++ip) {
            const double phi = 3.14159265358979323846 * ip / 12.0;
            const double r = q * std::sqrt(std::sin(phi));
            const double t = q * q * std::cos(phi);
            m = std::max(m, std::abs(f.eval(r, t)));
        }
    }
    return m;
}

}  // namespace

CylFunc standard_shape(const KernelParams& kp) {
    const double Qa = kp.kernel_exponent();
    CylFunc h;
    h.eval = [Qa](double r, double t) { return shape_value(Qa, r, t); };
    h.decay_exponent = Qa;
    h.C_decay = 1.0;
    h.R_decay = 0.5;
    return h;
}

FuncWithLimit standard_solution(const StandardSolutionParams& ps,
                                const KernelParams& kp) {
    if (!(ps.C0 > 0.0) || !(ps.s > 0.0))
        throw std::invalid_argument("standard_solution: C0 and s must be > 0");
    if (ps.xi0.n() != kp.n)
        throw std::invalid_argument("standard_solution: xi0 dimension mismatch");
    double z0 = 0.0;
    for (std::size_t j = 0; j < ps.xi0.n(); ++j)
        z0 += ps.xi0.x[j] * ps.xi0.x[j] + ps.xi0.y[j] * ps.xi0.y[j];
    if (z0 > 0.0)
        throw std::invalid_argument(
            "standard_solution: xi0 must lie on the t-axis (off-axis translation "
            "breaks cylindrical symmetry)");

    const double Qa = kp.kernel_exponent();
    const double C0 = ps.C0, s = ps.s, t0 = ps.xi0.t;
    const double amp = C0 * std::pow(s, 0.5 * Qa);

    FuncWithLimit u;
    u.f.eval = [Qa, amp, s, t0](double r, double t) {
        // delta_s(xi0 o xi) = (s r, s^2 (t + t0)) for xi0 = (0, t0)
        return amp * shape_value(Qa, s * r, s * s * (t + t0));
    };
    u.f.decay_exponent = Qa;
    const double rho0 = std::sqrt(std::abs(t0));
    if (rho0 < 1e-12) {
        u.f.C_decay = C0 * std::pow(s, -0.5 * Qa);
        u.f.R_decay = 0.5;
    } else {
        u.f.C_decay = C0 * std::pow(s, -0.5 * Qa) * std::pow(2.0, Qa);
        u.f.R_decay = std::max(2.0 * rho0, 0.5);
    }
    u.u_infinity = C0 * std::pow(s, -0.5 * Qa);
    return u;
}

C0Certificate derive_C0(const KernelParams& kp, const QuadConfig& cfg) {
    if (kp.n != 1) throw std::invalid_argument("derive_C0: only n = 1 supported");
    if (std::abs(kp.p - kp.sigma) > 1e-9)
        throw std::invalid_argument("derive_C0: requires the critical exponent p = sigma");
    const CylFunc h = standard_shape(kp);
    const double expo = 1.0 / (kp.sigma - 1.0);

    struct Pt {
        double r, t;
        const char* name;
    };
    const Pt pts[] = {{0.0, 0.0, "(0,0)"},   {0.0, 1.0, "(0,1)"},
                      {0.0, -1.0, "(0,-1)"}, {1.0, 0.0, "(1,0)"},
                      {1.0, 1.0, "(1,1)"},   {0.5, 0.5, "(0.5,0.5)"}};

    C0Certificate cert;
    double lo = 1e300, hi = -1e300, sum = 0.0;
    for (const Pt& pt : pts) {
        const HPoint zeta(pt.r, 0.0, pt.t);
        const double Tz = apply_operator(kp, h, zeta, cfg);
        const double c = std::pow(h.eval(pt.r, pt.t) / Tz, expo);
        cert.samples.emplace_back(pt.name, c);
        lo = std::min(lo, c);
        hi = std::max(hi, c);
        sum += c;
    }
    cert.C0 = sum / static_cast<double>(std::size(pts));
    cert.spread = (hi - lo) / cert.C0;
    if (cert.spread > 2.0 * cfg.tol)
        throw std::runtime_error(
            "derive_C0: constancy certificate failed (quadrature inconsistency "
            "across sample points)");
    return cert;
}

CylFunc cr_invert_function(const CylFunc& f, const KernelParams& kp) {
    const double Qa = kp.kernel_exponent();
    auto base = f.eval;
    CylFunc out;
    out.eval = [Qa, base](double r, double t) {
        const double rho = gauge2(r, t);
        if (rho < 1e-150)
            throw std::domain_error("cr_invert_function: evaluation at the origin");
        const double rho2 = rho * rho;
        const double rho4 = rho2 * rho2;
        return std::pow(rho, -Qa) * base(r / rho2, -t / rho4);
    };
    const double m = sup_on_unit_ball(f);
    out.decay_exponent = Qa;
    out.C_decay = std::max(1.25 * m, 1e-300);
    out.R_decay = 1.0;
    return out;
}

CylFunc scale_function(double s, const CylFunc& f, const KernelParams& kp) {
    if (!(s > 0.0)) throw std::invalid_argument("scale_function: s must be > 0");
    const double Qa = kp.kernel_exponent();
    const double amp = std::pow(s, 0.5 * Qa);
    auto base = f.eval;
    CylFunc out;
    out.eval = [amp, s, base](double r, double t) {
        return amp * base(s * r, s * s * t);
    };
    out.decay_exponent = f.decay_exponent;
    out.C_decay = f.C_decay * amp * std::pow(s, -f.decay_exponent);
    out.R_decay = f.R_decay / s;
    return out;
}

CylFunc reflect_function(double lambda, const CylFunc& f) {
    auto base = f.eval;
    CylFunc out;
    out.eval = [lambda, base](double r, double t) {
        return base(r, 2.0 * lambda - t);
    };
    const double shift = std::sqrt(2.0 * std::abs(lambda));
    out.decay_exponent = f.decay_exponent;
    if (shift < 1e-12) {
        out.C_decay = f.C_decay;
        out.R_decay = f.R_decay;
    } else {
        out.C_decay = f.C_decay * std::pow(2.0, f.decay_exponent);
        out.R_decay = std::max(2.0 * shift, 2.0 * f.R_decay);
    }
    return out;
}

CylFunc sphere_invert_function(double s, const CylFunc& f, const KernelParams& kp) {
    if (!(s > 0.0))
        throw std::invalid_argument("sphere_invert_function: s must be > 0");
    const double Qa = kp.kernel_exponent();
    const double s2 = s * s, s4 = s2 * s2;
    const double amp = std::pow(s, Qa);
    auto base = f.eval;
    CylFunc out;
    out.eval = [Qa, amp, s2, s4, base](double r, double t) {
        const double rho = gauge2(r, t);
        if (rho < 1e-150)
            throw std::domain_error("sphere_invert_function: evaluation at the origin");
        const double rho2 = rho * rho;
        const double rho4 = rho2 * rho2;
        return amp * std::pow(rho, -Qa) * base(s2 * r / rho2, -s4 * t / rho4);
    };
    const double m = sup_on_unit_ball(f);
    out.decay_exponent = Qa;
    out.C_decay = std::max(1.25 * m * amp, 1e-300);
    out.R_decay = std::max(s2, 1.0);
    return out;
}

double translate_limit_params(const FuncWithLimit& f, double target_uinf,
                              const KernelParams& kp) {
    if (!(f.u_infinity > 0.0))
        throw std::invalid_argument("translate_limit_params: u_infinity must be > 0");
    if (!(target_uinf > 0.0))
        throw std::invalid_argument("translate_limit_params: target must be > 0");
    // scaling by s divides the asymptotic constant by s^{(Q-a)/2}
    return std::pow(f.u_infinity / target_uinf, 2.0 / kp.kernel_exponent());
}

UInfinityEstimate measure_u_infinity(const CylFunc& f, const KernelParams& kp,
                                     double rho) {
    const double Qa = kp.kernel_exponent();
    auto along_r = [&](double q) { return std::pow(q, Qa) * f.eval(q, 0.0); };
    auto along_t = [&](double q) { return std::pow(q, Qa) * f.eval(0.0, q * q); };
    // two-point Richardson for O(rho^{-2}) corrections
    auto richardson = [](double g1, double g2) { return (4.0 * g2 - g1) / 3.0; };
    const double vr = richardson(along_r(rho), along_r(2.0 * rho));
    const double vt = richardson(along_t(rho), along_t(2.0 * rho));
    UInfinityEstimate e;
    e.value = 0.5 * (vr + vt);
    e.ray_disagreement =
        std::abs(vr - vt) / std::max({std::abs(vr), std::abs(vt), 1e-300});
    return e;
}

}  // namespace hverify
