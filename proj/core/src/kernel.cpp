#include "hverify/kernel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hverify {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kTwoPi = 2.0 * kPi;

double factorial(std::size_t n) {
    double f = 1.0;
    for (std::size_t k = 2; k <= n; ++k) f *= static_cast<double>(k);
    return f;
}

// Integrand of the reduced kernel at angle psi.
inline double angular_term(double r2_sum, double two_rr, double dt, double beta4,
                           double c, double s) {
    const double a = r2_sum - two_rr * c;
    const double b = dt + two_rr * s;
    return std::pow(a * a + b * b, -beta4);
}

double reduced_kernel_impl(double beta, double r_tilde, double t_tilde, double r,
                           double t, int base_nodes, double rel_tol) {
    const double r2_sum = r * r + r_tilde * r_tilde;
    const double two_rr = 2.0 * r * r_tilde;
    const double dt = t - t_tilde;
    const double beta4 = 0.25 * beta;

    const double gauge4_min_guess = std::pow(r2_sum - two_rr, 2) + dt * dt;
    if (gauge4_min_guess <= 0.0)
        throw std::domain_error("reduced_kernel_cyl: coincident singular input");

    if (two_rr == 0.0) {
        // Center or field point on the t-axis: integrand constant in psi.
        return kTwoPi * std::pow(r2_sum * r2_sum + dt * dt, -beta4);
    }

    int n = base_nodes < 8 ? 8 : base_nodes;
    double sum = 0.0;
    for (int j = 0; j < n; ++j) {
        const double psi = kTwoPi * j / n;
        sum += angular_term(r2_sum, two_rr, dt, beta4, std::cos(psi), std::sin(psi));
    }
    double value = kTwoPi * sum / n;

    const int cap = 1 << 16;
    while (n < cap) {
        // Refine with the midpoints only; trapezoid values combine exactly.
        double odd = 0.0;
        for (int j = 0; j < n; ++j) {
            const double psi = kTwoPi * (j + 0.5) / n;
            odd += angular_term(r2_sum, two_rr, dt, beta4, std::cos(psi), std::sin(psi));
        }
        const double refined = 0.5 * value + kPi * odd / n;
        n *= 2;
        const double change = std::abs(refined - value);
        value = refined;
        if (change <= rel_tol * std::abs(refined) + 1e-300) return value;
    }
    throw std::runtime_error(
        "reduced_kernel_cyl: trapezoid rule did not converge; field circle too "
        "close to the kernel singularity");
}

}  // namespace

KernelParams make_kernel_params(std::size_t n, double alpha, double p) {
    if (n == 0) throw std::invalid_argument("KernelParams: n must be >= 1");
    KernelParams kp;
    kp.n = n;
    kp.Q = 2 * static_cast<int>(n) + 2;
    if (!(alpha > 0.0) || !(alpha < static_cast<double>(kp.Q)))
        throw std::invalid_argument("KernelParams: alpha must lie in (0, Q)");
    kp.alpha = alpha;
    kp.sigma = (kp.Q + alpha) / (kp.Q - alpha);
    if (!(p > 1.0) || p > kp.sigma * (1.0 + 1e-12))
        throw std::invalid_argument("KernelParams: p must lie in (1, sigma]");
    kp.p = p;
    return kp;
}

HLSParams make_hls_params(std::size_t n, double lambda) {
    if (n == 0) throw std::invalid_argument("HLSParams: n must be >= 1");
    HLSParams hp;
    hp.n = n;
    hp.Q = 2 * static_cast<int>(n) + 2;
    if (!(lambda > 0.0) || !(lambda < static_cast<double>(hp.Q)))
        throw std::invalid_argument("HLSParams: lambda must lie in (0, Q)");
    hp.lambda = lambda;
    hp.p_hls = 2.0 * hp.Q / (2.0 * hp.Q - lambda);
    return hp;
}

double green_kernel(const KernelParams& kp, const HPoint& zeta, const HPoint& xi) {
    const double d = distance(zeta, xi);
    if (d == 0.0)
        throw std::domain_error("green_kernel: kernel singularity at zeta = xi");
    return std::pow(d, -kp.kernel_exponent());
}

std::pair<double, double> kernel_scaling(const KernelParams& kp, double s,
                                         const HPoint& zeta, const HPoint& xi) {
    if (!(s > 0.0)) throw std::invalid_argument("kernel_scaling: s must be > 0");
    const double lhs = green_kernel(kp, dilate(s, zeta), dilate(s, xi));
    const double rhs = std::pow(s, -kp.kernel_exponent()) * green_kernel(kp, zeta, xi);
    return {lhs, rhs};
}

double reduced_kernel_cyl(const KernelParams& kp, double r_tilde, double t_tilde,
                          double r, double t, int base_nodes, double rel_tol) {
    if (kp.n != 1)
        throw std::invalid_argument("reduced_kernel_cyl: only n = 1 supported");
    return reduced_kernel_impl(kp.kernel_exponent(), r_tilde, t_tilde, r, t,
                               base_nodes, rel_tol);
}

double reduced_kernel_cyl_diff(const KernelParams& kp, double r_tilde,
                               double t_tilde_1, double t_tilde_2, double r,
                               double t, int base_nodes, double rel_tol) {
    if (kp.n != 1)
        throw std::invalid_argument("reduced_kernel_cyl_diff: only n = 1 supported");
    const double beta = kp.kernel_exponent();
    const double r2_sum = r * r + r_tilde * r_tilde;
    const double two_rr = 2.0 * r * r_tilde;
    const double beta4 = 0.25 * beta;
    const double dt1 = t - t_tilde_1;
    const double dt2 = t - t_tilde_2;

    if (two_rr == 0.0) {
        return kTwoPi * (std::pow(r2_sum * r2_sum + dt1 * dt1, -beta4) -
                         std::pow(r2_sum * r2_sum + dt2 * dt2, -beta4));
    }

    auto term = [&](double psi) {
        const double c = std::cos(psi), s = std::sin(psi);
        return angular_term(r2_sum, two_rr, dt1, beta4, c, s) -
               angular_term(r2_sum, two_rr, dt2, beta4, c, s);
    };

    int n = base_nodes < 8 ? 8 : base_nodes;
    double sum = 0.0;
    for (int j = 0; j < n; ++j) sum += term(kTwoPi * j / n);
    double value = kTwoPi * sum / n;
    // Scale convergence on the first-kernel magnitude, not on the (possibly
    // cancelling) difference.
    const double scale = reduced_kernel_impl(beta, r_tilde, t_tilde_1, r, t,
                                             base_nodes, rel_tol);
    const int cap = 1 << 16;
    while (n < cap) {
        double odd = 0.0;
        for (int j = 0; j < n; ++j) odd += term(kTwoPi * (j + 0.5) / n);
        const double refined = 0.5 * value + kPi * odd / n;
        n *= 2;
        const double change = std::abs(refined - value);
        value = refined;
        if (change <= rel_tol * scale + 1e-300) return value;
    }
    throw std::runtime_error("reduced_kernel_cyl_diff: trapezoid rule did not converge");
}

double frac_fundamental_constant(std::size_t n, double alpha) {
    const double Q = 2.0 * static_cast<double>(n) + 2.0;
    if (!(alpha > 0.0) || !(alpha < Q))
        throw std::invalid_argument("frac_fundamental_constant: alpha outside (0, Q)");
    const double g = std::tgamma((2.0 * n + 2.0 - alpha) / 4.0);
    return std::pow(2.0, static_cast<double>(n) + 1.0 - 1.5 * alpha) * g * g /
           (std::pow(kPi, static_cast<double>(n) + 1.0) * std::tgamma(alpha / 2.0));
}

double hls_constant(std::size_t n, double lambda) {
    const double Q = 2.0 * static_cast<double>(n) + 2.0;
    if (!(lambda > 0.0) || !(lambda < Q))
        throw std::invalid_argument("hls_constant: lambda outside (0, Q)");
    const double nf = factorial(n);
    const double pref = std::pow(
        std::pow(kPi, static_cast<double>(n) + 1.0) /
            (std::pow(2.0, static_cast<double>(n) - 1.0) * nf),
        lambda / Q);
    const double g = std::tgamma((2.0 * Q - lambda) / 4.0);
    return pref * nf * std::tgamma((Q - 2.0) / 2.0) / (g * g);
}

double hls_extremizer(std::size_t n, double lambda, const HPoint& xi) {
    if (xi.n() != n) throw std::invalid_argument("hls_extremizer: dimension mismatch");
    double z2 = 0.0;
    for (std::size_t j = 0; j < n; ++j) z2 += xi.x[j] * xi.x[j] + xi.y[j] * xi.y[j];
    const double Q = 2.0 * static_cast<double>(n) + 2.0;
    const double base = (1.0 + z2) * (1.0 + z2) + xi.t * xi.t;
    return std::pow(base, -(2.0 * Q - lambda) / 4.0);
}

double hls_extremizer_cyl(std::size_t n, double lambda, double r, double t) {
    const double Q = 2.0 * static_cast<double>(n) + 2.0;
    const double z2 = r * r;
    const double base = (1.0 + z2) * (1.0 + z2) + t * t;
    return std::pow(base, -(2.0 * Q - lambda) / 4.0);
}

}  // namespace hverify
