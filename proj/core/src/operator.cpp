#include "hverify/operator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "hverify/quadrature.hpp"
#include "hverify/rng.hpp"

namespace hverify {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kTwoPi = 2.0 * kPi;

struct Zeta1 {
    double zx = 0.0, zy = 0.0, t = 0.0;
    double r() const { return std::hypot(zx, zy); }
    double gauge() const { return gauge2(r(), t); }
};

Zeta1 as_zeta1(const HPoint& zeta, const char* op) {
    if (zeta.n() != 1)
        throw std::invalid_argument(std::string(op) + ": only n = 1 supported");
    if (!zeta.finite())
        throw std::invalid_argument(std::string(op) + ": non-finite point");
    return {zeta.x[0], zeta.y[0], zeta.t};
}

inline double fpow(const CylFunc& f, double r, double t, double p) {
    const double v = f.eval(r, t);
    return v <= 0.0 ? 0.0 : std::pow(v, p);
}

void check_decay_for_kernel(const KernelParams& kp, const CylFunc& f, const char* op) {
    if (!(f.decay_exponent * kp.p > kp.alpha))
        throw std::domain_error(std::string(op) +
                                ": decay_exponent * p <= alpha, integral against "
                                "the kernel does not converge");
    if (!(f.C_decay > 0.0) || !(f.R_decay > 0.0) || !std::isfinite(f.C_decay))
        throw std::domain_error(std::string(op) + ": invalid decay metadata");
}

// Angular average A(rho) = int_0^pi int_0^{2pi} f(zeta o eta(rho,phi,psi))^p,
// uniform trapezoid in psi (kills the half-integer sin(phi) powers exactly),
// Gauss-Legendre in phi.
class PolarAverager {
public:
    PolarAverager(const CylFunc& f, double p, Zeta1 z, int n_phi, int n_psi)
        : f_(f), p_(p), z_(z), phi_rule_(gauss_legendre(n_phi)), n_psi_(n_psi) {
        cos_psi_.resize(n_psi_);
        sin_psi_.resize(n_psi_);
        for (int j = 0; j < n_psi_; ++j) {
            const double psi = kTwoPi * j / n_psi_;
            cos_psi_[j] = std::cos(psi);
            sin_psi_[j] = std::sin(psi);
        }
    }

    double operator()(double rho) const {
        KahanSum acc;
        const double rho2 = rho * rho;
        for (std::size_t i = 0; i < phi_rule_.nodes.size(); ++i) {
            const double phi = 0.5 * kPi * (1.0 + phi_rule_.nodes[i]);
            const double ra = rho * std::sqrt(std::sin(phi));
            const double te = rho2 * std::cos(phi);
            KahanSum psi_acc;
            for (int j = 0; j < n_psi_; ++j) {
                const double ex = ra * cos_psi_[j];
                const double ey = ra * sin_psi_[j];
                const double x = z_.zx + ex;
                const double y = z_.zy + ey;
                const double t = z_.t + te + 2.0 * (z_.zy * ex - z_.zx * ey);
                psi_acc.add(fpow(f_, std::hypot(x, y), t, p_));
            }
            acc.add(phi_rule_.weights[i] * psi_acc.value());
        }
        // phi measure: dphi over [0,pi] mapped from [-1,1]; psi: 2pi/n each.
        return acc.value() * (0.5 * kPi) * (kTwoPi / n_psi_);
    }

private:
    const CylFunc& f_;
    double p_;
    Zeta1 z_;
    const QuadratureRule& phi_rule_;
    int n_psi_;
    std::vector<double> cos_psi_, sin_psi_;
};

// Full-space T[f^p](zeta) in zeta-centered gauge-polar coordinates:
//   int_0^R rho^{alpha-1} A(rho) drho  + tail.
OperatorResult integrate_fullspace(const KernelParams& kp, const CylFunc& f, double p,
                                   Zeta1 z, const QuadConfig& cfg) {
    const double alpha = kp.alpha;
    const double gamma = alpha - 1.0;
    const double R = cfg.R_trunc;
    const double zg = z.gauge();
    const double dp = f.decay_exponent * p;

    if (!(R > 2.0 * zg) || !(R - zg >= f.R_decay))
        throw std::runtime_error(
            "apply_operator: R_trunc too small relative to the evaluation point "
            "and decay metadata; increase R_trunc");

    PolarAverager avg(f, p, z, cfg.nodes_angle, 2 * cfg.nodes_angle);

    KahanSum total;
    const std::vector<double> edges = geometric_panels(0.0, R, cfg.delta, 2.0);
    // first panel with the rho^gamma weight absorbed by Gauss-Jacobi
    {
        const double d0 = edges[1];
        QuadratureRule gj = gauss_jacobi01(cfg.nodes_rho, gamma);
        KahanSum panel;
        for (std::size_t i = 0; i < gj.nodes.size(); ++i)
            panel.add(gj.weights[i] * avg(d0 * gj.nodes[i]));
        total.add(std::pow(d0, gamma + 1.0) * panel.value());
    }
    for (std::size_t k = 1; k + 1 < edges.size(); ++k) {
        total.add(gl_integrate(
            [&](double rho) { return std::pow(rho, gamma) * avg(rho); }, edges[k],
            edges[k + 1], cfg.nodes_rho));
    }

    // Tail: f(zeta o eta) <= C (rho - |zeta|)^{-dp} <= C (kappa rho)^{-dp}.
    const double kappa = 1.0 - zg / R;
    const double tail = kTwoPi * kPi * std::pow(f.C_decay, p) *
                        std::pow(kappa, -dp) * std::pow(R, alpha - dp) / (dp - alpha);
    return {total.value(), tail};
}

// ---------------------------------------------------------------------------
// 2D gauge-polar quadrature with the reduced kernel over a ring q in [lo,hi]
// around the origin; the kernel singularity (at gauge radius |zeta|) must lie
// strictly outside the ring.

std::vector<double> ring_panels(double lo, double hi, double sing_q, double delta) {
    // refine toward whichever edge is closest to the singular radius
    const double m_lo = std::abs(lo - sing_q);
    const double m_hi = std::abs(hi - sing_q);
    const double span = hi - lo;
    std::vector<double> edges;
    if (sing_q <= lo || m_lo <= m_hi) {
        const double first = std::min({std::max(m_lo, 1e-3), delta, span});
        edges = geometric_panels(lo, hi, first, 2.0);
    } else {
        const double first = std::min({std::max(m_hi, 1e-3), delta, span});
        std::vector<double> rev = geometric_panels(0.0, span, first, 2.0);
        for (auto it = rev.rbegin(); it != rev.rend(); ++it) edges.push_back(hi - *it);
    }
    return edges;
}

double integrate_ring_reduced(const KernelParams& kp, const CylFunc& f, double p,
                              Zeta1 z, double q_lo, double q_hi,
                              const QuadConfig& cfg) {
    const double r_tilde = z.r();
    const double t_tilde = z.t;
    const double kernel_tol = std::min(1e-9, 0.1 * cfg.tol);
    const double phi_star =
        z.gauge() > 0.0 ? std::acos(std::clamp(t_tilde / (z.gauge() * z.gauge()),
                                               -1.0, 1.0))
                        : 0.5 * kPi;

    auto phi_integral = [&](double q) {
        const double q2 = q * q;
        auto g = [&](double phi) {
            const double r = q * std::sqrt(std::sin(phi));
            const double t = q2 * std::cos(phi);
            const double fp = fpow(f, r, t, p);
            if (fp == 0.0) return 0.0;
            const double K = reduced_kernel_cyl(kp, r_tilde, t_tilde, r, t,
                                                2 * cfg.nodes_angle, kernel_tol);
            return K * fp;
        };
        // split at the polar angle of zeta, where the kernel peaks
        double v = 0.0;
        if (phi_star > 1e-3 && phi_star < kPi - 1e-3) {
            v = gl_integrate(g, 0.0, phi_star, cfg.nodes_angle) +
                gl_integrate(g, phi_star, kPi, cfg.nodes_angle);
        } else {
            v = gl_integrate(g, 0.0, kPi, 2 * cfg.nodes_angle);
        }
        return v * q * q2;  // q^3 Jacobian
    };

    KahanSum total;
    const std::vector<double> edges = ring_panels(q_lo, q_hi, z.gauge(), cfg.delta);
    for (std::size_t k = 0; k + 1 < edges.size(); ++k)
        total.add(gl_integrate(phi_integral, edges[k], edges[k + 1], cfg.nodes_outer));
    return total.value();
}

double exterior_tail_bound(const KernelParams& kp, const CylFunc& f, double p,
                           double zg, double R) {
    const double beta = kp.kernel_exponent();
    const double dp = f.decay_exponent * p;
    const double kappa = 1.0 - zg / R;
    return kTwoPi * kPi * std::pow(f.C_decay, p) * std::pow(kappa, -beta) *
           std::pow(R, 4.0 - beta - dp) / (beta + dp - 4.0);
}

void require_tail_budget(double tail, double value, const QuadConfig& cfg,
                         const char* op) {
    const double scale = std::max(std::abs(value), 1e-300);
    if (tail > 0.5 * cfg.tol * scale)
        throw std::runtime_error(std::string(op) +
                                 ": analytic tail bound exceeds half the error "
                                 "budget; increase R_trunc");
}

}  // namespace

OperatorResult apply_operator_detailed(const KernelParams& kp, const CylFunc& f,
                                       const HPoint& zeta, const QuadConfig& cfg) {
    cfg.validate();
    check_decay_for_kernel(kp, f, "apply_operator");
    const Zeta1 z = as_zeta1(zeta, "apply_operator");
    OperatorResult res = integrate_fullspace(kp, f, kp.p, z, cfg);
    require_tail_budget(res.tail_bound, res.value, cfg, "apply_operator");
    return res;
}

double apply_operator(const KernelParams& kp, const CylFunc& f, const HPoint& zeta,
                      const QuadConfig& cfg) {
    return apply_operator_detailed(kp, f, zeta, cfg).value;
}

double apply_operator_ball(const KernelParams& kp, const CylFunc& f, double s_ball,
                           const HPoint& zeta, const QuadConfig& cfg) {
    cfg.validate();
    if (!(s_ball > 0.0))
        throw std::invalid_argument("apply_operator_ball: s_ball must be > 0");
    check_decay_for_kernel(kp, f, "apply_operator_ball");
    const Zeta1 z = as_zeta1(zeta, "apply_operator_ball");
    const double zg = z.gauge();
    const double margin = std::abs(zg - s_ball);
    if (margin < 0.02 * s_ball)
        throw std::runtime_error(
            "apply_operator_ball: evaluation point within 2% of the ball "
            "boundary; the rim quadrature is not supported there");

    if (zg > s_ball) {
        // singularity outside the ball: direct interior quadrature
        return integrate_ring_reduced(kp, f, kp.p, z, 0.0, s_ball, cfg);
    }
    // singularity inside: full space minus exterior
    if (!(s_ball < cfg.R_trunc))
        throw std::invalid_argument("apply_operator_ball: s_ball must be < R_trunc");
    OperatorResult full = integrate_fullspace(kp, f, kp.p, z, cfg);
    const double ext =
        integrate_ring_reduced(kp, f, kp.p, z, s_ball, cfg.R_trunc, cfg);
    const double tail = full.tail_bound + exterior_tail_bound(kp, f, kp.p, zg, cfg.R_trunc);
    const double value = full.value - ext;
    require_tail_budget(tail, value, cfg, "apply_operator_ball");
    return value;
}

double apply_operator_halfspace(const KernelParams& kp, const CylFunc& f,
                                const HalfSpace& hs, const HPoint& zeta,
                                const QuadConfig& cfg) {
    cfg.validate();
    check_decay_for_kernel(kp, f, "apply_operator_halfspace");
    const Zeta1 z = as_zeta1(zeta, "apply_operator_halfspace");
    if (z.r() > 1e-12)
        throw std::invalid_argument(
            "apply_operator_halfspace: evaluation points must lie on the t-axis "
            "(the reflected-kernel reduction is implemented for r = 0)");
    const double lam = hs.lambda;
    if (z.t < lam)
        throw std::domain_error("apply_operator_halfspace: point below the plane");
    const double h = z.t - lam;
    if (h < 1e-14) return 0.0;  // zeta on the plane: difference kernel vanishes

    const double p = kp.p;
    const double beta = kp.kernel_exponent();
    const double alpha = kp.alpha;
    const double t_refl = 2.0 * lam - z.t;  // reflected center, below the plane
    const double q_star = std::sqrt(h);     // plane cut enters for q > q_star
    const double R = cfg.R_trunc;

    auto H = [&](double r, double t) {
        return fpow(f, r, t, p) - fpow(f, r, 2.0 * lam - t, p);
    };
    auto phi_max = [&](double q) {
        if (q <= q_star) return kPi;
        return std::acos(std::clamp(-h / (q * q), -1.0, 1.0));
    };

    // piece A: the singular kernel 2pi q^{-beta}, weight q^{alpha-1} absorbed
    auto avgH = [&](double q) {
        const double fm = phi_max(q);
        const double q2 = q * q;
        auto g = [&](double phi) {
            const double r = q * std::sqrt(std::sin(phi));
            return H(r, z.t + q2 * std::cos(phi));
        };
        const double mid = 0.5 * fm;
        return gl_integrate(g, 0.0, mid, cfg.nodes_angle) +
               gl_integrate(g, mid, fm, cfg.nodes_angle);
    };
    // piece B: the reflected kernel 2pi g2^{-beta}, smooth on the half space
    auto reflected_piece = [&](double q) {
        const double fm = phi_max(q);
        const double q2 = q * q;
        auto g = [&](double phi) {
            const double r = q * std::sqrt(std::sin(phi));
            const double t = z.t + q2 * std::cos(phi);
            const double g2 = gauge2(r, t - t_refl);
            return std::pow(g2, -beta) * H(r, t);
        };
        const double mid = 0.5 * fm;
        return (gl_integrate(g, 0.0, mid, cfg.nodes_angle) +
                gl_integrate(g, mid, fm, cfg.nodes_angle)) *
               q * q2;
    };

    std::vector<double> edges = geometric_panels(0.0, R, cfg.delta, 2.0);
    if (q_star < R) {
        edges.push_back(q_star);
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end(),
                                [](double a, double b) {
                                    return std::abs(a - b) < 1e-12;
                                }),
                    edges.end());
    }

    KahanSum total;
    // first panel of piece A via Gauss-Jacobi (weight q^{alpha-1})
    {
        const double d0 = edges[1];
        QuadratureRule gj = gauss_jacobi01(cfg.nodes_rho, alpha - 1.0);
        KahanSum panel;
        for (std::size_t i = 0; i < gj.nodes.size(); ++i)
            panel.add(gj.weights[i] * avgH(d0 * gj.nodes[i]));
        total.add(std::pow(d0, alpha) * panel.value());
        total.add(-gl_integrate(reflected_piece, 0.0, d0, cfg.nodes_rho));
    }
    for (std::size_t k = 1; k + 1 < edges.size(); ++k) {
        total.add(gl_integrate(
            [&](double q) {
                return std::pow(q, alpha - 1.0) * avgH(q) - reflected_piece(q);
            },
            edges[k], edges[k + 1], cfg.nodes_rho));
    }
    double value = kTwoPi * total.value();

    // tail bound beyond R from the decay metadata of f and its reflection
    const double dp = f.decay_exponent * p;
    const double s2 = std::sqrt(2.0 * h);                 // gauge shift of t_refl
    const double s_lam = std::sqrt(2.0 * std::abs(lam));  // shift of f_lambda
    if (!(R > 2.0 * std::max({s2, s_lam, f.R_decay, z.gauge()})))
        throw std::runtime_error(
            "apply_operator_halfspace: R_trunc too small for the tail bound; "
            "increase R_trunc");
    const double kap2 = 1.0 - s2 / R, kap_l = 1.0 - s_lam / R,
                 kap_z = 1.0 - z.gauge() / R;
    const double tail = kTwoPi * kPi * std::pow(f.C_decay, p) *
                        (std::pow(kap_z, -beta) + std::pow(kap2, -beta)) *
                        (1.0 + std::pow(kap_l, -dp)) *
                        std::pow(R, 4.0 - beta - dp) / (beta + dp - 4.0);
    // budget check against the typical magnitude of either side
    const double scale = std::max(std::abs(value), std::pow(f.C_decay, p));
    if (tail > 0.5 * cfg.tol * scale)
        throw std::runtime_error(
            "apply_operator_halfspace: tail bound exceeds the error budget; "
            "increase R_trunc");
    return value;
}

double lp_norm(const CylFunc& f, double p_exp, const QuadConfig& cfg) {
    cfg.validate();
    if (!(p_exp >= 1.0)) throw std::invalid_argument("lp_norm: p_exp must be >= 1");
    const double dp = f.decay_exponent * p_exp;
    if (!(dp > 4.0))
        throw std::domain_error(
            "lp_norm: decay_exponent * p_exp <= Q, the norm integral diverges");
    const double R = cfg.R_trunc;

    auto phi_integral = [&](double q) {
        const double q2 = q * q;
        auto g = [&](double phi) {
            const double r = q * std::sqrt(std::sin(phi));
            const double v = std::abs(f.eval(r, q2 * std::cos(phi)));
            return std::pow(v, p_exp);
        };
        return gl_integrate(g, 0.0, kPi, cfg.nodes_angle) * q * q2;
    };

    KahanSum total;
    const std::vector<double> edges =
        geometric_panels(0.0, R, std::max(cfg.delta, 0.5), 2.0);
    for (std::size_t k = 0; k + 1 < edges.size(); ++k)
        total.add(gl_integrate(phi_integral, edges[k], edges[k + 1], cfg.nodes_outer));
    const double core = kTwoPi * total.value();

    const double tail = kTwoPi * kPi * std::pow(f.C_decay, p_exp) *
                        std::pow(R, 4.0 - dp) / (dp - 4.0);
    require_tail_budget(tail, core, cfg, "lp_norm");
    return std::pow(core, 1.0 / p_exp);
}

MCResult hls_double_integral(const HLSParams& hp, const CylFunc& f, const CylFunc& g,
                             const QuadConfig& cfg) {
    cfg.validate();
    if (hp.n != 1)
        throw std::invalid_argument("hls_double_integral: only n = 1 supported");
    const double lam = hp.lambda;
    if (!(f.decay_exponent > 2.5) || !(g.decay_exponent > 2.5))
        throw std::domain_error(
            "hls_double_integral: integrand decay too weak for a finite-variance "
            "proposal");

    // radial proposals: volume-uniform core + power tail for xi; kernel-matched
    // core rho^{3-lambda} + power tail for the offset eta'
    const double rho0 = 2.0, rho1 = 2.0;
    const double b_tail = std::min(3.0, 2.0 * std::min(f.decay_exponent,
                                                       g.decay_exponent) - 5.5);
    const double a_tail = 3.0;
    const double w_core = 0.65;

    auto sample_radius_xi = [&](Rng& rng, double& pdf) {
        if (rng.uniform() < w_core) {
            const double rho = rho0 * std::pow(rng.uniform(), 0.25);
            pdf = w_core * 4.0 * std::pow(rho, 3.0) / std::pow(rho0, 4.0) +
                  0.0;  // tail density is zero below rho0
            return rho;
        }
        const double rho = rho0 * std::pow(1.0 - rng.uniform(), -1.0 / b_tail);
        pdf = (1.0 - w_core) * b_tail * std::pow(rho0, b_tail) *
              std::pow(rho, -1.0 - b_tail);
        return rho;
    };
    const double c_eta = 4.0 - lam;  // core exponent normalizer, > 0
    auto sample_radius_eta = [&](Rng& rng, double& pdf) {
        if (rng.uniform() < w_core) {
            const double rho = rho1 * std::pow(rng.uniform(), 1.0 / c_eta);
            pdf = w_core * c_eta * std::pow(rho, c_eta - 1.0) / std::pow(rho1, c_eta);
            return rho;
        }
        const double rho = rho1 * std::pow(1.0 - rng.uniform(), -1.0 / a_tail);
        pdf = (1.0 - w_core) * a_tail * std::pow(rho1, a_tail) *
              std::pow(rho, -1.0 - a_tail);
        return rho;
    };

    Rng rng(cfg.seed);
    KahanSum sum, sum_sq;
    double max_sq = 0.0;
    const std::uint64_t N = cfg.mc_samples;
    for (std::uint64_t i = 0; i < N; ++i) {
        double pdf_x, pdf_e;
        const double rho_x = sample_radius_xi(rng, pdf_x);
        const double phi_x = kPi * rng.uniform();
        const double psi_x = kTwoPi * rng.uniform();
        const double rx = rho_x * std::sqrt(std::sin(phi_x));
        const double xx = rx * std::cos(psi_x), xy = rx * std::sin(psi_x);
        const double xt = rho_x * rho_x * std::cos(phi_x);

        const double rho_e = sample_radius_eta(rng, pdf_e);
        const double phi_e = kPi * rng.uniform();
        const double psi_e = kTwoPi * rng.uniform();
        const double re = rho_e * std::sqrt(std::sin(phi_e));
        const double ex = re * std::cos(psi_e), ey = re * std::sin(psi_e);
        const double et = rho_e * rho_e * std::cos(phi_e);

        // eta = xi o eta'
        const double hx = xx + ex, hy = xy + ey;
        const double ht = xt + et + 2.0 * (xy * ex - xx * ey);

        const double fv = f.eval(rx, xt);
        double s = 0.0;
        if (fv != 0.0) {
            const double gv = g.eval(std::hypot(hx, hy), ht);
            if (gv != 0.0) {
                // sampling density in xi-space is pdf/(2 pi^2 rho^3)
                const double w1 = kTwoPi * kPi * std::pow(rho_x, 3.0) / pdf_x;
                const double w2 = kTwoPi * kPi * std::pow(rho_e, 3.0) / pdf_e;
                s = fv * gv * std::pow(rho_e, -lam) * w1 * w2;
            }
        }
        sum.add(s);
        sum_sq.add(s * s);
        max_sq = std::max(max_sq, s * s);
        if (((i + 1) & 0xFFFF) == 0 && i + 1 >= 65536) {
            if (max_sq > 0.5 * sum_sq.value())
                throw std::runtime_error(
                    "hls_double_integral: running variance dominated by a single "
                    "sample (infinite-variance proposal detected)");
        }
    }
    const double mean = sum.value() / static_cast<double>(N);
    const double var =
        std::max(0.0, sum_sq.value() / static_cast<double>(N) - mean * mean);
    MCResult out;
    out.value = mean;
    out.std_error = std::sqrt(var / static_cast<double>(N));
    out.samples = N;
    return out;
}

double gauge_ball_measure(double R, const QuadConfig& cfg) {
    if (!(R > 0.0)) throw std::invalid_argument("gauge_ball_measure: R must be > 0");
    // 2 pi  int_0^R int_0^pi q^3 dphi dq through the polar parametrization
    KahanSum total;
    const std::vector<double> edges = geometric_panels(0.0, R, R / 8.0, 2.0);
    for (std::size_t k = 0; k + 1 < edges.size(); ++k)
        total.add(gl_integrate(
            [&](double q) {
                auto one = [](double) { return 1.0; };
                return gl_integrate(one, 0.0, kPi, 8) * q * q * q;
            },
            edges[k], edges[k + 1], cfg.nodes_outer));
    return kTwoPi * total.value();
}

}  // namespace hverify
