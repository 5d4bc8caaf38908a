#include "hverify/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "hverify/operator.hpp"

namespace hverify {

namespace {

std::vector<HPoint> axis_points() {
    return {HPoint(0.0, 0.0, 0.0), HPoint(0.0, 0.0, 1.0), HPoint(0.0, 0.0, -0.5)};
}

std::vector<HPoint> residual_points() {
    return {HPoint(0.0, 0.0, 0.0), HPoint(0.0, 0.0, 1.0),  HPoint(0.0, 0.0, -1.0),
            HPoint(1.0, 0.0, 0.0), HPoint(1.0, 0.0, 1.0),  HPoint(0.5, 0.0, 0.5)};
}

std::vector<HPoint> split_points() {
    return {HPoint(0.0, 0.0, 2.0), HPoint(0.5, 0.0, 0.0), HPoint(1.0, 0.0, 1.0)};
}

VerifyReport derive_c0_report(const KernelParams& kp, const QuadConfig& cfg) {
    const auto start = std::chrono::steady_clock::now();
    VerifyReport rep;
    rep.check_name = "derive_c0";
    rep.params["alpha"] = std::to_string(kp.alpha);
    rep.params["sigma"] = std::to_string(kp.sigma);
    const C0Certificate cert = derive_C0(kp, cfg);
    for (const auto& s : cert.samples)
        rep.samples.push_back({s.first, s.second, cert.C0,
                               std::abs(s.second - cert.C0) /
                                   std::max(cert.C0, 1e-300)});
    rep.params["C0"] = std::to_string(cert.C0);
    rep.max_residual = cert.spread;
    rep.tolerance = 2.0 * cfg.tol;
    rep.passed = rep.max_residual <= rep.tolerance;
    rep.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return rep;
}

KernelParams critical_params(const RunConfig& cfg) {
    const double Q = 2.0 * static_cast<double>(cfg.n) + 2.0;
    return make_kernel_params(cfg.n, cfg.alpha, (Q + cfg.alpha) / (Q - cfg.alpha));
}

FuncWithLimit derived_u0(const KernelParams& kp_crit, const QuadConfig& cfg,
                         double* c0_out = nullptr) {
    const C0Certificate cert = derive_C0(kp_crit, cfg);
    if (c0_out) *c0_out = cert.C0;
    StandardSolutionParams ps;
    ps.C0 = cert.C0;
    return standard_solution(ps, kp_crit);
}

void run_one(const std::string& name, const RunConfig& cfg,
             std::vector<VerifyReport>& out) {
    const QuadConfig& q = cfg.quad;
    const std::uint64_t seed = q.seed;

    if (name == "group") {
        out.push_back(check_group_axioms({1, 2, 3}, 10000, seed));
    } else if (name == "identity") {
        out.push_back(check_heisenberg_identity({1, 2, 3}, 10000, seed));
    } else if (name == "inversion") {
        const KernelParams kp = critical_params(cfg);
        out.push_back(check_cr_inversion_points({1, 2, 3}, 2000, seed));
        out.push_back(check_u0_inversion_grid(kp));
        StandardSolutionParams ps;
        out.push_back(check_inversion_symmetry(kp, standard_solution(ps, kp)));
        for (double s : {0.5, 2.0}) {
            StandardSolutionParams pss;
            pss.s = s;
            out.push_back(check_inversion_symmetry(kp, standard_solution(pss, kp)));
        }
    } else if (name == "fixedpoint") {
        const KernelParams kp_crit = critical_params(cfg);
        out.push_back(derive_c0_report(kp_crit, q));
        double c0 = 0.0;
        const FuncWithLimit u0 = derived_u0(kp_crit, q, &c0);
        const KernelParams kp = cfg.kernel();
        out.push_back(check_fixed_point(kp, u0, residual_points(), q));
        out.push_back(check_kernel_invariances(kp_crit, 10000, seed));
        if (std::abs(kp.p - kp.sigma) < 1e-12)
            out.push_back(check_scaling_invariance(kp_crit, u0, {0.5, 2.0},
                                                   axis_points(), q));
    } else if (name == "reflection") {
        const KernelParams kp = critical_params(cfg);
        const FuncWithLimit u0 = derived_u0(kp, q);
        out.push_back(check_reflection_difference(kp, u0.f, cfg.lambda_plane,
                                                  axis_points(), q));
    } else if (name == "split") {
        const KernelParams kp = critical_params(cfg);
        const FuncWithLimit u0 = derived_u0(kp, q);
        for (double s : {1.0, 2.0})
            out.push_back(check_split_identity(kp, u0, s, split_points(), q));
    } else if (name == "sublaplacian") {
        FDConfig fd;
        out.push_back(check_fd_convergence(fd));
        RunConfig c2 = cfg;
        c2.alpha = 2.0;
        const KernelParams kp2 = critical_params(c2);
        double c0 = 0.0;
        derived_u0(kp2, q, &c0);
        out.push_back(check_fd_ratio(kp2, c0, seed, fd));
    } else if (name == "grushin") {
        const KernelParams kp = critical_params(cfg);
        FDConfig fd;
        std::vector<HPoint> pts{HPoint(0.7, 0.3, 0.5), HPoint(1.2, -0.4, -1.0),
                                HPoint(0.4, 0.9, 2.0), HPoint(-0.6, 0.8, 0.3),
                                HPoint(1.5, 0.2, -0.7)};
        out.push_back(check_grushin_correspondence(standard_shape(kp), pts, fd));
    } else if (name == "hls") {
        out.push_back(check_hls(make_hls_params(cfg.n, 2.0), q));
    } else if (name == "picard") {
        const KernelParams kp = critical_params(cfg);
        const FuncWithLimit u0 = derived_u0(kp, q);
        QuadConfig coarse = q;
        coarse.nodes_rho = std::min(coarse.nodes_rho, 12);
        coarse.nodes_angle = std::min(coarse.nodes_angle, 12);
        const PicardTrace trace =
            picard_probe(kp, u0.f, 5, axis_points(), coarse);
        out.push_back(picard_report(trace, 2.0 * q.tol));
    } else {
        throw std::invalid_argument("unknown suite: " + name);
    }
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{
        "group",      "identity", "fixedpoint", "reflection", "split",
        "inversion",  "sublaplacian", "grushin", "hls",       "picard"};
    return names;
}

std::vector<VerifyReport> run_suite(const RunConfig& cfg) {
    cfg.quad.validate();
    std::vector<VerifyReport> out;
    if (cfg.suite == "all") {
        for (const std::string& name : suite_names()) run_one(name, cfg, out);
    } else {
        run_one(cfg.suite, cfg, out);
    }
    return out;
}

}  // namespace hverify
