#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hverify/report_io.hpp"
#include "hverify/suites.hpp"

namespace {

int write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write output file: " << path << "\n";
        return 1;
    }
    out << text;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hverify - numerical verification of the conformal integral "
                 "equation on the Heisenberg group"};
    app.require_subcommand(1);

    hverify::RunConfig cfg;
    std::string config_path;
    double alpha = cfg.alpha, p = 0.0, delta = cfg.quad.delta,
           radius = cfg.quad.R_trunc, tol = cfg.quad.tol;
    std::uint64_t seed = cfg.quad.seed, samples = cfg.quad.mc_samples;
    std::size_t n = cfg.n;
    bool seed_given = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", config_path, "JSON config file (flat dotted keys)");
        cmd->add_option("--alpha", alpha, "kernel exponent alpha in (0, Q)");
        cmd->add_option("--n", n, "Heisenberg dimension n");
        cmd->add_option("--delta", delta, "singularity split radius");
        cmd->add_option("--radius", radius, "outer truncation radius");
        cmd->add_option("--tol", tol, "target relative tolerance");
        cmd->add_option("--samples", samples, "Monte-Carlo sample count");
        cmd->add_option("--seed", seed, "RNG seed")->each([&](const std::string&) {
            seed_given = true;
        });
        cmd->add_option("--output", cfg.output_path, "output file (default stdout)");
        cmd->add_option("--format", cfg.format, "json | csv | text")
            ->check(CLI::IsMember({"json", "csv", "text"}));
    };

    CLI::App* run = app.add_subcommand("run", "run a verification suite");
    std::string suite = "all";
    run->add_option("--suite", suite, "suite to run")
        ->check(CLI::IsMember({"group", "identity", "fixedpoint", "reflection",
                               "split", "inversion", "sublaplacian", "grushin",
                               "hls", "picard", "all"}));
    run->add_option("--p", p, "nonlinearity exponent p (default: critical)");
    add_common(run);

    CLI::App* dc0 = app.add_subcommand(
        "derive-c0", "derive the standard-solution constant C0 numerically");
    add_common(dc0);

    CLI11_PARSE(app, argc, argv);

    try {
        if (!config_path.empty()) cfg = hverify::parse_config_file(config_path, cfg);
        // flags override config-file values
        for (const auto* opt_cmd : {run, dc0}) {
            if (!opt_cmd->parsed()) continue;
            if (opt_cmd->count("--alpha")) cfg.alpha = alpha;
            if (opt_cmd->count("--n")) cfg.n = n;
            if (opt_cmd->count("--delta")) cfg.quad.delta = delta;
            if (opt_cmd->count("--radius")) cfg.quad.R_trunc = radius;
            if (opt_cmd->count("--tol")) cfg.quad.tol = tol;
            if (opt_cmd->count("--samples")) cfg.quad.mc_samples = samples;
        }
        if (seed_given) {
            cfg.quad.seed = seed;
        } else if (const char* env = std::getenv("HVERIFY_SEED")) {
            cfg.quad.seed = std::strtoull(env, nullptr, 10);
        }
        cfg.quad.validate();

        if (dc0->parsed()) {
            const hverify::KernelParams kp = [&] {
                hverify::RunConfig c = cfg;
                c.p_set = false;
                return c.kernel();
            }();
            try {
                const hverify::C0Certificate cert = hverify::derive_C0(kp, cfg.quad);
                std::printf("C0 = %.12f  (alpha=%g, n=%zu, sigma=%g)\n", cert.C0,
                            kp.alpha, kp.n, kp.sigma);
                std::printf("constancy spread = %.3e  (certificate limit %.3e)\n",
                            cert.spread, 2.0 * cfg.quad.tol);
                for (const auto& s : cert.samples)
                    std::printf("  zeta=%-12s C0=%.12f\n", s.first.c_str(), s.second);
                return 0;
            } catch (const std::runtime_error& e) {
                std::cerr << "check failure: " << e.what() << "\n";
                return 2;
            }
        }

        cfg.suite = suite;
        if (run->count("--p")) {
            cfg.p = p;
            cfg.p_set = true;
        }
        const std::vector<hverify::VerifyReport> reports = hverify::run_suite(cfg);

        std::string text;
        if (cfg.format == "json")
            text = hverify::reports_to_json(reports, cfg.suite);
        else if (cfg.format == "csv")
            text = hverify::reports_to_csv(reports);
        else
            text = hverify::reports_to_text(reports);
        if (int rc = write_output(text, cfg.output_path)) return rc;

        bool all_passed = true;
        for (const auto& r : reports) all_passed = all_passed && r.passed;
        return all_passed ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
