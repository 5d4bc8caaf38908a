#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hverify/cylfunc.hpp"
#include "hverify/kernel.hpp"
#include "hverify/verify.hpp"

namespace hverify {

/// SHA-256 of a byte string, lowercase hex.
std::string sha256_hex(const std::string& data);

/// Canonical serialization of the reports: compact JSON with runtime_ms (the
/// only volatile field) excluded. Two runs with the same config and seed must
/// produce byte-identical canonical bodies.
std::string canonical_body(const std::vector<VerifyReport>& reports);

/// Full JSON document: pretty-printed reports including runtime_ms, plus
/// body_sha256 over the canonical body.
std::string reports_to_json(const std::vector<VerifyReport>& reports,
                            const std::string& suite);

/// CSV with the fixed column set:
/// check,param-hash,point,lhs,rhs,residual,tol,passed
std::string reports_to_csv(const std::vector<VerifyReport>& reports);

/// Human-readable aligned tables, scientific notation, 6 significant digits.
std::string reports_to_text(const std::vector<VerifyReport>& reports);

/// CLI/run configuration: JSON file with flat dotted keys, overridable by
/// command-line flags.
struct RunConfig {
    std::string suite = "all";
    std::size_t n = 1;
    double alpha = 2.0;
    double p = 3.0;
    bool p_set = false;  // when false, p defaults to the critical exponent
    double lambda_plane = -1.0;
    QuadConfig quad;
    std::string output_path;
    std::string format = "text";  // json | csv | text

    KernelParams kernel() const;
};

/// Parses the flat dotted-key JSON config file (e.g. {"quad.delta": 0.2,
/// "kernel.alpha": 2}). Unknown keys are rejected.
RunConfig parse_config_file(const std::string& path, RunConfig base = {});

}  // namespace hverify
