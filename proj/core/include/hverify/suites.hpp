#pragma once

#include <string>
#include <vector>

#include "hverify/report_io.hpp"
#include "hverify/verify.hpp"

namespace hverify {

/// Names accepted by run_suite, in execution order of "all".
const std::vector<std::string>& suite_names();

/// Executes one named verification suite (or "all") with the given
/// configuration. Throws std::invalid_argument for unknown suite names.
std::vector<VerifyReport> run_suite(const RunConfig& cfg);

}  // namespace hverify
