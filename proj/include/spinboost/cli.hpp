// Command-line front end: single-shot computations, parameter sweeps,
// entropy-curve emission, and the verification runner. CSV and JSON output
// with stable schemas (documented in the README).
//
// Exit codes: 0 success, 1 verification failure, 2 bad input, 3 I/O failure.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace spinboost::cli {

struct VerifyOptions {
    std::size_t samples = 1000;
    std::uint64_t seed = 12345;
    // Self-test hook: inflates measured deviations so the failure path of
    // the harness itself can be exercised. Zero in normal runs.
    double inject_perturbation = 0.0;
};

/// Runs every verification suite and returns the JSON report; the
/// "all_pass" field drives the process exit code.
nlohmann::ordered_json verify_report(const VerifyOptions& opts);

/// Full argument parsing and dispatch. argv[0] is the program name.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload for tests; supply arguments only (no program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spinboost::cli
