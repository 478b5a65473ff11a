#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "alphacalc/errors.hpp"

namespace alphacalc {

enum class Command { Build, Ample, Alpha, Verify, Oracle };
enum class OutputFormat { Text, Json, Csv };

struct KRange {
    int lo = 1;
    int hi = 1;
};

/// Parses "a" or "a..b". Throws ValidationError on malformed input.
KRange parse_k_range(const std::string& text);

struct RunConfig {
    Command command = Command::Build;
    std::string spec_path;
    std::string divisor_label = "L";
    KRange k_range;
    OutputFormat output_format = OutputFormat::Text;
    std::optional<std::string> output_path;
    bool expect_closed_form = false;   // alpha: compare against the closed form
    std::string certificate_path;      // verify
    int threads = 0;                   // 0: ALPHACALC_THREADS or hardware
};

/// Executes one command. Returns 0 on success, 1 when a check fails
/// (ampleness fail, certificate mismatch, oracle or closed-form mismatch),
/// 2 on parse or validation errors. Diagnostics go to `diag`.
int run(const RunConfig& config, std::ostream& out, std::ostream& diag);

}  // namespace alphacalc
