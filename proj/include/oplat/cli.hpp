#pragma once

#include <optional>
#include <string>

#include "oplat/json_io.hpp"

namespace oplat {

/// Explicit command-line overrides; unset fields fall back to the problem
/// file and then to the defaults (seed 0, samples 64, field Q).
struct CliOptions {
    std::optional<std::uint64_t> seed;
    std::optional<int> samples;
    std::optional<Field> field;
};

struct CommandResult {
    json report;
    int exit_code;  // 0 all mandatory checks pass, 1 otherwise
};

/// Dispatches one subcommand over the raw bytes of a problem file and builds
/// the machine-readable report. Reports are deterministic: the same bytes,
/// command, and effective seed produce byte-identical JSON. Throws
/// InputError for malformed input (the CLI maps it to exit code 2).
CommandResult run_command(const std::string& command, const std::string& file_bytes,
                          const CliOptions& options = {});

}  // namespace oplat
