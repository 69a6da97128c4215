#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "powerstab/script.hpp"
#include "powerstab/serialize.hpp"

namespace powerstab {

enum ExitCode : int {
    exit_ok = 0,
    exit_expectation_failed = 1,
    exit_usage = 2,
    exit_resource_limit = 3,
};

struct RunOptions {
    unsigned default_tmax = 4;
    /// "stable" or "unstable"; applies to check-stability commands without their own expect=.
    std::optional<std::string> expect;
    std::uint64_t seed = 1;
};

struct RunResult {
    int exit_code = exit_ok;
    std::string text;
    Json json;
};

/// Executes the commands in order. A failing command does not stop the
/// remaining ones; the exit code is the most severe status seen, with
/// resource limits ranked above usage errors and usage errors above failed
/// expectations.
RunResult run_script(const Script& script, const RunOptions& options);

/// The bundled suite of worked examples, each compared with its known outcome.
RunResult run_paper_examples(const RunOptions& options);

}  // namespace powerstab
