#pragma once

/**
 * @file cli.hpp
 * @brief The command layer behind fsemcalc: config loading, suite execution
 *        and RunReport assembly.
 *
 * Config (one JSON document):
 *   {"seed": 42,
 *    "suites": [{"name": ..., "command": "axioms" | "continuity" | "gateaux" | "frechet" | "order" | "fnorm",
 *                "space": space, "operator": operator, "point": element, "params": {...}}]}
 *
 * params by command:
 *   axioms      "seminorms": count or index set, "samples"
 *   continuity  "J", "epsilons", "samples", "delta_source"
 *   gateaux     "J", "epsilon", "directions", "t_schedule", "candidate"
 *   frechet     "J", "epsilons", "samples", "kernel_samples", "delta_source", "candidate"
 *   order       "cases": [{"name", "operator", "point", "claim", "directions", "J", "budget"}]
 *   fnorm       "epsilon", "samples"
 *
 * Suites run concurrently, each with its own seed drawn in order from the
 * run seed, and the report is assembled in config order. Apart from the
 * "wall_ms" fields the report depends only on the config and the seed.
 *
 * Exit codes: 0 every check passed, 1 usage or config error, 2 a check failed.
 */

#include "fsem/io.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fsem {

inline constexpr const char* kReportSchema = "fsemcalc/1";
inline constexpr const char* kVersion = "1.0.0";

inline constexpr int kExitPass = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitFailure = 2;

/// The subcommands; "suite" runs every suite regardless of its command.
const std::vector<std::string>& cli_commands();

struct RunOptions {
    std::optional<std::uint64_t> seed;   ///< overrides the config seed
    std::optional<std::string> suite;    ///< run only the suite with this name
};

struct RunResult {
    int exit_code = kExitPass;
    json report;          ///< empty on a config error
    std::string message;  ///< summary line, or the config error
};

/// Reads and parses a config file; throws ConfigError (field "<file>") on IO
/// or JSON syntax errors.
json load_config(const std::string& path);

/// The built-in "paper" config: the worked cases of the theory as one run.
json builtin_paper_config();

/// Names and commands of the suites in a config.
std::vector<std::pair<std::string, std::string>> list_suites(const json& config);

/// Runs the suites of `config` selected by `command` (see cli_commands).
/// Config errors are reported through exit code 1, never thrown.
RunResult run_command(const std::string& command, const json& config, const RunOptions& opt = {});

/// run_command("suite", ...) with the given seed.
RunResult cmd_suite(const json& config, std::uint64_t seed);

/// A copy of a report with every "wall_ms" field removed.
json strip_timing(const json& report);

}  // namespace fsem
