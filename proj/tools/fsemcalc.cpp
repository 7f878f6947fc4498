// fsemcalc: run verification suites from a JSON config and write a JSON report.
//
//   fsemcalc <command> [--config PATH] [--out PATH] [--seed N] [--suite NAME] [--list]
//
// Without --config the built-in "paper" config runs. Exit codes: 0 every
// check passed, 1 usage or config error, 2 a check failed.

#include "fsem/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

struct Flags {
    std::string config;
    std::string out;
    std::optional<std::uint64_t> seed;
    std::string suite;
    bool list = false;
};

int run(const std::string& command, const Flags& flags)
{
    using namespace fsem;
    json config;
    try {
        config = flags.config.empty() ? builtin_paper_config() : load_config(flags.config);
        if (flags.list) {
            for (const auto& [name, cmd] : list_suites(config)) {
                std::cout << name << "\t" << cmd << "\n";
            }
            return kExitPass;
        }
    } catch (const ConfigError& e) {
        std::cerr << "fsemcalc: config error: " << e.what() << "\n";
        return kExitConfig;
    }

    RunOptions opt;
    opt.seed = flags.seed;
    if (!flags.suite.empty()) {
        opt.suite = flags.suite;
    }
    const RunResult result = run_command(command, config, opt);
    if (result.exit_code == kExitConfig) {
        std::cerr << "fsemcalc: config error: " << result.message << "\n";
        return kExitConfig;
    }

    const std::string text = result.report.dump(2) + "\n";
    if (flags.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream os(flags.out, std::ios::binary);
        if (!(os << text)) {
            std::cerr << "fsemcalc: cannot write '" << flags.out << "'\n";
            return kExitConfig;
        }
    }
    std::cerr << "fsemcalc " << command << ": " << result.message << "\n";
    return result.exit_code;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Verify continuity, Gateaux and Frechet differentiability and ordered extrema"};
    app.require_subcommand(1);

    Flags flags;
    std::string chosen;
    for (const auto& name : fsem::cli_commands()) {
        CLI::App* sub = app.add_subcommand(name, name == "suite" ? "run every suite" : "run the " + name + " suites");
        sub->add_option("--config", flags.config, "config JSON (default: the built-in paper config)");
        sub->add_option("--out", flags.out, "write the report here instead of stdout");
        sub->add_option("--seed", flags.seed, "override the config seed");
        sub->add_option("--suite", flags.suite, "run only the suite with this name");
        sub->add_flag("--list", flags.list, "list the suites of the config and exit");
        sub->callback([&chosen, name] { chosen = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? fsem::kExitPass : fsem::kExitConfig;
    }
    return run(chosen, flags);
}
