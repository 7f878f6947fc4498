#include "fsem/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <future>
#include <set>
#include <sstream>

namespace fsem {

namespace {

std::string at(const std::string& path, const std::string& key)
{
    return path + "." + key;
}

std::string at(const std::string& path, std::size_t i)
{
    return path + "[" + std::to_string(i) + "]";
}

/// The outcome of one suite: its records and the pass/fail tally.
struct SuiteOutcome {
    json records = json::array();
    std::size_t checks = 0;
    std::size_t failed = 0;

    void add(json record, bool passed)
    {
        ++checks;
        if (!passed) {
            ++failed;
        }
        records.push_back(std::move(record));
    }
};

struct ParsedSuite {
    std::string name;
    std::string command;
    std::function<SuiteOutcome(Rng&)> run;
};

const json& params_of(const json& suite, const std::string& path)
{
    static const json empty = json::object();
    auto it = suite.find("params");
    if (it == suite.end()) {
        return empty;
    }
    if (!it->is_object()) {
        throw ConfigError(at(path, "params"), "expected an object");
    }
    return *it;
}

std::vector<double> epsilons_of(const json& params, const std::string& path, std::vector<double> fallback)
{
    if (params.contains("epsilon")) {
        return {number_field(params, "epsilon", path)};
    }
    if (!params.contains("epsilons")) {
        return fallback;
    }
    const json& es = params["epsilons"];
    if (!es.is_array() || es.empty()) {
        throw ConfigError(at(path, "epsilons"), "expected a nonempty array of numbers");
    }
    std::vector<double> out;
    for (std::size_t i = 0; i < es.size(); ++i) {
        if (!es[i].is_number() || es[i].get<double>() <= 0) {
            throw ConfigError(at(at(path, "epsilons"), i), "expected a positive number");
        }
        out.push_back(es[i].get<double>());
    }
    return out;
}

double positive_number(const json& params, const std::string& key, const std::string& path, double fallback)
{
    if (!params.contains(key)) {
        return fallback;
    }
    const double v = number_field(params, key, path);
    if (!(v > 0)) {
        throw ConfigError(at(path, key), "expected a positive number");
    }
    return v;
}

DeltaSource delta_source_of(const json& params, const std::string& path)
{
    auto it = params.find("delta_source");
    if (it == params.end()) {
        return DeltaSource::constructive;
    }
    if (*it == "constructive") {
        return DeltaSource::constructive;
    }
    if (*it == "searched") {
        return DeltaSource::searched;
    }
    throw ConfigError(at(path, "delta_source"), "expected \"constructive\" or \"searched\"");
}

std::vector<Element> elements_of(const json& j, const Space& X, const std::string& path)
{
    if (!j.is_array() || j.empty()) {
        throw ConfigError(path, "expected a nonempty array of elements");
    }
    std::vector<Element> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        out.push_back(element_from_json(j[i], X, at(path, i)));
        if (el_is_zero(out.back())) {
            throw ConfigError(at(path, i), "direction must be nonzero");
        }
    }
    return out;
}

IndexSet index_set_of(const json& params, const Space& Y, const std::string& path)
{
    return index_set_from_json(require_field(params, "J", path), Y, at(path, "J"));
}

/// The operator and point shared by the operator-based commands.
struct OperatorCase {
    OperatorDescriptor op;
    Element point;
};

OperatorCase operator_case(const json& suite, const std::string& path)
{
    OperatorDescriptor op = operator_from_json(require_field(suite, "operator", path), at(path, "operator"));
    Element point = element_from_json(require_field(suite, "point", path), op.domain, at(path, "point"));
    return {std::move(op), std::move(point)};
}

ParsedSuite parse_axioms(const json& suite, const std::string& path)
{
    const Space X = space_from_json(require_field(suite, "space", path), at(path, "space"));
    const json& params = params_of(suite, path);
    const std::string ppath = at(path, "params");
    const SeminormFamily fam(X);
    std::vector<SeminormId> ids;
    auto it = params.find("seminorms");
    if (it == params.end() || it->is_number()) {
        const std::size_t count = count_field(params, "seminorms", ppath, 4);
        if (count == 0) {
            throw ConfigError(at(ppath, "seminorms"), "expected a positive count");
        }
        ids = fam.enumerate(count);
    } else {
        ids = index_set_from_json(*it, X, at(ppath, "seminorms")).members();
    }
    const std::size_t samples = count_field(params, "samples", ppath, 200);
    return {{}, "axioms", [fam, ids, samples, X](Rng& rng) {
                SuiteOutcome out;
                AxiomOptions opt;
                opt.samples = samples;
                opt.schedule = default_schedule(X);
                const Sampler sampler = [X](Rng& r) { return random_element(X, r); };
                for (const auto& id : ids) {
                    AxiomReport rep = axiom_report(fam.member(id), sampler, rng, opt);
                    out.add(axiom_to_json(rep), rep.passed());
                }
                return out;
            }};
}

ParsedSuite parse_continuity(const json& suite, const std::string& path)
{
    OperatorCase c = operator_case(suite, path);
    const json& params = params_of(suite, path);
    const std::string ppath = at(path, "params");
    const IndexSet J = index_set_of(params, c.op.codomain, ppath);
    const std::vector<double> eps = epsilons_of(params, ppath, {0.5, 0.1, 0.01});
    VerifyOptions opt;
    opt.samples = count_field(params, "samples", ppath, 500);
    opt.source = delta_source_of(params, ppath);
    return {{}, "continuity", [c, J, eps, opt](Rng& rng) {
                SuiteOutcome out;
                for (double e : eps) {
                    ContinuityWitness w = continuity_verify(c.op, c.point, J, e, rng, opt);
                    out.add(continuity_to_json(w), w.passed);
                }
                return out;
            }};
}

std::optional<LinearMap> candidate_of(const json& params, const OperatorDescriptor& op, const std::string& ppath)
{
    auto it = params.find("candidate");
    if (it == params.end()) {
        return std::nullopt;
    }
    return linmap_from_json(*it, op, at(ppath, "candidate"));
}

ParsedSuite parse_gateaux(const json& suite, const std::string& path)
{
    OperatorCase c = operator_case(suite, path);
    const json& params = params_of(suite, path);
    const std::string ppath = at(path, "params");
    const IndexSet J = index_set_of(params, c.op.codomain, ppath);
    const double eps = positive_number(params, "epsilon", ppath, 1e-4);
    const std::vector<Element> dirs =
        elements_of(require_field(params, "directions", ppath), c.op.domain, at(ppath, "directions"));
    std::vector<Real> schedule = default_t_schedule();
    if (auto it = params.find("t_schedule"); it != params.end()) {
        if (!it->is_array() || it->empty()) {
            throw ConfigError(at(ppath, "t_schedule"), "expected a nonempty array");
        }
        schedule.clear();
        for (std::size_t i = 0; i < it->size(); ++i) {
            schedule.push_back(real_from_json((*it)[i], at(at(ppath, "t_schedule"), i)));
            if (schedule.back().is_zero()) {
                throw ConfigError(at(at(ppath, "t_schedule"), i), "t must be nonzero");
            }
        }
    }
    const LinearMap L = candidate_of(params, c.op, ppath).value_or(analytic_frechet(c.op, c.point));
    return {{}, "gateaux", [c, J, eps, dirs, schedule, L](Rng&) {
                SuiteOutcome out;
                for (const auto& v : dirs) {
                    GateauxWitness w = verify_gateaux(c.op, c.point, v, L, J, eps, schedule);
                    json rec = gateaux_to_json(w);
                    rec["direction"] = element_to_json(v);
                    rec["candidate"] = linmap_to_json(L);
                    out.add(std::move(rec), w.passed);
                }
                return out;
            }};
}

ParsedSuite parse_frechet(const json& suite, const std::string& path)
{
    OperatorCase c = operator_case(suite, path);
    const json& params = params_of(suite, path);
    const std::string ppath = at(path, "params");
    const IndexSet J = index_set_of(params, c.op.codomain, ppath);
    const std::vector<double> eps = epsilons_of(params, ppath, {0.5, 0.1, 0.01});
    VerifyOptions opt;
    opt.samples = count_field(params, "samples", ppath, 500);
    opt.kernel_samples = count_field(params, "kernel_samples", ppath, 50);
    opt.source = delta_source_of(params, ppath);
    const LinearMap L = candidate_of(params, c.op, ppath).value_or(analytic_frechet(c.op, c.point));
    return {{}, "frechet", [c, J, eps, opt, L](Rng& rng) {
                SuiteOutcome out;
                for (double e : eps) {
                    FrechetWitness w = verify_frechet(c.op, c.point, L, J, e, rng, opt);
                    json rec = frechet_to_json(w);
                    rec["candidate"] = linmap_to_json(L);
                    out.add(std::move(rec), w.passed);
                }
                return out;
            }};
}

ParsedSuite parse_order(const json& suite, const std::string& path)
{
    const json& params = params_of(suite, path);
    const std::string ppath = at(path, "params");
    const std::string cpath = at(ppath, "cases");
    const json& cs = require_field(params, "cases", ppath);
    if (!cs.is_array()) {
        throw ConfigError(cpath, "expected an array");
    }
    std::vector<OrderCase> cases;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        const std::string p = at(cpath, i);
        OperatorCase c = operator_case(cs[i], p);
        const json& claim = require_field(cs[i], "claim", p);
        static const std::set<std::string> claims{"credit", "max", "min", "increasing"};
        if (!claim.is_string() || claims.count(claim.get<std::string>()) == 0) {
            throw ConfigError(at(p, "claim"), "expected one of credit, max, min, increasing");
        }
        OrderCase oc{cs[i].value("name", "case " + std::to_string(i)),
                     c.op,
                     c.point,
                     claim.get<std::string>(),
                     elements_of(require_field(cs[i], "directions", p), c.op.domain, at(p, "directions")),
                     index_set_of(cs[i], c.op.codomain, p),
                     count_field(cs[i], "budget", p, 100)};
        cases.push_back(std::move(oc));
    }
    return {{}, "order", [cases](Rng& rng) {
                SuiteOutcome out;
                for (const auto& r : credit_necessity_suite(cases, rng)) {
                    out.add(order_case_to_json(r), r.passed);
                }
                return out;
            }};
}

ParsedSuite parse_fnorm(const json& suite, const std::string& path)
{
    OperatorCase c = operator_case(suite, path);
    const json& params = params_of(suite, path);
    const std::string ppath = at(path, "params");
    const IndexSet J = index_set_of(params, c.op.codomain, ppath);
    const double eps = positive_number(params, "epsilon", ppath, 0.1);
    if (eps >= 2) {
        throw ConfigError(at(ppath, "epsilon"), "must be below 2, the total F-norm weight times 2");
    }
    const std::size_t samples = count_field(params, "samples", ppath, 500);
    return {{}, "fnorm", [c, J, eps, samples](Rng& rng) {
                SuiteOutcome out;
                VerifyOptions opt;
                opt.samples = samples;
                const FNormForward fwd = fnorm_translate_forward(c.op, c.point, eps, rng, opt);
                const CheckReport check = fnorm_forward_check(c.op, c.point, fwd, rng, samples);
                out.add({{"direction", "forward"},
                         {"translation", fnorm_forward_to_json(fwd)},
                         {"check", check_to_json(check)},
                         {"passed", check.passed}},
                        check.passed);

                const FNormBackward bwd = fnorm_translate_backward(c.op, c.point, J, eps, rng, opt);
                VerifyOptions fixed = opt;
                fixed.source = DeltaSource::fixed;
                fixed.fixed = bwd.choice;
                const ContinuityWitness w = continuity_verify(c.op, c.point, J, eps, rng, fixed);
                out.add({{"direction", "backward"},
                         {"translation", fnorm_backward_to_json(bwd)},
                         {"witness", continuity_to_json(w)},
                         {"passed", w.passed}},
                        w.passed);
                return out;
            }};
}

ParsedSuite parse_suite(const json& suite, const std::string& path)
{
    if (!suite.is_object()) {
        throw ConfigError(path, "expected an object");
    }
    const json& name = require_field(suite, "name", path);
    if (!name.is_string() || name.get<std::string>().empty()) {
        throw ConfigError(at(path, "name"), "expected a nonempty string");
    }
    const json& command = require_field(suite, "command", path);
    if (!command.is_string()) {
        throw ConfigError(at(path, "command"), "expected a string");
    }
    static const std::map<std::string, ParsedSuite (*)(const json&, const std::string&)> parsers{
        {"axioms", parse_axioms},   {"continuity", parse_continuity}, {"gateaux", parse_gateaux},
        {"frechet", parse_frechet}, {"order", parse_order},           {"fnorm", parse_fnorm},
    };
    auto it = parsers.find(command.get<std::string>());
    if (it == parsers.end()) {
        throw ConfigError(at(path, "command"), "unknown command '" + command.get<std::string>() + "'");
    }
    ParsedSuite out = it->second(suite, path);
    out.name = name.get<std::string>();
    return out;
}

std::uint64_t seed_of(const json& config, const RunOptions& opt)
{
    if (opt.seed) {
        return *opt.seed;
    }
    const json& s = require_field(config, "seed", "");
    if (!s.is_number_integer() || s.get<long long>() < 0) {
        throw ConfigError("seed", "expected a nonnegative integer");
    }
    return s.get<std::uint64_t>();
}

const json& suites_of(const json& config)
{
    const json& s = require_field(config, "suites", "");
    if (!s.is_array()) {
        throw ConfigError("suites", "expected an array");
    }
    return s;
}

}  // namespace

const std::vector<std::string>& cli_commands()
{
    static const std::vector<std::string> commands{"axioms", "continuity", "gateaux", "frechet",
                                                   "order",  "fnorm",      "suite"};
    return commands;
}

json load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("<file>", "cannot open '" + path + "'");
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError("<file>", std::string("invalid JSON in '") + path + "': " + e.what());
    }
}

std::vector<std::pair<std::string, std::string>> list_suites(const json& config)
{
    std::vector<std::pair<std::string, std::string>> out;
    const json& suites = suites_of(config);
    for (std::size_t i = 0; i < suites.size(); ++i) {
        const std::string p = at("suites", i);
        const json& name = require_field(suites[i], "name", p);
        const json& command = require_field(suites[i], "command", p);
        out.emplace_back(name.is_string() ? name.get<std::string>() : name.dump(),
                         command.is_string() ? command.get<std::string>() : command.dump());
    }
    return out;
}

RunResult run_command(const std::string& command, const json& config, const RunOptions& opt)
{
    using clock = std::chrono::steady_clock;
    RunResult result;
    const auto& commands = cli_commands();
    if (std::find(commands.begin(), commands.end(), command) == commands.end()) {
        result.exit_code = kExitConfig;
        result.message = "unknown command '" + command + "'";
        return result;
    }

    std::uint64_t seed = 0;
    std::vector<ParsedSuite> selected;
    std::vector<std::uint64_t> seeds;
    try {
        if (!config.is_object()) {
            throw ConfigError("<root>", "expected an object");
        }
        seed = seed_of(config, opt);
        const json& suites = suites_of(config);
        Rng master(seed);
        std::set<std::string> names;
        bool matched = !opt.suite;
        for (std::size_t i = 0; i < suites.size(); ++i) {
            // Every suite consumes its seed, so a suite's stream does not depend on the filter.
            const std::uint64_t suite_seed = master.fork();
            ParsedSuite s = parse_suite(suites[i], at("suites", i));
            if (!names.insert(s.name).second) {
                throw ConfigError(at(at("suites", i), "name"), "duplicate suite name '" + s.name + "'");
            }
            if (opt.suite && s.name != *opt.suite) {
                continue;
            }
            matched = true;
            if (command != "suite" && s.command != command) {
                continue;
            }
            selected.push_back(std::move(s));
            seeds.push_back(suite_seed);
        }
        if (!matched) {
            throw ConfigError("--suite", "no suite named '" + *opt.suite + "'");
        }
    } catch (const ConfigError& e) {
        result.exit_code = kExitConfig;
        result.message = e.what();
        return result;
    }

    const auto start = clock::now();
    std::vector<std::future<std::pair<SuiteOutcome, double>>> futures;
    for (std::size_t i = 0; i < selected.size(); ++i) {
        futures.push_back(std::async(std::launch::async, [&run = selected[i].run, s = seeds[i]] {
            const auto t0 = clock::now();
            Rng rng(s);
            SuiteOutcome out = run(rng);
            const double ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
            return std::make_pair(std::move(out), ms);
        }));
    }

    json suites_out = json::array();
    std::size_t suites_failed = 0;
    std::size_t checks = 0;
    std::size_t checks_failed = 0;
    std::string run_error;
    for (std::size_t i = 0; i < selected.size(); ++i) {
        try {
            auto [out, ms] = futures[i].get();
            const bool passed = out.failed == 0;
            suites_failed += passed ? 0 : 1;
            checks += out.checks;
            checks_failed += out.failed;
            suites_out.push_back({{"name", selected[i].name},
                                  {"command", selected[i].command},
                                  {"seed", seeds[i]},
                                  {"passed", passed},
                                  {"checks", out.checks},
                                  {"failed", out.failed},
                                  {"wall_ms", ms},
                                  {"records", std::move(out.records)}});
        } catch (const std::exception& e) {
            if (run_error.empty()) {
                run_error = "suite '" + selected[i].name + "': " + e.what();
            }
        }
    }
    if (!run_error.empty()) {
        result.exit_code = kExitConfig;
        result.message = run_error;
        return result;
    }

    std::ostringstream msg;
    if (selected.empty()) {
        msg << "no suites run";
    } else {
        msg << selected.size() << " suite(s) run, " << selected.size() - suites_failed << " passed, " << suites_failed
            << " failed; " << checks - checks_failed << "/" << checks << " checks passed";
    }
    result.message = msg.str();
    result.exit_code = suites_failed == 0 ? kExitPass : kExitFailure;

    json echo = config;
    echo["seed"] = seed;
    result.report = {{"schema", kReportSchema},
                     {"version", kVersion},
                     {"command", command},
                     {"seed", seed},
                     {"config", echo},
                     {"suites", suites_out},
                     {"summary",
                      {{"suites_run", selected.size()},
                       {"suites_passed", selected.size() - suites_failed},
                       {"suites_failed", suites_failed},
                       {"checks", checks},
                       {"checks_failed", checks_failed},
                       {"passed", suites_failed == 0},
                       {"message", result.message}}},
                     {"wall_ms", std::chrono::duration<double, std::milli>(clock::now() - start).count()}};
    return result;
}

RunResult cmd_suite(const json& config, std::uint64_t seed)
{
    RunOptions opt;
    opt.seed = seed;
    return run_command("suite", config, opt);
}

json strip_timing(const json& report)
{
    if (report.is_object()) {
        json out = json::object();
        for (auto it = report.begin(); it != report.end(); ++it) {
            if (it.key() != "wall_ms") {
                out[it.key()] = strip_timing(it.value());
            }
        }
        return out;
    }
    if (report.is_array()) {
        json out = json::array();
        for (const auto& v : report) {
            out.push_back(strip_timing(v));
        }
        return out;
    }
    return report;
}

json builtin_paper_config()
{
    static const char* const text = R"JSON(
{
  "seed": 42,
  "suites": [
    {"name": "axioms-sigma-half", "command": "axioms",
     "space": {"space": "sigma_rho", "rho": 0.5}, "params": {"seminorms": 10, "samples": 100}},
    {"name": "axioms-s", "command": "axioms",
     "space": {"space": "s"}, "params": {"seminorms": 10, "samples": 100}},
    {"name": "axioms-schwartz", "command": "axioms",
     "space": {"space": "schwartz", "n": 1}, "params": {"seminorms": 6, "samples": 20}},

    {"name": "gateaux-P2-at-gaussian", "command": "gateaux",
     "operator": {"kind": "power", "params": {"m": 2}, "domain": {"space": "schwartz", "n": 1}},
     "point": {"coeffs": [1], "decay": 1},
     "params": {"J": [{"alpha": [0], "beta": [0]}, {"alpha": [1], "beta": [1]}], "epsilon": 1e-4,
                "directions": [{"coeffs": [0, 1], "decay": 1}]}},
    {"name": "gateaux-P1-identity", "command": "gateaux",
     "operator": {"kind": "power", "params": {"m": 1}, "domain": {"space": "schwartz", "n": 1}},
     "point": {"coeffs": [1], "decay": 1},
     "params": {"J": [{"alpha": [0], "beta": [0]}], "epsilon": 1e-6,
                "directions": [{"coeffs": [0, 1], "decay": 1}]}},
    {"name": "gateaux-fourier", "command": "gateaux",
     "operator": {"kind": "fourier"},
     "point": {"coeffs": [1], "decay": 1},
     "params": {"J": [{"alpha": [0], "beta": [0]}, {"alpha": [1], "beta": [0]}], "epsilon": 1e-6,
                "directions": [{"coeffs": [0, 1], "decay": 1}]}},
    {"name": "gateaux-Q2-at-(4,1)", "command": "gateaux",
     "operator": {"kind": "power", "params": {"m": 2}, "domain": {"space": "sigma_rho", "rho": 0.5}},
     "point": [4, 1],
     "params": {"J": [1, 2], "epsilon": 1e-3, "directions": [[1, 1]]}},
    {"name": "gateaux-Q3-at-(1)", "command": "gateaux",
     "operator": {"kind": "power", "params": {"m": 3}, "domain": {"space": "sigma_rho", "rho": 0.5}},
     "point": [1],
     "params": {"J": [1], "epsilon": 1e-3, "directions": [[1]]}},

    {"name": "continuity-D1", "command": "continuity",
     "operator": {"kind": "diff", "params": {"gamma": [1]}},
     "point": {"coeffs": [1], "decay": 1},
     "params": {"J": [{"alpha": [0], "beta": [0]}, {"alpha": [1], "beta": [1]}], "epsilons": [0.5, 0.1],
                "samples": 100}},
    {"name": "continuity-Q2-at-(4,1)", "command": "continuity",
     "operator": {"kind": "power", "params": {"m": 2}, "domain": {"space": "sigma_rho", "rho": 0.5}},
     "point": [4, 1],
     "params": {"J": [1, 2], "epsilons": [0.5, 0.1, 0.01], "samples": 200}},
    {"name": "continuity-R2-at-(3,tail 1)", "command": "continuity",
     "operator": {"kind": "power", "params": {"m": 2}, "domain": {"space": "s"}},
     "point": {"prefix": [3], "tail": 1},
     "params": {"J": [1, 2], "epsilons": [0.5, 0.1, 0.01], "samples": 200}},

    {"name": "frechet-Q2-at-(1)", "command": "frechet",
     "operator": {"kind": "power", "params": {"m": 2}, "domain": {"space": "sigma_rho", "rho": 0.5}},
     "point": [1],
     "params": {"J": [1], "epsilons": [0.1], "samples": 500}},
    {"name": "frechet-P2-at-gaussian", "command": "frechet",
     "operator": {"kind": "power", "params": {"m": 2}, "domain": {"space": "schwartz", "n": 1}},
     "point": {"coeffs": [1], "decay": 1},
     "params": {"J": [{"alpha": [0], "beta": [0]}], "epsilons": [0.5, 0.1], "samples": 100}},
    {"name": "frechet-P2-at-zero", "command": "frechet",
     "operator": {"kind": "power", "params": {"m": 2}, "domain": {"space": "schwartz", "n": 1}},
     "point": {"n": 1, "terms": []},
     "params": {"J": [{"alpha": [0], "beta": [0]}], "epsilons": [0.1], "samples": 100}},
    {"name": "frechet-R3-at-zero", "command": "frechet",
     "operator": {"kind": "power", "params": {"m": 3}, "domain": {"space": "s"}},
     "point": [],
     "params": {"J": [1, 2], "epsilons": [0.1], "samples": 500}},
    {"name": "frechet-cross-power-at-(2)", "command": "frechet",
     "operator": {"kind": "cross_power", "params": {"m": 2}, "domain": {"space": "sigma_rho", "rho": 0.5}},
     "point": [2],
     "params": {"J": [1], "epsilons": [0.1], "samples": 500}},

    {"name": "order-credit-points", "command": "order",
     "params": {"cases": [
       {"name": "P2 minimum at zero", "claim": "min", "budget": 200,
        "operator": {"kind": "power", "params": {"m": 2}, "domain": {"space": "schwartz", "n": 1}},
        "point": {"n": 1, "terms": []}, "directions": [{"coeffs": [1], "decay": 1}],
        "J": [{"alpha": [0], "beta": [0]}]},
       {"name": "P3 credit point without extremum", "claim": "credit",
        "operator": {"kind": "power", "params": {"m": 3}, "domain": {"space": "schwartz", "n": 1}},
        "point": {"n": 1, "terms": []}, "directions": [{"coeffs": [1], "decay": 1}],
        "J": [{"alpha": [0], "beta": [0]}]},
       {"name": "R3 credit point without extremum", "claim": "credit",
        "operator": {"kind": "power", "params": {"m": 3}, "domain": {"space": "s"}},
        "point": [], "directions": [{"prefix": [], "tail": 1}], "J": [1, 2, 3]},
       {"name": "Q2 increasing on the cone", "claim": "increasing", "budget": 100,
        "operator": {"kind": "power", "params": {"m": 2}, "domain": {"space": "sigma_rho", "rho": 0.5}},
        "point": [1], "directions": [[1, 1]], "J": [1, 2]}
     ]}},

    {"name": "fnorm-Q2-translation", "command": "fnorm",
     "operator": {"kind": "power", "params": {"m": 2}, "domain": {"space": "sigma_rho", "rho": 0.5}},
     "point": [1],
     "params": {"J": [1], "epsilon": 0.1, "samples": 500}}
  ]
}
)JSON";
    return json::parse(text);
}

}  // namespace fsem
