#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "transversal/runner.hpp"

using namespace transversal;

namespace {

struct CliFlags {
    bool jsonMode = false;
    int jobs = 1;
    int pmax = -1, qmax = -1, nmax = -1, dmax = -1;

    RunOptions to_run_options() const
    {
        RunOptions opts;
        opts.checks.jobs = jobs;
        if (pmax > 0)
            opts.checks.pmax = pmax;
        if (qmax > 0)
            opts.checks.qmax = qmax;
        if (nmax > 0)
            opts.checks.nmax = nmax;
        if (dmax > 0)
            opts.checks.dmax = dmax;
        return opts;
    }
};

void add_bound_flags(CLI::App* cmd, CliFlags& flags)
{
    cmd->add_flag("--json", flags.jsonMode, "emit JSON reports");
    cmd->add_option("--jobs", flags.jobs, "fan out independent cells of one command");
    cmd->add_option("--pmax", flags.pmax, "default p bound");
    cmd->add_option("--qmax", flags.qmax, "default q bound");
    cmd->add_option("--nmax", flags.nmax, "default total-degree bound");
    cmd->add_option("--dmax", flags.dmax, "default internal-degree bound");
}

// 0 = ok, 1 = parse/type error, 2 = internal disagreement
int run_one_script(const std::string& text, const RunOptions& opts, bool jsonMode,
                   nlohmann::json* jsonOut)
{
    SessionScript script = parse_session(text);
    std::vector<Report> reports = run_session(script, opts);
    bool disagreement = false;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& rep : reports) {
        disagreement = disagreement || rep.internalDisagreement;
        if (jsonMode)
            arr.push_back(report_to_json(rep));
        else
            std::cout << render_report_text(rep);
    }
    if (jsonOut)
        *jsonOut = std::move(arr);
    return disagreement ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"transversal: Rees algebras, relation types, Tor, and normal transversality "
                 "checks over QQ"};
    app.require_subcommand(1);

    CliFlags runFlags, selfFlags;
    std::string scriptPath;

    CLI::App* runCmd = app.add_subcommand("run", "execute a session script");
    runCmd->add_option("file", scriptPath, "session script path")->required();
    add_bound_flags(runCmd, runFlags);

    CLI::App* selftestCmd = app.add_subcommand("selftest", "run the built-in fixture suite");
    add_bound_flags(selftestCmd, selfFlags);

    CLI11_PARSE(app, argc, argv);

    try {
        if (runCmd->parsed()) {
            std::ifstream in(scriptPath);
            if (!in) {
                std::cerr << "error: cannot open '" << scriptPath << "'\n";
                return 1;
            }
            std::stringstream ss;
            ss << in.rdbuf();
            nlohmann::json arr;
            int rc = run_one_script(ss.str(), runFlags.to_run_options(), runFlags.jsonMode,
                                    runFlags.jsonMode ? &arr : nullptr);
            if (runFlags.jsonMode)
                std::cout << arr.dump(2) << "\n";
            return rc;
        }

        // selftest
        int rc = 0;
        nlohmann::json suites = nlohmann::json::array();
        for (const auto& [name, text] : selftest_scripts()) {
            if (!selfFlags.jsonMode)
                std::cout << "=== " << name << " ===\n";
            nlohmann::json arr;
            int one = run_one_script(text, selfFlags.to_run_options(), selfFlags.jsonMode,
                                     selfFlags.jsonMode ? &arr : nullptr);
            rc = std::max(rc, one);
            if (selfFlags.jsonMode)
                suites.push_back(nlohmann::json{{"script", name}, {"reports", arr}});
        }
        if (selfFlags.jsonMode) {
            nlohmann::json doc{{"schema", 1}, {"engine", kEngineVersion}, {"selftest", suites}};
            std::cout << doc.dump(2) << "\n";
        }
        return rc;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const CommandError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
