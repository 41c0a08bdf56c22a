// monadforge command-line entry point.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "monadforge/errors.hpp"
#include "monadforge/runner.hpp"

namespace {

std::string primary_name(const std::string& names) { return names.substr(0, names.find(',')); }

const char* const kCommands[][2] = {
    {"build", "build the banded monad matrices on X"},
    {"verify", "composition and fiberwise rank checks"},
    {"cohom", "line bundle cohomology table"},
    {"degree", "degrees and slopes against O(1,...,1)"},
    {"certify", "stability, simplicity or Hoppe certificate"},
    {"segre-table", "Segre coordinate table"},
    {"export", "Macaulay2 script for B*A = 0"},
};

// Flag name -> config key. Values are collected as strings and applied after
// the config file, so flags win.
const char* const kFlags[][3] = {
    {"--dims", "dims", "factor dimensions, e.g. 1,3,5"},
    {"--groups", "groups", "group label per factor"},
    {"--k", "k", "monad parameter k"},
    {"--band", "band", "reversed | paper-literal"},
    {"--table,--table-convention", "table", "clean | paper"},
    {"--q", "primes", "primes for exhaustive sweeps, e.g. 2,3"},
    {"--samples", "samples", "random rational points"},
    {"--seed", "seed", "random seed"},
    {"--budget", "budget", "point budget per sweep"},
    {"--radius", "radius", "twist box radius"},
    {"--what", "what", "stability | simplicity | hoppe"},
    {"--twist", "twist", "twist vector"},
    {"--c1", "c1", "first Chern class of a bundle"},
    {"--rank", "rank", "rank of a bundle"},
    {"--s", "s", "largest exterior power for hoppe"},
    {"--format", "format", "text | json"},
    {"--output", "output", "output file prefix"},
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"monadforge: banded monads on products of projective spaces"};
    app.set_version_flag("--version", monadforge::tool_version());
    app.require_subcommand(1);

    std::string config_path;
    bool cas = false;
    std::map<std::string, std::string> values;
    std::map<std::string, CLI::App*> subs;

    for (const auto& cmd : kCommands) {
        auto* sub = app.add_subcommand(cmd[0], cmd[1]);
        sub->add_option("--config", config_path, "key = value config file");
        for (const auto& flag : kFlags) sub->add_option(flag[0], values[flag[1]], flag[2]);
        sub->add_flag("--cas", cas, "also write the Macaulay2 script (build)");
        subs[cmd[0]] = sub;
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return monadforge::exit_code::usage;
    }

    std::string command;
    CLI::App* active = nullptr;
    for (const auto& [name, sub] : subs) {
        if (sub->parsed()) {
            command = name;
            active = sub;
        }
    }

    monadforge::RunConfig config;
    try {
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) {
                std::cerr << "error: cannot read " << config_path << "\n";
                return monadforge::exit_code::io;
            }
            std::stringstream text;
            text << in.rdbuf();
            config = monadforge::parse_config_text(text.str());
        }
        config.command = command;
        for (const auto& flag : kFlags) {
            if (active->count(primary_name(flag[0])) > 0) monadforge::apply_config_value(config, flag[1], values[flag[1]]);
        }
        if (cas) config.cas = true;
    } catch (const monadforge::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return monadforge::exit_code::usage;
    }
    return monadforge::run_and_write(config);
}
