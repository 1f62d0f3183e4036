// fracdyn <simulate|phase|converge> [--config <path>] --out <path> [--set key=value]...

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "fracdyn/cli/config.hpp"
#include "fracdyn/cli/run.hpp"

namespace {

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw fracdyn::cli::ConfigError("cannot read config file " + path);
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

} // namespace

int main(int argc, char** argv)
{
    using namespace fracdyn::cli;

    CLI::App app{"Fractional Adams-Bashforth-Moulton solver for the hereditary Dubovsky model"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    std::vector<std::string> overrides;
    bool print_config = false;

    const std::pair<const char*, const char*> modes[] = {
        {"simulate", "write the trajectory as t,x,y"},
        {"phase", "write the phase-plane curve as x,y"},
        {"converge", "write the Runge error and order table"},
    };
    for (const auto& [name, description] : modes) {
        auto* sub = app.add_subcommand(name, description);
        sub->add_option("--config", config_path, "JSON configuration file");
        sub->add_option("--out", out_path, "CSV output file");
        sub->add_option("--set", overrides, "key=value override, applied in order")
            ->allow_extra_args(false);
        sub->add_flag("--print-config", print_config, "print the effective configuration");
    }

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_validation;
    }

    const std::string mode_name = app.get_subcommands().front()->get_name();

    RunConfig cfg;
    try {
        nlohmann::json doc = config_path.empty() ? nlohmann::json::object()
                                                 : parse_document(read_file(config_path));
        if (!doc.is_object())
            throw ConfigError("configuration must be a JSON object");
        for (const auto& assignment : overrides)
            apply_override(doc, assignment);
        doc["mode"] = mode_name;
        if (!out_path.empty())
            doc["output_path"] = out_path;
        cfg = config_from_json(doc);
    }
    catch (const std::invalid_argument& e) {
        std::cerr << "fracdyn: invalid configuration: " << e.what() << '\n';
        return exit_validation;
    }

    if (print_config)
        std::cout << serialize_config(cfg) << '\n';
    return run(cfg, std::cerr);
}
