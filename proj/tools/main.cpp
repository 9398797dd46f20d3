#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "oplat/cli.hpp"

namespace {

struct Args {
    std::string file;
    std::uint64_t seed = 0;
    int samples = 64;
    std::string field = "Q";
    std::string out;
    bool pretty = false;
};

CLI::App* add_command(CLI::App& app, const std::string& name, const std::string& desc,
                      Args& args) {
    CLI::App* cmd = app.add_subcommand(name, desc);
    cmd->add_option("file", args.file, "JSON problem file")->required();
    cmd->add_option("--seed", args.seed, "seed for every randomized step (default 0)");
    cmd->add_option("--samples", args.samples,
                    "sample/case count for randomized steps (default 64)");
    cmd->add_option("--field", args.field, "coefficient field: Q or Qi")
        ->check(CLI::IsMember({"Q", "Qi"}));
    cmd->add_option("--out", args.out, "write the report to this path instead of stdout");
    cmd->add_flag("--pretty", args.pretty, "indent the JSON report");
    return cmd;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "oplat: exact kernel maps, kernel sets, bilattices, rank-one decompositions and Lie\n"
        "module checks for operators relative to finite subspace lattices and nests"};
    app.require_subcommand(1);

    Args args;
    const std::vector<std::pair<std::string, std::string>> commands = {
        {"kernel-set", "kernel map and kernel set of the operator over the lattice/nest"},
        {"decompose", "kernel-set-aligned rank-one decomposition over a nest"},
        {"bil", "exhaustive annihilation bilattice of the operator"},
        {"lie-closure", "smallest Lie nest-algebra module containing the generators"},
        {"decomposable", "decomposability of the operator inside a generated Lie module"},
        {"check-invariants", "seeded random property suite over all modules"},
    };
    for (const auto& [name, desc] : commands) add_command(app, name, desc, args);

    CLI11_PARSE(app, argc, argv);
    CLI::App* cmd = app.get_subcommands().front();

    std::ifstream in(args.file, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot read '" << args.file << "'\n";
        return 2;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();

    oplat::CliOptions options;
    if (cmd->count("--seed")) options.seed = args.seed;
    if (cmd->count("--samples")) options.samples = args.samples;
    if (cmd->count("--field")) options.field = oplat::field_from_name(args.field);

    try {
        oplat::CommandResult result =
            oplat::run_command(cmd->get_name(), buffer.str(), options);
        std::string text = args.pretty ? result.report.dump(2) : result.report.dump();
        if (args.out.empty()) {
            std::cout << text << "\n";
        } else {
            std::ofstream out(args.out, std::ios::binary);
            if (!out) {
                std::cerr << "error: cannot write '" << args.out << "'\n";
                return 2;
            }
            out << text << "\n";
        }
        return result.exit_code;
    } catch (const oplat::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    }
}
