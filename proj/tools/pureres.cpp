#include "pureres/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

int emit(const pureres::CommandResult& result, const std::string& json_path)
{
    (result.exit_code == pureres::kExitError ? std::cerr : std::cout) << result.text;
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) {
            std::cerr << "error: cannot write " << json_path << '\n';
            return pureres::kExitError;
        }
        out << result.json << '\n';
    }
    return result.exit_code;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Initial-form complexes and purity certificates for resolutions over power series rings"};
    app.require_subcommand(1);

    std::string file;
    std::string json_path;
    pureres::CommandOptions options;
    std::uint64_t seed = 0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("file", file, "complex file")->required()->check(CLI::ExistingFile);
        sub->add_option("--json", json_path, "write the report document to this path");
    };
    auto add_hilbert = [&](CLI::App* sub) {
        sub->add_option("--kmax", options.hilbert.kmax, "truncation depth")->capture_default_str();
        sub->add_option("--window", options.hilbert.window, "stabilization window (default n + 2)");
    };

    auto* check = app.add_subcommand("check", "certify whether G_m(M) has a pure resolution");
    add_common(check);
    add_hilbert(check);
    check->add_flag("--oracle", options.oracle, "compare with the minimal graded resolution of coker in(phi_1)");
    auto* seed_opt = check->add_option("--seed", seed, "run basis-change invariance trials from this seed");

    auto* initial = app.add_subcommand("initial", "print the initial-form complex");
    add_common(initial);

    auto* hilbert = app.add_subcommand("hilbert", "Hilbert-Samuel lengths, dimension and multiplicity");
    add_common(hilbert);
    add_hilbert(hilbert);

    auto* betti = app.add_subcommand("betti", "Betti table of coker in(phi_1)");
    add_common(betti);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return pureres::kExitError;
    }

    if (check->parsed()) {
        if (seed_opt->count() > 0)
            options.seed = seed;
        return emit(pureres::cmd_check(file, options), json_path);
    }
    if (initial->parsed())
        return emit(pureres::cmd_initial(file), json_path);
    if (hilbert->parsed())
        return emit(pureres::cmd_hilbert(file, options), json_path);
    return emit(pureres::cmd_betti(file), json_path);
}
