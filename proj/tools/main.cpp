#include <CLI11.hpp>
#include <iostream>

#include "octupolar/cli_commands.hpp"

using namespace octupolar;

namespace {

void add_input_options(CLI::App* cmd, cli::TensorInput& in) {
    auto* cyl = cmd->add_option("--cylinder", "oriented parameters K RHO CHI")->expected(3);
    auto* raw = cmd->add_option("--raw", "raw components a0 a1 a2 a3 b1 b2 b3")->expected(7);
    auto* file = cmd->add_option("--tensor", in.tensor_file, "file with the 7 raw components");
    cyl->each([&in, cyl](const std::string&) {
        const auto& r = cyl->results();
        if (r.size() == 3) in.cylinder = {std::stod(r[0]), std::stod(r[1]), std::stod(r[2])};
    });
    raw->each([&in, raw](const std::string&) {
        const auto& r = raw->results();
        if (r.size() == 7)
            in.raw = {std::stod(r[0]), std::stod(r[1]), std::stod(r[2]), std::stod(r[3]),
                      std::stod(r[4]), std::stod(r[5]), std::stod(r[6])};
    });
    cyl->excludes(raw);
    cyl->excludes(file);
    raw->excludes(file);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"octupolar tensor spectrum toolkit"};
    app.require_subcommand(1);

    cli::CommonArgs common;
    app.add_option("--config", common.config_path, "key=value config file")
        ->envname("OCTUPOLAR_CONFIG");
    app.add_flag("--degrees", common.degrees, "angles in degrees on the CLI and in tables");

    cli::TensorInput in_analyze, in_phase, in_plot, in_oracle;
    std::string json_out, out_path, out_dir, kind = "contour";
    std::string k_spec, rho_spec, chi_spec;
    int resolution = 128, nlat = 256, nlon = 512;
    bool verify = false;

    auto* analyze = app.add_subcommand("analyze", "critical point table for one tensor");
    add_input_options(analyze, in_analyze);
    analyze->add_option("--json", json_out, "also write the report as JSON");

    auto* phase = app.add_subcommand("phase", "one-line phase and symmetry label");
    add_input_options(phase, in_phase);

    auto* sweep = app.add_subcommand("sweep", "CSV of counts over a parameter grid");
    sweep->add_option("--k", k_spec, "K grid lo:hi:n")->required();
    sweep->add_option("--rho", rho_spec, "rho grid lo:hi:n")->required();
    sweep->add_option("--chi", chi_spec, "chi grid lo:hi:n")->required();
    sweep->add_option("--out", out_path, "output CSV path")->required();

    auto* sep = app.add_subcommand("separatrix", "trace separatrix sections");
    sep->add_option("--chi", chi_spec, "chi grid lo:hi:n")->required();
    sep->add_option("--rho", rho_spec, "rho grid lo:hi:n")->required();
    sep->add_option("--out", out_dir, "output directory")->required();

    auto* plot = app.add_subcommand("plotdata", "contour / polar plot data export");
    add_input_options(plot, in_plot);
    plot->add_option("--kind", kind, "contour|polar");
    plot->add_option("--res", resolution, "latitude resolution");
    plot->add_option("--out", out_path, "output CSV path")->required();

    auto* group = app.add_subcommand("group", "tetrahedral group data");
    group->add_flag("--verify", verify, "recompute and diff the multiplication table");

    auto* oracle = app.add_subcommand("oracle", "grid-oracle spectrum (ground truth)");
    add_input_options(oracle, in_oracle);
    oracle->add_option("--nlat", nlat, "oracle grid latitudes (>= 256)");
    oracle->add_option("--nlon", nlon, "oracle grid longitudes (>= 512)");
    oracle->add_option("--json", json_out, "also write the report as JSON");

    CLI11_PARSE(app, argc, argv);

    in_analyze.degrees = in_phase.degrees = in_plot.degrees = in_oracle.degrees = common.degrees;

    if (analyze->parsed())
        return cli::cmd_analyze(in_analyze, common, json_out, std::cout, std::cerr);
    if (phase->parsed()) return cli::cmd_phase(in_phase, common, std::cout, std::cerr);
    if (sweep->parsed())
        return cli::cmd_sweep(k_spec, rho_spec, chi_spec, out_path, common, std::cerr);
    if (sep->parsed()) return cli::cmd_separatrix(chi_spec, rho_spec, out_dir, common, std::cerr);
    if (plot->parsed())
        return cli::cmd_plotdata(in_plot, common, kind, resolution, out_path, std::cerr);
    if (group->parsed()) return cli::cmd_group(verify, std::cout, std::cerr);
    if (oracle->parsed())
        return cli::cmd_oracle(in_oracle, common, nlat, nlon, json_out, std::cout, std::cerr);
    return 1;
}
