#pragma once

#include <array>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "octupolar/config.hpp"
#include "octupolar/orientation.hpp"

namespace octupolar::cli {

/// lo:hi:n inclusive grid; n = 1 collapses to lo.
std::vector<double> parse_grid(const std::string& spec);

struct TensorInput {
    std::optional<std::array<double, 3>> cylinder;  // k, rho, chi
    std::optional<std::array<double, 7>> raw;       // alpha0..beta3
    std::string tensor_file;
    bool degrees = false;

    /// Resolve to oriented params (raw/file inputs go through orient()).
    OrientedParams resolve() const;
    int modes_given() const;
};

struct CommonArgs {
    std::string config_path;
    bool degrees = false;
};

int cmd_analyze(const TensorInput& in, const CommonArgs& common, const std::string& json_out,
                std::ostream& out, std::ostream& err);

int cmd_phase(const TensorInput& in, const CommonArgs& common, std::ostream& out,
              std::ostream& err);

int cmd_sweep(const std::string& k_spec, const std::string& rho_spec, const std::string& chi_spec,
              const std::string& out_path, const CommonArgs& common, std::ostream& err);

int cmd_separatrix(const std::string& chi_spec, const std::string& rho_spec,
                   const std::string& out_dir, const CommonArgs& common, std::ostream& err);

int cmd_plotdata(const TensorInput& in, const CommonArgs& common, const std::string& kind,
                 int resolution, const std::string& out_path, std::ostream& err);

int cmd_group(bool verify, std::ostream& out, std::ostream& err);

int cmd_oracle(const TensorInput& in, const CommonArgs& common, int nlat, int nlon,
               const std::string& json_out, std::ostream& out, std::ostream& err);

}  // namespace octupolar::cli
