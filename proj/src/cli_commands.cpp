#include "octupolar/cli_commands.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <iomanip>
#include <sstream>

#include "octupolar/errors.hpp"
#include "octupolar/group.hpp"
#include "octupolar/report_io.hpp"
#include "octupolar/separatrix.hpp"
#include "octupolar/solver.hpp"

namespace octupolar::cli {

namespace fs = std::filesystem;

std::vector<double> parse_grid(const std::string& spec) {
    double lo = 0, hi = 0;
    int n = 0;
    char c1 = 0, c2 = 0;
    std::istringstream ss(spec);
    if (!(ss >> lo >> c1 >> hi >> c2 >> n) || c1 != ':' || c2 != ':' || n < 1)
        throw std::runtime_error("bad grid spec '" + spec + "' (expected lo:hi:n)");
    std::vector<double> g;
    if (n == 1) {
        g.push_back(lo);
        return g;
    }
    for (int i = 0; i < n; ++i) g.push_back(lo + (hi - lo) * i / (n - 1));
    return g;
}

int TensorInput::modes_given() const {
    return (cylinder ? 1 : 0) + (raw ? 1 : 0) + (tensor_file.empty() ? 0 : 1);
}

OrientedParams TensorInput::resolve() const {
    if (modes_given() != 1)
        throw std::runtime_error("exactly one of --cylinder / --raw / --tensor is required");
    const double af = degrees ? kPi / 180.0 : 1.0;
    if (cylinder) return {(*cylinder)[0], (*cylinder)[1], (*cylinder)[2] * af};
    OctupolarTensor t;
    if (raw) {
        t = {(*raw)[0], (*raw)[1], (*raw)[2], (*raw)[3], (*raw)[4], (*raw)[5], (*raw)[6]};
    } else {
        std::ifstream in(tensor_file);
        if (!in) throw std::runtime_error("cannot open tensor file: " + tensor_file);
        std::array<double, 7> v{};
        for (double& x : v)
            if (!(in >> x)) throw std::runtime_error("tensor file must hold 7 numbers");
        t = {v[0], v[1], v[2], v[3], v[4], v[5], v[6]};
    }
    return orient(t).params;
}

namespace {

int run_guarded(std::ostream& err, const std::function<int()>& body) {
    try {
        return body();
    } catch (const OctupolarError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace

int cmd_analyze(const TensorInput& in, const CommonArgs& common, const std::string& json_out,
                std::ostream& out, std::ostream& err) {
    return run_guarded(err, [&] {
        const SolverConfig cfg = SolverConfig::resolve(common.config_path);
        const SpectrumReport rep = solve_spectrum(in.resolve(), cfg);
        print_spectrum_table(out, rep, common.degrees);
        if (!json_out.empty()) write_file_atomic(json_out, spectrum_to_json(rep));
        return 0;
    });
}

int cmd_phase(const TensorInput& in, const CommonArgs& common, std::ostream& out,
              std::ostream& err) {
    return run_guarded(err, [&] {
        const SolverConfig cfg = SolverConfig::resolve(common.config_path);
        const OrientedParams p = in.resolve();
        const SpectrumReport rep = solve_spectrum(p, cfg);
        const SymmetryReport sym = detect_symmetry(p);
        out << sym.group_name << ", " << rep.phase << ", " << rep.n_max << " maxima, variant "
            << (rep.absolute_max_at_pole ? "+" : "-") << "\n";
        return 0;
    });
}

int cmd_sweep(const std::string& k_spec, const std::string& rho_spec, const std::string& chi_spec,
              const std::string& out_path, const CommonArgs& common, std::ostream& err) {
    return run_guarded(err, [&] {
        const SolverConfig cfg = SolverConfig::resolve(common.config_path);
        const std::vector<double> ks = parse_grid(k_spec);
        const std::vector<double> rhos = parse_grid(rho_spec);
        const std::vector<double> chis = parse_grid(chi_spec);
        const double af = common.degrees ? kPi / 180.0 : 1.0;

        struct Cell {
            double k, rho, chi;
        };
        std::vector<Cell> cells;
        for (double k : ks)
            for (double rho : rhos)
                for (double chi : chis) cells.push_back({k, rho, chi * af});

        const std::string spec_id = k_spec + "|" + rho_spec + "|" + chi_spec;
        const std::string partial = out_path + ".partial";
        const std::string ckpt = out_path + ".ckpt";
        size_t done = 0;
        {
            std::ifstream ck(ckpt);
            std::string prev_id;
            if (ck && std::getline(ck, prev_id) && prev_id == spec_id && (ck >> done) &&
                fs::exists(partial)) {
                // resume after 'done' rows
            } else {
                done = 0;
                std::ofstream head(partial, std::ios::trunc | std::ios::binary);
                head << "k,rho,chi,count,n_max,phase\r\n";
            }
        }

        auto row_of = [&](const Cell& c) {
            const SpectrumReport rep = solve_spectrum({c.k, c.rho, c.chi}, cfg);
            const size_t n = rep.points.size();
            return format_double(c.k) + "," + format_double(c.rho) + "," + format_double(c.chi) +
                   "," + std::to_string(n) + "," + std::to_string(rep.n_max) + "," +
                   csv_escape(rep.phase) + "\r\n";
        };

        const size_t chunk = 16;
        std::ofstream body(partial, std::ios::app | std::ios::binary);
        for (size_t base = done; base < cells.size(); base += chunk) {
            const size_t end = std::min(base + chunk, cells.size());
            std::vector<std::future<std::string>> futs;
            for (size_t i = base; i < end; ++i)
                futs.push_back(std::async(std::launch::async, row_of, cells[i]));
            for (auto& f : futs) body << f.get();
            body.flush();
            std::ofstream ck(ckpt, std::ios::trunc);
            ck << spec_id << "\n" << end << "\n";
        }
        body.close();
        fs::rename(partial, out_path);
        fs::remove(ckpt);
        return 0;
    });
}

int cmd_separatrix(const std::string& chi_spec, const std::string& rho_spec,
                   const std::string& out_dir, const CommonArgs& common, std::ostream& err) {
    return run_guarded(err, [&] {
        const SolverConfig cfg = SolverConfig::resolve(common.config_path);
        const double af = common.degrees ? kPi / 180.0 : 1.0;
        std::vector<double> chis = parse_grid(chi_spec);
        for (double& c : chis) c *= af;
        const std::vector<double> rhos = parse_grid(rho_spec);
        const SeparatrixSurface surf = trace_surface(chis, rhos, cfg);
        fs::create_directories(out_dir);
        for (size_t i = 0; i < surf.sections.size(); ++i) {
            std::ostringstream name;
            name << "section_" << std::setw(3) << std::setfill('0') << i << ".csv";
            write_file_atomic((fs::path(out_dir) / name.str()).string(),
                              section_to_csv(surf.sections[i]));
        }
        write_file_atomic((fs::path(out_dir) / "surface.json").string(), surface_to_json(surf));
        return 0;
    });
}

int cmd_plotdata(const TensorInput& in, const CommonArgs& common, const std::string& kind,
                 int resolution, const std::string& out_path, std::ostream& err) {
    return run_guarded(err, [&] {
        const SolverConfig cfg = SolverConfig::resolve(common.config_path);
        const OrientedParams p = in.resolve();
        const OctupolarTensor t = from_cylinder(p);
        const SpectrumReport rep = solve_spectrum(p, cfg);
        std::string out;
        if (kind == "contour") {
            out = "record,theta1,theta2,value\r\n";
            for (int i = 0; i < resolution; ++i) {
                const double t1 = -kPi / 2.0 + i * kPi / (resolution - 1);
                for (int j = 0; j < 2 * resolution; ++j) {
                    const double t2 = -kPi + j * 2.0 * kPi / (2 * resolution - 1);
                    out += "grid," + format_double(t1) + "," + format_double(t2) + "," +
                           format_double(spherical_potential(t, {t1, t2})) + "\r\n";
                }
            }
            for (const CriticalPoint& cp : rep.points)
                out += "critical," + format_double(cp.location.theta1) + "," +
                       format_double(cp.location.theta2) + "," + format_double(cp.lambda) + "\r\n";
        } else if (kind == "polar") {
            // surface swept by Phi(e_r) e_r over a UV sphere grid
            out = "record,theta1,theta2,x,y,z\r\n";
            for (int i = 0; i < resolution; ++i) {
                const double t1 = -kPi / 2.0 + i * kPi / (resolution - 1);
                for (int j = 0; j < 2 * resolution; ++j) {
                    const double t2 = -kPi + j * 2.0 * kPi / (2 * resolution - 1);
                    const Vec3 er = SphericalPoint{t1, t2}.cartesian();
                    const Vec3 q = potential(t, er) * er;
                    out += "grid," + format_double(t1) + "," + format_double(t2) + "," +
                           format_double(q.x) + "," + format_double(q.y) + "," +
                           format_double(q.z) + "\r\n";
                }
            }
            for (const CriticalPoint& cp : rep.points) {
                const Vec3 er = cp.location.cartesian();
                const Vec3 q = cp.lambda * er;
                out += "critical," + format_double(cp.location.theta1) + "," +
                       format_double(cp.location.theta2) + "," + format_double(q.x) + "," +
                       format_double(q.y) + "," + format_double(q.z) + "\r\n";
            }
        } else {
            throw std::runtime_error("plotdata kind must be 'contour' or 'polar'");
        }
        write_file_atomic(out_path, out);
        return 0;
    });
}

int cmd_group(bool verify, std::ostream& out, std::ostream& err) {
    return run_guarded(err, [&] {
        const auto& es = td_elements();
        out << std::setprecision(15);
        for (const GroupElement& e : es) {
            out << "M" << e.id << " (det " << (e.det_sign > 0 ? "+1" : "-1") << ")\n";
            for (int r = 0; r < 3; ++r)
                out << "  [" << e.matrix(r, 0) << ", " << e.matrix(r, 1) << ", " << e.matrix(r, 2)
                    << "]\n";
        }
        out << "multiplication table (recomputed from products):\n";
        const MulTable& mt = multiplication_table();
        for (int i = 0; i < 24; ++i) {
            for (int j = 0; j < 24; ++j) out << std::setw(3) << mt[i][j];
            out << "\n";
        }
        out << "subgroups:\n";
        for (const Subgroup& g : subgroup_lattice()) {
            out << "  " << g.name << " = {";
            for (size_t i = 0; i < g.ids.size(); ++i) out << (i ? "," : "") << g.ids[i];
            out << "}";
            if (g.fixed_axis)
                out << "  axis (" << g.fixed_axis->x << ", " << g.fixed_axis->y << ", "
                    << g.fixed_axis->z << ")";
            out << "\n";
        }
        if (verify) {
            const MulTable& tr = transcribed_multiplication_table();
            int match = 0;
            for (int i = 0; i < 24; ++i)
                for (int j = 0; j < 24; ++j)
                    if (mt[i][j] == tr[i][j]) ++match;
            out << "verify: recomputed vs transcribed table: " << match << "/576 entries match\n";
            bool ortho = true;
            for (const GroupElement& e : es)
                ortho = ortho && e.matrix.is_orthogonal(1e-14) &&
                        std::abs(e.matrix.det() - e.det_sign) < 1e-12;
            out << "verify: orthogonality and determinants: " << (ortho ? "ok" : "FAILED") << "\n";
            bool closed = true;
            for (const Subgroup& g : subgroup_lattice()) closed = closed && is_closed(g.ids);
            out << "verify: subgroup closure: " << (closed ? "ok" : "FAILED") << "\n";
            out << "verify: G8 normal: " << (is_normal({1, 10, 11, 12}) ? "ok" : "FAILED") << "\n";
            if (match != 576 || !ortho || !closed || !is_normal({1, 10, 11, 12})) return 3;
        }
        return 0;
    });
}

int cmd_oracle(const TensorInput& in, const CommonArgs& common, int nlat, int nlon,
               const std::string& json_out, std::ostream& out, std::ostream& err) {
    return run_guarded(err, [&] {
        const SpectrumReport rep = oracle_spectrum(in.resolve(), nlat, nlon);
        print_spectrum_table(out, rep, common.degrees);
        if (!json_out.empty()) write_file_atomic(json_out, spectrum_to_json(rep));
        return 0;
    });
}

}  // namespace octupolar::cli
