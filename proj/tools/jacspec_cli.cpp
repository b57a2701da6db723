// jacspec command-line interface
//
//   spectrum        scan a window for eigenvalues of a model
//   eigvec          eigenvector components at a given z
//   verify          run named identity-verification suites
//   oracle-compare  characteristic-function zeros vs truncated-matrix oracle
//
// stdout carries a machine-readable report (JSON by default, CSV on
// request); stderr carries diagnostics.  Exit codes: 0 all checks within
// tolerance, 1 numeric failure, 2 usage error.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <limits>
#include <map>
#include <sstream>
#include <string>

#include "jacspec/models.hpp"
#include "jacspec/report.hpp"
#include "jacspec/spectral.hpp"
#include "jacspec/verify.hpp"

namespace {

using namespace jacspec;

std::map<std::string, double> parse_params(const std::string& s) {
    std::map<std::string, double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("--params", "expected key=value, got '" + item + "'");
        out[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
    }
    return out;
}

double need(const std::map<std::string, double>& p, const std::string& key) {
    const auto it = p.find(key);
    if (it == p.end()) throw CLI::ValidationError("--params", "missing parameter '" + key + "'");
    return it->second;
}

JacobiModel make_model(const std::string& name, const std::map<std::string, double>& p) {
    if (name == "coulomb") return coulomb_model({need(p, "mu"), need(p, "nu")});
    if (name == "confluent")
        return confluent_model({need(p, "alpha"), need(p, "beta"), need(p, "gamma")});
    if (name == "qbessel") return qbessel_model({need(p, "beta"), need(p, "q")});
    if (name == "qconfluent")
        return qconfluent_model({need(p, "sigma"), need(p, "gamma"), need(p, "q")});
    throw CLI::ValidationError("--model", "unknown model '" + name + "'");
}

Json params_json(const std::map<std::string, double>& p) {
    Json j = Json::object();
    for (const auto& [k, v] : p) j[k] = v;
    return j;
}

Json tolerances_json(const ToleranceConfig& cfg) {
    Json j;
    j["work_tol"] = cfg.work_tol;
    j["root_tol"] = cfg.root_tol;
    j["scan_points"] = cfg.scan_points;
    j["truncation_N"] = cfg.truncation_N;
    return j;
}

struct Clock {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    }
};

void emit(const Report& rep, const std::string& format, const std::string& csv_body) {
    if (format == "csv")
        std::cout << csv_body;
    else
        std::cout << rep.to_json().dump(2) << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"jacspec: spectra of explicitly solvable Jacobi matrices"};
    app.require_subcommand(1);

    std::string model_name, params_str, window_str, output = "json", suite = "all";
    double z_at = 0.0, compare_tol = 1e-8, margin = 1e-6;
    long kmax = 40;
    std::uint64_t seed = kVerifySeed;
    ToleranceConfig cfg;
    if (const char* env = std::getenv("JS_TOL")) cfg.work_tol = std::atof(env);

    auto add_model_opts = [&](CLI::App* cmd, bool with_window) {
        cmd->add_option("--model", model_name, "coulomb|confluent|qbessel|qconfluent")
            ->required();
        cmd->add_option("--params", params_str, "comma separated key=value list")->required();
        if (with_window)
            cmd->add_option("--window", window_str, "lo,hi real scan window")->required();
        cmd->add_option("--N", cfg.truncation_N, "truncation order for oracles/residuals");
        cmd->add_option("--scan-points", cfg.scan_points, "uniform backstop grid size");
        cmd->add_option("--root-tol", cfg.root_tol, "bisection width for refined roots");
        cmd->add_option("--work-tol", cfg.work_tol, "working tolerance (env JS_TOL)");
        cmd->add_option("--output", output, "json|csv");
    };

    auto* sp = app.add_subcommand("spectrum", "eigenvalues of a model in a window");
    add_model_opts(sp, true);

    auto* ev = app.add_subcommand("eigvec", "eigenvector components at z");
    add_model_opts(ev, false);
    ev->add_option("--z", z_at, "eigenvalue (or trial point)")->required();
    ev->add_option("--kmax", kmax, "number of components");

    auto* vf = app.add_subcommand("verify", "run identity verification suites");
    vf->add_option("--suite", suite, "suite name or 'all'");
    vf->add_option("--seed", seed, "random seed for the drawn cases");
    vf->add_option("--work-tol", cfg.work_tol, "working tolerance (env JS_TOL)");
    vf->add_option("--output", output, "json only for verify");

    auto* oc = app.add_subcommand("oracle-compare",
                                  "characteristic zeros vs truncated-matrix eigenvalues");
    add_model_opts(oc, true);
    oc->add_option("--compare-tol", compare_tol, "max |delta| for exit code 0");
    oc->add_option("--margin", margin, "exclude |z| below this accumulation margin");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    Clock clock;
    Report rep;
    rep.tolerances = tolerances_json(cfg);

    try {
        if (sp->parsed() || oc->parsed()) {
            double lo = 0, hi = 0;
            if (std::sscanf(window_str.c_str(), "%lf,%lf", &lo, &hi) != 2 || !(lo < hi)) {
                std::cerr << "invalid --window '" << window_str << "'\n";
                return 2;
            }
            const auto params = parse_params(params_str);
            const JacobiModel model = make_model(model_name, params);
            rep.model = model_name;
            rep.params = params_json(params);

            if (sp->parsed()) {
                rep.command = "spectrum";
                const SpectralResult res = find_real_eigenvalues(model, lo, hi, cfg);
                rep.results.push_back(to_json(res));
                rep.wall_time_ms = clock.ms();
                emit(rep, output, to_csv(res));
                return 0;
            }

            rep.command = "oracle-compare";
            std::vector<double> zeros;
            if (model.closed_spectrum) {
                for (double z : model.closed_spectrum(lo, hi))
                    if (std::abs(z) > margin) zeros.push_back(z);
            } else {
                for (const auto& e : find_real_eigenvalues(model, lo, hi, cfg).eigenvalues)
                    if (std::abs(e.z.real()) > margin) zeros.push_back(e.z.real());
            }
            const Tridiag tr = truncate(model, cfg.truncation_N);
            std::vector<double> oracle;
            for (double o : sym_tridiag_eigen(tr.diag, tr.off, 0.1 * cfg.root_tol))
                if (o > lo && o < hi && std::abs(o) > margin) oracle.push_back(o);

            Json rows = Json::array();
            std::ostringstream csv;
            csv << "z_char,z_oracle,delta\n";
            double max_delta = 0.0;
            for (double z : zeros) {
                double best = std::numeric_limits<double>::infinity(), partner = 0.0;
                for (double o : oracle)
                    if (std::abs(o - z) < best) {
                        best = std::abs(o - z);
                        partner = o;
                    }
                Json row;
                row["z_char"] = z;
                row["z_oracle"] = partner;
                row["delta"] = best;
                rows.push_back(row);
                csv << Json(z).dump() << "," << Json(partner).dump() << "," << Json(best).dump()
                    << "\n";
                max_delta = std::max(max_delta, best);
            }
            const bool pass = zeros.size() == oracle.size() && max_delta <= compare_tol;
            Json summary;
            summary["n_char_zeros"] = zeros.size();
            summary["n_oracle"] = oracle.size();
            summary["max_delta"] = max_delta;
            summary["compare_tol"] = compare_tol;
            summary["pass"] = pass;
            rep.results.push_back(summary);
            rep.results.push_back(rows);
            rep.wall_time_ms = clock.ms();
            emit(rep, output, csv.str());
            return pass ? 0 : 1;
        }

        if (ev->parsed()) {
            const auto params = parse_params(params_str);
            const JacobiModel model = make_model(model_name, params);
            rep.command = "eigvec";
            rep.model = model_name;
            rep.params = params_json(params);
            const auto v = eigenvector(model, Cplx(z_at), kmax, cfg);
            const double res = eigen_residual(model, Cplx(z_at), v);
            const std::int64_t k0 = model.side == Side::unilateral ? 1 : -kmax;
            Json comp = Json::array();
            std::ostringstream csv;
            csv << "k,v_re,v_im\n";
            for (std::size_t i = 0; i < v.size(); ++i) {
                Json row;
                row["k"] = k0 + std::int64_t(i);
                row["re"] = v[i].real();
                row["im"] = v[i].imag();
                comp.push_back(row);
                csv << (k0 + std::int64_t(i)) << "," << Json(v[i].real()).dump() << ","
                    << Json(v[i].imag()).dump() << "\n";
            }
            Json result;
            result["z"] = z_at;
            result["residual"] = res;
            result["components"] = comp;
            rep.results.push_back(result);
            rep.wall_time_ms = clock.ms();
            emit(rep, output, csv.str());
            return 0;
        }

        // verify
        rep.command = "verify";
        const std::vector<std::string> names =
            suite == "all" ? verify_suite_names() : std::vector<std::string>{suite};
        bool all_pass = true;
        for (const auto& name : names) {
            std::cerr << "running suite " << name << "\n";
            const SuiteResult r = run_verify_suite(name, cfg, seed);
            Json js;
            js["suite"] = r.suite;
            js["pass"] = r.pass;
            js["max_rel_err"] = r.max_err;
            js["cases"] = r.cases;
            js["wall_ms"] = r.wall_ms;
            Json checks = Json::array();
            for (const auto& chk : r.checks) {
                Json jc;
                jc["name"] = chk.name;
                jc["err"] = chk.err;
                jc["tol"] = chk.tol;
                jc["pass"] = chk.pass;
                checks.push_back(jc);
            }
            js["checks"] = checks;
            rep.results.push_back(js);
            all_pass = all_pass && r.pass;
        }
        rep.wall_time_ms = clock.ms();
        emit(rep, "json", "");
        return all_pass ? 0 : 1;
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        Json err;
        err["type"] = "domain";
        err["what"] = e.what();
        rep.errors.push_back(err);
        rep.wall_time_ms = clock.ms();
        std::cout << rep.to_json().dump(2) << "\n";
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        Json err;
        err["type"] = "numeric";
        err["what"] = e.what();
        rep.errors.push_back(err);
        rep.wall_time_ms = clock.ms();
        std::cout << rep.to_json().dump(2) << "\n";
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
