// Command-line driver: recovers the jump of a cut-plane analytic function
// from finitely many (noisy) Taylor coefficients and reproduces the bundled
// numerical experiments. All outputs are CSV or plain-text reports.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "jumprec/csv.hpp"
#include "jumprec/pipeline.hpp"
#include "jumprec/quadrature.hpp"
#include "jumprec/specfun.hpp"

namespace fs = std::filesystem;
using namespace jumprec;

namespace {

// Exit codes (also in README): 0 ok, 1 internal error, 2 usage,
// 3 no plateau, 4 quadrature failure, 5 degree cap, 6 I/O.
enum ExitCode {
    kOk = 0,
    kInternal = 1,
    kUsage = 2,
    kNoPlateau = 3,
    kQuadrature = 4,
    kDegreeCap = 5,
    kIo = 6,
};

struct CommonOpts {
    std::string problem = "F2";
    std::string custom_csv;
    std::string preset;
    int n = 30;  // highest Taylor index
    double eps = 0.0;
    std::uint64_t seed = 1;
    int m_max = 150;
    double delta = 1e-3;
    int l_min = 5;
    double tau = 0.5;
    double x_min = 1.0, x_max = 20.0;
    int grid_points = 512;
    double tol = 1e-12;
    std::string outdir = ".";
    std::string config_path;
};

/// Expands `--config file` into injected `--key=value` arguments placed right
/// after the subcommand token, so that explicitly typed flags (parsed later,
/// TakeLast) override the file.
std::vector<std::string> expand_config(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    std::string path;
    for (std::size_t i = 1; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size())
            path = args[i + 1];
        else if (args[i].rfind("--config=", 0) == 0)
            path = args[i].substr(9);
    }
    if (path.empty()) return args;

    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("--config", "cannot open " + path);
    std::vector<std::string> injected;
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("--config", "malformed line: " + line);
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        injected.push_back("--" + trim(line.substr(0, eq)) + "=" +
                           trim(line.substr(eq + 1)));
    }

    static const std::vector<std::string> subcommands{
        "forward", "reconstruct", "noise-sweep", "verify-asymptotics", "verify",
        "list-problems"};
    std::vector<std::string> out;
    bool done = false;
    for (const auto& a : args) {
        out.push_back(a);
        if (!done &&
            std::find(subcommands.begin(), subcommands.end(), a) != subcommands.end()) {
            out.insert(out.end(), injected.begin(), injected.end());
            done = true;
        }
    }
    return out;
}

void add_common(CLI::App* cmd, CommonOpts& o, bool with_grid) {
    cmd->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    cmd->add_option("--config", o.config_path,
                    "plain-text key=value configuration file; flags win");
    cmd->add_option("--problem", o.problem, "problem id (F1|F2|F3|custom)");
    cmd->add_option("--custom-csv", o.custom_csv,
                    "tabulated problem, CSV columns x,F (implies --problem custom)");
    cmd->add_option("--preset", o.preset,
                    "parameter bundle fig1|fig2|fig3 (flags still override)");
    cmd->add_option("--n", o.n, "highest Taylor index N (default 30)");
    cmd->add_option("--eps", o.eps, "noise bound (uniform on [-eps,eps])");
    cmd->add_option("--seed", o.seed, "RNG seed (realization i uses seed+i)");
    cmd->add_option("--m-max", o.m_max, "spectral degree cap (default 150)");
    cmd->add_option("--delta", o.delta, "plateau flatness threshold (default 1e-3)");
    cmd->add_option("--l-min", o.l_min, "minimum plateau length (default 5)");
    cmd->add_option("--tau", o.tau, "asymptote-proximity factor (default 0.5)");
    cmd->add_option("--tol", o.tol, "forward quadrature tolerance (default 1e-12)");
    if (with_grid) {
        cmd->add_option("--x-min", o.x_min, "grid start (default 1)");
        cmd->add_option("--x-max", o.x_max, "grid end (default 20)");
        cmd->add_option("--grid-points", o.grid_points, "grid size (default 512)");
    }
}

struct Resolved {
    TestProblem problem;
    RunParams params;
};

/// Presets supply problem/eps/seed; explicit flags win.
Resolved resolve(const CommonOpts& o, CLI::App* cmd) {
    RunParams params;
    std::string problem_id = o.problem;
    if (!o.preset.empty()) {
        const Preset pr = preset(o.preset);
        params.eps = pr.params.eps;
        params.seed = pr.params.seed;
        if (!cmd->count("--problem") && o.custom_csv.empty())
            problem_id = pr.problem;
    }
    if (cmd->count("--eps")) {
        if (o.eps < 0.0) throw CLI::ValidationError("--eps must be >= 0");
        params.eps = o.eps;
    }
    if (cmd->count("--seed")) params.seed = o.seed;
    params.n_coeffs = o.n + 1;
    params.m_max = o.m_max;
    params.plateau = PlateauParams{o.delta, o.l_min, o.tau};
    params.x_min = o.x_min;
    params.x_max = o.x_max;
    params.grid_points = o.grid_points;
    params.forward_tol = o.tol;

    if (!o.custom_csv.empty() || problem_id == "custom") {
        if (o.custom_csv.empty())
            throw CLI::ValidationError("--problem custom requires --custom-csv");
        return {custom_from_csv(o.custom_csv), params};
    }
    return {catalog(problem_id), params};
}

fs::path out_path(const CommonOpts& o, const std::string& name) {
    fs::create_directories(o.outdir);
    return fs::path(o.outdir) / name;
}

int cmd_forward(CommonOpts& o, CLI::App* cmd) {
    const auto [p, params] = resolve(o, cmd);
    const TaylorData clean = forward_taylor(p, params.n_coeffs, params.forward_tol);
    const TaylorData noisy = params.eps > 0.0
                                 ? add_noise(clean, {params.eps, params.seed})
                                 : clean;
    CsvWriter csv(out_path(o, "coefficients.csv").string(), "n,a_n,a_n_noisy");
    for (int n = 0; n <= clean.max_index(); ++n)
        csv.row_raw({std::to_string(n), CsvWriter::format(clean.a[n]),
                     CsvWriter::format(noisy.a[n])});
    std::cout << "wrote " << out_path(o, "coefficients.csv").string() << " ("
              << clean.max_index() + 1 << " rows)\n";
    return kOk;
}

void write_spectral_csv(const CommonOpts& o, const RunResult& r) {
    CsvWriter csv(out_path(o, "spectral.csv").string(), "m,r_m,M_k,E_k");
    for (int m = 0; m <= r.series.m_max(); ++m)
        csv.row_raw({std::to_string(m), CsvWriter::format(r.series.r[m]),
                     CsvWriter::format(r.series.energy[m]),
                     CsvWriter::format(r.env(m))});
}

void write_plateau_outputs(const CommonOpts& o, const RunResult& r) {
    std::ofstream rep(out_path(o, "plateau_report.txt"));
    rep << "status: " << (r.report ? "plateau-found" : "no-plateau") << "\n";
    rep << "k_a: " << r.k_a << "\n";
    if (r.report) {
        const auto& pr = *r.report;
        rep << "k0: " << pr.k0 << "\n";
        rep << "plateau_height: " << CsvWriter::format(pr.plateau_height) << "\n";
        rep << "plateaus:";
        for (const auto& iv : pr.plateaus)
            rep << " [" << iv.lo << "," << iv.hi << "]";
        rep << "\n";
        if (pr.chosen().length() < 2 * pr.params.l_min)
            rep << "note: chosen plateau is short/weak (length "
                << pr.chosen().length() << ")\n";
        rep << "params: delta=" << pr.params.delta << " l_min=" << pr.params.l_min
            << " tau=" << pr.params.tau << "\n";

        CsvWriter csv(out_path(o, "plateau_report.csv").string(),
                      "k0,k_a,plateau_lo,plateau_hi,plateau_height");
        csv.row_raw({std::to_string(pr.k0), std::to_string(pr.k_a),
                     std::to_string(pr.chosen().lo), std::to_string(pr.chosen().hi),
                     CsvWriter::format(pr.plateau_height)});
    }
    if (r.k0_norm) rep << "k0_norm: " << *r.k0_norm << "\n";
    if (r.norm_sq) rep << "norm_sq: " << CsvWriter::format(*r.norm_sq) << "\n";
}

int cmd_reconstruct(CommonOpts& o, CLI::App* cmd, const std::string& k0_mode,
                    int forced_k0) {
    auto [p, params] = resolve(o, cmd);
    if (forced_k0 >= 0) params.forced_k0 = forced_k0;
    params.mode = (k0_mode == "norm") ? K0Mode::norm : K0Mode::plateau;

    const RunResult r = run_pipeline(p, params);
    write_spectral_csv(o, r);
    write_plateau_outputs(o, r);

    if (r.status == RunStatus::no_plateau) {
        std::cerr << "no plateau of length >= " << params.plateau.l_min
                  << " found below k_a = " << r.k_a
                  << "; rerun with --k0-mode norm or --k0 <index>\n";
        return kNoPlateau;
    }

    {
        CsvWriter csv(out_path(o, "reconstruction.csv").string(),
                      "x,F_true,F_rec");
        for (std::size_t i = 0; i < r.rec->xs.size(); ++i)
            csv.row({r.rec->xs[i], p.f(r.rec->xs[i]), r.rec->values[i]});
    }
    {
        // Taylor-vs-Cauchy consistency along the real segment [-1/2, 1/2].
        CsvWriter csv(out_path(o, "cauchy_comparison.csv").string(),
                      "re_z,f_taylor,f_cauchy_rec");
        const SpectralSeries& s = r.series;
        const int k0 = r.k0_used;
        auto f_rec = [&](double x) { return reconstruct_at(s, k0, x); };
        for (int i = 0; i <= 100; ++i) {
            const double z = -0.5 + i * 0.01;
            const double ft = taylor_partial(r.noisy, {z, 0.0}).real();
            const double fc = cauchy_eval(f_rec, {z, 0.0}, 1e-8).real();
            csv.row({z, ft, fc});
        }
    }

    std::ofstream rep(out_path(o, "report.txt"));
    rep << "problem: " << p.id << "\nN: " << o.n << "\neps: " << params.eps
        << "\nseed: " << params.seed << "\nk0_used: " << r.k0_used
        << "\nk_a: " << r.k_a << "\n";
    if (r.report)
        rep << "plateau_height: " << CsvWriter::format(r.report->plateau_height)
            << "\n";
    if (r.k0_norm) rep << "k0_norm: " << *r.k0_norm << "\n";
    if (r.mse_value) rep << "mse: " << CsvWriter::format(*r.mse_value) << "\n";
    if (r.rel_l2) rep << "rel_l2: " << CsvWriter::format(*r.rel_l2) << "\n";
    if (std::isfinite(r.snr)) rep << "snr_db: " << CsvWriter::format(r.snr) << "\n";

    std::cout << "k0=" << r.k0_used << " k_a=" << r.k_a;
    if (r.mse_value) std::cout << " mse=" << *r.mse_value;
    if (r.rel_l2) std::cout << " rel_l2=" << *r.rel_l2;
    std::cout << "\n";
    return kOk;
}

int cmd_noise_sweep(CommonOpts& o, CLI::App* cmd, std::vector<double> eps_list,
                    int realizations) {
    const auto [p, params] = resolve(o, cmd);
    if (eps_list.empty())
        for (int e = 2; e <= 10; ++e) eps_list.push_back(std::pow(10.0, -e));

    const SweepResult sw = noise_sweep(p, params, eps_list, realizations);

    {
        CsvWriter csv(out_path(o, "noise_sweep.csv").string(),
                      "eps,realization,seed,k0_norm,k0_plateau,mse_norm,"
                      "mse_plateau,snr_db");
        for (const auto& row : sw.rows)
            csv.row_raw({CsvWriter::format(row.eps), std::to_string(row.realization),
                         std::to_string(row.seed), std::to_string(row.k0_norm),
                         std::to_string(row.k0_plateau),
                         CsvWriter::format(row.mse_norm),
                         CsvWriter::format(row.mse_plateau),
                         CsvWriter::format(row.snr)});
    }
    {
        CsvWriter csv(out_path(o, "noise_sweep_summary.csv").string(),
                      "eps,snr_db,avg_k0_norm,avg_k0_plateau,plateau_found,"
                      "avg_mse_norm,avg_mse_plateau");
        for (const auto& s : sw.summaries)
            csv.row_raw({CsvWriter::format(s.eps), CsvWriter::format(s.snr),
                         CsvWriter::format(s.avg_k0_norm),
                         CsvWriter::format(s.avg_k0_plateau),
                         std::to_string(s.plateau_found),
                         CsvWriter::format(s.avg_mse_norm),
                         CsvWriter::format(s.avg_mse_plateau)});
    }
    std::ofstream rep(out_path(o, "sweep_report.txt"));
    rep << "realizations: " << realizations << "\n"
        << "k0_norm vs log10(1/eps) linear fit: slope="
        << CsvWriter::format(sw.k0_fit.slope)
        << " intercept=" << CsvWriter::format(sw.k0_fit.intercept)
        << " r2=" << CsvWriter::format(sw.k0_fit.r2) << "\n";
    std::cout << "sweep done: fit slope=" << sw.k0_fit.slope
              << " r2=" << sw.k0_fit.r2 << "\n";
    return kOk;
}

int cmd_verify(CommonOpts& o, int table_m_max) {
    int failures = 0;
    auto suite = [&](const std::string& name, bool pass, const std::string& detail) {
        std::cout << (pass ? "PASS  " : "FAIL  ") << name << "  " << detail << "\n";
        if (!pass) ++failures;
    };

    {  // recurrence vs exact integer oracle
        bool ok = true;
        for (int n = 0; n <= 8 && ok; ++n) {
            const auto q = pollaczek_imag_axis(n, 12);
            const auto s = pollaczek_oracle(n, 12);
            for (int m = 0; m <= 12; ++m) {
                const double expected =
                    (m % 2 ? -1.0 : 1.0) * static_cast<double>(s[m]);
                if (q[m] != expected) {
                    ok = false;
                    break;
                }
            }
        }
        suite("oracle-equivalence", ok, "n<=8, m<=12, exact");
    }

    double max_ratio_err_1000 = 0.0;
    {  // large-degree magnitude table
        CsvWriter csv(out_path(o, "asymptotic_ratios.csv").string(),
                      "n,m,q_abs,modulus,rel_error");
        bool ok = true;
        for (int n = 0; n <= 3; ++n) {
            const auto q = pollaczek_imag_axis(n, table_m_max);
            double prev = std::numeric_limits<double>::infinity();
            for (int m : {50, 100, 200, 500, 1000}) {
                if (m > table_m_max) continue;
                const auto asym = pollaczek_asymptotic(m, n);
                const double err = std::abs(std::abs(q[m]) / asym.modulus - 1.0);
                csv.row_raw({std::to_string(n), std::to_string(m),
                             CsvWriter::format(std::abs(q[m])),
                             CsvWriter::format(asym.modulus),
                             CsvWriter::format(err)});
                if (n > 0 && err > prev + 1e-15) ok = false;
                prev = err;
                if (m == 1000) {
                    max_ratio_err_1000 = std::max(max_ratio_err_1000, err);
                    if (err > 0.02) ok = false;
                }
            }
        }
        suite("asymptotic-ratios", ok,
              "n<=3, err(m=1000) max " + CsvWriter::format(max_ratio_err_1000));
    }

    {  // orthonormality of the real-line family against sech(pi x)
        double dev = 0.0;
        const int top = 10;
        std::vector<std::vector<double>> gram(top + 1,
                                              std::vector<double>(top + 1, 0.0));
        std::vector<double> gx, gw;
        legendre_rule(20, gx, gw);
        const int panels = 120;
        const double h = 60.0 / panels;
        for (int pa = 0; pa < panels; ++pa) {
            const double mid = -30.0 + (pa + 0.5) * h;
            for (int i = 0; i < 20; ++i) {
                const double x = mid + 0.5 * h * gx[i];
                const double w = 0.5 * h * gw[i] * pollaczek_weight(x);
                const auto pv = pollaczek_real(x, top);
                for (int a = 0; a <= top; ++a)
                    for (int b = a; b <= top; ++b) gram[a][b] += w * pv[a] * pv[b];
            }
        }
        for (int a = 0; a <= top; ++a)
            for (int b = a; b <= top; ++b)
                dev = std::max(dev, std::abs(gram[a][b] - (a == b ? 1.0 : 0.0)));
        suite("pollaczek-orthonormality", dev < 1e-8,
              "deviation " + CsvWriter::format(dev));
    }

    {  // basis orthonormality through the Laguerre substitution
        const auto rule = gauss_laguerre(200);
        const int top = 20;
        std::vector<std::vector<double>> gram(top + 1,
                                              std::vector<double>(top + 1, 0.0));
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            const auto l = laguerre_scaled(rule.nodes[i], top);
            for (int a = 0; a <= top; ++a)
                for (int b = a; b <= top; ++b)
                    gram[a][b] += rule.scaled_weights[i] * l[a] * l[b];
        }
        double dev = 0.0;
        for (int a = 0; a <= top; ++a)
            for (int b = a; b <= top; ++b)
                dev = std::max(dev, std::abs(gram[a][b] - (a == b ? 1.0 : 0.0)));
        suite("basis-orthonormality", dev < 1e-8,
              "deviation " + CsvWriter::format(dev));
    }

    {  // energy plateau against the known squared norm (noiseless F2)
        const TestProblem& p = catalog("F2");
        RunParams params;
        params.eps = 0.0;
        const RunResult r = run_pipeline(p, params);
        const double c = 24.0 / std::exp(1.0);
        const bool ok = r.report &&
                        std::abs(r.report->plateau_height - c) <= 0.01 * c;
        suite("parseval-plateau", ok,
              r.report ? "height " + CsvWriter::format(r.report->plateau_height) +
                             " vs " + CsvWriter::format(c)
                       : "no plateau");
    }

    std::cout << (failures ? "verification FAILED\n" : "verification passed\n");
    return failures ? kInternal : kOk;
}

int cmd_list_problems() {
    for (const auto& id : catalog_ids()) {
        const auto& p = catalog(id);
        std::cout << id << "  " << p.description;
        if (p.norm_sq_exact)
            std::cout << "  norm_sq=" << CsvWriter::format(*p.norm_sq_exact);
        std::cout << (p.has_exact_taylor() ? "  exact-taylor" : "") << "\n";
    }
    std::cout << "custom  tabulated CSV (columns x,F), linear interpolation, "
                 "zero tail beyond the last sample\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"jump-function reconstruction from noisy Taylor coefficients"};
    app.require_subcommand(1);

    CommonOpts o;
    if (const char* env = std::getenv("JUMPREC_OUTDIR")) o.outdir = env;
    app.add_option("--outdir", o.outdir,
                   "output directory (env JUMPREC_OUTDIR, default .)");

    auto* forward = app.add_subcommand("forward", "compute Taylor coefficients");
    forward->fallthrough();
    add_common(forward, o, false);

    auto* rec = app.add_subcommand(
        "reconstruct", "full pipeline: forward, spectral, k0, reconstruction");
    rec->fallthrough();
    add_common(rec, o, true);
    std::string k0_mode = "plateau";
    int forced_k0 = -1;
    rec->add_option("--k0-mode", k0_mode, "plateau|norm (default plateau)")
        ->check(CLI::IsMember({"plateau", "norm"}));
    rec->add_option("--k0", forced_k0, "force the truncation index");

    auto* sweep = app.add_subcommand("noise-sweep",
                                     "k0/mse statistics over a noise grid");
    sweep->fallthrough();
    add_common(sweep, o, true);
    std::vector<double> eps_list;
    int realizations = 30;
    sweep->add_option("--eps-list", eps_list,
                      "noise bounds (default 1e-2..1e-10 decades)");
    sweep->add_option("--realizations", realizations,
                      "realizations per eps (default 30; 300 = full scale)");

    auto* verify = app.add_subcommand(
        "verify-asymptotics", "run the built-in verification suites");
    verify->alias("verify");
    verify->fallthrough();
    int table_m_max = 1000;
    verify->add_option("--table-m-max", table_m_max,
                       "degree range of the ratio table (default 1000)");

    auto* list = app.add_subcommand("list-problems", "catalog summary");

    try {
        const auto args = expand_config(argc, argv);
        std::vector<const char*> ptrs;
        ptrs.reserve(args.size());
        for (const auto& a : args) ptrs.push_back(a.c_str());
        app.parse(static_cast<int>(ptrs.size()),
                  const_cast<char**>(ptrs.data()));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (app.got_subcommand(forward)) return cmd_forward(o, forward);
        if (app.got_subcommand(rec))
            return cmd_reconstruct(o, rec, k0_mode, forced_k0);
        if (app.got_subcommand(sweep))
            return cmd_noise_sweep(o, sweep, eps_list, realizations);
        if (app.got_subcommand(verify)) return cmd_verify(o, table_m_max);
        if (app.got_subcommand(list)) return cmd_list_problems();
    } catch (const no_plateau_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kNoPlateau;
    } catch (const quadrature_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kQuadrature;
    } catch (const degree_cap_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDegreeCap;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return kIo;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        const std::string what = e.what();
        if (what.find("cannot open") != std::string::npos ||
            what.find("write failed") != std::string::npos)
            return kIo;
        return kInternal;
    }
    return kUsage;
}
