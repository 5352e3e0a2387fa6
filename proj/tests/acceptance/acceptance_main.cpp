// Acceptance suite: runs every numbered criterion at its pinned tolerance and
// prints one PASS/FAIL line per criterion. Exit code = number of failures.
//
//   jumprec_acceptance [--criterion N]

#include <chrono>
#include <cmath>
#include <cstring>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "jumprec/pipeline.hpp"
#include "jumprec/quadrature.hpp"
#include "jumprec/specfun.hpp"

using namespace jumprec;

namespace {

struct Checker {
    bool ok = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail << "  [failed: " << what << "]";
        }
    }
    template <typename T>
    void note(const std::string& key, T value) {
        detail << ' ' << key << '=' << value;
    }
};

struct Criterion {
    int id;
    std::string name;
    std::function<void(Checker&)> run;
};

// ---------------------------------------------------------------------------
// 1. The recurrence on the imaginary axis equals the exact integer oracle.
void c1_oracle_equivalence(Checker& c) {
    int checked = 0;
    for (int n = 0; n <= 8; ++n) {
        const auto q = pollaczek_imag_axis(n, 12);
        const auto s = pollaczek_oracle(n, 12);
        for (int m = 0; m <= 12; ++m) {
            const double want = (m % 2 ? -1.0 : 1.0) * static_cast<double>(s[m]);
            c.require(q[m] == want, "q mismatch at n=" + std::to_string(n) +
                                        " m=" + std::to_string(m));
            ++checked;
        }
    }
    c.note("values", checked);
}

// ---------------------------------------------------------------------------
// 2. Large-degree magnitudes: |q_m| n!/(2m)^n -> 1, error decreasing over the
//    probe degrees and at most 2% at m = 1000 for n <= 3 (n = 0 exact, n = 1
//    analytically 1/(2m)).
void c2_asymptotics(Checker& c) {
    double worst_at_1000 = 0.0;
    for (int n = 0; n <= 3; ++n) {
        const auto q = pollaczek_imag_axis(n, 1000);
        double prev = std::numeric_limits<double>::infinity();
        for (int m : {50, 100, 200, 500, 1000}) {
            const double modulus = pollaczek_asymptotic(m, n).modulus;
            const double err = std::abs(std::abs(q[m]) / modulus - 1.0);
            if (n == 0) c.require(err == 0.0, "n=0 must be exact");
            if (n == 1)
                c.require(std::abs(err - 0.5 / m) < 1e-10,
                          "n=1 error must be 1/(2m)");
            c.require(err <= prev + 1e-15,
                      "error not decreasing at n=" + std::to_string(n) +
                          " m=" + std::to_string(m));
            prev = err;
            if (m == 1000) worst_at_1000 = std::max(worst_at_1000, err);
        }
    }
    c.require(worst_at_1000 <= 0.02, "error at m=1000 above 2%");
    c.note("max_err_m1000", worst_at_1000);
}

// ---------------------------------------------------------------------------
// 3. Orthonormality of the phase-stripped basis via u = 2/x: Gram deviation
//    below 1e-8 for m,k <= 20 with a >= 200-node rule.
void c3_basis_gram(Checker& c) {
    const auto rule = gauss_laguerre(200);
    const int top = 20;
    double dev = 0.0;
    std::vector<std::vector<double>> gram(top + 1, std::vector<double>(top + 1));
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const auto l = laguerre_scaled(rule.nodes[i], top);
        for (int a = 0; a <= top; ++a)
            for (int b = a; b <= top; ++b)
                gram[a][b] += rule.scaled_weights[i] * l[a] * l[b];
    }
    for (int a = 0; a <= top; ++a)
        for (int b = a; b <= top; ++b)
            dev = std::max(dev, std::abs(gram[a][b] - (a == b ? 1.0 : 0.0)));
    c.require(dev < 1e-8, "Gram deviation above 1e-8");
    c.note("deviation", dev);
    c.note("nodes", rule.nodes.size());
}

// ---------------------------------------------------------------------------
// 4. Orthonormality of the real-axis family against sech(pi x), m,k <= 10.
void c4_pollaczek_gram(Checker& c) {
    const int top = 10;
    std::vector<double> gx, gw;
    legendre_rule(20, gx, gw);
    std::vector<std::vector<double>> gram(top + 1, std::vector<double>(top + 1));
    const int panels = 120;
    const double lim = 30.0;  // integrand < 1e-18 outside for m,k <= 10
    const double h = 2.0 * lim / panels;
    for (int pa = 0; pa < panels; ++pa) {
        const double mid = -lim + (pa + 0.5) * h;
        for (int i = 0; i < 20; ++i) {
            const double x = mid + 0.5 * h * gx[i];
            const double w = 0.5 * h * gw[i] * pollaczek_weight(x);
            const auto pv = pollaczek_real(x, top);
            for (int a = 0; a <= top; ++a)
                for (int b = a; b <= top; ++b) gram[a][b] += w * pv[a] * pv[b];
        }
    }
    double dev = 0.0;
    for (int a = 0; a <= top; ++a)
        for (int b = a; b <= top; ++b)
            dev = std::max(dev, std::abs(gram[a][b] - (a == b ? 1.0 : 0.0)));
    c.require(dev < 1e-8, "Gram deviation above 1e-8");
    c.note("deviation", dev);
}

// ---------------------------------------------------------------------------
// 5. Energy plateau against the known squared norms, noiseless N = 30 data:
//    F2 within 1% of 24/e; F3's detectable plateau within 5% of 9.
void c5_parseval_plateau(Checker& c) {
    RunParams params;  // eps = 0
    const RunResult r2 = run_pipeline(catalog("F2"), params);
    const double cf2 = 24.0 / std::exp(1.0);
    c.require(r2.status == RunStatus::ok, "F2: no plateau");
    if (r2.report) {
        const double h = r2.report->plateau_height;
        c.note("f2_height", h);
        c.require(std::abs(h - cf2) <= 0.01 * cf2, "F2 height off by more than 1%");
    }
    const RunResult r3 = run_pipeline(catalog("F3"), params);
    c.require(r3.status == RunStatus::ok, "F3: no plateau");
    if (r3.report) {
        const double h = r3.report->plateau_height;
        c.note("f3_height", h);
        c.require(std::abs(h - 9.0) <= 0.05 * 9.0, "F3 level off by more than 5%");
    }
}

// ---------------------------------------------------------------------------
// 6. First smooth-target pipeline: the automatic k0 sits in a plateau
//    overlapping [15, 65]; relative L2 error on [1, 10] at most 5%; forcing
//    k0 = 75 (past the plateau) makes it strictly worse.
void c6_fig1(Checker& c) {
    const Preset pr = preset("fig1");
    const auto& p = catalog(pr.problem);
    const RunResult r = run_pipeline(p, pr.params);
    c.require(r.status == RunStatus::ok, "no plateau");
    if (r.status != RunStatus::ok) return;

    const auto& plat = r.report->chosen();
    c.note("k0", r.k0_used);
    c.note("plateau_lo", plat.lo);
    c.note("plateau_hi", plat.hi);
    c.require(r.k0_used >= plat.lo && r.k0_used <= plat.hi,
              "k0 outside its plateau");
    c.require(plat.lo <= 65 && plat.hi >= 15, "plateau misses [15, 65]");

    const double err_auto = rel_l2_error(*r.rec, p, 1.0, 10.0);
    c.note("rel_l2", err_auto);
    c.require(err_auto <= 0.05, "relative error above 5%");

    RunParams forced = pr.params;
    forced.forced_k0 = 75;
    const RunResult r75 = run_pipeline(p, forced);
    const double err_75 = rel_l2_error(*r75.rec, p, 1.0, 10.0);
    c.note("rel_l2_k75", err_75);
    c.require(err_75 > err_auto, "k0 = 75 did not deteriorate");
}

// ---------------------------------------------------------------------------
// 7. Second smooth-target pipeline: k0 within 15 of 82; relative L2 error on
//    [1, 20] at most 5%; the Cauchy transform of the reconstruction matches
//    the partial Taylor series to 1e-2 of max |f| on Re z in [-1/2, 1/2].
void c7_fig2(Checker& c) {
    const Preset pr = preset("fig2");
    const auto& p = catalog(pr.problem);
    const RunResult r = run_pipeline(p, pr.params);
    c.require(r.status == RunStatus::ok, "no plateau");
    if (r.status != RunStatus::ok) return;

    c.note("k0", r.k0_used);
    c.require(std::abs(r.k0_used - 82) <= 15, "k0 not within 15 of 82");
    c.note("rel_l2", *r.rel_l2);
    c.require(*r.rel_l2 <= 0.05, "relative error above 5%");

    const SpectralSeries& s = r.series;
    const int k0 = r.k0_used;
    auto f_rec = [&](double x) { return reconstruct_at(s, k0, x); };
    double max_f = 0.0, max_diff = 0.0;
    for (int i = 0; i <= 20; ++i) {
        const double z = -0.5 + i * 0.05;
        const double ft = taylor_partial(r.noisy, {z, 0.0}).real();
        const double fc = cauchy_eval(f_rec, {z, 0.0}, 1e-8).real();
        max_f = std::max(max_f, std::abs(ft));
        max_diff = std::max(max_diff, std::abs(ft - fc));
    }
    c.note("cauchy_rel_dev", max_diff / max_f);
    c.require(max_diff / max_f <= 1e-2, "Cauchy cross-check above 1e-2");
}

// ---------------------------------------------------------------------------
// 8. Discontinuous-target pipeline: the norm-definition k0 reconstructs worse
//    (grid MSE on [1, 20]) than the plateau choice, and both reconstructions
//    overshoot the jump by more than 5% (max excursion beyond [0, 1] over
//    x in [1, 12]; the basis cannot ring tightly around x = 10 at these
//    degrees, so the window spans the visible side).
void c8_fig3(Checker& c) {
    const Preset pr = preset("fig3");
    const auto& p = catalog(pr.problem);
    const RunResult r = run_pipeline(p, pr.params);
    c.require(r.status == RunStatus::ok, "no plateau");
    if (r.status != RunStatus::ok) return;
    c.require(r.k0_norm.has_value(), "norm-based k0 unavailable");

    const int k_plat = r.k0_used;
    const int k_norm = *r.k0_norm;
    c.note("k0_plateau", k_plat);
    c.note("k0_norm", k_norm);

    const auto xs = uniform_grid(1.0, 20.0, 512);
    const double mse_plat = mse(*r.rec, p);
    const double mse_norm = mse(reconstruct(r.series, k_norm, xs), p);
    c.note("mse_plateau", mse_plat);
    c.note("mse_norm", mse_norm);
    c.require(mse_norm > mse_plat, "norm-definition choice not worse");

    auto overshoot = [&](int k0) {
        double worst = 0.0;
        for (int i = 0; i <= 2600; ++i) {
            const double x = 1.0 + i * (11.0 / 2600.0);
            const double v = reconstruct_at(r.series, k0, x);
            if (x <= 10.0)
                worst = std::max(worst, v - 1.0);
            else
                worst = std::max(worst, -v);
        }
        return worst;
    };
    const double so_plat = overshoot(k_plat);
    const double so_norm = overshoot(k_norm);
    c.note("overshoot_plateau", so_plat);
    c.note("overshoot_norm", so_norm);
    c.require(so_plat > 0.05, "plateau reconstruction overshoot below 5%");
    c.require(so_norm > 0.05, "norm reconstruction overshoot below 5%");
}

// ---------------------------------------------------------------------------
// 9. Noise study at desk scale: 30 realizations, eps = 1e-2..1e-10 decades,
//    norm-definition k0. Averaged k0 non-increasing in eps, linear in
//    log10(1/eps) with R^2 >= 0.9; averaged MSE non-increasing in SNR with a
//    pronounced knee (max |second difference| of log10 MSE >= 0.15).
void c9_noise_trends(Checker& c) {
    RunParams base;
    base.seed = 1;
    std::vector<double> eps_list;
    for (int e = 2; e <= 10; ++e) eps_list.push_back(std::pow(10.0, -e));
    const auto sw = noise_sweep(catalog("F2"), base, eps_list, 30);

    // eps_list descends in SNR; k0 must not increase with eps
    for (std::size_t i = 1; i < sw.summaries.size(); ++i)
        c.require(sw.summaries[i].avg_k0_norm >= sw.summaries[i - 1].avg_k0_norm,
                  "avg k0 increased with eps");
    c.note("k0_range", std::to_string(sw.summaries.back().avg_k0_norm) + ".." +
                           std::to_string(sw.summaries.front().avg_k0_norm));
    c.note("r2", sw.k0_fit.r2);
    c.require(sw.k0_fit.r2 >= 0.9, "k0 fit R^2 below 0.9");

    // eps descends through the list, so the summaries are already SNR-ascending
    std::vector<double> log_mse;
    for (const auto& s : sw.summaries) log_mse.push_back(std::log10(s.avg_mse_norm));
    for (std::size_t i = 1; i < log_mse.size(); ++i)
        c.require(log_mse[i] <= log_mse[i - 1] + 1e-12,
                  "MSE not non-increasing in SNR");
    double knee = 0.0;
    for (std::size_t i = 2; i < log_mse.size(); ++i)
        knee = std::max(knee,
                        std::abs(log_mse[i] - 2.0 * log_mse[i - 1] + log_mse[i - 2]));
    c.note("knee", knee);
    c.require(knee >= 0.15, "no pronounced knee in MSE vs SNR");
}

// ---------------------------------------------------------------------------
// 10. Divergence of the truncated expansion: with N = 5 data the energy
//     passes 10 ||F2||^2 by k = 200 and the increments track the envelope
//     within a factor of two over the last decade of the range.
void c10_divergence(Checker& c) {
    const auto& p = catalog("F2");
    const auto clean = forward_taylor(p, 6, 1e-12);
    const auto s = compute_spectral(clean, 200);
    const auto env = envelope(clean);
    const double bound = 10.0 * 24.0 / std::exp(1.0);

    int first = -1;
    for (int k = 0; k <= 200 && first < 0; ++k)
        if (s.energy[k] > bound) first = k;
    c.note("first_k_above_10C", first);
    c.require(first >= 0, "energy never exceeded 10 ||F||^2");

    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (int k = 180; k <= 200; ++k) {
        const double ratio = s.r[k] * s.r[k] / env(k);
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
    }
    c.note("ratio_range", std::to_string(lo) + ".." + std::to_string(hi));
    c.require(lo >= 0.5 && hi <= 2.0, "increment/envelope ratio left [0.5, 2]");
}

}  // namespace

int main(int argc, char** argv) {
    int only = -1;
    for (int i = 1; i < argc; ++i)
        if (!std::strcmp(argv[i], "--criterion") && i + 1 < argc)
            only = std::atoi(argv[++i]);

    const std::vector<Criterion> criteria{
        {1, "oracle-equivalence", c1_oracle_equivalence},
        {2, "asymptotic-magnitudes", c2_asymptotics},
        {3, "basis-orthonormality", c3_basis_gram},
        {4, "pollaczek-orthonormality", c4_pollaczek_gram},
        {5, "parseval-plateau-height", c5_parseval_plateau},
        {6, "fig1-pipeline", c6_fig1},
        {7, "fig2-pipeline", c7_fig2},
        {8, "fig3-pipeline", c8_fig3},
        {9, "noise-trends", c9_noise_trends},
        {10, "energy-divergence", c10_divergence},
    };

    int failures = 0;
    for (const auto& cr : criteria) {
        if (only > 0 && cr.id != only) continue;
        Checker c;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            cr.run(c);
        } catch (const std::exception& e) {
            c.ok = false;
            c.detail << "  [exception: " << e.what() << "]";
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                .count();
        std::cout << (c.ok ? "PASS" : "FAIL") << "  " << cr.id << "  " << cr.name
                  << "  (" << secs << " s)" << c.detail.str() << "\n";
        if (!c.ok) ++failures;
    }
    std::cout << (failures ? "ACCEPTANCE: FAILURES = " + std::to_string(failures)
                           : std::string("ACCEPTANCE: ALL PASS"))
              << "\n";
    return failures;
}
