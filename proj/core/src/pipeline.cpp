#include "jumprec/pipeline.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace jumprec {

RunResult run_pipeline(const TestProblem& p, const RunParams& params) {
    RunResult out;
    out.clean = forward_taylor(p, params.n_coeffs, params.forward_tol);
    out.noisy = params.eps > 0.0
                    ? add_noise(out.clean, {params.eps, params.seed})
                    : out.clean;
    out.series = compute_spectral(out.noisy, params.m_max);
    out.env = envelope(trim_trailing_zeros(out.noisy));
    out.snr = snr_db(out.clean, params.eps);

    try {
        out.report = detect_k0(out.series.energy, out.env, params.plateau);
        out.k_a = out.report->k_a;
    } catch (const no_plateau_error& e) {
        out.k_a = e.k_a();
    }

    out.norm_sq = norm_squared(p);
    try {
        out.k0_norm = k0_from_norm(out.series.energy, *out.norm_sq);
    } catch (const norm_bound_error&) {
    }

    int k0 = -1;
    if (params.forced_k0) {
        k0 = *params.forced_k0;
    } else if (params.mode == K0Mode::plateau) {
        if (!out.report) {
            out.status = RunStatus::no_plateau;
            return out;
        }
        k0 = out.report->k0;
    } else {
        if (!out.k0_norm)
            throw norm_bound_error(
                "norm-based selection impossible: M_0 exceeds the norm bound");
        k0 = *out.k0_norm;
    }
    out.k0_used = k0;

    const auto xs = uniform_grid(params.x_min, params.x_max, params.grid_points);
    out.rec = reconstruct(out.series, k0, xs);
    if (params.x_min <= 1.0 && params.x_max >= 20.0)
        out.mse_value = mse(*out.rec, p);
    out.rel_l2 = rel_l2_error(*out.rec, p, params.x_min, params.x_max);
    return out;
}

Preset preset(const std::string& name) {
    Preset pr;
    pr.params.seed = 1;
    if (name == "fig1") {
        pr.problem = "F1";
        pr.params.eps = 1e-10;
    } else if (name == "fig2") {
        pr.problem = "F2";
        pr.params.eps = 0.0;
    } else if (name == "fig3") {
        pr.problem = "F3";
        pr.params.eps = 1e-6;
    } else {
        throw std::invalid_argument("unknown preset: " + name);
    }
    return pr;
}

std::vector<std::string> preset_names() { return {"fig1", "fig2", "fig3"}; }

SweepResult noise_sweep(const TestProblem& p, const RunParams& base,
                        const std::vector<double>& eps_list, int realizations) {
    if (eps_list.empty()) throw std::invalid_argument("eps list is empty");
    if (realizations < 1) throw std::invalid_argument("need >= 1 realizations");

    const TaylorData clean = forward_taylor(p, base.n_coeffs, base.forward_tol);
    const double c = norm_squared(p);
    const auto xs = uniform_grid(base.x_min, base.x_max, base.grid_points);

    SweepResult result;
    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (double eps : eps_list) {
        SweepSummary summary{};
        summary.eps = eps;
        summary.snr = snr_db(clean, eps);
        double k0n_acc = 0.0, k0p_acc = 0.0, msen_acc = 0.0, msep_acc = 0.0;
        int n_norm = 0, n_plat = 0;
        for (int i = 0; i < realizations; ++i) {
            SweepRow row{};
            row.eps = eps;
            row.realization = i;
            row.seed = base.seed + static_cast<std::uint64_t>(i);
            row.snr = summary.snr;
            row.mse_norm = nan;
            row.mse_plateau = nan;

            const TaylorData noisy = add_noise(clean, {eps, row.seed});
            const SpectralSeries s = compute_spectral(noisy, base.m_max);
            try {
                row.k0_norm = k0_from_norm(s.energy, c);
                row.mse_norm = mse(reconstruct(s, row.k0_norm, xs), p);
                k0n_acc += row.k0_norm;
                msen_acc += row.mse_norm;
                ++n_norm;
            } catch (const norm_bound_error&) {
            }
            try {
                const auto env = envelope(trim_trailing_zeros(noisy));
                const auto rep = detect_k0(s.energy, env, base.plateau);
                row.k0_plateau = rep.k0;
                row.mse_plateau = mse(reconstruct(s, rep.k0, xs), p);
                k0p_acc += rep.k0;
                msep_acc += row.mse_plateau;
                ++n_plat;
            } catch (const no_plateau_error&) {
            }
            result.rows.push_back(row);
        }
        summary.avg_k0_norm = n_norm ? k0n_acc / n_norm : nan;
        summary.avg_mse_norm = n_norm ? msen_acc / n_norm : nan;
        summary.avg_k0_plateau = n_plat ? k0p_acc / n_plat : nan;
        summary.avg_mse_plateau = n_plat ? msep_acc / n_plat : nan;
        summary.plateau_found = n_plat;
        result.summaries.push_back(summary);
    }

    std::vector<double> lx, ly;
    for (const auto& s : result.summaries) {
        if (std::isnan(s.avg_k0_norm) || !(s.eps > 0.0)) continue;
        lx.push_back(std::log10(1.0 / s.eps));
        ly.push_back(s.avg_k0_norm);
    }
    if (lx.size() >= 2) {
        result.k0_fit = linear_fit(lx, ly);
    } else {
        const double nan2 = std::numeric_limits<double>::quiet_NaN();
        result.k0_fit = {nan2, nan2, nan2};
    }
    return result;
}

LinearFit linear_fit(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("linear_fit needs matching samples, n >= 2");
    const double n = static_cast<double>(x.size());
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx == 0.0) throw std::invalid_argument("degenerate abscissae");
    LinearFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    fit.r2 = (syy == 0.0) ? 1.0 : (sxy * sxy) / (sxx * syy);
    return fit;
}

}  // namespace jumprec
