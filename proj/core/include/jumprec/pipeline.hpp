#pragma once

#include <optional>
#include <string>

#include "jumprec/metrics.hpp"
#include "jumprec/problems.hpp"
#include "jumprec/reconstruct.hpp"
#include "jumprec/truncation.hpp"

namespace jumprec {

enum class K0Mode { plateau, norm };

struct RunParams {
    int n_coeffs = 31;  // a_0..a_30
    double eps = 0.0;
    std::uint64_t seed = 1;
    int m_max = 150;
    PlateauParams plateau;
    K0Mode mode = K0Mode::plateau;
    std::optional<int> forced_k0;
    double x_min = 1.0;
    double x_max = 20.0;
    int grid_points = 512;
    double forward_tol = 1e-12;
};

enum class RunStatus { ok, no_plateau };

struct RunResult {
    RunStatus status = RunStatus::ok;
    TaylorData clean;
    TaylorData noisy;
    SpectralSeries series;
    Envelope env;
    std::optional<PlateauReport> report;  // absent when no plateau was found
    int k_a = 0;                          // known even on plateau failure
    std::optional<int> k0_norm;           // present when ||F||^2 is known
    std::optional<double> norm_sq;
    int k0_used = -1;                     // -1 when no reconstruction was made
    std::optional<JumpSamples> rec;
    std::optional<double> mse_value;
    std::optional<double> rel_l2;         // on [x_min, x_max]
    double snr = 0.0;
};

/// forward -> noise -> spectral -> k0 selection -> reconstruction -> metrics.
/// Plateau failure with mode == plateau and no forced k0 yields
/// status == no_plateau with everything up to the selection filled in.
RunResult run_pipeline(const TestProblem& p, const RunParams& params);

/// Named parameter bundles for the three reference experiments. The eps
/// values model the accuracy of realistically computed coefficient sets
/// (fig1: 1e-10, fig2: exact, fig3: 1e-6, the latter reflecting quadrature on
/// a discontinuous integrand); all fields remain overridable.
struct Preset {
    std::string problem;
    RunParams params;
};
Preset preset(const std::string& name);  // fig1 | fig2 | fig3
std::vector<std::string> preset_names();

struct SweepRow {
    double eps;
    int realization;
    std::uint64_t seed;
    int k0_norm = -1;
    int k0_plateau = -1;  // -1: no plateau found
    double mse_norm = 0.0;
    double mse_plateau = 0.0;  // NaN when no plateau
    double snr = 0.0;
};

struct SweepSummary {
    double eps;
    double snr;
    double avg_k0_norm;
    double avg_k0_plateau;  // over realizations with a plateau
    int plateau_found;
    double avg_mse_norm;
    double avg_mse_plateau;
};

struct LinearFit {
    double slope;
    double intercept;
    double r2;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    std::vector<SweepSummary> summaries;
    LinearFit k0_fit;  // avg k0_norm against log10(1/eps)
};

/// Per-(eps, realization) noise study; realization i uses seed base_seed + i.
/// Requires the problem's squared norm (for the norm-based k0).
SweepResult noise_sweep(const TestProblem& p, const RunParams& base,
                        const std::vector<double>& eps_list, int realizations);

LinearFit linear_fit(std::span<const double> x, std::span<const double> y);

}  // namespace jumprec
