#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "jumprec/spectral.hpp"

namespace jumprec {

/// How F decays past the end of the reconstruction window; selects the
/// moment-quadrature route.
enum class TailKind {
    algebraic,    // x F(x) bounded as x -> inf: integrate after u = 1/x
    exponential,  // F ~ e^{-rate x}: integrate [1, 1 + ln(1/tol)/rate] directly
    compact,      // F vanishes beyond support_end
};

/// Catalog entry: an evaluable target on [1, inf) plus its analytic facts.
struct TestProblem {
    std::string id;
    std::string description;
    std::function<double(double)> f;
    std::optional<double> norm_sq_exact;               // ||F||^2 on [1, inf)
    std::function<double(int)> exact_taylor;           // may be empty
    TailKind tail = TailKind::algebraic;
    double tail_param = 0.0;  // rate (exponential) or support end (compact)

    bool has_exact_taylor() const { return static_cast<bool>(exact_taylor); }
    /// Finite integration end for the given tolerance; +inf for algebraic.
    double integration_end(double tol) const;
};

/// Built-in problems F1, F2, F3. Throws std::invalid_argument for unknown ids.
const TestProblem& catalog(const std::string& id);
std::vector<std::string> catalog_ids();

/// Tabulated problem from CSV columns x,F (header line optional): linear
/// interpolation between samples, zero beyond the last x (compact tail).
TestProblem custom_from_csv(const std::string& path);

/// Moments a_n = int_1^inf x^{-n-1} F(x) dx for n = 0..count-1, by the closed
/// form when available, else by the tail-appropriate quadrature route with
/// absolute accuracy <= tol per coefficient.
TaylorData forward_taylor(const TestProblem& p, int count, double tol = 1e-12);

struct NoiseSpec {
    double eps = 0.0;
    std::uint64_t seed = 1;
};

/// a'_n = a_n + u_n with u_n i.i.d. uniform on [-eps, eps], mt19937_64 driven
/// through an explicit 53-bit mapping (bit-reproducible across platforms).
/// Sets eps_bound on the result. Realization i of an experiment uses
/// seed = base_seed + i.
TaylorData add_noise(const TaylorData& t, const NoiseSpec& spec);

/// ||F||^2 on [1, inf), closed form when known, else quadrature within tol.
double norm_squared(const TestProblem& p, double tol = 1e-10);

}  // namespace jumprec
