#include "jumprec/metrics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace jumprec {

namespace {
constexpr double kGridSlack = 1e-9;
}

double mse(const JumpSamples& rec, const TestProblem& p) {
    if (rec.xs.empty() || rec.xs.front() > 1.0 + kGridSlack ||
        rec.xs.back() < 20.0 - kGridSlack)
        throw std::invalid_argument("reconstruction grid must cover [1, 20]");
    double acc = 0.0;
    std::size_t count = 0;
    for (std::size_t i = 0; i < rec.xs.size(); ++i) {
        const double x = rec.xs[i];
        if (x < 1.0 - kGridSlack || x > 20.0 + kGridSlack) continue;
        const double d = rec.values[i] - p.f(x);
        acc += d * d;
        ++count;
    }
    return acc / count;
}

double rel_l2_error(const JumpSamples& rec, const TestProblem& p, double lo,
                    double hi) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < rec.xs.size(); ++i) {
        const double x = rec.xs[i];
        if (x < lo - kGridSlack || x > hi + kGridSlack) continue;
        const double ft = p.f(x);
        const double d = rec.values[i] - ft;
        num += d * d;
        den += ft * ft;
    }
    if (den == 0.0) throw std::invalid_argument("target vanishes on [lo, hi]");
    return std::sqrt(num / den);
}

double snr_db(const TaylorData& t_clean, double eps) {
    if (eps == 0.0) return std::numeric_limits<double>::infinity();
    if (!(eps > 0.0)) throw std::domain_error("eps must be non-negative");
    double power = 0.0;
    for (double v : t_clean.a) power += v * v;
    power /= t_clean.a.size();
    return 10.0 * std::log10(power / (eps * eps / 3.0));
}

double hausdorff_statistic(std::span<const double> f, int n, double eps_exp) {
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    if (static_cast<int>(f.size()) < n + 1)
        throw std::invalid_argument("sequence shorter than n+1");
    if (!(eps_exp > 0.0)) throw std::invalid_argument("eps_exp must be positive");

    // diffs[i][j] = Delta^i f_j for j <= n - i.
    std::vector<double> cur(f.begin(), f.begin() + n + 1);
    double acc = 0.0;
    double binom = 1.0;  // C(n, i)
    for (int i = 0; i <= n; ++i) {
        acc += std::pow(binom, 2.0 + eps_exp) *
               std::pow(std::abs(cur[n - i]), 2.0 + eps_exp);
        for (int j = 0; j + 1 < static_cast<int>(cur.size()); ++j)
            cur[j] = cur[j + 1] - cur[j];
        cur.pop_back();
        binom = binom * (n - i) / (i + 1);
    }
    return std::pow(n + 1.0, 1.0 + eps_exp) * acc;
}

}  // namespace jumprec
