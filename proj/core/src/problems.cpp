#include "jumprec/problems.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "jumprec/quadrature.hpp"

namespace jumprec {

double TestProblem::integration_end(double tol) const {
    switch (tail) {
        case TailKind::compact:
            return tail_param;
        case TailKind::exponential:
            // e^{-rate x} tail below tol past this point, with a safety margin.
            return 1.0 + 1.3 * std::log(1.0 / tol) / tail_param;
        case TailKind::algebraic:
            return std::numeric_limits<double>::infinity();
    }
    throw std::logic_error("unreachable");
}

const TestProblem& catalog(const std::string& id) {
    static const std::vector<TestProblem> problems = [] {
        std::vector<TestProblem> v;

        TestProblem f1;
        f1.id = "F1";
        f1.description = "(x-1)^2 / (x^4+x^3+x^2+x+1), smooth with algebraic decay";
        f1.f = [](double x) {
            const double d = x * x * x * x + x * x * x + x * x + x + 1.0;
            return (x - 1.0) * (x - 1.0) / d;
        };
        f1.tail = TailKind::algebraic;
        v.push_back(std::move(f1));

        TestProblem f2;
        f2.id = "F2";
        f2.description = "(x-1)^2 exp(-x/2), smooth with exponential decay";
        f2.f = [](double x) { return (x - 1.0) * (x - 1.0) * std::exp(-0.5 * x); };
        f2.norm_sq_exact = 24.0 / std::exp(1.0);  // int (x-1)^4 e^{-x} = Gamma(5)/e
        f2.tail = TailKind::exponential;
        f2.tail_param = 0.5;
        v.push_back(std::move(f2));

        TestProblem f3;
        f3.id = "F3";
        f3.description = "indicator of [1,10], discontinuous";
        f3.f = [](double x) { return (x >= 1.0 && x <= 10.0) ? 1.0 : 0.0; };
        f3.norm_sq_exact = 9.0;
        f3.exact_taylor = [](int n) {
            return n == 0 ? std::log(10.0) : (1.0 - std::pow(10.0, -n)) / n;
        };
        f3.tail = TailKind::compact;
        f3.tail_param = 10.0;
        v.push_back(std::move(f3));
        return v;
    }();

    for (const auto& p : problems)
        if (p.id == id) return p;
    throw std::invalid_argument("unknown problem id: " + id);
}

std::vector<std::string> catalog_ids() { return {"F1", "F2", "F3"}; }

TestProblem custom_from_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<double> xs, fs;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream ss(line);
        double x, f;
        if (!(ss >> x >> f)) continue;  // header or malformed line
        xs.push_back(x);
        fs.push_back(f);
    }
    if (xs.size() < 2)
        throw std::runtime_error("custom problem needs at least two samples");
    for (std::size_t i = 1; i < xs.size(); ++i)
        if (!(xs[i] > xs[i - 1]))
            throw std::runtime_error("custom problem x column must increase");
    if (!(xs.front() >= 1.0))
        throw std::runtime_error("custom problem must start at x >= 1");

    TestProblem p;
    p.id = "custom";
    p.description = "tabulated from " + path;
    p.f = [xs, fs](double x) {
        if (x < xs.front() || x > xs.back()) return 0.0;
        const auto it = std::upper_bound(xs.begin(), xs.end(), x);
        if (it == xs.begin()) return fs.front();
        if (it == xs.end()) return fs.back();
        const std::size_t hi = it - xs.begin();
        const double w = (x - xs[hi - 1]) / (xs[hi] - xs[hi - 1]);
        return fs[hi - 1] * (1.0 - w) + fs[hi] * w;
    };
    p.tail = TailKind::compact;
    p.tail_param = xs.back();
    return p;
}

TaylorData forward_taylor(const TestProblem& p, int count, double tol) {
    if (count < 1) throw std::invalid_argument("need at least one coefficient");
    std::vector<double> a(count);
    if (p.has_exact_taylor()) {
        for (int n = 0; n < count; ++n) a[n] = p.exact_taylor(n);
        return TaylorData(std::move(a), 0.0);
    }
    const double end = p.integration_end(tol);
    for (int n = 0; n < count; ++n) {
        if (std::isfinite(end)) {
            a[n] = integrate_adaptive(
                [&, n](double x) { return std::pow(x, -n - 1.0) * p.f(x); }, 1.0,
                end, tol);
        } else {
            // u = 1/x: a_n = int_0^1 u^{n-1} F(1/u) du; u^{-1} F(1/u) stays
            // bounded for algebraic tails.
            a[n] = integrate_adaptive(
                [&, n](double u) {
                    return std::pow(u, n - 1.0) * p.f(1.0 / u);
                },
                0.0, 1.0, tol);
        }
    }
    return TaylorData(std::move(a), 0.0);
}

TaylorData add_noise(const TaylorData& t, const NoiseSpec& spec) {
    if (!(spec.eps >= 0.0))
        throw std::invalid_argument("noise bound must be non-negative");
    std::mt19937_64 rng(spec.seed);
    auto a = t.a;
    for (double& v : a) {
        // 53-bit mantissa mapping to [0,1); |perturbation| < eps strictly.
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        v += spec.eps * (2.0 * u - 1.0);
    }
    return TaylorData(std::move(a), spec.eps);
}

double norm_squared(const TestProblem& p, double tol) {
    if (p.norm_sq_exact) return *p.norm_sq_exact;
    const double end = p.integration_end(tol);
    if (std::isfinite(end))
        return integrate_adaptive([&](double x) { return p.f(x) * p.f(x); }, 1.0,
                                  end, tol);
    // u = 1/x: int F^2 dx = int_0^1 (F(1/u)/u)^2 du.
    return integrate_adaptive(
        [&](double u) {
            const double g = p.f(1.0 / u) / u;
            return g * g;
        },
        0.0, 1.0, tol);
}

}  // namespace jumprec
