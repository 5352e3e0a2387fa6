#include "jumprec/reconstruct.hpp"

#include <cmath>
#include <stdexcept>

#include "jumprec/quadrature.hpp"
#include "jumprec/specfun.hpp"

namespace jumprec {

std::vector<double> basis_phi_real(double x, int m_max) {
    if (!(x > 0.0)) throw std::domain_error("basis_phi_real requires x > 0");
    auto row = laguerre(2.0 / x, m_max);
    const double scale = std::sqrt(2.0) * std::exp(-1.0 / x) / x;
    for (double& v : row.values) v *= scale;
    return std::move(row.values);
}

JumpSamples reconstruct(const SpectralSeries& s, int k0,
                        std::span<const double> xs) {
    if (k0 < 0 || k0 > s.m_max())
        throw std::out_of_range("k0 outside the computed spectral range");
    if (xs.empty()) throw std::invalid_argument("empty grid");
    if (!(xs[0] >= 1.0))
        throw std::invalid_argument("grid must start at x >= 1");
    for (std::size_t i = 1; i < xs.size(); ++i)
        if (!(xs[i] > xs[i - 1]))
            throw std::invalid_argument("grid must be strictly increasing");

    JumpSamples out;
    out.xs.assign(xs.begin(), xs.end());
    out.values.resize(xs.size());
    out.k0_used = k0;
    for (std::size_t i = 0; i < xs.size(); ++i)
        out.values[i] = reconstruct_at(s, k0, xs[i]);
    return out;
}

double reconstruct_at(const SpectralSeries& s, int k0, double x) {
    if (k0 < 0 || k0 > s.m_max())
        throw std::out_of_range("k0 outside the computed spectral range");
    const auto basis = basis_phi_real(x, k0);
    double sum = 0.0;
    for (int m = 0; m <= k0; ++m) {
        const double term = s.r[m] * basis[m];
        sum += (m % 2 ? -term : term);
    }
    return sum;
}

std::complex<double> cauchy_eval(const std::function<double(double)>& f,
                                 std::complex<double> z, double tol,
                                 double support_end) {
    if (z.imag() == 0.0 && z.real() >= 1.0)
        throw std::domain_error("cauchy_eval: z lies on the cut [1, inf)");

    const auto zr = z.real();
    const auto zi = z.imag();
    if (std::isfinite(support_end)) {
        if (!(support_end > 1.0))
            throw std::invalid_argument("support_end must exceed 1");
        // 1/(x - z) = (x - conj z)/|x - z|^2
        auto re = [&](double x) {
            const double d2 = (x - zr) * (x - zr) + zi * zi;
            return f(x) * (x - zr) / d2;
        };
        auto im = [&](double x) {
            const double d2 = (x - zr) * (x - zr) + zi * zi;
            return f(x) * zi / d2;
        };
        const double vr = integrate_adaptive(re, 1.0, support_end, tol);
        const double vi =
            (zi == 0.0) ? 0.0 : integrate_adaptive(im, 1.0, support_end, tol);
        return {vr, vi};
    }

    // u = 1/x maps [1, inf) to (0, 1]:  f(z) = int_0^1 F(1/u) / (u (1 - z u)) du.
    // The denominator vanishes only for z on the cut, already excluded.
    auto re = [&](double u) {
        const std::complex<double> den = u * (1.0 - z * u);
        const std::complex<double> g = f(1.0 / u) / den;
        return g.real();
    };
    auto im = [&](double u) {
        const std::complex<double> den = u * (1.0 - z * u);
        const std::complex<double> g = f(1.0 / u) / den;
        return g.imag();
    };
    const double vr = integrate_adaptive(re, 0.0, 1.0, tol);
    const double vi = (zi == 0.0) ? 0.0 : integrate_adaptive(im, 0.0, 1.0, tol);
    return {vr, vi};
}

std::complex<double> taylor_partial(const TaylorData& t, std::complex<double> z,
                                    int cap) {
    const int top = (cap < 0) ? t.max_index() : std::min(cap, t.max_index());
    std::complex<double> acc = 0.0;
    for (int n = top; n >= 0; --n) acc = acc * z + t.a[n];  // Horner
    return acc;
}

std::vector<double> uniform_grid(double x_min, double x_max, int points) {
    if (points < 2) throw std::invalid_argument("grid needs at least 2 points");
    if (!(x_max > x_min)) throw std::invalid_argument("x_max must exceed x_min");
    std::vector<double> xs(points);
    const double h = (x_max - x_min) / (points - 1);
    for (int i = 0; i < points; ++i) xs[i] = x_min + i * h;
    xs.back() = x_max;
    return xs;
}

}  // namespace jumprec
