#include "jumprec/spectral.hpp"

#include <cmath>
#include <stdexcept>

#include "jumprec/specfun.hpp"
#include "jumprec/summation.hpp"

namespace jumprec {

TaylorData::TaylorData(std::vector<double> coeffs, double eps)
    : a(std::move(coeffs)), eps_bound(eps) {
    if (a.empty()) throw std::invalid_argument("TaylorData needs at least a_0");
    for (double v : a)
        if (!std::isfinite(v))
            throw std::invalid_argument("TaylorData coefficients must be finite");
    if (!(eps_bound >= 0.0))
        throw std::invalid_argument("noise bound must be non-negative");
}

SpectralSeries compute_spectral(const TaylorData& t, int m_max) {
    const int n_top = t.max_index();
    std::vector<KahanAccumulator<double>> acc(m_max + 1);
    const double sqrt2 = std::sqrt(2.0);
    double fact = 1.0;  // n!
    for (int n = 0; n <= n_top; ++n) {
        if (n > 0) fact *= n;
        const double coeff = sqrt2 * (n % 2 ? -1.0 : 1.0) * t.a[n] / fact;
        if (coeff == 0.0) continue;
        const auto q = pollaczek_imag_axis(n, m_max);
        for (int m = 0; m <= m_max; ++m) acc[m].add(coeff * q[m]);
    }
    SpectralSeries s;
    s.r.resize(m_max + 1);
    for (int m = 0; m <= m_max; ++m) s.r[m] = acc[m].value();
    s.energy = partial_energy(s.r);
    return s;
}

std::vector<double> partial_energy(std::span<const double> r) {
    std::vector<double> m_k(r.size());
    double run = 0.0;
    for (std::size_t k = 0; k < r.size(); ++k) {
        run += r[k] * r[k];
        m_k[k] = run;
    }
    return m_k;
}

double Envelope::operator()(int k) const {
    if (k < 0) throw std::invalid_argument("envelope index must be non-negative");
    if (order == 0) return std::exp(log_scale);
    if (k == 0) return 0.0;
    return std::exp(log_scale + 2.0 * order * std::log(2.0 * k));
}

Envelope envelope(const TaylorData& t) {
    const int n = t.max_index();
    if (t.a[n] == 0.0)
        throw envelope_error(
            "envelope undefined: trailing coefficient a_N is zero; drop trailing "
            "zeros (the effective N is the last nonzero index)");
    Envelope e;
    e.order = n;
    e.log_scale = std::log(2.0) + 2.0 * std::log(std::abs(t.a[n])) -
                  4.0 * std::lgamma(n + 1.0);
    return e;
}

TaylorData trim_trailing_zeros(const TaylorData& t) {
    int n = t.max_index();
    while (n > 0 && t.a[n] == 0.0) --n;
    if (n == 0 && t.a[0] == 0.0)
        throw envelope_error("all coefficients vanish; no effective order exists");
    return TaylorData(std::vector<double>(t.a.begin(), t.a.begin() + n + 1),
                      t.eps_bound);
}

}  // namespace jumprec
