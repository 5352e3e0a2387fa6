#include "jumprec/specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace jumprec {

namespace {

void check_degree_args(int n, int m_max) {
    if (n < 0) throw std::invalid_argument("index n must be non-negative");
    if (m_max < 0) throw std::invalid_argument("degree cap must be non-negative");
    if (m_max > kDefaultDegreeCap)
        throw degree_cap_error("degree cap exceeds the configured maximum", m_max);
}

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (int j = 1; j <= k; ++j) {
        r *= n - k + j;
        r /= j;
    }
    return r;
}

}  // namespace

std::vector<double> pollaczek_imag_axis(int n, int m_max) {
    check_degree_args(n, m_max);
    std::vector<double> q(m_max + 1);
    q[0] = 1.0;
    if (m_max >= 1) q[1] = -(2.0 * n + 1.0);
    for (int m = 1; m < m_max; ++m) {
        q[m + 1] = (-(2.0 * n + 1.0) * q[m] + m * q[m - 1]) / (m + 1);
        if (!std::isfinite(q[m + 1]))
            throw degree_cap_error("pollaczek_imag_axis overflow", m + 1);
    }
    return q;
}

PhasedPollaczek phased_pollaczek(int n, int m) {
    auto q = pollaczek_imag_axis(n, m);
    return {m, n, q[m]};
}

std::vector<BigInt> pollaczek_oracle(int n, int m_max) {
    if (n < 0 || m_max < 0) throw std::invalid_argument("n, m_max must be non-negative");
    std::vector<BigInt> s(m_max + 1);
    for (int m = 0; m <= m_max; ++m) {
        BigInt acc = 0;
        const int jmax = std::min(n, m);
        for (int j = 0; j <= jmax; ++j)
            acc += binomial(n, j) * binomial(n + m - j, m - j);
        s[m] = acc;
    }
    return s;
}

std::vector<double> pollaczek_real(double x, int m_max) {
    if (!std::isfinite(x)) throw std::invalid_argument("x must be finite");
    if (m_max < 0) throw std::invalid_argument("degree cap must be non-negative");
    std::vector<double> p(m_max + 1);
    p[0] = 1.0;
    if (m_max >= 1) p[1] = 2.0 * x;
    for (int m = 1; m < m_max; ++m) {
        p[m + 1] = (2.0 * x * p[m] - m * p[m - 1]) / (m + 1);
        if (!std::isfinite(p[m + 1]))
            throw degree_cap_error("pollaczek_real overflow", m + 1);
    }
    return p;
}

double pollaczek_weight(double x) {
    // sech(pi x) = Gamma(1/2+ix) Gamma(1/2-ix) / pi, written to avoid
    // cosh overflow: 2 e^{-pi|x|} / (1 + e^{-2 pi|x|}).
    const double t = std::exp(-M_PI * std::abs(x));
    return 2.0 * t / (1.0 + t * t);
}

LaguerreRow laguerre(double u, int m_max) {
    if (!(u >= 0.0)) throw std::domain_error("laguerre requires u >= 0");
    if (m_max < 0) throw std::invalid_argument("degree cap must be non-negative");
    LaguerreRow row{u, std::vector<double>(m_max + 1)};
    auto& v = row.values;
    v[0] = 1.0;
    if (m_max >= 1) v[1] = 1.0 - u;
    for (int m = 1; m < m_max; ++m)
        v[m + 1] = ((2.0 * m + 1.0 - u) * v[m] - m * v[m - 1]) / (m + 1);
    return row;
}

std::vector<double> laguerre_scaled(double u, int m_max) {
    if (!(u >= 0.0)) throw std::domain_error("laguerre_scaled requires u >= 0");
    std::vector<double> v(m_max + 1);
    const double s = std::exp(-0.5 * u);
    v[0] = s;
    if (m_max >= 1) v[1] = (1.0 - u) * s;
    for (int m = 1; m < m_max; ++m)
        v[m + 1] = ((2.0 * m + 1.0 - u) * v[m] - m * v[m - 1]) / (m + 1);
    return v;
}

AsymptoticValue pollaczek_asymptotic(int m, int n) {
    if (m < 1) throw std::invalid_argument("pollaczek_asymptotic requires m >= 1");
    if (n < 0) throw std::invalid_argument("index n must be non-negative");
    const double log_modulus = n * std::log(2.0 * m) - std::lgamma(n + 1.0);
    const double modulus = std::exp(log_modulus);
    if (!std::isfinite(modulus))
        throw degree_cap_error("pollaczek_asymptotic overflow", m);
    // (-1)^m i^m = (-i)^m cycles with period 4.
    static constexpr int re[4] = {1, 0, -1, 0};
    static constexpr int im[4] = {0, -1, 0, 1};
    return {m, n, modulus, re[m % 4], im[m % 4]};
}

}  // namespace jumprec
