#pragma once

#include <complex>
#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "jumprec/spectral.hpp"

namespace jumprec {

/// Phase-stripped basis values B~_m(x) = sqrt(2) L_m(2/x) e^{-1/x} / x, so
/// that the complex basis is phi_m(x) = i^m B~_m(x). Requires x > 0.
std::vector<double> basis_phi_real(double x, int m_max);

/// Regularized reconstruction evaluated on a grid.
struct JumpSamples {
    std::vector<double> xs;
    std::vector<double> values;
    int k0_used = 0;
};

/// F(x) = sum_{m<=k0} (-1)^m r_m B~_m(x): the i^m phases of coefficient and
/// basis combine to (-1)^m, so the result is exactly real. Grid must be
/// strictly increasing with xs[0] >= 1.
JumpSamples reconstruct(const SpectralSeries& s, int k0,
                        std::span<const double> xs);

/// Single-point evaluation of the truncated expansion (any x > 0).
double reconstruct_at(const SpectralSeries& s, int k0, double x);

/// Cauchy transform f(z) = int_1^inf F(x)/(x-z) dx for z off the cut [1,inf).
/// Infinite support integrates after u = 1/x (requires x F(x) bounded);
/// a finite support_end integrates [1, support_end] directly.
/// Throws std::domain_error for z on the cut and quadrature_error when the
/// requested absolute tolerance cannot be met.
std::complex<double> cauchy_eval(
    const std::function<double(double)>& f, std::complex<double> z,
    double tol = 1e-10,
    double support_end = std::numeric_limits<double>::infinity());

/// Truncated series sum_{n<=cap} a_n z^n (cap < 0 means all coefficients).
/// Intended for |z| < 1; the tail is not estimated.
std::complex<double> taylor_partial(const TaylorData& t, std::complex<double> z,
                                    int cap = -1);

/// points equally spaced values on [x_min, x_max].
std::vector<double> uniform_grid(double x_min, double x_max, int points);

}  // namespace jumprec
