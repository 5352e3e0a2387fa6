#pragma once

#include <span>
#include <vector>

#include "jumprec/errors.hpp"

namespace jumprec {

/// The data of the inverse problem: coefficients a_0..a_N and the
/// per-coefficient noise bound.
struct TaylorData {
    std::vector<double> a;
    double eps_bound = 0.0;

    TaylorData() : a(1, 0.0) {}  // the zero datum
    TaylorData(std::vector<double> coeffs, double eps = 0.0);

    int max_index() const { return static_cast<int>(a.size()) - 1; }
};

/// Phase-reduced spectral coefficients: c_m = i^m r_m with r_m real, plus the
/// running energies M_k = sum_{m<=k} r_m^2.
struct SpectralSeries {
    std::vector<double> r;
    std::vector<double> energy;  // M_k

    int m_max() const { return static_cast<int>(r.size()) - 1; }
};

/// r_m = sqrt(2) sum_{n=0}^N (-1)^n a_n q_m(n) / n!, accumulated with
/// compensated summation over n. Sequential and bit-reproducible for fixed
/// input. Throws degree_cap_error if the polynomial recurrence overflows.
SpectralSeries compute_spectral(const TaylorData& t, int m_max);

/// Running sums M_k = sum_{m<=k} r_m^2 (non-decreasing by construction).
std::vector<double> partial_energy(std::span<const double> r);

/// Large-k growth scale of the energy increments:
///   E(k) = (b_N / N!)^2 (2k)^{2N},  b_N = sqrt(2) a_N / N!.
/// Constant 2 a_0^2 when N = 0; strictly increasing for N >= 1 (E(0) = 0).
struct Envelope {
    int order = 0;          // N
    double log_scale = 0.0; // log(2 a_N^2) - 4 lgamma(N+1)

    double operator()(int k) const;
};

/// Envelope of the data's trailing coefficient. Throws envelope_error when
/// a_N == 0: drop trailing zeros first (the effective N is the last nonzero
/// index; see trim_trailing_zeros).
Envelope envelope(const TaylorData& t);

/// Copy of t without trailing zero coefficients. Throws envelope_error if all
/// coefficients vanish.
TaylorData trim_trailing_zeros(const TaylorData& t);

}  // namespace jumprec
