#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "jumprec/errors.hpp"

namespace jumprec {

/// Hard cap on requested polynomial degrees; the recurrences themselves abort
/// with the offending degree as soon as a value leaves double range.
inline constexpr int kDefaultDegreeCap = 4096;

using BigInt = boost::multiprecision::cpp_int;

/// Value of the Pollaczek polynomial on the negative imaginary axis in
/// phase-reduced form: P_m[-i(n+1/2)] = i^m * q with q real.
struct PhasedPollaczek {
    int m;
    int n;
    double q;
};

/// Laguerre values L_0(u)..L_mmax(u) at a single point.
struct LaguerreRow {
    double u;
    std::vector<double> values;
};

/// Large-degree magnitude (2m)^n/n! together with the exact phase factor
/// (-1)^m i^m, stored as its real/imaginary parts (each in {-1,0,1}).
struct AsymptoticValue {
    int m;
    int n;
    double modulus;
    int phase_re;
    int phase_im;
};

/// q_0..q_{m_max} with P_m[-i(n+1/2)] = i^m q_m, by the three-term recurrence
///   q_0 = 1,  q_1 = -(2n+1),  (m+1) q_{m+1} = -(2n+1) q_m + m q_{m-1}.
/// Throws degree_cap_error if any q_m leaves double range.
std::vector<double> pollaczek_imag_axis(int n, int m_max);

/// Convenience single-value form of pollaczek_imag_axis.
PhasedPollaczek phased_pollaczek(int n, int m);

/// Exact integers S_0..S_{m_max} with P_m[-i(n+1/2)] = (-i)^m S_m, from the
/// closed form S_m = sum_j C(n,j) C(n+m-j, m-j) of the generating function
/// (1-it)^n (1+it)^{-n-1}. Relation to the recurrence: q_m = (-1)^m S_m.
std::vector<BigInt> pollaczek_oracle(int n, int m_max);

/// P_0(x)..P_{m_max}(x) on the real axis:
///   P_0 = 1,  P_1 = 2x,  (m+1) P_{m+1} = 2x P_m - m P_{m-1}.
std::vector<double> pollaczek_real(double x, int m_max);

/// Orthonormality weight of the real-axis family: sech(pi x).
/// Underflows to 0 for large |x|; never overflows.
double pollaczek_weight(double x);

/// Standard Laguerre values by the three-term recurrence. Requires u >= 0.
LaguerreRow laguerre(double u, int m_max);

/// Scaled values l_m(u) = L_m(u) e^{-u/2}. Same recurrence, scaled start;
/// bounded by 1 for all u >= 0, so usable at arbitrarily large u where the
/// plain values overflow.
std::vector<double> laguerre_scaled(double u, int m_max);

/// Large-m magnitude of P_m[-i(n+1/2)]: modulus (2m)^n/n!, phase (-1)^m i^m.
/// Requires m >= 1. Throws degree_cap_error if (2m)^n/n! overflows.
AsymptoticValue pollaczek_asymptotic(int m, int n);

}  // namespace jumprec
