#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace jumprec {

/// A polynomial recurrence left the range of double at the reported degree.
class degree_cap_error : public std::runtime_error {
public:
    degree_cap_error(const std::string& what, int degree)
        : std::runtime_error(what + " (degree " + std::to_string(degree) + ")"),
          degree_(degree) {}
    int degree() const noexcept { return degree_; }

private:
    int degree_;
};

/// No plateau of the required length exists below the asymptotic onset k_a.
/// Carries k_a so callers can fall back to the norm-based selection.
class no_plateau_error : public std::runtime_error {
public:
    explicit no_plateau_error(int k_a)
        : std::runtime_error("no plateau of the required length below k_a = " +
                             std::to_string(k_a)),
          k_a_(k_a) {}
    int k_a() const noexcept { return k_a_; }

private:
    int k_a_;
};

/// Adaptive quadrature could not meet the requested tolerance.
class quadrature_error : public std::runtime_error {
public:
    quadrature_error(const std::string& what, double achieved)
        : std::runtime_error(what + " (achieved error estimate " +
                             format_estimate(achieved) + ")"),
          achieved_(achieved) {}
    double achieved() const noexcept { return achieved_; }

private:
    static std::string format_estimate(double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3g", v);
        return buf;
    }
    double achieved_;
};

/// The growth envelope needs a nonzero trailing coefficient; the effective
/// order is the last nonzero index.
class envelope_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// k0_from_norm: the bound lies below the very first partial sum.
class norm_bound_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace jumprec
