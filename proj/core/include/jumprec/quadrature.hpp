#pragma once

#include <functional>
#include <vector>

#include "jumprec/errors.hpp"

namespace jumprec {

/// Adaptive Gauss-Kronrod integral of f over the finite interval [a, b].
/// Throws quadrature_error when the error estimate exceeds abs_tol.
double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double abs_tol);

/// Gauss-Laguerre rule for integrals against e^{-u} on [0, inf).
/// scaled_weights[i] = w_i e^{x_i}; pair them with e^{-u/2}-scaled function
/// values so nothing overflows:  sum_i scaled_weights[i] * g(x_i) with
/// g(u) = f(u) e^{-u}  evaluated in scaled form.
struct GaussLaguerreRule {
    std::vector<double> nodes;
    std::vector<double> scaled_weights;
};

/// Nodes from the eigenvalues of the Jacobi matrix plus Newton polish;
/// weights from w_i = x_i / ((n+1) l_{n+1}(x_i))^2 with l_m = L_m e^{-u/2}.
GaussLaguerreRule gauss_laguerre(int n);

/// Composite fixed-order Gauss-Legendre rule: `panels` equal subdivisions of
/// [a, b], `order` points each. Deterministic; for smooth integrands.
double integrate_panels(const std::function<double(double)>& f, double a,
                        double b, int panels, int order = 20);

/// Points and weights of the `order`-point Gauss-Legendre rule on [-1, 1].
void legendre_rule(int order, std::vector<double>& x, std::vector<double>& w);

}  // namespace jumprec
