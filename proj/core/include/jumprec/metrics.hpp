#pragma once

#include <span>

#include "jumprec/problems.hpp"
#include "jumprec/reconstruct.hpp"

namespace jumprec {

/// Mean of (F_rec - F_true)^2 over the grid points inside [1, 20].
/// The grid must cover [1, 20]. Throws std::invalid_argument otherwise.
double mse(const JumpSamples& rec, const TestProblem& p);

/// Discrete relative L2 error sqrt(sum (F_rec-F_true)^2 / sum F_true^2) over
/// the grid points inside [lo, hi].
double rel_l2_error(const JumpSamples& rec, const TestProblem& p, double lo,
                    double hi);

/// 10 log10( mean(a_n^2) / (eps^2/3) ); the variance of the uniform noise on
/// [-eps, eps] is eps^2/3. Returns +inf for eps == 0 (documented sentinel).
double snr_db(const TaylorData& t_clean, double eps);

/// Growth/difference diagnostic
///   (n+1)^{1+e} sum_{i<=n} C(n,i)^{2+e} |Delta^i f_{n-i}|^{2+e},
/// Delta^k f_j = sum_{m<=k} (-1)^m C(k,m) f_{j+k-m}. Boundedness over n
/// suggests the cut-plane growth condition holds for the data; reported, not
/// thresholded. Requires at least n+1 entries and eps_exp > 0.
double hausdorff_statistic(std::span<const double> f, int n, double eps_exp);

}  // namespace jumprec
