#pragma once

#include <span>
#include <vector>

#include "jumprec/spectral.hpp"

namespace jumprec {

struct PlateauParams {
    double delta = 1e-3;  // relative flatness threshold on the first difference
    int l_min = 5;        // minimum plateau length in samples
    double tau = 0.5;     // closeness factor defining the asymptotic onset k_a

    void validate() const;
};

struct PlateauInterval {
    int lo;
    int hi;

    int length() const { return hi - lo + 1; }
};

struct PlateauReport {
    std::vector<PlateauInterval> plateaus;
    int k_a = 0;
    int k0 = 0;
    PlateauParams params;
    double plateau_height = 0.0;  // M at k0

    const PlateauInterval& chosen() const { return plateaus.back(); }
};

/// Plateau-based choice of the truncation index.
///
/// k_a is the first k whose energy increment M_k - M_{k-1} lies within a
/// factor 1/tau of the envelope E(k) (the onset of the asymptotic growth);
/// if the band is never entered, k_a is the end of the range. Plateaus are
/// maximal runs of k < k_a with relative increment below delta, shorter than
/// l_min discarded; k0 is the upper end of the run closest below k_a.
///
/// Throws no_plateau_error (carrying k_a) when no run survives; callers may
/// fall back to k0_from_norm or report failure.
PlateauReport detect_k0(std::span<const double> m_k, const Envelope& env,
                        const PlateauParams& params = {});

/// Norm-based choice: the largest k with M_k <= c, for use when the squared
/// norm of the target is known. Throws norm_bound_error when M_0 > c.
int k0_from_norm(std::span<const double> m_k, double c);

}  // namespace jumprec
