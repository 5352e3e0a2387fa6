#include "jumprec/truncation.hpp"

#include <algorithm>
#include <stdexcept>

namespace jumprec {

namespace {
constexpr double kFlatnessFloor = 1e-300;  // avoids 0/0 when leading terms vanish
}

void PlateauParams::validate() const {
    if (!(delta > 0.0)) throw std::invalid_argument("delta must be positive");
    if (l_min < 1) throw std::invalid_argument("l_min must be at least 1");
    if (!(tau > 0.0 && tau <= 1.0)) throw std::invalid_argument("tau must be in (0,1]");
}

PlateauReport detect_k0(std::span<const double> m_k, const Envelope& env,
                        const PlateauParams& params) {
    params.validate();
    const int top = static_cast<int>(m_k.size()) - 1;
    if (top < 1) throw std::invalid_argument("energy sequence too short");

    int k_a = top;
    for (int k = 1; k <= top; ++k) {
        const double diff = m_k[k] - m_k[k - 1];
        const double e = env(k);
        if (diff >= params.tau * e && diff <= e / params.tau) {
            k_a = k;
            break;
        }
    }

    // Maximal flat runs strictly below k_a.
    std::vector<PlateauInterval> runs;
    const int scan_top = std::min(k_a, top) - 1;  // predicate at k uses M_{k+1}
    auto flat = [&](int k) {
        return (m_k[k + 1] - m_k[k]) / std::max(m_k[k], kFlatnessFloor) <
               params.delta;
    };
    for (int k = 0; k <= scan_top;) {
        if (!flat(k)) {
            ++k;
            continue;
        }
        const int lo = k;
        while (k <= scan_top && flat(k)) ++k;
        const int hi = k - 1;
        if (hi - lo + 1 >= params.l_min) runs.push_back({lo, hi});
    }

    if (runs.empty()) throw no_plateau_error(k_a);

    PlateauReport report;
    report.plateaus = std::move(runs);
    report.k_a = k_a;
    report.k0 = report.plateaus.back().hi;  // closest below k_a; ties favor larger k
    report.params = params;
    report.plateau_height = m_k[report.k0];
    return report;
}

int k0_from_norm(std::span<const double> m_k, double c) {
    if (!(c > 0.0)) throw std::invalid_argument("norm bound must be positive");
    if (m_k.empty()) throw std::invalid_argument("energy sequence is empty");
    if (m_k[0] > c)
        throw norm_bound_error("norm bound lies below the first partial sum");
    int k0 = 0;
    for (std::size_t k = 1; k < m_k.size() && m_k[k] <= c; ++k)
        k0 = static_cast<int>(k);
    return k0;
}

}  // namespace jumprec
