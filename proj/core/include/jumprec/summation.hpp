#pragma once

namespace jumprec {

/// Kahan-compensated accumulator. Alternating-sign sums whose terms span many
/// orders of magnitude (the spectral sums over n) lose the plateau scale under
/// naive accumulation; the running compensation keeps the error at one ulp of
/// the result.
template <typename T = double>
struct KahanAccumulator {
    T sum{0};
    T compensation{0};

    void add(T value) {
        const T y = value - compensation;
        const T t = sum + y;
        compensation = (t - sum) - y;
        sum = t;
    }

    KahanAccumulator& operator+=(T value) {
        add(value);
        return *this;
    }

    T value() const { return sum; }
};

}  // namespace jumprec
