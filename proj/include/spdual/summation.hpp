#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace spdual {

/// Compensated (Kahan) accumulator. Reductions over paths and long
/// space-time quadratures go through this so results stay stable to
/// ~1e-15 relative regardless of term count.
struct KahanSum {
    double sum = 0.0;
    double c = 0.0;

    void add(double value) {
        const double y = value - c;
        const double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }

    double value() const { return sum; }
};

inline double kahan_total(std::span<const double> values) {
    KahanSum s;
    for (double v : values) s.add(v);
    return s.value();
}

struct MeanStdError {
    double mean = 0.0;
    double std_error = 0.0;
};

/// Two-pass sample mean and standard error (sample std / sqrt(n)).
inline MeanStdError mean_std_error(std::span<const double> values) {
    MeanStdError out;
    const std::size_t n = values.size();
    if (n == 0) return out;
    out.mean = kahan_total(values) / static_cast<double>(n);
    if (n < 2) return out;
    KahanSum sq;
    for (double v : values) {
        const double d = v - out.mean;
        sq.add(d * d);
    }
    const double var = sq.value() / static_cast<double>(n - 1);
    out.std_error = std::sqrt(var / static_cast<double>(n));
    return out;
}

}  // namespace spdual
