#pragma once

#include <cmath>
#include <cstddef>
#include <span>

namespace entrex::detail {

/// Neumaier-compensated accumulator. The entropy identities are checked at
/// 1e-10 absolute over 65536-bin distributions, which plain summation does
/// not reliably reach.
class NeumaierSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

inline double compensated_sum(std::span<const double> xs) {
    NeumaierSum acc;
    for (double x : xs) acc.add(x);
    return acc.value();
}

}  // namespace entrex::detail
