#pragma once

#include <cmath>

namespace batrel {

/// Compensated sum (Neumaier's variant of Kahan summation). The running
/// compensation also survives terms larger than the partial sum.
class KahanSum {
public:
    KahanSum() = default;
    explicit KahanSum(double initial) : sum_(initial) {}

    void add(double x) noexcept {
        const double t = sum_ + x;
        if (std::fabs(sum_) >= std::fabs(x)) {
            compensation_ += (sum_ - t) + x;
        } else {
            compensation_ += (x - t) + sum_;
        }
        sum_ = t;
    }

    KahanSum& operator+=(double x) noexcept {
        add(x);
        return *this;
    }

    /// Folds another partial sum in, keeping both compensations.
    KahanSum& operator+=(const KahanSum& other) noexcept {
        add(other.sum_);
        compensation_ += other.compensation_;
        return *this;
    }

    double value() const noexcept { return sum_ + compensation_; }

private:
    double sum_ = 0.0;
    double compensation_ = 0.0;
};

}  // namespace batrel
