#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "smp/periodic_seq.hpp"

namespace smp {

/// Periodic banded operator stored by diagonals.
///
/// diagonal(k).at(n) is the matrix entry M(n, n + k) for every integer n,
/// with k ranging over [-width, width].
template <typename Scalar = double>
class BandOperator {
public:
    BandOperator(int width, Eigen::Index period)
        : width_(width), diags_(std::size_t(2 * width + 1), PeriodicSeq<Scalar>::zero(period))
    {
    }

    int width() const noexcept { return width_; }
    Eigen::Index period() const noexcept { return diags_.front().period(); }

    const PeriodicSeq<Scalar>& diagonal(int k) const { return diags_.at(std::size_t(k + width_)); }

    void set_diagonal(int k, PeriodicSeq<Scalar> d)
    {
        if (d.period() != period())
            d = d.lifted(std::lcm(d.period(), period()));
        if (d.period() != period())
            throw PeriodMismatch("diagonal period does not match operator period");
        diags_.at(std::size_t(k + width_)) = std::move(d);
    }

    Scalar entry(std::int64_t row, std::int64_t col) const
    {
        const std::int64_t k = col - row;
        if (k < -width_ || k > width_)
            return Scalar(0);
        return diagonal(int(k)).at(row);
    }

    /// Operator product: (A B)(n, n + k) = sum_i A(n, n + i) B(n + i, n + k).
    friend BandOperator operator*(const BandOperator& a, const BandOperator& b)
    {
        const Eigen::Index m = std::lcm(a.period(), b.period());
        const int w = a.width_ + b.width_;
        BandOperator out(w, m);
        for (int k = -w; k <= w; ++k) {
            Vec<Scalar> d = Vec<Scalar>::Zero(m);
            for (Eigen::Index n = 0; n < m; ++n) {
                Scalar acc(0);
                for (int i = std::max(-a.width_, k - b.width_); i <= std::min(a.width_, k + b.width_); ++i)
                    acc += a.diagonal(i).at(n) * b.diagonal(k - i).at(n + i);
                d[n] = acc;
            }
            out.diags_[std::size_t(k + w)] = PeriodicSeq<Scalar>(std::move(d));
        }
        return out;
    }

    /// (M u)_n = sum_k M(n, n + k) u_{n + k}.
    PeriodicSeq<Scalar> apply(const PeriodicSeq<Scalar>& u) const
    {
        const Eigen::Index m = std::lcm(period(), u.period());
        Vec<Scalar> out = Vec<Scalar>::Zero(m);
        for (Eigen::Index n = 0; n < m; ++n)
            for (int k = -width_; k <= width_; ++k)
                out[n] += diagonal(k).at(n) * u.at(n + k);
        return PeriodicSeq<Scalar>(std::move(out));
    }

private:
    int width_;
    std::vector<PeriodicSeq<Scalar>> diags_;
};

} // namespace smp
