#pragma once

#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <string>

#include <Eigen/Core>

#include "smp/errors.hpp"

namespace smp {

template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Non-negative remainder of n modulo m (m > 0).
constexpr std::int64_t wrap(std::int64_t n, std::int64_t m) noexcept
{
    const std::int64_t k = n % m;
    return k < 0 ? k + m : k;
}

/// A real bi-infinite sequence of even period 2m, stored as one period.
///
/// values()[k] is the value at every index n with n = k (mod period).
/// Instances are immutable; all algebra below returns new sequences.
template <typename Scalar = double>
class PeriodicSeq {
public:
    explicit PeriodicSeq(Vec<Scalar> values) : values_(std::move(values))
    {
        if (values_.size() < 2 || values_.size() % 2 != 0)
            throw InvalidPeriod("period must be even and >= 2, got " + std::to_string(values_.size()));
    }

    PeriodicSeq(std::initializer_list<Scalar> values)
        : PeriodicSeq(Vec<Scalar>(Eigen::Map<const Vec<Scalar>>(values.begin(), Eigen::Index(values.size()))))
    {
    }

    static PeriodicSeq zero(Eigen::Index period) { return PeriodicSeq(Vec<Scalar>::Zero(period)); }

    static PeriodicSeq constant(Eigen::Index period, Scalar v) { return PeriodicSeq(Vec<Scalar>::Constant(period, v)); }

    Eigen::Index period() const noexcept { return values_.size(); }
    const Vec<Scalar>& values() const noexcept { return values_; }

    Scalar at(std::int64_t n) const noexcept { return values_[wrap(n, values_.size())]; }
    Scalar operator()(std::int64_t n) const noexcept { return at(n); }

    /// Same sequence represented over `period` entries (a multiple of the current one).
    PeriodicSeq lifted(Eigen::Index period) const
    {
        if (period % values_.size() != 0)
            throw PeriodMismatch("cannot lift period " + std::to_string(values_.size()) + " to "
                                 + std::to_string(period));
        return PeriodicSeq(values_.replicate(period / values_.size(), 1));
    }

    friend bool operator==(const PeriodicSeq& a, const PeriodicSeq& b)
    {
        return a.period() == b.period() && a.values_ == b.values_;
    }

private:
    Vec<Scalar> values_;
};

/// result.at(n) = s.at(n + k).
template <typename Scalar>
PeriodicSeq<Scalar> shift(const PeriodicSeq<Scalar>& s, std::int64_t k)
{
    const Eigen::Index m = s.period();
    Vec<Scalar> out(m);
    for (Eigen::Index n = 0; n < m; ++n)
        out[n] = s.at(n + k);
    return PeriodicSeq<Scalar>(std::move(out));
}

/// Least common period of two sequences.
template <typename Scalar>
Eigen::Index common_period(const PeriodicSeq<Scalar>& a, const PeriodicSeq<Scalar>& b)
{
    return std::lcm(a.period(), b.period());
}

namespace detail {

template <typename Scalar, typename Op>
PeriodicSeq<Scalar> zip(const PeriodicSeq<Scalar>& a, const PeriodicSeq<Scalar>& b, Op op)
{
    const Eigen::Index m = common_period(a, b);
    const auto la = a.lifted(m);
    const auto lb = b.lifted(m);
    return PeriodicSeq<Scalar>(la.values().binaryExpr(lb.values(), op));
}

} // namespace detail

template <typename Scalar>
PeriodicSeq<Scalar> operator+(const PeriodicSeq<Scalar>& a, const PeriodicSeq<Scalar>& b)
{
    return detail::zip(a, b, [](Scalar x, Scalar y) { return x + y; });
}

template <typename Scalar>
PeriodicSeq<Scalar> operator-(const PeriodicSeq<Scalar>& a, const PeriodicSeq<Scalar>& b)
{
    return detail::zip(a, b, [](Scalar x, Scalar y) { return x - y; });
}

/// Entrywise product.
template <typename Scalar>
PeriodicSeq<Scalar> operator*(const PeriodicSeq<Scalar>& a, const PeriodicSeq<Scalar>& b)
{
    return detail::zip(a, b, [](Scalar x, Scalar y) { return x * y; });
}

template <typename Scalar>
PeriodicSeq<Scalar> operator-(const PeriodicSeq<Scalar>& a)
{
    return PeriodicSeq<Scalar>(-a.values());
}

template <typename Scalar>
PeriodicSeq<Scalar> operator*(Scalar c, const PeriodicSeq<Scalar>& a)
{
    return PeriodicSeq<Scalar>(c * a.values());
}

template <typename Scalar>
PeriodicSeq<Scalar> scale(const PeriodicSeq<Scalar>& a, Scalar c)
{
    return c * a;
}

template <typename Scalar>
Scalar max_abs(const PeriodicSeq<Scalar>& a)
{
    return a.values().cwiseAbs().maxCoeff();
}

/// True if every value at an index of the given parity (0 even, 1 odd) is exactly zero.
template <typename Scalar>
bool vanishes_on_parity(const PeriodicSeq<Scalar>& a, int parity)
{
    for (Eigen::Index n = parity; n < a.period(); n += 2)
        if (a.values()[n] != Scalar(0))
            return false;
    return true;
}

} // namespace smp
