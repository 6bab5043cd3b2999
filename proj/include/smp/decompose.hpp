#pragma once

#include <cmath>
#include <cstdint>

#include "smp/operator.hpp"

namespace smp {

/// A = blockdiag(A_-, A_+) + a0 (e0~ <., e_-1> + e_-1 <., e0~>),
/// with A_- on indices <= -1, A_+ on indices >= 0 and e0~ = (p_0 e_0 + r_1 e_1) / a0.
template <typename Scalar = double>
struct Decomposition {
    Scalar a0;
    Eigen::Matrix<Scalar, 2, 1> e0_tilde;
    std::int64_t split_index = 0;
};

template <typename Scalar>
Decomposition<Scalar> split(const SmpCoefficients<Scalar>& c)
{
    const Scalar p0 = c.p(0);
    const Scalar r1 = c.r(1);
    const Scalar a0 = std::hypot(p0, r1);
    return {a0, {p0 / a0, r1 / a0}, 0};
}

/// Assembles A on a window from the two half-axis blocks plus the rank-2 coupling.
/// Couplings whose indices fall outside the window are dropped.
template <typename Scalar>
DenseWindow<Scalar> reconstruct(const SmpCoefficients<Scalar>& c, const Decomposition<Scalar>& d,
                                std::int64_t origin, Eigen::Index size)
{
    if (size < 1)
        throw WindowTooSmall("window size must be >= 1");
    auto full = window(c, origin, size);
    DenseWindow<Scalar> out{origin, DynMat<Scalar>::Zero(size, size)};

    const std::int64_t split = d.split_index;
    const Eigen::Index minus = std::clamp<std::int64_t>(split - origin, 0, size);
    out.entries.topLeftCorner(minus, minus) = full.entries.topLeftCorner(minus, minus);
    out.entries.bottomRightCorner(size - minus, size - minus) =
        full.entries.bottomRightCorner(size - minus, size - minus);

    const auto couple = [&](std::int64_t i, std::int64_t j, Scalar v) {
        if (out.contains(i) && out.contains(j)) {
            out.entries(i - origin, j - origin) += v;
            out.entries(j - origin, i - origin) += v;
        }
    };
    couple(split - 1, split, d.a0 * d.e0_tilde[0]);
    couple(split - 1, split + 1, d.a0 * d.e0_tilde[1]);
    return out;
}

} // namespace smp
