#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include <Eigen/Eigenvalues>

#include "smp/coefficients.hpp"
#include "smp/lu.hpp"
#include "smp/operator.hpp"

namespace smp::oracle {

inline constexpr double circulant_tol = 1e-9;

/// Finite periodic model of A: K periods on a ring of N = period * K sites.
template <typename Scalar = double>
struct CirculantEmbedding {
    Eigen::Index period;
    Eigen::Index copies;
    DenseWindow<Scalar> matrix;

    Eigen::Index size() const noexcept { return matrix.size(); }
};

template <typename Scalar>
CirculantEmbedding<Scalar> embed(const SmpCoefficients<Scalar>& c, Eigen::Index K)
{
    if (K < 3)
        throw KTooSmall("circulant embedding needs K >= 3, got " + std::to_string(K));
    const Eigen::Index m = c.period();
    const Eigen::Index N = m * K;
    DynMat<Scalar> M = DynMat<Scalar>::Zero(N, N);
    for (Eigen::Index i = 0; i < N; ++i) {
        M(i, i) = c.q(i);
        const Eigen::Index j1 = (i + 1) % N;
        const Eigen::Index j2 = (i + 2) % N;
        M(i, j1) = M(j1, i) = c.p(i + 1);
        M(i, j2) = M(j2, i) = c.r(i + 2);
    }
    return {m, K, {0, std::move(M)}};
}

/// Dense inverse by the in-repo pivoted LU; throws SingularMatrix.
template <typename Scalar>
DenseWindow<Scalar> dense_inverse(const CirculantEmbedding<Scalar>& e)
{
    return {e.matrix.origin, PivotedLU<Scalar>(e.matrix.entries).inverse()};
}

/// max |M Minv - Id|.
template <typename Scalar>
Scalar self_residual(const DenseWindow<Scalar>& m, const DenseWindow<Scalar>& inv)
{
    const Eigen::Index n = m.size();
    return (m.entries * inv.entries - DynMat<Scalar>::Identity(n, n)).cwiseAbs().maxCoeff();
}

/// Smallest singular value of a symmetric matrix (= smallest |eigenvalue|).
template <typename Scalar>
Scalar smallest_singular_value(const DenseWindow<Scalar>& m)
{
    Eigen::SelfAdjointEigenSolver<DynMat<Scalar>> es(m.entries, Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().minCoeff();
}

template <typename Scalar = double>
struct OracleBands {
    InverseCoefficients<Scalar> bands;
    Scalar copy_deviation; ///< max spread of a band entry across the K copies and the two triangles
    Scalar far_band_max;   ///< max |entry| at ring offsets 3..N/2
};

/// Reads rho, pi, sigma off the circulant inverse at offsets +-2, +-1, 0.
///
/// rho_n = B(n-2, n), pi_n = B(n-1, n), sigma_n = B(n, n); every copy and both
/// triangles are compared against copy 0. Throws NotCirculant if they disagree.
template <typename Scalar>
OracleBands<Scalar> extract_bands(const DenseWindow<Scalar>& inv, Eigen::Index period)
{
    const Eigen::Index N = inv.size();
    if (period < 2 || N % period != 0)
        throw PeriodMismatch("window size " + std::to_string(N) + " is not a multiple of period "
                             + std::to_string(period));
    const auto& B = inv.entries;
    const auto ring = [N](std::int64_t i) { return Eigen::Index(wrap(i, N)); };
    const auto read = [&](int offset, Eigen::Index n) { return B(ring(n - offset), ring(n)); };

    Vec<Scalar> rho(period), pi(period), sigma(period);
    for (Eigen::Index n = 0; n < period; ++n) {
        rho[n] = read(2, n);
        pi[n] = read(1, n);
        sigma[n] = read(0, n);
    }
    const Scalar scale = std::max(Scalar(1), B.cwiseAbs().maxCoeff());
    Scalar dev(0);
    for (Eigen::Index n = 0; n < N; ++n) {
        const Eigen::Index k = n % period;
        dev = std::max(dev, std::abs(read(2, n) - rho[k]));
        dev = std::max(dev, std::abs(B(ring(n), ring(n - 2)) - rho[k]));
        dev = std::max(dev, std::abs(read(1, n) - pi[k]));
        dev = std::max(dev, std::abs(B(ring(n), ring(n - 1)) - pi[k]));
        dev = std::max(dev, std::abs(read(0, n) - sigma[k]));
    }
    dev /= scale;
    if (dev > Scalar(circulant_tol))
        throw NotCirculant("inverse bands vary across copies by " + std::to_string(double(dev)));

    Scalar far(0);
    for (Eigen::Index i = 0; i < N; ++i)
        for (Eigen::Index o = 3; o <= N / 2; ++o)
            far = std::max(far, std::abs(B(i, ring(i + o))));

    return {{PeriodicSeq<Scalar>(rho), PeriodicSeq<Scalar>(pi), PeriodicSeq<Scalar>(sigma)}, dev, far};
}

/// max over rows of |B(i, i + o)| for ring offsets o = 0..N/2.
template <typename Scalar>
std::vector<Scalar> offset_profile(const DenseWindow<Scalar>& inv)
{
    const Eigen::Index N = inv.size();
    std::vector<Scalar> out(std::size_t(N / 2 + 1), Scalar(0));
    for (Eigen::Index i = 0; i < N; ++i)
        for (Eigen::Index o = 0; o <= N / 2; ++o)
            out[std::size_t(o)] = std::max(out[std::size_t(o)], std::abs(inv.entries(i, (i + o) % N)));
    return out;
}

template <typename Scalar = double>
struct ComparisonReport {
    Scalar rho_dev;
    Scalar pi_dev;
    Scalar sigma_dev;
    bool pass;

    Scalar max_dev() const { return std::max({rho_dev, pi_dev, sigma_dev}); }
};

/// Relative deviation of b from a, scaled by the larger sup-norm of the two sequences.
template <typename Scalar>
Scalar relative_deviation(const PeriodicSeq<Scalar>& a, const PeriodicSeq<Scalar>& b)
{
    const Eigen::Index m = std::lcm(a.period(), b.period());
    const auto la = a.lifted(m);
    const auto lb = b.lifted(m);
    const Scalar diff = (la.values() - lb.values()).cwiseAbs().maxCoeff();
    const Scalar scale = std::max(max_abs(la), max_abs(lb));
    if (diff == Scalar(0))
        return Scalar(0);
    return scale > Scalar(0) ? diff / scale : diff;
}

template <typename Scalar>
ComparisonReport<Scalar> compare(const InverseCoefficients<Scalar>& closed, const InverseCoefficients<Scalar>& oracle,
                                 Scalar tol_rel)
{
    ComparisonReport<Scalar> rep{relative_deviation(closed.rho, oracle.rho), relative_deviation(closed.pi, oracle.pi),
                                 relative_deviation(closed.sigma, oracle.sigma), false};
    rep.pass = rep.max_dev() <= tol_rel;
    return rep;
}

/// Secondary cross-check without wraparound: invert the hard-truncated window
/// on [0, period * K) and read the bands from the central period, discarding
/// at least 4 * period rows on each side.
template <typename Scalar>
InverseCoefficients<Scalar> truncated_bands(const SmpCoefficients<Scalar>& c, Eigen::Index K)
{
    const Eigen::Index m = c.period();
    if (K < 9)
        throw KTooSmall("truncated window needs K >= 9 to keep an interior period, got " + std::to_string(K));
    const auto w = window(c, 0, m * K);
    const DenseWindow<Scalar> inv{0, PivotedLU<Scalar>(w.entries).inverse()};
    const std::int64_t base = (K / 2) * m;
    Vec<Scalar> rho(m), pi(m), sigma(m);
    for (std::int64_t k = 0; k < m; ++k) {
        const std::int64_t n = base + k;
        rho[wrap(n, m)] = inv(n - 2, n);
        pi[wrap(n, m)] = inv(n - 1, n);
        sigma[wrap(n, m)] = inv(n, n);
    }
    return {PeriodicSeq<Scalar>(rho), PeriodicSeq<Scalar>(pi), PeriodicSeq<Scalar>(sigma)};
}

} // namespace smp::oracle
