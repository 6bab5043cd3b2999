#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "smp/coefficients.hpp"

namespace smp {

template <typename Scalar>
using DynMat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Finite square realization of an operator; row/column 0 is global index `origin`.
template <typename Scalar = double>
struct DenseWindow {
    std::int64_t origin = 0;
    DynMat<Scalar> entries;

    Eigen::Index size() const noexcept { return entries.rows(); }

    /// Entry at global indices (i, j).
    Scalar operator()(std::int64_t i, std::int64_t j) const { return entries(i - origin, j - origin); }
    bool contains(std::int64_t i) const noexcept { return i >= origin && i < origin + std::int64_t(size()); }
};

struct Violation {
    enum class Kind { OddPeriod, NonPositiveEta, EvenRNonzero, OddRBelowEta };
    Kind kind;
    std::int64_t index;
    double value;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const noexcept { return violations.empty(); }
    bool has(Violation::Kind k) const
    {
        for (const auto& v : violations)
            if (v.kind == k)
                return true;
        return false;
    }
};

/// Checks every structural clause and reports all violations found on one period.
template <typename Scalar>
ValidationReport validate_structure(const SmpCoefficients<Scalar>& c)
{
    ValidationReport rep;
    const auto describe = [](const char* what, std::int64_t n, Scalar v) {
        std::ostringstream os;
        os.precision(17);
        os << what << " at n=" << n << " (value " << v << ")";
        return os.str();
    };
    if (c.period() % 2 != 0)
        rep.violations.push_back({Violation::Kind::OddPeriod, c.period(), double(c.period()), "period odd"});
    if (!(c.eta > Scalar(0)))
        rep.violations.push_back({Violation::Kind::NonPositiveEta, 0, double(c.eta), describe("eta not positive", 0, c.eta)});
    for (std::int64_t n = 0; n < std::int64_t(c.period()); ++n) {
        const Scalar v = c.r.at(n);
        if (n % 2 == 0 && v != Scalar(0))
            rep.violations.push_back(
                {Violation::Kind::EvenRNonzero, n, double(v), describe("r at even index nonzero", n, v)});
        if (n % 2 == 1 && !(v >= c.eta && v > Scalar(0)))
            rep.violations.push_back(
                {Violation::Kind::OddRBelowEta, n, double(v), describe("odd r below eta", n, v)});
    }
    return rep;
}

/// Dense symmetric realization of A on global indices [origin, origin + size).
template <typename Scalar>
DenseWindow<Scalar> window(const SmpCoefficients<Scalar>& c, std::int64_t origin, Eigen::Index size)
{
    if (size < 1)
        throw WindowTooSmall("window size must be >= 1");
    DenseWindow<Scalar> w{origin, DynMat<Scalar>::Zero(size, size)};
    for (Eigen::Index i = 0; i < size; ++i) {
        const std::int64_t n = origin + i;
        w.entries(i, i) = c.q.at(n);
        if (i + 1 < size)
            w.entries(i, i + 1) = w.entries(i + 1, i) = c.p.at(n + 1);
        if (i + 2 < size)
            w.entries(i, i + 2) = w.entries(i + 2, i) = c.r.at(n + 2);
    }
    return w;
}

/// (A u)_n = r_{n+2} u_{n+2} + p_{n+1} u_{n+1} + q_n u_n + p_n u_{n-1} + r_n u_{n-2}.
template <typename Scalar>
PeriodicSeq<Scalar> matvec(const SmpCoefficients<Scalar>& c, const PeriodicSeq<Scalar>& u)
{
    return c.band().apply(u);
}

/// Coefficients of A^tau = -S A^-1 S^-1.
///
/// Throws StructureViolation unless the result is SMP-structured, i.e. unless
/// rho vanishes at odd and is strictly negative at even indices.
template <typename Scalar>
SmpCoefficients<Scalar> tau(const InverseCoefficients<Scalar>& inv)
{
    auto r = -shift(inv.rho, 1);
    auto p = -shift(inv.pi, 1);
    auto q = -shift(inv.sigma, 1);
    auto c = SmpCoefficients<Scalar>::with_best_eta(std::move(p), std::move(q), std::move(r));
    const auto rep = validate_structure(c);
    if (!rep.ok())
        throw StructureViolation("A^tau is not SMP-structured: " + rep.violations.front().message);
    return c;
}

} // namespace smp
