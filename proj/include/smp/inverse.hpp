#pragma once

#include <array>
#include <cmath>
#include <sstream>

#include "smp/coefficients.hpp"
#include "smp/operator.hpp"

namespace smp {

inline constexpr double default_eps_min = 1e-8;
inline constexpr double q_consistency_rtol = 1e-12;

/// Full q from the free parameters: q_{2n} = p_{2n} p_{2n+1} / r_{2n+1}, odd entries copied from q_odd.
template <typename Scalar>
PeriodicSeq<Scalar> complete_even_q(const PeriodicSeq<Scalar>& p, const PeriodicSeq<Scalar>& r,
                                    const PeriodicSeq<Scalar>& q_odd)
{
    const Eigen::Index m = std::lcm(std::lcm(p.period(), r.period()), q_odd.period());
    Vec<Scalar> q(m);
    for (Eigen::Index n = 0; n < m; n += 2) {
        const Scalar r_next = r.at(n + 1);
        if (r_next == Scalar(0))
            throw DivisionByZero("r vanishes at odd index " + std::to_string(n + 1));
        q[n] = p.at(n) * p.at(n + 1) / r_next;
        q[n + 1] = q_odd.at(n + 1);
    }
    return PeriodicSeq<Scalar>(std::move(q));
}

/// d_{2n} = q_{2n-1} p_{2n-2} p_{2n+1} - p_{2n-2} p_{2n} r_{2n+1} - p_{2n-1} p_{2n+1} r_{2n-1};
/// odd slots hold 0.
template <typename Scalar>
PeriodicSeq<Scalar> discriminant(const SmpCoefficients<Scalar>& c)
{
    const auto& p = c.p;
    const auto& q = c.q;
    const auto& r = c.r;
    Vec<Scalar> d = Vec<Scalar>::Zero(c.period());
    for (std::int64_t n = 0; n < std::int64_t(c.period()); n += 2)
        d[n] = q(n - 1) * p(n - 2) * p(n + 1) - p(n - 2) * p(n) * r(n + 1) - p(n - 1) * p(n + 1) * r(n - 1);
    return PeriodicSeq<Scalar>(std::move(d));
}

template <typename Scalar = double>
struct MembershipReport {
    PeriodicSeq<Scalar> d;
    Scalar margin;
    bool structure_ok;
    bool q_even_consistent;
    bool verdict;
};

template <typename Scalar>
bool q_even_consistent(const SmpCoefficients<Scalar>& c)
{
    for (std::int64_t n = 0; n < std::int64_t(c.period()); n += 2) {
        const Scalar r_next = c.r(n + 1);
        if (r_next == Scalar(0))
            return false;
        const Scalar expected = c.p(n) * c.p(n + 1) / r_next;
        if (!(std::abs(c.q(n) - expected) <= Scalar(q_consistency_rtol) * (1 + std::abs(c.q(n)))))
            return false;
    }
    return true;
}

/// Free-parameter membership test: max d_even <= -eps_min and q_even completed.
template <typename Scalar>
MembershipReport<Scalar> membership(const SmpCoefficients<Scalar>& c, Scalar eps_min = Scalar(default_eps_min))
{
    auto d = discriminant(c);
    Scalar worst = -std::numeric_limits<Scalar>::infinity();
    for (Eigen::Index n = 0; n < d.period(); n += 2)
        worst = std::max(worst, d.values()[n]);
    const bool structure = validate_structure(c).ok();
    const bool consistent = structure && q_even_consistent(c);
    const Scalar margin = -worst;
    const bool verdict = structure && consistent && worst <= -eps_min && margin > Scalar(0);
    return {std::move(d), margin, structure, consistent, verdict};
}

/// Closed-form inverse coefficients of an SMP matrix.
///
/// Re-checks membership and throws NotSmp if it fails. DegeneratePivot is an
/// internal consistency alarm: the criterion rules out p_{2n} = p_{2n+1} = 0.
template <typename Scalar>
InverseCoefficients<Scalar> invert(const SmpCoefficients<Scalar>& c, Scalar eps_min = Scalar(default_eps_min))
{
    const auto rep = membership(c, eps_min);
    if (!rep.verdict) {
        std::ostringstream os;
        os.precision(17);
        os << "not an SMP matrix (structure " << (rep.structure_ok ? "ok" : "violated") << ", q_even "
           << (rep.q_even_consistent ? "consistent" : "inconsistent") << ", margin " << rep.margin << ")";
        throw NotSmp(os.str());
    }
    const auto& p = c.p;
    const auto& q = c.q;
    const auto& r = c.r;
    const std::int64_t m = c.period();

    Vec<Scalar> rho = Vec<Scalar>::Zero(m);
    for (std::int64_t n = 0; n < m; n += 2)
        rho[n] = r(n - 1) * r(n + 1) / rep.d(n);
    const PeriodicSeq<Scalar> rho_s(rho);

    Vec<Scalar> pi(m);
    Vec<Scalar> sigma(m);
    for (std::int64_t n = 0; n < m; n += 2) {
        pi[wrap(n + 1, m)] = -p(n + 3) * rho_s(n + 2) / r(n + 3);
        pi[n] = -p(n - 2) * rho_s(n) / r(n - 1);
        sigma[n + 1] = p(n) * p(n + 3) * rho_s(n + 2) / (r(n + 1) * r(n + 3));
    }
    const PeriodicSeq<Scalar> pi_s(pi);

    for (std::int64_t n = 0; n < m; n += 2) {
        const Scalar pivot = p(n) * p(n) + p(n + 1) * p(n + 1);
        if (pivot == Scalar(0))
            throw DegeneratePivot("p_" + std::to_string(n) + " and p_" + std::to_string(n + 1) + " both vanish");
        const Scalar lead = pi_s(n + 1) * r(n + 1) + q(n - 1) * pi_s(n) + p(n - 1) * rho_s(n);
        const Scalar trail = pi_s(n) * r(n + 1) + q(n + 1) * pi_s(n + 1) + p(n + 2) * rho_s(n + 2);
        sigma[n] = -(p(n) * lead + p(n + 1) * trail) / pivot;
    }
    return {rho_s, pi_s, PeriodicSeq<Scalar>(std::move(sigma))};
}

/// Diagonals of A A^-1 - Id for offsets -4..4; element k + 4 holds offset k.
template <typename Scalar>
std::array<PeriodicSeq<Scalar>, 9> residual_bands(const SmpCoefficients<Scalar>& c,
                                                  const InverseCoefficients<Scalar>& inv)
{
    if (c.period() % inv.period() != 0 && inv.period() % c.period() != 0)
        throw PeriodMismatch("operator period " + std::to_string(c.period()) + " vs inverse period "
                             + std::to_string(inv.period()));
    const auto prod = c.band() * inv.band();
    std::array<PeriodicSeq<Scalar>, 9> out{
        prod.diagonal(-4), prod.diagonal(-3), prod.diagonal(-2), prod.diagonal(-1), prod.diagonal(0),
        prod.diagonal(1),  prod.diagonal(2),  prod.diagonal(3),  prod.diagonal(4)};
    out[4] = out[4] - PeriodicSeq<Scalar>::constant(out[4].period(), Scalar(1));
    return out;
}

template <typename Scalar>
Scalar max_residual(const std::array<PeriodicSeq<Scalar>, 9>& bands)
{
    Scalar m(0);
    for (const auto& b : bands)
        m = std::max(m, max_abs(b));
    return m;
}

/// Smallest value of -rho over even indices.
template <typename Scalar>
Scalar min_neg_rho(const InverseCoefficients<Scalar>& inv)
{
    Scalar m = std::numeric_limits<Scalar>::infinity();
    for (Eigen::Index n = 0; n < inv.period(); n += 2)
        m = std::min(m, -inv.rho.values()[n]);
    return m;
}

} // namespace smp
