#pragma once

#include <limits>

#include "smp/band.hpp"
#include "smp/periodic_seq.hpp"

namespace smp {

/// Coefficients of A = S^2 R + S P + Q + P S^-1 + R S^-2, with (S u)_n = u_{n+1}.
///
/// Entry map: A(n,n) = q_n, A(n,n+1) = A(n+1,n) = p_{n+1}, A(n,n+2) = A(n+2,n) = r_{n+2}.
/// The structural clauses on r and eta are not enforced here; see validate_structure.
template <typename Scalar = double>
struct SmpCoefficients {
    PeriodicSeq<Scalar> p;
    PeriodicSeq<Scalar> q;
    PeriodicSeq<Scalar> r;
    Scalar eta;

    SmpCoefficients(PeriodicSeq<Scalar> p_, PeriodicSeq<Scalar> q_, PeriodicSeq<Scalar> r_, Scalar eta_)
        : p(std::move(p_)), q(std::move(q_)), r(std::move(r_)), eta(eta_)
    {
        const Eigen::Index m = std::lcm(std::lcm(p.period(), q.period()), r.period());
        p = p.lifted(m);
        q = q.lifted(m);
        r = r.lifted(m);
    }

    /// Uses the largest admissible eta, the minimum of r over odd indices.
    static SmpCoefficients with_best_eta(PeriodicSeq<Scalar> p, PeriodicSeq<Scalar> q, PeriodicSeq<Scalar> r)
    {
        SmpCoefficients c(std::move(p), std::move(q), std::move(r), Scalar(0));
        c.eta = best_eta(c.r);
        return c;
    }

    static Scalar best_eta(const PeriodicSeq<Scalar>& r)
    {
        Scalar e = std::numeric_limits<Scalar>::infinity();
        for (Eigen::Index n = 1; n < r.period(); n += 2)
            e = std::min(e, r.values()[n]);
        return e;
    }

    Eigen::Index period() const noexcept { return p.period(); }

    BandOperator<Scalar> band() const
    {
        BandOperator<Scalar> a(2, period());
        a.set_diagonal(0, q);
        a.set_diagonal(1, shift(p, 1));
        a.set_diagonal(-1, p);
        a.set_diagonal(2, shift(r, 2));
        a.set_diagonal(-2, r);
        return a;
    }
};

/// Diagonals of A^-1 = S^2 P + S Pi + Sigma + Pi S^-1 + P S^-2 with P = diag(rho),
/// Pi = diag(pi), Sigma = diag(sigma).
template <typename Scalar = double>
struct InverseCoefficients {
    PeriodicSeq<Scalar> rho;
    PeriodicSeq<Scalar> pi;
    PeriodicSeq<Scalar> sigma;

    Eigen::Index period() const noexcept { return rho.period(); }

    BandOperator<Scalar> band() const
    {
        BandOperator<Scalar> b(2, period());
        b.set_diagonal(0, sigma);
        b.set_diagonal(1, shift(pi, 1));
        b.set_diagonal(-1, pi);
        b.set_diagonal(2, shift(rho, 2));
        b.set_diagonal(-2, rho);
        return b;
    }
};

} // namespace smp
