#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "smp/inverse.hpp"

namespace smp {

inline constexpr const char* prng_name = "mt19937_64-top53";
inline constexpr std::int64_t max_rejections = 100000;

/// Uniform doubles from std::mt19937_64: u = (x >> 11) * 2^-53, mapped affinely.
///
/// Both stages are fully specified, so another implementation of MT19937-64
/// reproduces the same instances from the same seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double unit() { return double(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
    std::uint64_t raw() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

class GaveUp : public Error {
public:
    GaveUp(std::int64_t attempts, double best_margin)
        : Error("no instance reached the requested margin after " + std::to_string(attempts)
                + " draws (acceptance rate 0, best margin " + std::to_string(best_margin) + ")"),
          attempts(attempts), best_margin(best_margin)
    {
    }
    std::int64_t attempts;
    double best_margin;
};

/// One draw of the free parameters, in this order: p_0..p_{2m-1} in [-2, 2],
/// r_1, r_3, .. in [0.5, 2], q_1, q_3, .. in [-2, 2]; q_even is completed.
inline SmpCoefficients<double> draw_free_parameters(Eigen::Index period, Rng& rng)
{
    Vec<double> p(period), r = Vec<double>::Zero(period), q_odd = Vec<double>::Zero(period);
    for (Eigen::Index n = 0; n < period; ++n)
        p[n] = rng.uniform(-2.0, 2.0);
    for (Eigen::Index n = 1; n < period; n += 2)
        r[n] = rng.uniform(0.5, 2.0);
    for (Eigen::Index n = 1; n < period; n += 2)
        q_odd[n] = rng.uniform(-2.0, 2.0);
    PeriodicSeq<double> ps(p), rs(r);
    auto q = complete_even_q(ps, rs, PeriodicSeq<double>(q_odd));
    return SmpCoefficients<double>::with_best_eta(ps, q, rs);
}

struct Generated {
    SmpCoefficients<double> coefficients;
    std::int64_t attempts;
    double margin;
};

/// Rejection-samples free parameters until the membership margin reaches `margin`.
inline Generated generate(Eigen::Index period, double margin, std::uint64_t seed)
{
    if (period < 2 || period % 2 != 0)
        throw InvalidPeriod("period must be even and >= 2, got " + std::to_string(period));
    Rng rng(seed);
    double best = -std::numeric_limits<double>::infinity();
    for (std::int64_t attempt = 1; attempt <= max_rejections; ++attempt) {
        auto c = draw_free_parameters(period, rng);
        const auto rep = membership(c);
        best = std::max(best, rep.margin);
        if (rep.verdict && rep.margin >= margin)
            return {std::move(c), attempt, rep.margin};
    }
    throw GaveUp(max_rejections, best);
}

} // namespace smp
