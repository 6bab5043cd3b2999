// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "smp/bench.hpp"
#include "smp/decompose.hpp"
#include "smp/generate.hpp"
#include "smp/inverse.hpp"
#include "smp/oracle.hpp"

using namespace smp;
using Seq = PeriodicSeq<double>;
using Coeffs = SmpCoefficients<double>;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string sci(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

constexpr int sweep_size = 200;

/// Seeds 1..200, periods cycling through 2, 4, .., 16, margin >= 0.1.
const std::vector<Coeffs>& sweep()
{
    static const std::vector<Coeffs> instances = [] {
        std::vector<Coeffs> out;
        for (int seed = 1; seed <= sweep_size; ++seed) {
            const Eigen::Index period = 2 * (1 + (seed - 1) % 8);
            out.push_back(generate(period, 0.1, std::uint64_t(seed)).coefficients);
        }
        return out;
    }();
    return instances;
}

Outcome constant_fixture()
{
    const auto t0 = std::chrono::steady_clock::now();
    const auto c = Coeffs::with_best_eta(Seq{1, 1}, complete_even_q(Seq{1, 1}, Seq{0, 1}, Seq{0, 0}), Seq{0, 1});
    const auto inv = invert(c);
    const InverseCoefficients<double> expected{Seq{-0.5, 0}, Seq{0.5, 0.5}, Seq{0, -0.5}};
    const double exact_dev = std::max({max_abs(inv.rho - expected.rho), max_abs(inv.pi - expected.pi),
                                       max_abs(inv.sigma - expected.sigma)});
    const auto bands = oracle::extract_bands(oracle::dense_inverse(oracle::embed(c, 8)), 2);
    const auto cmp = oracle::compare(inv, bands.bands, 1e-12);
    const double elapsed = seconds_since(t0);
    return {c.q == Seq({1, 0}) && exact_dev <= 1e-14 && cmp.pass && elapsed < 0.1,
            "closed dev " + sci(exact_dev) + ", oracle rel dev " + sci(cmp.max_dev()) + ", " + sci(elapsed) + " s"};
}

Outcome oracle_sweep()
{
    const auto t0 = std::chrono::steady_clock::now();
    double worst_dev = 0, worst_self = 0;
    int failures = 0;
    for (const auto& c : sweep()) {
        const auto e = oracle::embed(c, 16);
        const auto inv = oracle::dense_inverse(e);
        const double self = oracle::self_residual(e.matrix, inv);
        const auto cmp = oracle::compare(invert(c), oracle::extract_bands(inv, c.period()).bands, 1e-10);
        worst_dev = std::max(worst_dev, cmp.max_dev());
        worst_self = std::max(worst_self, self);
        failures += !(cmp.pass && self <= 1e-10);
    }
    const double elapsed = seconds_since(t0);
    return {failures == 0 && elapsed < 30.0, std::to_string(sweep_size) + " instances, max rel dev " + sci(worst_dev)
                                                 + ", max self residual " + sci(worst_self) + ", " + sci(elapsed) + " s"};
}

Outcome identity_residuals()
{
    double worst = 0, worst_literal = 0;
    for (const auto& c : sweep()) {
        const auto inv = invert(c);
        const auto bands = residual_bands(c, inv);
        worst = std::max(worst, max_residual(bands));
        const auto i4 = shift(c.r, -2) * inv.rho;
        const auto im4 = c.r * shift(inv.rho, -2);
        const auto i3 = shift(c.r, -1) * inv.pi + shift(c.p, -2) * inv.rho;
        for (std::int64_t n = 0; n < c.period(); ++n) {
            worst_literal = std::max(worst_literal, std::abs(bands[8].at(n) - i4.at(n + 4)));
            worst_literal = std::max(worst_literal, std::abs(bands[0].at(n) - im4.at(n)));
            worst_literal = std::max(worst_literal, std::abs(bands[7].at(n) - i3.at(n + 3)));
        }
    }
    return {worst <= 1e-12 && worst_literal <= 1e-14,
            "max band residual " + sci(worst) + ", literal vs convolution " + sci(worst_literal)};
}

Outcome tau_structure()
{
    double min_eta = std::numeric_limits<double>::infinity(), worst = 0;
    int failures = 0;
    for (const auto& c : sweep()) {
        try {
            const auto t = tau(invert(c));
            const bool valid = validate_structure(t).ok() && t.eta > 0;
            min_eta = std::min(min_eta, t.eta);
            const auto tt = tau(invert(t));
            const double dev = std::max({oracle::relative_deviation(tt.p, shift(c.p, 2)),
                                         oracle::relative_deviation(tt.q, shift(c.q, 2)),
                                         oracle::relative_deviation(tt.r, shift(c.r, 2))});
            worst = std::max(worst, dev);
            failures += !(valid && dev <= 1e-10);
        } catch (const Error&) {
            ++failures;
        }
    }
    return {failures == 0, "min eta^tau " + sci(min_eta) + ", double-involution rel dev " + sci(worst) + ", "
                               + std::to_string(failures) + " failure(s)"};
}

/// Free parameters with q_odd inflated until every d_{2n} >= 0, one slot exactly on the boundary.
/// Every fifth instance is a p = 0 variant (d identically zero).
Coeffs violating_instance(std::uint64_t seed, bool strictly_positive)
{
    Rng rng(seed);
    const Eigen::Index period = 2 * Eigen::Index(1 + seed % 4);
    auto c = draw_free_parameters(period, rng);
    if (!strictly_positive && seed % 5 == 0) {
        const Seq p = Seq::zero(period);
        return Coeffs::with_best_eta(p, complete_even_q(p, c.r, c.q), c.r);
    }
    const std::int64_t m = period / 2;
    const std::int64_t boundary_slot = std::int64_t(rng.raw() % std::uint64_t(m));
    Vec<double> q = c.q.values();
    const auto& p = c.p;
    const auto& r = c.r;
    for (std::int64_t k = 0; k < m; ++k) {
        const std::int64_t n = 2 * k;
        const double coupling = p(n - 2) * p(n + 1);
        const double critical = (p(n - 2) * p(n) * r(n + 1) + p(n - 1) * p(n + 1) * r(n - 1)) / coupling;
        double push = strictly_positive ? rng.uniform(0.5, 1.5) : (k == boundary_slot ? 0.0 : rng.uniform(0.0, 1.0));
        if (strictly_positive)
            push /= std::abs(coupling);
        q[wrap(n - 1, period)] = critical + (coupling > 0 ? push : -push);
    }
    return Coeffs::with_best_eta(p, Seq(q), r);
}

Outcome criterion_falsification()
{
    int rejected = 0, degenerate = 0;
    double worst_d = std::numeric_limits<double>::infinity();
    double worst_smin = 0;
    constexpr int count = 50;
    for (int i = 0; i < count; ++i) {
        const auto c = violating_instance(std::uint64_t(1001 + i), false);
        const auto rep = membership(c);
        for (Eigen::Index n = 0; n < c.period(); n += 2)
            worst_d = std::min(worst_d, rep.d.values()[n]);
        rejected += !rep.verdict;

        bool singular = true;
        std::vector<double> band_norms;
        double smin_max = 0;
        for (const Eigen::Index K : {8, 16, 32}) {
            const auto e = oracle::embed(c, K);
            const double smin = oracle::smallest_singular_value(e.matrix);
            smin_max = std::max(smin_max, smin);
            singular = singular && smin < 1e-3;
            try {
                const auto inv = oracle::dense_inverse(e);
                band_norms.push_back(inv.entries.cwiseAbs().maxCoeff());
            } catch (const SingularMatrix&) {
                band_norms.push_back(std::numeric_limits<double>::infinity());
            }
        }
        const bool growing = band_norms[0] < band_norms[1] && band_norms[1] < band_norms[2];
        degenerate += (singular || growing);
        worst_smin = std::max(worst_smin, smin_max);
    }
    return {rejected == count && degenerate == count && worst_d >= -1e-12,
            std::to_string(rejected) + "/" + std::to_string(count) + " rejected, " + std::to_string(degenerate) + "/"
                + std::to_string(count) + " degenerate embeddings, min d_even " + sci(worst_d)
                + ", max smallest singular value " + sci(worst_smin)};
}

/// Not a gating criterion: d_even > 0 strictly. These operators are invertible with a
/// banded inverse but rho_even > 0, so A^tau fails the SMP structure; the oracle must see that.
Outcome interior_violations()
{
    int rejected = 0, oracle_agrees = 0;
    constexpr int count = 50;
    for (int i = 0; i < count; ++i) {
        const auto c = violating_instance(std::uint64_t(2001 + i), true);
        rejected += !membership(c).verdict;
        const auto bands = oracle::extract_bands(oracle::dense_inverse(oracle::embed(c, 8)), c.period());
        bool positive = false;
        for (Eigen::Index n = 0; n < c.period(); n += 2)
            positive = positive || bands.bands.rho.values()[n] > 0;
        bool tau_fails = false;
        try {
            (void)tau(bands.bands);
        } catch (const StructureViolation&) {
            tau_fails = true;
        }
        oracle_agrees += positive && tau_fails;
    }
    return {rejected == count && oracle_agrees == count,
            std::to_string(rejected) + "/" + std::to_string(count) + " rejected, oracle finds rho_even > 0 in "
                + std::to_string(oracle_agrees) + "/" + std::to_string(count)};
}

Outcome decomposition_identity()
{
    double worst = 0;
    for (const auto& c : sweep()) {
        const auto size = 4 * c.period();
        const std::int64_t origin = -2 * std::int64_t(c.period());
        const DynMat<double> diff = reconstruct(c, split(c), origin, size).entries - window(c, origin, size).entries;
        worst = std::max(worst, diff.cwiseAbs().maxCoeff());
    }
    const auto fixture = Coeffs::with_best_eta(Seq{3, 1}, complete_even_q(Seq{3, 1}, Seq{0, 4}, Seq{0, 0}), Seq{0, 4});
    const double a0 = split(fixture).a0;
    return {worst <= 1e-14 && a0 == 5.0, "max reconstruction residual " + sci(worst) + ", fixture a0 = " + sci(a0)};
}

Outcome scaling_law()
{
    double worst = 0;
    int verdict_changes = 0;
    for (int i = 0; i < 20; ++i) {
        const auto& c = sweep()[std::size_t(i)];
        const auto d = discriminant(c);
        const auto inv = invert(c);
        const bool verdict = membership(c).verdict;
        for (const double s : {0.5, 2.0, 10.0}) {
            const auto cs = Coeffs::with_best_eta(s * c.p, s * c.q, s * c.r);
            const auto invs = invert(cs);
            worst = std::max({worst, oracle::relative_deviation(discriminant(cs), (s * s * s) * d),
                              oracle::relative_deviation(invs.rho, (1 / s) * inv.rho),
                              oracle::relative_deviation(invs.pi, (1 / s) * inv.pi),
                              oracle::relative_deviation(invs.sigma, (1 / s) * inv.sigma)});
            verdict_changes += membership(cs, default_eps_min * s * s * s).verdict != verdict;
        }
    }
    return {worst <= 1e-12 && verdict_changes == 0,
            "max rel dev " + sci(worst) + ", verdict changes " + std::to_string(verdict_changes)};
}

Outcome benchmark_sanity()
{
    const auto c = generate(8, 0.1, 1).coefficients;
    const std::vector<Eigen::Index> Ks{4, 8, 16, 32, 64};
    const auto rows = run_bench(c, Ks, 3, 1e-8);
    double closed_min = std::numeric_limits<double>::infinity(), closed_max = 0;
    bool monotone = true, all_ok = true;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        closed_min = std::min(closed_min, rows[i].closed_ns);
        closed_max = std::max(closed_max, rows[i].closed_ns);
        all_ok = all_ok && rows[i].ok;
        if (i > 0)
            monotone = monotone && rows[i].dense_ns > rows[i - 1].dense_ns;
    }
    const double k_ratio = double(Ks.back()) / double(Ks.front());
    const double dense_ratio = rows.back().dense_ns / rows.front().dense_ns;
    const double closed_spread = closed_max / closed_min;
    return {closed_spread < 10.0 && monotone && dense_ratio > k_ratio && all_ok,
            "closed-form spread " + sci(closed_spread) + "x, dense growth " + sci(dense_ratio) + "x over "
                + sci(k_ratio) + "x K, cross-checks " + (all_ok ? "ok" : "FAILED")};
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"1 constant fixture", constant_fixture},
        {"2 oracle-equivalence sweep", oracle_sweep},
        {"3 identity-system residuals", identity_residuals},
        {"4 tau structure and double involution", tau_structure},
        {"5 criterion falsification", criterion_falsification},
        {"6 decomposition identity", decomposition_identity},
        {"7 scaling law", scaling_law},
        {"8 benchmark sanity", benchmark_sanity},
    };
    int failed = 0;
    for (const auto& [name, check] : criteria) {
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
        failed += !o.pass;
    }
    const auto extra = interior_violations();
    std::printf("[info] 5b interior violations (d_even > 0): %s%s\n", extra.detail.c_str(),
                extra.pass ? "" : " (unexpected)");
    std::printf("%d/%zu criteria passed\n", int(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
