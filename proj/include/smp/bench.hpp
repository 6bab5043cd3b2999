#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "smp/inverse.hpp"
#include "smp/oracle.hpp"

namespace smp {

struct BenchRow {
    Eigen::Index period;
    Eigen::Index K;
    Eigen::Index N;
    double closed_ns;
    double dense_ns;
    double max_dev;
    bool ok;
};

inline constexpr const char* bench_csv_header = "period,K,N,closed_ns,dense_ns,max_dev";

namespace detail {

template <typename F>
double median_ns(int reps, F&& f, std::int64_t min_batch_ns = 0)
{
    using clock = std::chrono::steady_clock;
    std::vector<double> samples;
    for (int rep = 0; rep < reps; ++rep) {
        std::int64_t calls = 0;
        const auto start = clock::now();
        std::int64_t elapsed = 0;
        do {
            f();
            ++calls;
            elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(clock::now() - start).count();
        } while (elapsed < min_batch_ns);
        samples.push_back(double(elapsed) / double(calls));
    }
    std::sort(samples.begin(), samples.end());
    return samples[samples.size() / 2];
}

} // namespace detail

/// Times the closed-form inverse against the dense circulant oracle for each K;
/// each row carries the closed-vs-oracle band deviation.
inline std::vector<BenchRow> run_bench(const SmpCoefficients<double>& c, const std::vector<Eigen::Index>& Ks, int reps,
                                       double tol)
{
    std::vector<BenchRow> rows;
    volatile double sink = 0;
    for (const Eigen::Index K : Ks) {
        const double closed_ns = detail::median_ns(
            reps, [&] { sink = sink + invert(c).sigma.values()[0]; }, 200000);
        DenseWindow<double> inv;
        const double dense_ns = detail::median_ns(reps, [&] { inv = oracle::dense_inverse(oracle::embed(c, K)); });
        const auto closed = invert(c);
        const auto bands = oracle::extract_bands(inv, c.period());
        const auto cmp = oracle::compare(closed, bands.bands, tol);
        rows.push_back({c.period(), K, c.period() * K, closed_ns, dense_ns, cmp.max_dev(), cmp.pass});
    }
    return rows;
}

} // namespace smp
