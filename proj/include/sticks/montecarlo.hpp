#pragma once

/**
 * @file montecarlo.hpp
 * @brief Reproducible Monte Carlo estimation of no-k-gon probabilities.
 *
 * Trials are split into fixed chunks and each chunk's generator is derived
 * from (seed, chunk index) alone, so an estimate is a pure function of its
 * TrialConfig: bit-identical across runs and across any number of worker
 * threads. Success counts are integers and their sum is order-independent.
 *
 * Conventions: the no-k-gon window test uses a non-strict <=, and an n-gon
 * "forms" only when the largest length is strictly less than the sum of the
 * rest. Ties occur with probability zero; fixing them keeps tests
 * deterministic.
 */

#include <sticks/ratio.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

namespace sticks {

/// n stick lengths in [0,1], sorted ascending.
struct StickSample {
    std::vector<double> values;
};

/// n+1 positive unit-rate exponential draws and their sum. Normalized
/// cumulative sums reproduce the order statistics of n sorted uniforms.
struct SpacingsSample {
    std::vector<double> spacings;
    double total = 0.0;

    /// The n normalized cumulative sums (X_1+...+X_i)/S, i = 1..n.
    std::vector<double> order_statistics() const {
        std::vector<double> out(spacings.size() - 1);
        double cum = 0.0;
        for (size_t i = 0; i + 1 < spacings.size(); ++i) {
            cum += spacings[i];
            out[i] = cum / total;
        }
        return out;
    }
};

struct TrialConfig {
    int n;
    int k;
    std::uint64_t trials;
    std::uint64_t seed;
    std::uint64_t chunk_size;  // trials per deterministic work unit

    TrialConfig(int n_, int k_, std::uint64_t trials_, std::uint64_t seed_,
                std::uint64_t chunk_size_ = 1u << 16)
        : n(n_), k(k_), trials(trials_), seed(seed_), chunk_size(chunk_size_) {
        if (n < 1) throw std::domain_error("TrialConfig: n must be >= 1");
        if (k < 3) throw std::domain_error("TrialConfig: k must be >= 3");
        if (trials < 1) throw std::domain_error("TrialConfig: trials must be >= 1");
        if (chunk_size < 1) throw std::domain_error("TrialConfig: chunk_size must be >= 1");
    }
};

/// Point estimate with 95% Wilson score interval.
struct Estimate {
    double p_hat = 0.0;
    std::uint64_t successes = 0;
    std::uint64_t trials = 0;
    double ci_low = 0.0;
    double ci_high = 0.0;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Generator for one work unit, a function of (seed, chunk) only.
inline std::mt19937_64 chunk_engine(std::uint64_t seed, std::uint64_t chunk) {
    return std::mt19937_64(splitmix64(seed ^ splitmix64(chunk)));
}

/// Uniform on [0, 1) from the top 53 bits; identical on every platform,
/// unlike std::uniform_real_distribution.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Strictly positive unit-rate exponential draw.
inline double exponential1(std::mt19937_64& rng) {
    return -std::log((static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53);
}

inline void insertion_sort(double* v, int n) {
    for (int i = 1; i < n; ++i) {
        const double x = v[i];
        int j = i - 1;
        while (j >= 0 && v[j] > x) {
            v[j + 1] = v[j];
            --j;
        }
        v[j + 1] = x;
    }
}

/// Window test on sorted values; vacuously true for n < k.
inline bool windows_hold(const double* v, int n, int k) {
    for (int i = 0; i + k <= n; ++i) {
        double sum = 0.0;
        for (int j = i; j < i + k - 1; ++j) sum += v[j];
        if (sum > v[i + k - 1]) return false;
    }
    return true;
}

inline void wilson95(double p_hat, double trials, double& lo, double& hi) {
    const double z = 1.959963984540054;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / trials;
    const double center = (p_hat + z2 / (2.0 * trials)) / denom;
    const double half =
        z * std::sqrt(p_hat * (1.0 - p_hat) / trials + z2 / (4.0 * trials * trials)) / denom;
    lo = std::max(0.0, center - half);
    hi = std::min(1.0, center + half);
}

}  // namespace detail

/// True iff no k of the sample's lengths can form a k-gon: every window of k
/// consecutive sorted values has (sum of the first k-1) <= (the k-th).
/// Vacuously true when n < k. Throws if the sample is not sorted.
inline bool no_kgon_indicator(const StickSample& sample, int k) {
    if (k < 3) throw std::domain_error("no_kgon_indicator: k must be >= 3");
    if (!std::is_sorted(sample.values.begin(), sample.values.end()))
        throw std::invalid_argument("no_kgon_indicator: sample must be sorted ascending");
    return detail::windows_hold(sample.values.data(),
                                static_cast<int>(sample.values.size()), k);
}

/// True iff the n lengths close an n-gon: largest strictly less than the sum
/// of the others. A boundary tie counts as cannot-form.
inline bool can_form_ngon(const StickSample& sample) {
    const auto& v = sample.values;
    if (v.size() < 3) throw std::domain_error("can_form_ngon: need at least 3 sticks");
    if (!std::is_sorted(v.begin(), v.end()))
        throw std::invalid_argument("can_form_ngon: sample must be sorted ascending");
    const double rest = std::accumulate(v.begin(), v.end() - 1, 0.0);
    return v.back() < rest;
}

/// Monte Carlo estimate of P(no k-gon among n sticks). The result depends
/// only on the config, never on `threads` (0 = hardware concurrency).
/// n < k short-circuits to p_hat = 1 with a zero-width interval.
inline Estimate estimate(const TrialConfig& config, unsigned threads = 0) {
    if (config.n < config.k)
        return Estimate{1.0, config.trials, config.trials, 1.0, 1.0};

    const std::uint64_t chunks = (config.trials + config.chunk_size - 1) / config.chunk_size;
    unsigned workers = threads != 0 ? threads : std::max(1u, std::thread::hardware_concurrency());
    if (workers > chunks) workers = static_cast<unsigned>(chunks);

    std::atomic<std::uint64_t> next_chunk{0};
    std::atomic<std::uint64_t> total_successes{0};

    auto run_chunks = [&] {
        std::vector<double> buf(static_cast<size_t>(config.n));
        std::uint64_t local = 0;
        for (std::uint64_t c = next_chunk.fetch_add(1); c < chunks;
             c = next_chunk.fetch_add(1)) {
            auto rng = detail::chunk_engine(config.seed, c);
            const std::uint64_t begin = c * config.chunk_size;
            const std::uint64_t end = std::min(begin + config.chunk_size, config.trials);
            for (std::uint64_t t = begin; t < end; ++t) {
                for (auto& v : buf) v = detail::uniform01(rng);
                detail::insertion_sort(buf.data(), config.n);
                if (detail::windows_hold(buf.data(), config.n, config.k)) ++local;
            }
        }
        total_successes.fetch_add(local);
    };

    if (workers <= 1) {
        run_chunks();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run_chunks);
        for (auto& t : pool) t.join();
    }

    Estimate est;
    est.successes = total_successes.load();
    est.trials = config.trials;
    est.p_hat = static_cast<double>(est.successes) / static_cast<double>(est.trials);
    detail::wilson95(est.p_hat, static_cast<double>(est.trials), est.ci_low, est.ci_high);
    return est;
}

/// Sorted uniforms generated two ways from one seed: a direct sorted sample,
/// and the exponential-spacings representation. Feeding both into a
/// two-sample test checks that the representations agree in distribution.
inline std::pair<StickSample, SpacingsSample> spacings_equivalence_sample(
    int n, std::uint64_t seed) {
    if (n < 1) throw std::domain_error("spacings_equivalence_sample: n must be >= 1");
    auto rng = detail::chunk_engine(seed, 0);

    StickSample sticks;
    sticks.values.resize(static_cast<size_t>(n));
    for (auto& v : sticks.values) v = detail::uniform01(rng);
    std::sort(sticks.values.begin(), sticks.values.end());

    SpacingsSample spacings;
    spacings.spacings.resize(static_cast<size_t>(n) + 1);
    for (auto& x : spacings.spacings) x = detail::exponential1(rng);
    spacings.total = std::accumulate(spacings.spacings.begin(), spacings.spacings.end(), 0.0);
    return {std::move(sticks), std::move(spacings)};
}

}  // namespace sticks
