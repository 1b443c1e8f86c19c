#pragma once

/**
 * @file verify.hpp
 * @brief Cross-method consistency suite: every identity the three exact
 *        routes must satisfy, packaged as a report.
 *
 * The engine is generic over the probability function under test so a
 * deliberately corrupted engine can be shown to fail (and to name the first
 * bad (n, k)) without touching the real implementation.
 */

#include <sticks/integrator.hpp>
#include <sticks/oracle.hpp>
#include <sticks/sequences.hpp>

#include <cmath>
#include <string>
#include <vector>

namespace sticks {

struct VerifyCheck {
    std::string name;
    bool ok = true;
    std::string detail;  // on failure, names the first offending (n, k)
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;
    std::string first_failure;  // "(n,k)" of the first mismatch, empty if none

    bool all_ok() const {
        for (const auto& c : checks)
            if (!c.ok) return false;
        return true;
    }
};

namespace detail {

inline std::string pair_str(int n, int k) {
    return "(" + std::to_string(n) + "," + std::to_string(k) + ")";
}

}  // namespace detail

/// Run every cross-method identity up to the given bounds. `engine` is any
/// callable KGonQuery -> Ratio; production callers pass sticks::probability.
template <typename Engine>
VerifyReport run_verification(int max_n, int max_k, Engine&& engine,
                              bool include_grid = true) {
    if (max_n < 3) throw std::domain_error("run_verification: max_n must be >= 3");
    if (max_k < 3) throw std::domain_error("run_verification: max_k must be >= 3");

    VerifyReport report;
    auto add = [&](std::string name, bool ok, std::string detail = "") {
        if (!ok && report.first_failure.empty()) report.first_failure = detail;
        report.checks.push_back({std::move(name), ok, std::move(detail)});
    };

    {  // engine vs the fibonorial closed form
        bool ok = true;
        std::string detail;
        for (int n = 1; n <= max_n && ok; ++n) {
            if (engine(KGonQuery(n, 3)) != p_no_triangle(n)) {
                ok = false;
                detail = detail::pair_str(n, 3);
            }
        }
        add("engine(n,3) = 1/(F_1*...*F_n) for n=1.." + std::to_string(max_n), ok, detail);
    }

    {  // engine vs the Tribonacci closed form with its correction term
        bool ok = true;
        std::string detail;
        for (int n = 1; n <= max_n && ok; ++n) {
            if (engine(KGonQuery(n, 4)) != p_no_quadrilateral(n)) {
                ok = false;
                detail = detail::pair_str(n, 4);
            }
        }
        add("engine(n,4) = 1/((T_n-T_{n-2})*T_1*...*T_{n-1}) for n=1.." +
                std::to_string(max_n),
            ok, detail);
    }

    // single-window case: one line per k, e.g. "engine(4,4) = 1/3!"
    for (int k = 3; k <= max_k; ++k) {
        const bool ok = engine(KGonQuery(k, k)) == p_cannot_ngon(k);
        add("engine(" + std::to_string(k) + "," + std::to_string(k) + ") = 1/" +
                std::to_string(k - 1) + "!",
            ok, ok ? "" : detail::pair_str(k, k));
    }

    // engine vs the substitution-volume oracle, all pairs including vacuous
    for (int k = 3; k <= max_k; ++k) {
        bool ok = true;
        std::string detail;
        for (int n = 1; n <= max_n && ok; ++n) {
            if (engine(KGonQuery(n, k)) != probability_oracle(KGonQuery(n, k))) {
                ok = false;
                detail = detail::pair_str(n, k);
            }
        }
        add("engine = substitution oracle for k=" + std::to_string(k) + ", n=1.." +
                std::to_string(max_n),
            ok, detail);
    }

    {  // k=3 trace: tail walks F_1, F_2, ...; prefix coefficient two ahead
        const int n = std::max(max_n, 5);
        const auto trace = coefficient_trace(KGonQuery(n, 3));
        const auto fib = kbonacci({3, static_cast<int>(trace.size()) + 1});
        bool ok = true;
        for (size_t i = 0; i < trace.size() && ok; ++i)
            ok = trace[i].tail[0] == fib[i] && trace[i].prefix_coeff == fib[i + 1];
        add("k=3 trace coefficients are consecutive Fibonacci pairs (n=" +
                std::to_string(n) + ")",
            ok, ok ? "" : detail::pair_str(n, 3));
    }

    if (max_k >= 4) {  // k=4 trace: R-S = previous T, T = previous S, T Tribonacci
        const int n = std::max(max_n, 6);
        const auto trace = coefficient_trace(KGonQuery(n, 4));
        const auto tri = kbonacci({4, static_cast<int>(trace.size())});
        bool ok = true;
        for (size_t i = 0; i < trace.size() && ok; ++i) {
            ok = trace[i].tail[1] == tri[i];
            if (i > 0 && ok)
                ok = trace[i].prefix_coeff - trace[i].tail[0] == trace[i - 1].tail[1] &&
                     trace[i].tail[1] == trace[i - 1].tail[0];
        }
        add("k=4 trace identities: R-S = prior T, T = prior S, T Tribonacci (n=" +
                std::to_string(n) + ")",
            ok, ok ? "" : detail::pair_str(n, 4));
    }

    if (include_grid) {  // deterministic numeric check at tiny n
        struct GridCase {
            int n, k, resolution;
        };
        for (const auto& gc : {GridCase{3, 3, 512}, GridCase{4, 3, 256}, GridCase{4, 4, 256}}) {
            const double approx = grid_volume_estimate(KGonQuery(gc.n, gc.k), gc.resolution);
            const double exact = engine(KGonQuery(gc.n, gc.k)).to_double();
            const bool ok = std::fabs(approx - exact) <= 5e-3;
            add("grid(" + std::to_string(gc.n) + "," + std::to_string(gc.k) + ") at resolution " +
                    std::to_string(gc.resolution) + " within 5e-3 of exact",
                ok, ok ? "" : detail::pair_str(gc.n, gc.k));
        }
    }

    return report;
}

inline VerifyReport run_verification(int max_n, int max_k, bool include_grid = true) {
    return run_verification(max_n, max_k,
                            [](const KGonQuery& q) { return probability(q); }, include_grid);
}

}  // namespace sticks
