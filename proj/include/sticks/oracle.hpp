#pragma once

/**
 * @file oracle.hpp
 * @brief Independent verification of no-k-gon probabilities: exact polytope
 *        volume via a unit-triangular change of variables, plus a
 *        deterministic midpoint-grid check at tiny n.
 *
 * Shares no derivation with the integration engine. On sorted lengths
 * u_1 <= ... <= u_n the constraints are the ordering below the first full
 * window and one window inequality ending at each u_i for i >= k. Taking one
 * slack per constraint,
 *
 *   u_1 = v_1,
 *   u_i = u_{i-1} + v_i                          for 2 <= i <= k-1,
 *   u_i = u_{i-k+1} + ... + u_{i-1} + v_i        for i >= k,
 *
 * gives a determinant-1 map from {v >= 0, u_n <= 1} onto the ordered
 * feasible region (only the largest length's unit bound binds). With
 * u_n = sum_j c_j v_j the region is a scaled simplex of volume
 * 1/(n! * prod c_j), and multiplying by the n! orderings leaves
 * P = 1 / prod c_j.
 */

#include <sticks/bigint.hpp>
#include <sticks/integrator.hpp>
#include <sticks/ratio.hpp>

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace sticks {

/// Integer coefficients c_j of each slack v_j in the largest order
/// statistic u_n. For k = 3 these are the first n Fibonacci numbers
/// in reverse.
struct SubstitutionCoeffs {
    int n;
    int k;
    std::vector<BigInt> c;
};

inline SubstitutionCoeffs substitution_coefficients(const KGonQuery& query) {
    const int n = query.n;
    const int k = query.k;
    // rows[i][j] = coefficient of v_{j+1} in u_{i+1}
    std::vector<std::vector<BigInt>> rows(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        auto& row = rows[static_cast<size_t>(i)];
        row.assign(static_cast<size_t>(i + 1), BigInt(0));
        row[static_cast<size_t>(i)] = 1;
        const int preds = (i + 1 < k) ? std::min(i, 1) : k - 1;
        for (int t = i - preds; t < i; ++t)
            for (size_t j = 0; j < rows[static_cast<size_t>(t)].size(); ++j)
                row[j] += rows[static_cast<size_t>(t)][j];
    }
    return SubstitutionCoeffs{n, k, std::move(rows.back())};
}

/// P(no k-gon) = 1 / prod_j c_j. Below the first full window every c_j is 1,
/// so n < k yields exactly 1.
inline Ratio probability_oracle(const KGonQuery& query) {
    const auto coeffs = substitution_coefficients(query);
    BigInt product = 1;
    for (const auto& c : coeffs.c) product *= c;
    return Ratio::reciprocal_of(product);
}

namespace detail {

// Fraction of a grid cell lying in the closed ordered region, given how the
// sorted midpoint indices tie: 1/prod(multiplicity!) per group of equal
// indices.
inline double tie_weight(const int* idx, int count) {
    double w = 1.0;
    int run = 1;
    for (int i = 1; i < count; ++i) {
        if (idx[i] == idx[i - 1]) {
            ++run;
            w /= run;
        } else {
            run = 1;
        }
    }
    return w;
}

}  // namespace detail

/// From-the-definition numeric check, independent of both exact routes:
/// midpoint-rule integration over the ordered outer variables, with the
/// innermost (largest) length integrated analytically as
/// max(0, 1 - sum of the last k-1 outer values), all times n!.
/// Deterministic; converges to the exact probability as resolution grows.
/// Restricted to k <= n <= 4 -- cost grows as resolution^(n-1).
inline double grid_volume_estimate(const KGonQuery& query, int resolution) {
    const int n = query.n;
    const int k = query.k;
    if (n > 4) throw std::domain_error("grid_volume_estimate: n must be <= 4");
    if (n < k) throw std::domain_error("grid_volume_estimate: requires n >= k");
    if (resolution < 16)
        throw std::domain_error("grid_volume_estimate: resolution must be >= 16");

    const double h = 1.0 / resolution;
    auto mid = [&](int i) { return (i + 0.5) * h; };
    double acc = 0.0;

    if (n == 3) {  // k == 3; no window lies fully among the two outer variables
        for (int i1 = 0; i1 < resolution; ++i1) {
            const double u1 = mid(i1);
            for (int i2 = i1; i2 < resolution; ++i2) {
                const double u2 = mid(i2);
                const double slab = 1.0 - u1 - u2;
                if (slab <= 0.0) break;  // u2 ascending: later cells only worse
                const int idx[] = {i1, i2};
                acc += detail::tie_weight(idx, 2) * slab;
            }
        }
        return acc * h * h * 6.0;
    }

    // n == 4, k in {3, 4}
    for (int i1 = 0; i1 < resolution; ++i1) {
        const double u1 = mid(i1);
        for (int i2 = i1; i2 < resolution; ++i2) {
            const double u2 = mid(i2);
            for (int i3 = i2; i3 < resolution; ++i3) {
                const double u3 = mid(i3);
                if (k == 3 && u1 + u2 > u3) continue;  // window among the outers
                const double lower = (k == 3) ? u2 + u3 : u1 + u2 + u3;
                const double slab = 1.0 - lower;
                if (slab <= 0.0) break;
                const int idx[] = {i1, i2, i3};
                acc += detail::tie_weight(idx, 3) * slab;
            }
        }
    }
    return acc * h * h * h * 24.0;
}

}  // namespace sticks
