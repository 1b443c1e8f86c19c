#pragma once

/**
 * @file integrator.hpp
 * @brief Exact no-k-gon probabilities for arbitrary n via successive
 *        exponential integration, tracked as integer coefficient updates.
 *
 * Sorted uniform lengths avoid every k-gon iff each window of k consecutive
 * order statistics satisfies (sum of the first k-1) <= (the k-th). Writing
 * the order statistics as normalized cumulative sums of unit exponentials
 * X_1..X_{n+1} turns window i into
 *
 *   (k-2)(X_1+...+X_i) + (k-3)X_{i+1} + ... + 1*X_{i+k-3} + 0*X_{i+k-2}
 *       <= X_{i+k-1},
 *
 * and the probability into a nested integral of exp(-(x_1+...+x_n)) over the
 * region those inequalities cut out. Integrating from x_n inward keeps the
 * integrand of the form
 *
 *   (1/divisor) * exp(-(a*(x_1+...+x_m) + b_1*x_{m+1} + ... + b_{k-2}*x_n'))
 *
 * so the whole computation reduces to updating the exact integers
 * (a, b_1..b_{k-2}, divisor). For k = 3 the pair (a, b_1) walks up the
 * Fibonacci numbers; for k = 4 the triple (a, b_1, b_2) obeys
 * R' = R + 2T, S' = R + T, T' = S and b_2 walks the Tribonacci numbers.
 * The final k-1 integrations are unconstrained, each contributing the
 * reciprocal of its coefficient.
 */

#include <sticks/bigint.hpp>
#include <sticks/ratio.hpp>

#include <stdexcept>
#include <vector>

namespace sticks {

/// n stick lengths; forbid every k-subset from forming a k-gon.
struct KGonQuery {
    int n;  // number of sticks, >= 1
    int k;  // polygon size to forbid, >= 3

    KGonQuery(int n_, int k_) : n(n_), k(k_) {
        if (n < 1) throw std::domain_error("KGonQuery: n must be >= 1");
        if (k < 3) throw std::domain_error("KGonQuery: k must be >= 3");
    }
};

/// Exponent coefficients of the partially integrated density. The first
/// `prefix_len` variables share the coefficient `prefix_coeff`; the trailing
/// k-2 variables carry `tail[0..k-3]`. `divisor` accumulates the coefficient
/// of each variable integrated so far.
struct CoeffState {
    int k = 3;
    int prefix_len = 1;
    BigInt prefix_coeff;       // a
    std::vector<BigInt> tail;  // b_1..b_{k-2}
    BigInt divisor;

    bool operator==(const CoeffState& rhs) const {
        return k == rhs.k && prefix_len == rhs.prefix_len &&
               prefix_coeff == rhs.prefix_coeff && tail == rhs.tail &&
               divisor == rhs.divisor;
    }
};

/// Raw integrand exp(-(x_1+...+x_n)): every coefficient 1, nothing divided
/// out yet. Requires n >= k; callers short-circuit smaller n to probability 1.
inline CoeffState init_state(const KGonQuery& query) {
    if (query.n < query.k)
        throw std::domain_error("init_state: requires n >= k (smaller n is vacuous)");
    CoeffState state;
    state.k = query.k;
    state.prefix_len = query.n - (query.k - 2);
    state.prefix_coeff = 1;
    state.tail.assign(static_cast<size_t>(query.k - 2), BigInt(1));
    state.divisor = 1;
    return state;
}

/// Integrate the innermost remaining variable. Its lower bound is
/// (k-2)*(prefix minus its last variable) plus descending weights
/// k-3, k-4, ..., 0 on the variables after that, so the update is pure
/// integer bookkeeping:
///
///   divisor' = divisor * b_{k-2}
///   a'       = a + (k-2) * b_{k-2}
///   b_1'     = a + (k-3) * b_{k-2}
///   b_{j+1}' = b_j + (k-3-j) * b_{k-2}     for 1 <= j <= k-3
///
/// and the prefix shrinks by one variable.
inline CoeffState step(const CoeffState& state) {
    if (state.prefix_len < 2)
        throw std::logic_error("step: no constrained integration remains (prefix_len < 2)");
    const BigInt& last = state.tail.back();
    CoeffState next;
    next.k = state.k;
    next.prefix_len = state.prefix_len - 1;
    next.divisor = state.divisor * last;
    next.prefix_coeff = state.prefix_coeff + (state.k - 2) * last;
    next.tail.resize(state.tail.size());
    next.tail[0] = state.prefix_coeff + (state.k - 3) * last;
    for (size_t j = 1; j < state.tail.size(); ++j)
        next.tail[j] = state.tail[j - 1] +
                       (state.k - 3 - static_cast<int>(j)) * last;
    return next;
}

/// Exact probability that no k of the n uniform lengths form a k-gon.
/// Vacuously 1 for n < k; otherwise n-(k-1) constrained integrations
/// followed by k-1 unconstrained ones.
inline Ratio probability(const KGonQuery& query) {
    if (query.n < query.k) return Ratio(1);
    CoeffState state = init_state(query);
    for (int i = 0; i < query.n - (query.k - 1); ++i) state = step(state);
    BigInt denom = state.divisor * state.prefix_coeff;
    for (const auto& b : state.tail) denom *= b;
    return Ratio::reciprocal_of(denom);
}

/// Full state sequence from the initial state through the last step,
/// for coefficient-pattern analysis. Requires n >= k.
inline std::vector<CoeffState> coefficient_trace(const KGonQuery& query) {
    std::vector<CoeffState> trace;
    trace.push_back(init_state(query));
    for (int i = 0; i < query.n - (query.k - 1); ++i) trace.push_back(step(trace.back()));
    return trace;
}

}  // namespace sticks
