#pragma once

/**
 * @file sequences.hpp
 * @brief k-step Fibonacci-type sequences and the closed-form probabilities
 *        built from them.
 *
 * A k-step sequence starts 1, 1 and each later term is the sum of its
 * previous min(i-1, k-1) terms, so k = 3 gives the Fibonacci numbers and
 * k = 4 the Tribonacci numbers. The closed forms answer: among n stick
 * lengths drawn independently and uniformly from [0,1], what is the
 * probability that no 3 (resp. 4, resp. all n) of them can form a polygon?
 */

#include <sticks/bigint.hpp>
#include <sticks/ratio.hpp>

#include <stdexcept>
#include <vector>

namespace sticks {

/// Which k-step sequence, and how many terms of it.
struct SequenceSpec {
    int k;      // window size of the recurrence, >= 2
    int count;  // number of terms to produce, >= 1

    SequenceSpec(int k_, int count_) : k(k_), count(count_) {
        if (k < 2) throw std::domain_error("SequenceSpec: k must be >= 2");
        if (count < 1) throw std::domain_error("SequenceSpec: count must be >= 1");
    }
};

/// First `spec.count` terms of the k-step sequence: s_1 = s_2 = 1, then each
/// term sums its previous min(i-1, k-1) terms. kbonacci({3, n}) is Fibonacci,
/// kbonacci({4, n}) is Tribonacci. k = 2 degenerates to all ones.
inline std::vector<BigInt> kbonacci(const SequenceSpec& spec) {
    std::vector<BigInt> terms;
    terms.reserve(static_cast<size_t>(spec.count));
    for (int i = 1; i <= spec.count; ++i) {
        if (i <= 2) {
            terms.emplace_back(1);
            continue;
        }
        const int window = std::min(i - 1, spec.k - 1);
        BigInt sum = 0;
        for (int j = i - 1 - window; j < i - 1; ++j) sum += terms[static_cast<size_t>(j)];
        terms.push_back(std::move(sum));
    }
    return terms;
}

/// Product of the first n Fibonacci numbers, F_1 * F_2 * ... * F_n.
inline BigInt fibonorial(int n) {
    if (n < 1) throw std::domain_error("fibonorial: n must be >= 1");
    const auto fib = kbonacci({3, n});
    BigInt product = 1;
    for (const auto& f : fib) product *= f;
    return product;
}

/// Probability that no three of n uniform stick lengths form a triangle:
/// the reciprocal of the nth fibonorial. Exactly 1 for n <= 2.
inline Ratio p_no_triangle(int n) {
    if (n < 1) throw std::domain_error("p_no_triangle: n must be >= 1");
    return Ratio::reciprocal_of(fibonorial(n));
}

/// Probability that no four of n uniform stick lengths form a quadrilateral:
/// 1 / ((T_n - T_{n-2}) * T_1 * ... * T_{n-1}) with T the Tribonacci numbers.
/// The condition is vacuous for n < 3; at n = 3 the formula itself gives 1.
inline Ratio p_no_quadrilateral(int n) {
    if (n < 1) throw std::domain_error("p_no_quadrilateral: n must be >= 1");
    if (n < 3) return Ratio(1);
    const auto tri = kbonacci({4, n});
    BigInt denom = tri[static_cast<size_t>(n - 1)] - tri[static_cast<size_t>(n - 3)];
    for (int i = 0; i < n - 1; ++i) denom *= tri[static_cast<size_t>(i)];
    return Ratio::reciprocal_of(denom);
}

/// Probability that n uniform stick lengths cannot form an n-gon: 1/(n-1)!.
inline Ratio p_cannot_ngon(int n) {
    if (n < 2) throw std::domain_error("p_cannot_ngon: n must be >= 2");
    return Ratio::reciprocal_of(factorial(n - 1));
}

}  // namespace sticks
