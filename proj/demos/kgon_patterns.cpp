// Pattern-hunting demo: tabulate exact no-k-gon probabilities and the final
// engine coefficients for several k, the raw material for spotting
// (k-1)-step Fibonacci-type structure beyond the known k = 3 and k = 4 laws.

#include <sticks/sticks.hpp>

#include <cstdio>

using namespace sticks;

int main() {
    for (int k = 3; k <= 6; ++k) {
        std::printf("k = %d (forbid %d-gons)\n", k, k);
        std::printf("  %2s  %-24s %-16s %s\n", "n", "P(no k-gon)", "decimal", "final coefficients");
        for (int n = k; n <= 12; ++n) {
            const Ratio p = probability(KGonQuery(n, k));
            const CoeffState last = coefficient_trace(KGonQuery(n, k)).back();
            std::string coeffs = last.prefix_coeff.str();
            for (const auto& b : last.tail) coeffs += " " + b.str();
            std::printf("  %2d  %-24s %-16s %s\n", n, p.str().c_str(),
                        p.decimal(10).c_str(), coeffs.c_str());
        }
        std::printf("\n");
    }

    std::printf("Monte Carlo spot check at (n=6, k=4):\n");
    const auto est = estimate(TrialConfig(6, 4, 2000000, 2024));
    const Ratio exact = probability(KGonQuery(6, 4));
    std::printf("  exact   = %s = %s\n", exact.str().c_str(), exact.decimal(10).c_str());
    std::printf("  p_hat   = %.8f  (95%% CI [%.8f, %.8f], %llu trials)\n", est.p_hat,
                est.ci_low, est.ci_high, static_cast<unsigned long long>(est.trials));
    return 0;
}
