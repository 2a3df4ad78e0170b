#pragma once

#include <vector>

#include "aliquot/nat.hpp"

namespace aliquot {

struct PrimePower {
    u128 prime;
    u32 exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Canonical prime-power decomposition: primes strictly increasing,
// product of prime^exponent == n, factors empty iff n == 1.
struct Factorization {
    u128 n = 1;
    std::vector<PrimePower> factors;

    bool is_prime() const { return factors.size() == 1 && factors[0].exponent == 1; }
    u128 smallest_prime() const { return factors.empty() ? 0 : factors.front().prime; }
    u128 largest_prime() const { return factors.empty() ? 0 : factors.back().prime; }
};

struct FactorOptions {
    // Pollard rho (Brent) iterations across all attempts on one input.
    // Inputs below 2^64 split well before this; past 64 bits the budget can
    // genuinely run out, raising EffortExceededError with the cofactor.
    u64 rho_budget = u64{1} << 26;
};

// Canonical factorization of n >= 1; deterministic. n == 0 is a DomainError.
Factorization factor(u128 n, const FactorOptions& opts = {});

}  // namespace aliquot
