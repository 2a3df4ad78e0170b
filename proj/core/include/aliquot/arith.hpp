#pragma once

#include "aliquot/factor.hpp"
#include "aliquot/nat.hpp"

namespace aliquot {

// sigma(n) = sum of divisors, as product of geometric series per prime power.
u128 sigma(const Factorization& f);

// sigma(p^e) for one prime power.
u128 sigma_prime_power(u128 p, u32 e);

// s(n) = sigma(n) - n, the sum of proper divisors; s(1) = 0.
u128 aliquot_sum(u128 n, const FactorOptions& opts = {});

// Omega(n): number of prime factors counted with multiplicity.
u64 omega_big(const Factorization& f);

struct GoldbachPair {
    u64 p;
    u64 q;
};

// Distinct primes p < q with p + q = n and p minimal; n even, n >= 8.
// Exhausting p < n/2 without a hit raises CounterexampleError (an event:
// it would contradict Hypothesis G).
GoldbachPair goldbach_partition(u64 n);

// For odd n >= 9: m = p*q with p, q distinct odd primes, p + q = n - 1,
// so that s(m) = n, m odd, m > n.
u128 odd_witness(u64 n);

}  // namespace aliquot
