#include "aliquot/arith.hpp"

#include "aliquot/primes.hpp"

namespace aliquot {

u128 sigma_prime_power(u128 p, u32 e) {
    u128 acc = 1;
    u128 term = 1;
    for (u32 i = 0; i < e; ++i) {
        term = checked_mul(term, p);
        acc = checked_add(acc, term);
    }
    return acc;
}

u128 sigma(const Factorization& f) {
    u128 acc = 1;
    for (const auto& pp : f.factors) acc = checked_mul(acc, sigma_prime_power(pp.prime, pp.exponent));
    return acc;
}

u128 aliquot_sum(u128 n, const FactorOptions& opts) {
    if (n == 0) throw DomainError("aliquot_sum: n must be positive");
    if (n == 1) return 0;
    return sigma(factor(n, opts)) - n;
}

u64 omega_big(const Factorization& f) {
    u64 total = 0;
    for (const auto& pp : f.factors) total += pp.exponent;
    return total;
}

GoldbachPair goldbach_partition(u64 n) {
    if (n % 2 != 0 || n < 8) throw DomainError("goldbach_partition: n must be even and >= 8");
    // ascending p keeps the choice deterministic; p = 2 never works for even
    // n >= 8 since n - 2 is even
    for (u64 p = 3; p < n - p; p = next_prime(p)) {
        if (is_prime(n - p)) return {p, n - p};
    }
    throw CounterexampleError("goldbach_partition: no distinct-prime partition of " +
                              std::to_string(n) + " (Hypothesis G counterexample)");
}

u128 odd_witness(u64 n) {
    if (n % 2 == 0 || n < 9) throw DomainError("odd_witness: n must be odd and >= 9");
    GoldbachPair pq = goldbach_partition(n - 1);
    // n - 1 >= 8 is even, so both parts are odd primes and m = p*q is odd
    return static_cast<u128>(pq.p) * pq.q;
}

}  // namespace aliquot
