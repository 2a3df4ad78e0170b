#pragma once

#include <vector>

#include "aliquot/nat.hpp"

namespace aliquot {

// Default small-prime sieve bound; covers trial division to 2^32 per candidate.
inline constexpr u32 kDefaultSieveLimit = 1u << 16;

// Primes below `limit` by sieve of Eratosthenes.
std::vector<u32> sieve_primes(u32 limit);

// Shared table of primes below kDefaultSieveLimit, built on first use.
const std::vector<u32>& small_primes();

// Ascending prime table used to drive the p1 loops; grown on demand.
// Returned reference stays valid (the table is only ever extended).
const std::vector<u32>& prime_wheel(u32 at_least);

// Deterministic Miller-Rabin over the full 64-bit range
// (7-base set: 2, 325, 9375, 28178, 450775, 9780504, 1795265022).
// n in {0,1} -> false.
bool is_prime(u64 n);

// Primality for values past 64 bits (orbit terminals, semiprime-shortcut
// cofactors). Deterministic below 3.3e24 via the first 13 prime bases;
// above that an extended fixed base set is used.
bool is_prime_wide(u128 n);

// Smallest prime strictly greater than n; OverflowError if none fits in u64.
u64 next_prime(u64 n);

}  // namespace aliquot
