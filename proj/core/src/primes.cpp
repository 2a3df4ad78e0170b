#include "aliquot/primes.hpp"

#include <array>
#include <mutex>

#include "mont128.hpp"

namespace aliquot {

std::vector<u32> sieve_primes(u32 limit) {
    std::vector<u32> primes;
    if (limit < 3) return primes;
    std::vector<bool> composite(limit, false);
    for (u64 i = 2; i < limit; ++i) {
        if (composite[i]) continue;
        primes.push_back(static_cast<u32>(i));
        for (u64 j = i * i; j < limit; j += i) composite[j] = true;
    }
    return primes;
}

const std::vector<u32>& small_primes() {
    static const std::vector<u32> table = sieve_primes(kDefaultSieveLimit);
    return table;
}

namespace {

// The wheel table only ever grows; readers hold a reference to the current
// vector, which is replaced wholesale under the mutex, so we keep generations
// alive. In practice one growth to the default limit happens per process.
struct WheelState {
    std::mutex mu;
    std::vector<std::vector<u32>*> generations;
    std::vector<u32>* current = nullptr;
    u32 limit = 0;
};

WheelState& wheel_state() {
    static WheelState state;
    return state;
}

}  // namespace

const std::vector<u32>& prime_wheel(u32 at_least) {
    // p1 in the recursion is bounded by ~n^{1/3}, so 2^21+slack covers n < 2^63.
    constexpr u32 kBaseLimit = (1u << 21) + 1024;
    WheelState& st = wheel_state();
    std::lock_guard<std::mutex> lock(st.mu);
    u32 want = at_least < kBaseLimit ? kBaseLimit : at_least;
    if (st.current == nullptr || st.limit < want) {
        u32 limit = kBaseLimit;
        while (limit < want) limit *= 2;
        auto* next = new std::vector<u32>(sieve_primes(limit));
        st.generations.push_back(next);
        st.current = next;
        st.limit = limit;
    }
    return *st.current;
}

namespace {

bool miller_rabin_u64(u64 n, u64 base) {
    using detail::mulmod_u64;
    using detail::powmod_u64;
    u64 a = base % n;
    if (a == 0) return true;
    u64 d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    u64 x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < r; ++i) {
        x = mulmod_u64(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

bool miller_rabin_wide(const detail::Mont128& mont, u128 base) {
    const u128 n = mont.modulus();
    if (base % n == 0) return true;
    u128 d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    const u128 one = mont.one();
    const u128 minus_one = mont.sub(0, one);
    u128 x = mont.pow(mont.to_mont(base), d);
    if (x == one || x == minus_one) return true;
    for (int i = 1; i < r; ++i) {
        x = mont.mul(x, x);
        if (x == minus_one) return true;
    }
    return false;
}

}  // namespace

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    // Sinclair's 7-base set, deterministic for all n < 2^64
    for (u64 base : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull}) {
        if (!miller_rabin_u64(n, base)) return false;
    }
    return true;
}

bool is_prime_wide(u128 n) {
    if (n <= ~u64{0}) return is_prime(static_cast<u64>(n));
    if ((n >> 127) != 0) throw OverflowError("is_prime_wide: value out of supported range");
    if ((n & 1) == 0) return false;
    for (u32 p : {3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u, 41u, 43u, 47u, 53u, 59u}) {
        if (n % p == 0) return false;
    }
    detail::Mont128 mont(n);
    // First 13 primes: deterministic below 3.317e24 (Sorenson-Webster), so
    // certainly below 2^81.
    constexpr std::array<u32, 13> kCore = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
    for (u32 base : kCore) {
        if (!miller_rabin_wide(mont, base)) return false;
    }
    if (n < (u128{1} << 81)) return true;
    constexpr std::array<u32, 12> kExtra = {43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
    for (u32 base : kExtra) {
        if (!miller_rabin_wide(mont, base)) return false;
    }
    return true;
}

u64 next_prime(u64 n) {
    constexpr u64 kLargestU64Prime = 18446744073709551557ull;  // 2^64 - 59
    if (n >= kLargestU64Prime) throw OverflowError("next_prime: no 64-bit prime above input");
    if (n < 2) return 2;
    u64 c = n + 1;
    if (c % 2 == 0) {
        if (c == 2) return 2;
        ++c;
    }
    while (!is_prime(c)) c += 2;
    return c;
}

}  // namespace aliquot
