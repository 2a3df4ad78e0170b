#include <doctest.h>

#include <aliquot/arith.hpp>
#include <aliquot/factor.hpp>
#include <aliquot/nat.hpp>
#include <aliquot/primes.hpp>

using namespace aliquot;

namespace {

// trial-division oracles, independent of the library paths they check

bool oracle_is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

u64 oracle_sigma(u64 n) {
    u64 s = 0;
    for (u64 d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            s += d;
            if (d != n / d) s += n / d;
        }
    }
    return s;
}

u128 remultiply(const Factorization& f) {
    u128 prod = 1;
    for (const auto& pp : f.factors)
        for (u32 i = 0; i < pp.exponent; ++i) prod = checked_mul(prod, pp.prime);
    return prod;
}

}  // namespace

TEST_CASE("factor: small canonical cases") {
    CHECK(factor(1).factors.empty());

    auto f12 = factor(12);
    REQUIRE(f12.factors.size() == 2);
    CHECK(f12.factors[0] == PrimePower{2, 2});
    CHECK(f12.factors[1] == PrimePower{3, 1});

    // 5040 = 2^4 * 3^2 * 5 * 7, cross-checked by remultiplication
    auto f = factor(5040);
    REQUIRE(f.factors.size() == 4);
    CHECK(f.factors[0] == PrimePower{2, 4});
    CHECK(f.factors[1] == PrimePower{3, 2});
    CHECK(f.factors[2] == PrimePower{5, 1});
    CHECK(f.factors[3] == PrimePower{7, 1});
    CHECK(remultiply(f) == 5040);

    CHECK_THROWS_AS(factor(0), DomainError);
}

TEST_CASE("factor: round-trips and canonical ordering up to 20000") {
    for (u64 n = 1; n <= 20000; ++n) {
        auto f = factor(n);
        CHECK(remultiply(f) == n);
        for (size_t i = 0; i < f.factors.size(); ++i) {
            CHECK(oracle_is_prime(static_cast<u64>(f.factors[i].prime)));
            if (i > 0) CHECK(f.factors[i - 1].prime < f.factors[i].prime);
        }
    }
}

TEST_CASE("factor: 64-bit semiprimes and prime powers") {
    // 1000003^2 straddles the small-prime table
    auto f = factor(static_cast<u128>(1000003) * 1000003);
    REQUIRE(f.factors.size() == 1);
    CHECK(f.factors[0] == PrimePower{1000003, 2});

    auto g = factor(static_cast<u128>(999999937) * 999999893);
    REQUIRE(g.factors.size() == 2);
    CHECK(g.factors[0].prime == 999999893);
    CHECK(g.factors[1].prime == 999999937);

    // past 64 bits: 2^67 * 3
    auto h = factor((u128{1} << 67) * 3);
    REQUIRE(h.factors.size() == 2);
    CHECK(h.factors[0] == PrimePower{2, 67});
    CHECK(h.factors[1] == PrimePower{3, 1});
}

TEST_CASE("is_prime agrees with trial division on [0, 100000]") {
    for (u64 n = 0; n <= 100000; ++n) CHECK(is_prime(n) == oracle_is_prime(n));
}

TEST_CASE("is_prime: unit, classic strong pseudoprime, wide values") {
    CHECK_FALSE(is_prime(1));
    CHECK(is_prime(97));
    // 3215031751 is composite (strong pseudoprime to bases 2,3,5,7);
    // confirm with the oracle before asserting
    const u64 psp = 3215031751ull;
    REQUIRE_FALSE(oracle_is_prime(psp));
    CHECK_FALSE(is_prime(psp));

    CHECK(is_prime_wide((u128{1} << 89) - 1));       // Mersenne prime M89
    CHECK_FALSE(is_prime_wide((u128{1} << 87) - 1)); // M87 composite
    CHECK_FALSE(is_prime_wide(u128{2} << 70));
}

TEST_CASE("next_prime") {
    CHECK(next_prime(1) == 2);
    CHECK(next_prime(0) == 2);
    CHECK(next_prime(2) == 3);
    CHECK(next_prime(7) == 11);
    CHECK(next_prime(31) == 37);
    CHECK_THROWS_AS(next_prime(~u64{0}), OverflowError);
}

TEST_CASE("sigma and aliquot_sum: spec identities") {
    CHECK(sigma(factor(1)) == 1);
    CHECK(sigma(factor(12)) == 28);
    CHECK(sigma(factor(28)) == 56);  // 28 is perfect

    CHECK(aliquot_sum(220) == 284);
    CHECK(aliquot_sum(284) == 220);
    CHECK(aliquot_sum(1) == 0);
    CHECK(aliquot_sum(15) == 9);  // s(pq) = p + q + 1
    CHECK_THROWS_AS(aliquot_sum(0), DomainError);
}

TEST_CASE("sigma matches divisor-sum oracle on [1, 100000]") {
    for (u64 n = 1; n <= 100000; ++n) CHECK(sigma(factor(n)) == oracle_sigma(n));
}

TEST_CASE("omega_big") {
    CHECK(omega_big(factor(1)) == 0);
    CHECK(omega_big(factor(12)) == 3);
    CHECK(omega_big(factor(1024)) == 10);
}

TEST_CASE("goldbach_partition: examples and domain") {
    auto g8 = goldbach_partition(8);
    CHECK(g8.p == 3);
    CHECK(g8.q == 5);
    auto g10 = goldbach_partition(10);
    CHECK(g10.p == 3);
    CHECK(g10.q == 7);
    auto g24 = goldbach_partition(24);  // 3+21 fails, 21 composite
    CHECK(g24.p == 5);
    CHECK(g24.q == 19);
    CHECK_THROWS_AS(goldbach_partition(7), DomainError);
    CHECK_THROWS_AS(goldbach_partition(6), DomainError);
}

TEST_CASE("goldbach_partition: every even n in [8, 100000]") {
    for (u64 n = 8; n <= 100000; n += 2) {
        auto g = goldbach_partition(n);
        CHECK(is_prime(g.p));
        CHECK(is_prime(g.q));
        CHECK(g.p < g.q);
        CHECK(g.p + g.q == n);
    }
}

TEST_CASE("odd_witness: examples and property on [9, 100000]") {
    CHECK(odd_witness(9) == 15);
    CHECK(odd_witness(25) == 95);
    CHECK_THROWS_AS(odd_witness(7), DomainError);
    CHECK_THROWS_AS(odd_witness(10), DomainError);

    for (u64 n = 9; n <= 100000; n += 2) {
        u128 m = odd_witness(n);
        CHECK(m % 2 == 1);
        CHECK(m > n);
        CHECK(aliquot_sum(m) == n);
    }
}

TEST_CASE("u128 string round-trip") {
    CHECK(to_string(u128{0}) == "0");
    CHECK(to_string((u128{1} << 100) + 12345) == "1267650600228229401496703217721");
    CHECK(parse_u128("1267650600228229401496703217721") == (u128{1} << 100) + 12345);
    CHECK_THROWS_AS(parse_u128("12x"), DomainError);
}
