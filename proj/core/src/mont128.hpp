#pragma once

#include "aliquot/nat.hpp"

// Montgomery arithmetic modulo an odd u128, R = 2^128.
// Products are formed from 64-bit limbs; REDC per Montgomery (1985).

namespace aliquot::detail {

struct U256 {
    u128 hi;
    u128 lo;
};

inline U256 mul_full(u128 a, u128 b) {
    const u64 a0 = static_cast<u64>(a), a1 = static_cast<u64>(a >> 64);
    const u64 b0 = static_cast<u64>(b), b1 = static_cast<u64>(b >> 64);
    const u128 p00 = static_cast<u128>(a0) * b0;
    const u128 p01 = static_cast<u128>(a0) * b1;
    const u128 p10 = static_cast<u128>(a1) * b0;
    const u128 p11 = static_cast<u128>(a1) * b1;

    u128 mid = p01 + p10;
    u128 carry_mid = (mid < p01) ? (u128{1} << 64) : 0;

    u128 lo = p00 + (mid << 64);
    u128 carry_lo = (lo < p00) ? 1 : 0;

    u128 hi = p11 + (mid >> 64) + carry_mid + carry_lo;
    return {hi, lo};
}

class Mont128 {
public:
    // Requires n odd and n < 2^127 (keeps REDC's final sum below 2^128).
    explicit Mont128(u128 n) : n_(n) {
        if ((n & 1) == 0 || (n >> 127) != 0)
            throw InternalError("Mont128: modulus must be odd and below 2^127");
        // ninv_ = -n^{-1} mod 2^128, Newton iteration on the dyadic inverse
        u128 inv = n;
        for (int i = 0; i < 7; ++i) inv *= 2 - n * inv;
        ninv_ = static_cast<u128>(0) - inv;
        // r_ = 2^128 mod n, r2_ = 2^256 mod n by 128 modular doublings
        r_ = (static_cast<u128>(0) - n) % n;
        r2_ = r_;
        for (int i = 0; i < 128; ++i) {
            u128 gap = n_ - r2_;
            r2_ = (r2_ >= gap) ? r2_ - gap : r2_ + r2_;
        }
    }

    u128 modulus() const { return n_; }
    u128 one() const { return r_; }

    u128 to_mont(u128 a) const { return mul(a % n_, r2_); }
    u128 from_mont(u128 a) const { return redc({0, a}); }

    u128 mul(u128 a, u128 b) const { return redc(mul_full(a, b)); }

    u128 add(u128 a, u128 b) const {
        u128 s = a + b;
        if (s < a || s >= n_) s -= n_;
        return s;
    }

    u128 sub(u128 a, u128 b) const { return a >= b ? a - b : a + n_ - b; }

    u128 pow(u128 base_mont, u128 e) const {
        u128 acc = one();
        u128 b = base_mont;
        while (e > 0) {
            if (e & 1) acc = mul(acc, b);
            b = mul(b, b);
            e >>= 1;
        }
        return acc;
    }

private:
    u128 redc(U256 t) const {
        u128 m = t.lo * ninv_;
        U256 mn = mul_full(m, n_);
        u128 carry = (t.lo + mn.lo < t.lo) ? 1 : 0;
        u128 hi = t.hi + mn.hi + carry;  // < 2n since n < 2^127
        if (hi >= n_) hi -= n_;
        return hi;
    }

    u128 n_;
    u128 ninv_;
    u128 r_;
    u128 r2_;
};

inline u64 mulmod_u64(u64 a, u64 b, u64 n) {
    return static_cast<u64>(static_cast<u128>(a) * b % n);
}

inline u64 powmod_u64(u64 a, u64 e, u64 n) {
    u64 acc = 1;
    a %= n;
    while (e > 0) {
        if (e & 1) acc = mulmod_u64(acc, a, n);
        a = mulmod_u64(a, a, n);
        e >>= 1;
    }
    return acc;
}

}  // namespace aliquot::detail
