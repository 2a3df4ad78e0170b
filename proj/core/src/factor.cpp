#include "aliquot/factor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "aliquot/primes.hpp"
#include "mont128.hpp"

namespace aliquot {

namespace {

// Brent's variant of Pollard rho. Returns a nontrivial factor of composite
// odd n, or 0 if the iteration budget ran out. Deterministic.
u64 rho_brent_u64(u64 n, u64& budget) {
    using detail::mulmod_u64;
    auto step = [n](u64 y, u64 c) {
        u64 v = mulmod_u64(y, y, n);
        v += c;
        if (v >= n || v < c) v -= n;
        return v;
    };
    for (u64 c = 1; c < 64 && budget > 0; ++c) {
        u64 y = 2, r = 1, q = 1, g = 1, x = 0, ys = 0;
        const u64 block = 128;
        while (g == 1) {
            x = y;
            for (u64 i = 0; i < r && budget > 0; ++i) {
                y = step(y, c);
                --budget;
            }
            for (u64 k = 0; k < r && g == 1; k += block) {
                ys = y;
                const u64 lim = std::min(block, r - k);
                for (u64 i = 0; i < lim; ++i) {
                    y = step(y, c);
                    u64 diff = x > y ? x - y : y - x;
                    if (diff != 0) q = mulmod_u64(q, diff, n);
                }
                g = std::gcd(q, n);
                if (budget <= lim) {
                    budget = 0;
                    if (g == 1) break;
                } else {
                    budget -= lim;
                }
            }
            r *= 2;
            if (budget == 0 && g == 1) break;
        }
        if (g == n) {
            do {
                ys = step(ys, c);
                u64 diff = x > ys ? x - ys : ys - x;
                g = std::gcd(diff == 0 ? n : diff, n);
            } while (g == 1);
        }
        if (g != n && g != 1) return g;
        // cycle degenerated for this c; retry with the next polynomial
    }
    return 0;
}

u128 rho_brent_u128(u128 n, u64& budget) {
    detail::Mont128 mont(n);
    auto step = [&mont](u128 y, u128 c_mont) { return mont.add(mont.mul(y, y), c_mont); };
    for (u64 c = 1; c < 64 && budget > 0; ++c) {
        const u128 c_mont = mont.to_mont(c);
        u128 y = mont.to_mont(2), x = 0, ys = 0;
        u128 q = mont.one();
        u128 g = 1;
        u64 r = 1;
        const u64 block = 128;
        while (g == 1) {
            x = y;
            for (u64 i = 0; i < r && budget > 0; ++i) {
                y = step(y, c_mont);
                --budget;
            }
            for (u64 k = 0; k < r && g == 1; k += block) {
                ys = y;
                const u64 lim = std::min(block, r - k);
                for (u64 i = 0; i < lim; ++i) {
                    y = step(y, c_mont);
                    u128 diff = mont.sub(x, y);
                    if (diff != 0) q = mont.mul(q, diff);
                }
                g = gcd_u128(mont.from_mont(q), n);
                if (g == 0) g = n;  // q became 0 in Montgomery form
                if (budget <= lim) {
                    budget = 0;
                    if (g == 1) break;
                } else {
                    budget -= lim;
                }
            }
            r *= 2;
            if (budget == 0 && g == 1) break;
        }
        if (g == n) {
            do {
                ys = step(ys, c_mont);
                u128 diff = mont.from_mont(mont.sub(x, ys));
                g = gcd_u128(diff == 0 ? n : diff, n);
            } while (g == 1);
        }
        if (g != n && g != 1) return g;
    }
    return 0;
}

void push_factor(std::vector<PrimePower>& out, u128 p, u32 e) {
    out.push_back({p, e});
}

// integer k-th root, floor
u128 iroot(u128 n, unsigned k) {
    if (k == 1 || n <= 1) return n;
    u128 r = static_cast<u128>(std::pow(static_cast<double>(n), 1.0 / k));
    auto pow_le = [n](u128 base, unsigned e) {
        u128 acc = 1;
        for (unsigned i = 0; i < e; ++i) {
            if (base != 0 && acc > n / base) return false;
            acc *= base;
        }
        return acc <= n;
    };
    while (r > 1 && !pow_le(r, k)) --r;
    while (pow_le(r + 1, k)) ++r;
    return r;
}

void factor_hard(u128 n, u64& budget, std::vector<PrimePower>& out, u32 multiplicity);

// n has no factor below the trial-division bound; split recursively.
void split_composite(u128 n, u64& budget, std::vector<PrimePower>& out, u32 multiplicity) {
    if (n == 1) return;
    if (is_prime_wide(n)) {
        push_factor(out, n, multiplicity);
        return;
    }
    // perfect powers first; rho converges poorly on them
    for (unsigned k = 2; k < 127 && (n >> k) != 0; ++k) {
        u128 r = iroot(n, k);
        if (r > 1) {
            u128 acc = 1;
            bool exact = true;
            for (unsigned i = 0; i < k && exact; ++i) {
                if (acc > n / r) exact = false;
                else acc *= r;
            }
            if (exact && acc == n) {
                factor_hard(r, budget, out, multiplicity * k);
                return;
            }
        }
    }
    u128 d = 0;
    if (n <= ~u64{0}) {
        d = rho_brent_u64(static_cast<u64>(n), budget);
    } else {
        d = rho_brent_u128(n, budget);
    }
    if (d == 0) throw EffortExceededError("factor: rho budget exhausted on cofactor " + to_string(n), n);
    split_composite(d, budget, out, multiplicity);
    split_composite(n / d, budget, out, multiplicity);
}

void factor_hard(u128 n, u64& budget, std::vector<PrimePower>& out, u32 multiplicity) {
    split_composite(n, budget, out, multiplicity);
}

}  // namespace

Factorization factor(u128 n, const FactorOptions& opts) {
    if (n == 0) throw DomainError("factor: 0 has no factorization");
    Factorization f;
    f.n = n;
    if (n == 1) return f;

    u128 rest = n;
    for (u32 p : small_primes()) {
        if (static_cast<u128>(p) * p > rest) break;
        if (rest % p == 0) {
            u32 e = 0;
            while (rest % p == 0) {
                rest /= p;
                ++e;
            }
            f.factors.push_back({p, e});
        }
    }
    if (rest > 1) {
        const u32 last = small_primes().back();
        if (rest <= static_cast<u128>(last) * last) {
            // below the square of the table bound, the remainder is prime
            f.factors.push_back({rest, 1});
        } else {
            u64 budget = opts.rho_budget;
            std::vector<PrimePower> hard;
            factor_hard(rest, budget, hard, 1);
            std::sort(hard.begin(), hard.end(),
                      [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
            // merge repeated primes from independent splits
            for (const auto& pp : hard) {
                if (!f.factors.empty() && f.factors.back().prime == pp.prime)
                    f.factors.back().exponent += pp.exponent;
                else
                    f.factors.push_back(pp);
            }
        }
    }
    return f;
}

}  // namespace aliquot
