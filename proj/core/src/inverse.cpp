#include "aliquot/inverse.hpp"

#include <algorithm>

#include "aliquot/primes.hpp"

namespace aliquot {

std::string_view to_string(Provenance p) {
    switch (p) {
        case Provenance::OddSquare: return "odd-square";
        case Provenance::BPrime: return "b-prime";
        case Provenance::BPrimeSquare: return "b-prime-square";
        case Provenance::BSemiprime: return "b-semiprime";
        case Provenance::BaseEnumeration: return "base-enumeration";
        case Provenance::PrimePowerTail: return "prime-power-tail";
    }
    return "?";
}

std::vector<u128> InverseImage::values() const {
    std::vector<u128> v;
    v.reserve(preimages.size());
    for (const auto& p : preimages) v.push_back(p.value);
    return v;
}

namespace {

inline i128 div_floor(i128 a, i128 b) {  // b > 0
    i128 q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

inline i128 div_ceil(i128 a, i128 b) {  // b > 0
    i128 q = a / b;
    if (a % b != 0 && a > 0) ++q;
    return q;
}

// x with u*x == 1 (mod v); gcd(u, v) == 1, v >= 1
u64 inverse_mod(u64 u, u64 v) {
    if (v == 1) return 0;
    i128 t = 0, new_t = 1;
    i128 r = v, new_r = u % v;
    while (new_r != 0) {
        i128 q = r / new_r;
        i128 tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw InternalError("inverse_mod: arguments not coprime");
    if (t < 0) t += v;
    return static_cast<u64>(t);
}

// All divisors of n from its factorization, unordered.
std::vector<u128> all_divisors(const Factorization& f) {
    std::vector<u128> divs{1};
    for (const auto& pp : f.factors) {
        const size_t base = divs.size();
        u128 pe = 1;
        for (u32 e = 1; e <= pp.exponent; ++e) {
            pe = checked_mul(pe, pp.prime);
            for (size_t i = 0; i < base; ++i) divs.push_back(checked_mul(divs[i], pe));
        }
    }
    return divs;
}

struct InverseSearch {
    u64 n;
    std::vector<Preimage>* out;
    const std::vector<u32>* wheel;
    FactorOptions fopts;

    explicit InverseSearch(u64 n_, std::vector<Preimage>* out_)
        : n(n_), out(out_), wheel(&prime_wheel(0)) {}

    u32 wheel_prime(size_t idx) {
        while (idx >= wheel->size()) wheel = &prime_wheel(wheel->back() * 2);
        return (*wheel)[idx];
    }

    size_t first_wheel_index_above(u64 p) const {
        return static_cast<size_t>(
            std::upper_bound(wheel->begin(), wheel->end(), p) - wheel->begin());
    }

    // ---- odd branch -------------------------------------------------------

    void odd_branch() {
        search_odd_a(1, 1, 0, 3);
        const u64 amax = static_cast<u64>(isqrt(static_cast<u128>(n) / 6));
        for (u64 a = 3; a <= amax; a += 2) {
            Factorization fa = factor(a, fopts);
            u128 sigma_a2 = 1;
            for (const auto& pp : fa.factors)
                sigma_a2 = checked_mul(sigma_a2, sigma_prime_power(pp.prime, 2 * pp.exponent));
            const u128 a2 = static_cast<u128>(a) * a;
            const u64 q = static_cast<u64>(fa.largest_prime()) + 2;  // smallest odd exceeding it
            search_odd_a(a, sigma_a2, sigma_a2 - a2, q);
        }
    }

    // f(p) = s(a^2) p^{2k} + sigma(a^2)(1 + p + ... + p^{2k-1}), clamped above n
    u128 odd_equation(u128 s_a2, u128 sigma_a2, u64 p, u32 k) const {
        const u128 cap = static_cast<u128>(n) + 1;
        u128 geo = 0;
        u128 ppow = 1;
        for (u32 i = 0; i < 2 * k; ++i) {
            geo += ppow;
            if (geo >= cap) return cap;  // sigma(a^2) >= 1, so f >= geo
            u128 next;
            if (__builtin_mul_overflow(ppow, static_cast<u128>(p), &next)) return cap;
            ppow = next;
        }
        // ppow = p^{2k}, geo = 1 + ... + p^{2k-1}
        u128 t1;
        if (__builtin_mul_overflow(s_a2, ppow, &t1)) return cap;
        u128 t2;
        if (__builtin_mul_overflow(sigma_a2, geo, &t2)) return cap;
        u128 total;
        if (__builtin_add_overflow(t1, t2, &total)) return cap;
        return total > cap ? cap : total;
    }

    void search_odd_a(u64 a, u128 sigma_a2, u128 s_a2, u64 q) {
        for (u32 k = 1;; ++k) {
            // loop while q^{2k-1} * sigma(a^2) <= n
            u128 qpow = 1;
            bool fits = true;
            for (u32 i = 0; i + 1 < 2 * k && fits; ++i) {
                if (__builtin_mul_overflow(qpow, static_cast<u128>(q), &qpow)) fits = false;
            }
            if (!fits || checked_mul_clamped(qpow, sigma_a2) > n) break;
            if (odd_equation(s_a2, sigma_a2, q, k) > n) break;
            binary_search_p(a, sigma_a2, s_a2, q, k);
        }
    }

    static u128 checked_mul_clamped(u128 a, u128 b) {
        u128 r;
        if (__builtin_mul_overflow(a, b, &r)) return ~u128{0};
        return r;
    }

    void binary_search_p(u64 a, u128 sigma_a2, u128 s_a2, u64 q, u32 k) {
        u64 lo = q, hi = q;
        while (odd_equation(s_a2, sigma_a2, hi, k) < n) {
            lo = hi;
            if (hi > n) break;
            hi *= 2;
        }
        while (lo < hi) {
            u64 mid = lo + (hi - lo) / 2;
            if (odd_equation(s_a2, sigma_a2, mid, k) < n)
                lo = mid + 1;
            else
                hi = mid;
        }
        if (odd_equation(s_a2, sigma_a2, lo, k) != n) return;
        if (!is_prime(lo)) return;
        // p >= q exceeds every prime factor of a by construction
        u128 m = static_cast<u128>(a) * a;
        for (u32 i = 0; i < 2 * k; ++i) m = checked_mul(m, lo);
        out->push_back({m, Provenance::OddSquare});
    }

    // ---- even branch ------------------------------------------------------

    void even_recursion(u64 a, u128 sigma_a, u128 s_a, u64 lpa) {
        // no b > 1 with least prime > lpa >= 2 fits below this line
        if (sigma_a + 3 * s_a > n) return;

        const u128 g = gcd_u128(sigma_a, s_a);
        if (n % g != 0) return;

        shortcut_b_prime(a, sigma_a, s_a, lpa);
        shortcut_b_prime_square(a, sigma_a, s_a, lpa);

        const u64 u = static_cast<u64>(sigma_a / g);
        const u64 v = static_cast<u64>(s_a / g);
        const u64 ng = n / static_cast<u64>(g);

        // particular solution of u*x + v*y = n/g with x0 in [0, v)
        const u64 x0 = (v == 1) ? 0
                                : static_cast<u64>(
                                      static_cast<u128>(ng % v) * inverse_mod(u % v, v) % v);
        const i128 y0 = (static_cast<i128>(ng) - static_cast<i128>(static_cast<u128>(u) * x0)) / v;

        size_t wi = first_wheel_index_above(lpa);
        for (;; ++wi) {
            const u64 p1 = wheel_prime(wi);
            const u64 p1n = wheel_prime(wi + 1);
            const u128 b1 = static_cast<u128>(p1) * p1n;
            const u64 s1 = 1 + p1 + p1n;

            // window [b1,b2] x [s1,s2]; empty windows funnel into the base case
            u128 b2 = 0, s2 = 0;
            bool window_empty = true;
            const u128 sig_s1 = sigma_a * s1;
            if (sig_s1 <= n) {
                b2 = (static_cast<u128>(n) - sig_s1 + s_a - 1) / s_a;  // ceiling
                if (b2 >= b1) {
                    u64 k = 0;
                    u128 acc = 1;
                    while (acc <= b2 / p1) {
                        acc *= p1;
                        ++k;
                    }
                    const u128 s2_num = static_cast<u128>(k) * n;
                    const u128 s2_den = static_cast<u128>(k) * sigma_a + static_cast<u128>(p1) * s_a;
                    s2 = (s2_num + s2_den - 1) / s2_den;  // ceiling
                    if (s2 >= s1) window_empty = false;
                }
            }

            i128 rlo = 0, rhi = -1;
            if (!window_empty) {
                const i128 rx_lo = div_ceil(static_cast<i128>(s1) - x0, v);
                const i128 rx_hi = div_floor(static_cast<i128>(s2) - x0, v);
                const i128 ry_lo = div_ceil(y0 - static_cast<i128>(b2), u);
                const i128 ry_hi = div_floor(y0 - static_cast<i128>(b1), u);
                rlo = std::max(rx_lo, ry_lo);
                rhi = std::min(rx_hi, ry_hi);
            }
            const i128 count = rhi >= rlo ? rhi - rlo + 1 : 0;

            if (count < static_cast<i128>(p1)) {
                base_case(a, sigma_a, s_a, p1, x0, y0, u, v, rlo, rhi, b1, b2, s1, s2);
                return;
            }

            // s(a*p1^3) > n forces Omega(b) <= 2 for everything still missing
            const u128 p1cube = static_cast<u128>(p1) * p1 * p1;
            const u128 m3 = static_cast<u128>(a) * p1cube;
            const u128 sig3 = sigma_a * (((p1cube * p1 - 1)) / (p1 - 1));
            if (sig3 - m3 > n) {
                semiprime_case(a, sigma_a, s_a, p1, g, u, v);
                return;
            }

            // extend the smooth part by p1^k
            u128 mk = static_cast<u128>(a);
            u128 sig_pk = 1;
            u128 ppow = 1;
            for (u32 k = 1;; ++k) {
                mk = checked_mul(mk, p1);
                ppow = checked_mul(ppow, p1);
                sig_pk += ppow;
                const u128 sig_mk = checked_mul(sigma_a, sig_pk);
                const u128 s_mk = sig_mk - mk;
                if (s_mk > n) break;
                if (s_mk < n) {
                    even_recursion(static_cast<u64>(mk), sig_mk, s_mk, p1);
                } else if (k >= 3) {
                    out->push_back({mk, Provenance::PrimePowerTail});
                }
            }
        }
    }

    void shortcut_b_prime(u64 a, u128 sigma_a, u128 s_a, u64 lpa) {
        if (n <= sigma_a) return;
        const u128 num = n - sigma_a;
        if (num % s_a != 0) return;
        const u128 p = num / s_a;
        if (p <= lpa || p >= kExactWidthLimit) return;
        if (!is_prime(static_cast<u64>(p))) return;
        // s(a*p) = sigma(a)(1+p) - a*p = n by construction
        out->push_back({checked_mul(static_cast<u128>(a), p), Provenance::BPrime});
    }

    void shortcut_b_prime_square(u64 a, u128 sigma_a, u128 s_a, u64 lpa) {
        // s_a*p^2 + sigma_a*p + (sigma_a - n) = 0
        if (n <= sigma_a) return;
        const u128 disc = checked_add(checked_mul(sigma_a, sigma_a),
                                      checked_mul(4 * s_a, static_cast<u128>(n) - sigma_a));
        u128 root;
        if (!is_perfect_square(disc, &root)) return;
        const u128 num = root - sigma_a;
        const u128 den = 2 * s_a;
        if (num % den != 0) return;
        const u128 p = num / den;
        if (p <= lpa || p >= kExactWidthLimit) return;
        if (!is_prime(static_cast<u64>(p))) return;
        const u128 b = p * p;
        // verify exactly: n = sigma(a) s(p^2) + s(a) p^2
        if (sigma_a * (1 + p) + s_a * b != n) return;
        out->push_back({checked_mul(static_cast<u128>(a), b), Provenance::BPrimeSquare});
    }

    void base_case(u64 a, u128 sigma_a, u128 s_a, u64 p1, u64 x0, i128 y0, u64 u, u64 v,
                   i128 rlo, i128 rhi, u128 b1, u128 b2, u64 s1, u128 s2) {
        for (i128 r = rlo; r <= rhi; ++r) {
            const i128 b_signed = y0 - r * static_cast<i128>(u);
            const i128 target_signed = static_cast<i128>(x0) + r * static_cast<i128>(v);
            if (b_signed < 2 || target_signed < 1) continue;
            const u64 b = static_cast<u64>(b_signed);
            const u128 target = static_cast<u128>(target_signed);
            Factorization fb = factor(b, fopts);
            if (fb.smallest_prime() < p1) continue;
            // b = p and b = p^2 belong to the per-frame shortcuts
            if (fb.factors.size() == 1 && fb.factors[0].exponent <= 2) continue;
            if (sigma(fb) - b != target) continue;
            if (static_cast<u128>(b) < b1 || static_cast<u128>(b) > b2 || target < s1 ||
                target > s2)
                throw InternalError("base case accepted a solution outside its window");
            out->push_back({checked_mul(static_cast<u128>(a), b), Provenance::BaseEnumeration});
        }
    }

    void semiprime_case(u64 a, u128 sigma_a, u128 s_a, u64 p1, u128 g, u64 u, u64 v) {
        const u128 anv = checked_add(checked_mul(static_cast<u128>(a), u),
                                     checked_mul(static_cast<u128>(n), v));
        if (anv % g != 0)
            throw InternalError("semiprime shortcut: g does not divide a*u + n*v");
        const u128 N = anv / g;
        Factorization fN = factor(N, fopts);
        std::vector<u128> divs = all_divisors(fN);
        std::sort(divs.begin(), divs.end());
        const u128 root = isqrt(N);
        for (u128 d : divs) {
            // strict d < sqrt(N): d = sqrt(N) would force p = q
            if (d > root || (d == root && root * root == N)) break;
            if (d <= u) continue;
            if ((d - u) % v != 0) continue;
            const u128 p = (d - u) / v;
            const u128 qn = N / d;
            if (qn <= u || (qn - u) % v != 0) continue;
            const u128 q = (qn - u) / v;
            if (p < p1 || q < p1) continue;
            if (p >= kExactWidthLimit || q >= kExactWidthLimit) continue;
            if (!is_prime(static_cast<u64>(p)) || !is_prime(static_cast<u64>(q))) continue;
            // verify s(a*p*q) = n exactly
            const u128 m = checked_mul(checked_mul(static_cast<u128>(a), p), q);
            const u128 sig = checked_mul(sigma_a, checked_mul(1 + p, 1 + q));
            if (sig - m != n) continue;
            out->push_back({m, Provenance::BSemiprime});
        }
    }
};

void check_even_preconditions(u64 n) {
    if (n == 0 || n % 2 != 0) throw DomainError("inverse image: n must be even and positive");
    if (n >= kExactWidthLimit) throw OverflowError("inverse image: n exceeds supported width");
}

}  // namespace

RecursionFrame RecursionFrame::seed(u64 n, u64 a) {
    if (a % 2 != 0 || a == 0) throw DomainError("RecursionFrame: a must be even");
    Factorization fa = factor(a);
    RecursionFrame fr;
    fr.n = n;
    fr.a = a;
    fr.sigma_a = sigma(fa);
    fr.s_a = fr.sigma_a - a;
    fr.largest_prime_of_a = static_cast<u64>(fa.largest_prime());
    return fr;
}

std::vector<Preimage> odd_preimages(u64 n) {
    check_even_preconditions(n);
    std::vector<Preimage> out;
    InverseSearch search(n, &out);
    search.odd_branch();
    std::sort(out.begin(), out.end(),
              [](const Preimage& a, const Preimage& b) { return a.value < b.value; });
    return out;
}

void even_recursion(const RecursionFrame& frame, std::vector<Preimage>& out) {
    check_even_preconditions(frame.n);
    InverseSearch search(frame.n, &out);
    search.even_recursion(frame.a, frame.sigma_a, frame.s_a, frame.largest_prime_of_a);
}

std::vector<u128> semiprime_shortcut(const RecursionFrame& frame, u64 p1) {
    check_even_preconditions(frame.n);
    std::vector<Preimage> tmp;
    InverseSearch search(frame.n, &tmp);
    const u128 g = gcd_u128(frame.sigma_a, frame.s_a);
    if (frame.n % g != 0) return {};
    search.semiprime_case(frame.a, frame.sigma_a, frame.s_a, p1, g,
                          static_cast<u64>(frame.sigma_a / g), static_cast<u64>(frame.s_a / g));
    std::vector<u128> vals;
    for (const auto& p : tmp) vals.push_back(p.value);
    std::sort(vals.begin(), vals.end());
    return vals;
}

InverseImage s_inverse(u64 n) {
    check_even_preconditions(n);
    InverseImage image;
    image.n = n;
    InverseSearch search(n, &image.preimages);
    search.odd_branch();
    // seeds a = 2^k for every 2^k < n; sigma(2^k) = 2^{k+1} - 1
    for (u64 a = 2; a < n; a *= 2) {
        search.even_recursion(a, 2 * static_cast<u128>(a) - 1, a - 1, 2);
    }
    auto& pre = image.preimages;
    std::sort(pre.begin(), pre.end(),
              [](const Preimage& a, const Preimage& b) { return a.value < b.value; });
    for (size_t i = 1; i < pre.size(); ++i) {
        if (pre[i].value == pre[i - 1].value)
            throw InternalError("s_inverse: duplicate preimage " + to_string(pre[i].value) +
                                " for n = " + std::to_string(n));
    }
    return image;
}

std::vector<u128> s_inverse_bruteforce(u64 n, u64 ceiling) {
    if (n == 0 || n % 2 != 0) throw DomainError("s_inverse_bruteforce: n must be even and positive");
    if (n < 2 || n > ceiling)
        throw DomainError("s_inverse_bruteforce: n outside oracle ceiling " + std::to_string(ceiling));
    std::vector<u128> out;
    // even side: divisor-pair enumeration of s(m) for even m <= 2n
    for (u64 m = 2; m <= 2 * n; m += 2) {
        u64 s = 1;  // proper divisor 1; m > 1
        for (u64 d = 2; d * d <= m; ++d) {
            if (m % d == 0) {
                s += d;
                const u64 e = m / d;
                if (e != d) s += e;
            }
        }
        if (s == n) out.push_back(m);
    }
    // odd side: m = t^2 for odd t; s(m) >= 1 + t forces t <= n - 1
    for (u64 t = 3; t <= n - 1; t += 2) {
        u64 rest = t;
        u128 sig = 1;
        for (u64 d = 3; d * d <= rest; d += 2) {
            if (rest % d != 0) continue;
            u32 e = 0;
            while (rest % d == 0) {
                rest /= d;
                ++e;
            }
            u128 term = 1, power = 1;
            for (u32 i = 0; i < 2 * e; ++i) {
                power *= d;
                term += power;
            }
            sig *= term;
        }
        if (rest > 1) {
            // rest is prime; contributes 1 + rest + rest^2
            sig *= 1 + static_cast<u128>(rest) + static_cast<u128>(rest) * rest;
        }
        const u128 m = static_cast<u128>(t) * t;
        if (sig - m == n) out.push_back(m);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace aliquot
