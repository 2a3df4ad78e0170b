#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace aliquot {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;
using i128 = __int128;

// All public operations are exact on inputs below 2^63; intermediates that can
// exceed the native word (orbit values, t^2, (a*u+n*v)/g) go through u128.
inline constexpr u64 kExactWidthLimit = u64{1} << 63;

class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

// Factoring ran out of its iteration budget. Only possible above the
// guaranteed-complete width; carries the cofactor that did not split.
class EffortExceededError : public std::runtime_error {
public:
    EffortExceededError(const std::string& what, u128 cofactor)
        : std::runtime_error(what), cofactor_(cofactor) {}
    u128 cofactor() const { return cofactor_; }

private:
    u128 cofactor_;
};

// An identity the algorithm relies on failed to hold; indicates a bug.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// A Goldbach/Hypothesis-G partition could not be found. Reportable event.
class CounterexampleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string to_string(u128 v);
u128 parse_u128(std::string_view s);

inline u128 checked_add(u128 a, u128 b) {
    u128 r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("u128 addition overflow");
    return r;
}

inline u128 checked_mul(u128 a, u128 b) {
    u128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("u128 multiplication overflow");
    return r;
}

inline u128 gcd_u128(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// floor(sqrt(n)), exact for the full u128 range
u128 isqrt(u128 n);

inline bool is_perfect_square(u128 n, u128* root = nullptr) {
    u128 r = isqrt(n);
    if (root) *root = r;
    return r * r == n;
}

}  // namespace aliquot
