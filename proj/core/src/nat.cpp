#include "aliquot/nat.hpp"

#include <cmath>

namespace aliquot {

std::string to_string(u128 v) {
    if (v == 0) return "0";
    char buf[40];
    int pos = 40;
    while (v > 0) {
        buf[--pos] = static_cast<char>('0' + static_cast<unsigned>(v % 10));
        v /= 10;
    }
    return std::string(buf + pos, buf + 40);
}

u128 parse_u128(std::string_view s) {
    if (s.empty()) throw DomainError("parse_u128: empty string");
    u128 v = 0;
    for (char c : s) {
        if (c < '0' || c > '9') throw DomainError("parse_u128: not a decimal digit");
        v = checked_add(checked_mul(v, 10), static_cast<u128>(c - '0'));
    }
    return v;
}

u128 isqrt(u128 n) {
    if (n == 0) return 0;
    u128 r = static_cast<u128>(std::sqrt(static_cast<double>(n)));
    if (r == 0) r = 1;
    while (r > n / r) --r;
    while (r + 1 <= n / (r + 1)) ++r;
    return r;
}

}  // namespace aliquot
