#pragma once

#include <string_view>
#include <vector>

#include "aliquot/arith.hpp"
#include "aliquot/factor.hpp"
#include "aliquot/nat.hpp"

namespace aliquot {

// Which branch of the inverse-image search produced a preimage.
enum class Provenance {
    OddSquare,        // odd m = a^2 p^{2k} from the odd-square equation
    BPrime,           // m = a*p, linear case b = p
    BPrimeSquare,     // m = a*p^2, quadratic case b = p^2
    BSemiprime,       // m = a*p*q via the (a*u+n*v)/g divisor scan
    BaseEnumeration,  // lattice base case, b verified by factoring
    PrimePowerTail,   // m = a*p1^k, k >= 3, found while extending the smooth part
};

std::string_view to_string(Provenance p);

struct Preimage {
    u128 value;
    Provenance via;

    friend bool operator==(const Preimage&, const Preimage&) = default;
};

// The complete inverse image s^{-1}({n}) for even n, sorted ascending.
// Every even element is <= 2n; every odd element is a perfect square.
struct InverseImage {
    u64 n = 0;
    std::vector<Preimage> preimages;

    std::vector<u128> values() const;
};

// State for one call of the even-side recursion: a is the even "smooth part"
// of candidate preimages m = a*b, carried with its divisor sums so no
// factoring of a is ever needed.
struct RecursionFrame {
    u64 n = 0;
    u64 a = 0;
    u128 sigma_a = 0;
    u128 s_a = 0;
    u64 largest_prime_of_a = 0;

    // Factors a and fills in the carried sums. a must be even.
    static RecursionFrame seed(u64 n, u64 a);
};

// Full inverse image for even n >= 2 (Algorithm: odd-square search plus the
// even recursion seeded at a = 2^k for every 2^k < n).
InverseImage s_inverse(u64 n);

// All odd m with s(m) = n, each of the form a^2 p^{2k}.
std::vector<Preimage> odd_preimages(u64 n);

// Appends to `out` all m = a*b with s(m) = n, b > 1, and the smallest prime
// factor of b exceeding frame.largest_prime_of_a.
void even_recursion(const RecursionFrame& frame, std::vector<Preimage>& out);

// The b = p*q case: factors N = (a*u + n*v)/g and scans divisors congruent to
// u mod v. Valid once Omega(b) <= 2 is forced; returns all m = a*p*q with
// p < q primes >= p1.
std::vector<u128> semiprime_shortcut(const RecursionFrame& frame, u64 p1);

// Exhaustive oracle: even m <= 2n by divisor-pair enumeration, odd squares
// t^2 for odd t in [3, n-1]. Independent of the algorithm above; the ceiling
// guards accidental huge runs.
std::vector<u128> s_inverse_bruteforce(u64 n, u64 ceiling = 20000);

}  // namespace aliquot
