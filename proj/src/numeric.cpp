#include "qwilson/numeric.hpp"

#include <stdexcept>

namespace qwilson {

unsigned long mulmod(unsigned long a, unsigned long b, unsigned long m) {
    return static_cast<unsigned long>(
        (static_cast<unsigned __int128>(a) * b) % m);
}

unsigned long powmod(unsigned long base, unsigned long exp, unsigned long m) {
    if (m == 1) return 0;
    unsigned long r = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1UL) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

bool is_odd_prime(unsigned long n) {
    if (n < 3 || n % 2 == 0) return false;
    unsigned long d = n - 1;
    unsigned s = 0;
    while (d % 2 == 0) { d /= 2; ++s; }
    // Sufficient witness set for all 64-bit integers.
    static const unsigned long witnesses[] = {2,  3,  5,  7,  11, 13,
                                              17, 19, 23, 29, 31, 37};
    for (unsigned long a : witnesses) {
        if (a % n == 0) continue;
        unsigned long x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

unsigned long inverse_mod(unsigned long a, unsigned long p) {
    a %= p;
    if (a == 0) throw std::invalid_argument("inverse_mod: value divisible by modulus");
    return powmod(a, p - 2, p);
}

unsigned long factorial_mod(unsigned long n, unsigned long p) {
    unsigned long r = 1 % p;
    for (unsigned long k = 2; k <= n; ++k) r = mulmod(r, k % p, p);
    return r;
}

std::vector<unsigned long> primes_in_range(unsigned long lo, unsigned long hi) {
    std::vector<unsigned long> out;
    if (lo < 5) lo = 5;
    for (unsigned long n = lo; n <= hi && n >= lo; ++n)
        if (is_odd_prime(n)) out.push_back(n);
    return out;
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

} // namespace qwilson
