/* Small exact integer helpers shared across the library: deterministic
   primality, modular arithmetic on machine words, and a stable hash used
   for report digests. */
#ifndef QWILSON_NUMERIC_HPP
#define QWILSON_NUMERIC_HPP

#include <cstdint>
#include <string_view>
#include <vector>

namespace qwilson {

// Deterministic Miller-Rabin, valid for the whole unsigned 64-bit range.
bool is_odd_prime(unsigned long n);

unsigned long mulmod(unsigned long a, unsigned long b, unsigned long m);
unsigned long powmod(unsigned long base, unsigned long exp, unsigned long m);

// Inverse of a modulo an odd prime p; a must not be divisible by p.
unsigned long inverse_mod(unsigned long a, unsigned long p);

// n! mod p by direct product.
unsigned long factorial_mod(unsigned long n, unsigned long p);

// All primes q with lo <= q <= hi and q >= 5, ascending.
std::vector<unsigned long> primes_in_range(unsigned long lo, unsigned long hi);

// FNV-1a, 64-bit; used for coefficient-sequence digests in reports.
std::uint64_t fnv1a64(std::string_view bytes);

} // namespace qwilson

#endif
