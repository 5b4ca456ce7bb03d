/* q-integers [n] in the base q^m and the two congruence product families,
   all as canonical residue-ring elements. */
#ifndef QWILSON_QNUMBER_HPP
#define QWILSON_QNUMBER_HPP

#include "qwilson/residue_poly.hpp"

namespace qwilson {

// Canonical form of [n]_{q^m} = 1 + q^m + q^{2m} + ... + q^{(n-1)m}.
// n must be >= 1; m may be any value (it only matters mod p).
ResiduePoly q_integer(unsigned long p, unsigned long n, unsigned long m);

// prod_{j=1}^{p-1} [j]_{q^j}, reduced after every factor. Requires p >= 5.
ResiduePoly wilson_product(unsigned long p);

// prod_{j=1}^{(p-1)/2} [j]_{q^{t*j}}, reduced after every factor.
// Requires p >= 5 and t >= 1.
ResiduePoly half_product(unsigned long p, unsigned long t);

// Exact check of (1 - q^j) * [j]_{q^j} == 1 - q^{j^2} in the residue ring.
bool q_integer_identity_check(unsigned long p, unsigned long j);

enum class ProductFamily { full_wilson, half_product };

struct QProductSpec {
    unsigned long prime = 0;
    ProductFamily family = ProductFamily::full_wilson;
    unsigned long exponent_multiplier = 1; // applies to the half family
};

ResiduePoly build_product(const QProductSpec& spec);

} // namespace qwilson

#endif
