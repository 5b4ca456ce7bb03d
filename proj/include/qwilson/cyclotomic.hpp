/* Exact elements of Z[zeta_p] realized on the residue-ring representation
   (zeta is the class of q): root products over exponent sets, half-range
   products, the quadratic Gauss sum, Galois automorphisms, a suite of
   exact ring identities, and the exact/numeric determinations of h(p). */
#ifndef QWILSON_CYCLOTOMIC_HPP
#define QWILSON_CYCLOTOMIC_HPP

#include <string>
#include <vector>

#include "qwilson/residue_poly.hpp"

namespace qwilson {

using CyclotomicElement = ResiduePoly;

// prod_{k in S} (1 - zeta^k). S must be a subset of [1, p-1] without
// duplicates; the empty set gives 1.
CyclotomicElement root_product(unsigned long p, const std::vector<unsigned long>& exponents);

// prod_{j=1}^{(p-1)/2} (1 - zeta^{r j}); requires gcd(r, p) = 1.
CyclotomicElement half_range_root_product(unsigned long p, unsigned long r);

// sum_{j=1}^{p-1} (j/p) zeta^j for p ≡ 1 (mod 4); equals sqrt(p) in Z[zeta].
CyclotomicElement gauss_sum(unsigned long p);

// Ring automorphism zeta -> zeta^s; requires gcd(s, p) = 1.
CyclotomicElement automorphism(const CyclotomicElement& a, unsigned long s);

struct IdentityCheckResult {
    std::string name;
    bool applicable = false;
    bool pass = false;
};

// Exact ring-equality checks of the supporting identities; every named
// check is returned, flagged inapplicable when p is in the wrong residue
// class. Requires an odd prime p >= 5.
std::vector<IdentityCheckResult> proof_identity_suite(unsigned long p);

// Least odd h >= 1 with 2*prod_{k in N}(1 - zeta^k) == d*p + c*sqrt(p)
// where eps^h = (c + d*sqrt(p))/2 and sqrt(p) is the Gauss-sum element.
// Throws if no match occurs within the coefficient-size bound.
unsigned long class_number_real_exact(unsigned long p);

// Floating-point cross-check of class_number_real_exact:
//   h = round( log(V / sqrt(p)) / log(eps) ),  V = prod_{k in N} 2 sin(pi k / p),
// evaluated with precision growing with p; retries with more precision if
// the rounding residue exceeds 1e-6, and throws if it stays imprecise.
unsigned long class_number_real_numeric(unsigned long p);

} // namespace qwilson

#endif
