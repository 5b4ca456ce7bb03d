#include "qwilson/qnumber.hpp"

#include <stdexcept>

#include "qwilson/numeric.hpp"

namespace qwilson {

ResiduePoly q_integer(unsigned long p, unsigned long n, unsigned long m) {
    if (n == 0) throw std::invalid_argument("q_integer: n must be >= 1");
    detail::ExponentAccumulator acc(p);
    m %= p;
    // Exponents k*m mod p for k = 0..n-1 cycle with period p (or stay at 0).
    unsigned long cycles = (m == 0) ? 0 : n / p;
    unsigned long rest = (m == 0) ? n : n % p;
    if (m == 0) {
        acc.add_term(0, mpz_class(n));
    } else {
        if (cycles > 0) {
            mpz_class full(cycles);
            for (unsigned long e = 0; e < p; ++e) acc.add_term(e, full);
        }
        unsigned long e = 0;
        for (unsigned long k = 0; k < rest; ++k) {
            acc.add_term(e, 1);
            e += m;
            if (e >= p) e -= p;
        }
    }
    return acc.take();
}

// Multiply a canonical element by [n]_{q^m}: n shifted copies of `a`
// accumulated with exponent folding, then one canonicalization. This is
// the schoolbook product specialized to a 0/1-coefficient factor.
static ResiduePoly mul_by_q_integer(const ResiduePoly& a, unsigned long n, unsigned long m) {
    const unsigned long p = a.prime();
    detail::ExponentAccumulator acc(p);
    m %= p;
    unsigned long e = 0;
    for (unsigned long k = 0; k < n; ++k) {
        acc.add_shifted(a, e);
        e += m;
        if (e >= p) e -= p;
    }
    return acc.take();
}

ResiduePoly wilson_product(unsigned long p) {
    if (!is_odd_prime(p) || p < 5)
        throw std::invalid_argument("wilson_product: need an odd prime p >= 5");
    ResiduePoly acc = ResiduePoly::one(p);
    for (unsigned long j = 1; j <= p - 1; ++j) acc = mul_by_q_integer(acc, j, j);
    return acc;
}

ResiduePoly half_product(unsigned long p, unsigned long t) {
    if (!is_odd_prime(p) || p < 5)
        throw std::invalid_argument("half_product: need an odd prime p >= 5");
    if (t == 0) throw std::invalid_argument("half_product: t must be >= 1");
    const unsigned long tp = t % p;
    ResiduePoly acc = ResiduePoly::one(p);
    for (unsigned long j = 1; j <= (p - 1) / 2; ++j)
        acc = mul_by_q_integer(acc, j, mulmod(tp, j, p));
    return acc;
}

bool q_integer_identity_check(unsigned long p, unsigned long j) {
    if (j < 1 || j > p - 1)
        throw std::invalid_argument("q_integer_identity_check: need 1 <= j <= p-1");
    RawPoly lhs_factor(p);
    lhs_factor.add_term(0, 1);
    lhs_factor.add_term(j, -1);
    ResiduePoly lhs = mul(reduce(lhs_factor), q_integer(p, j, j));
    RawPoly rhs(p);
    rhs.add_term(0, 1);
    rhs.add_term(mulmod(j % p, j % p, p), -1);
    return lhs == reduce(rhs);
}

ResiduePoly build_product(const QProductSpec& spec) {
    switch (spec.family) {
    case ProductFamily::full_wilson: return wilson_product(spec.prime);
    case ProductFamily::half_product: return half_product(spec.prime, spec.exponent_multiplier);
    }
    throw std::invalid_argument("build_product: unknown family");
}

} // namespace qwilson
