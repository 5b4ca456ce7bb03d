/* Exact arithmetic in Z[q]/(1 + q + ... + q^{p-1}) for an odd prime p.
   Elements are kept in a unique canonical form on the integral basis
   {1, q, ..., q^{p-2}}, so ring equality is coefficient-vector equality. */
#ifndef QWILSON_RESIDUE_POLY_HPP
#define QWILSON_RESIDUE_POLY_HPP

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace qwilson {

class ResiduePoly {
  public:
    // coeffs[i] is the coefficient of q^i; its length must be exactly p-1.
    ResiduePoly(unsigned long p, std::vector<mpz_class> coeffs);

    static ResiduePoly zero(unsigned long p);
    static ResiduePoly one(unsigned long p);
    static ResiduePoly constant(unsigned long p, const mpz_class& c);
    static ResiduePoly monomial(unsigned long p, unsigned long e);

    unsigned long prime() const { return prime_; }
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }
    const mpz_class& coeff(std::size_t i) const { return coeffs_[i]; }
    bool is_zero() const;

    bool operator==(const ResiduePoly&) const = default;

  private:
    unsigned long prime_;
    std::vector<mpz_class> coeffs_;
};

// Unreduced polynomial in q with arbitrary exponents; input form for reduce().
struct RawPoly {
    unsigned long prime = 0;
    std::map<unsigned long, mpz_class> terms; // exponent -> coefficient

    RawPoly() = default;
    explicit RawPoly(unsigned long p) : prime(p) {}
    void add_term(unsigned long exponent, const mpz_class& c);
};

// Canonical representative: fold exponents mod p, then substitute
// q^{p-1} = -(1 + q + ... + q^{p-2}).
ResiduePoly reduce(const RawPoly& raw);

ResiduePoly add(const ResiduePoly& a, const ResiduePoly& b);
ResiduePoly sub(const ResiduePoly& a, const ResiduePoly& b);
ResiduePoly neg(const ResiduePoly& a);

// Schoolbook product with exponent folding; the result is canonical.
ResiduePoly mul(const ResiduePoly& a, const ResiduePoly& b);

ResiduePoly scalar_mul(const ResiduePoly& a, const mpz_class& c);

// Sum of the canonical coefficients mod p, in [0, p-1]. Well defined on
// residue classes because the modulus evaluates to p at q = 1.
unsigned long eval_at_one_mod_p(const ResiduePoly& a);

std::string to_string(const ResiduePoly& a);

inline ResiduePoly operator+(const ResiduePoly& a, const ResiduePoly& b) { return add(a, b); }
inline ResiduePoly operator-(const ResiduePoly& a, const ResiduePoly& b) { return sub(a, b); }
inline ResiduePoly operator-(const ResiduePoly& a) { return neg(a); }
inline ResiduePoly operator*(const ResiduePoly& a, const ResiduePoly& b) { return mul(a, b); }
inline ResiduePoly operator*(const ResiduePoly& a, const mpz_class& c) { return scalar_mul(a, c); }
inline ResiduePoly operator*(const mpz_class& c, const ResiduePoly& a) { return scalar_mul(a, c); }

namespace detail {

// Accumulates shifted copies of canonical elements into the p exponent
// slots 0..p-1, folding indices mod p; take() performs the q^{p-1}
// elimination once at the end. This is the shared inner loop of mul()
// and of the product builders in qnumber/cyclotomic.
class ExponentAccumulator {
  public:
    explicit ExponentAccumulator(unsigned long p);

    void add_term(unsigned long exponent, const mpz_class& c);
    // slot[(i + shift) mod p] += a.coeff(i) for all i.
    void add_shifted(const ResiduePoly& a, unsigned long shift);
    void sub_shifted(const ResiduePoly& a, unsigned long shift);
    void add_shifted_scaled(const ResiduePoly& a, unsigned long shift, const mpz_class& c);

    ResiduePoly take();

  private:
    unsigned long prime_;
    std::vector<mpz_class> slots_; // length p
};

} // namespace detail

} // namespace qwilson

#endif
