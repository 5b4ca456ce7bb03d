/* Legendre symbols, residue-set partitions, the imaginary class number
   h(-p) by its finite character-sum formula plus a reduced-forms counting
   oracle, and exact half-integer arithmetic on units of Q(sqrt(p)). */
#ifndef QWILSON_QUADRATIC_HPP
#define QWILSON_QUADRATIC_HPP

#include <gmpxx.h>

#include <vector>

namespace qwilson {

// Euler-criterion Legendre symbol (a/p) in {-1, 0, +1}; p an odd prime.
int legendre(long long a, unsigned long p);

// Partition of [1, p-1] into quadratic residues Q and non-residues N,
// with the half-interval splits M = [1, (p-1)/2], M' = [(p+1)/2, p-1].
class ResidueSets {
  public:
    explicit ResidueSets(unsigned long p);

    unsigned long prime() const { return prime_; }
    const std::vector<unsigned long>& residues() const { return residues_; }
    const std::vector<unsigned long>& nonresidues() const { return nonresidues_; }
    bool is_residue(unsigned long k) const;

    unsigned long half() const { return (prime_ - 1) / 2; } // upper end of M

    unsigned long lower_nonresidue_count() const;             // |M  cap N|
    std::vector<unsigned long> upper_residues() const;        // M' cap Q

  private:
    unsigned long prime_;
    std::vector<unsigned long> residues_, nonresidues_;
    std::vector<char> table_; // table_[k] == 1 iff k is a nonzero square mod p
};

ResidueSets residue_sets(unsigned long p);

// h(-p) for a prime p ≡ 3 (mod 4), p > 3, from the finite sum
//   h(-p) = (2 - (2/p))^{-1} * sum_{k=1}^{(p-1)/2} (k/p).
// Throws if the division is not exact or the result is not positive.
unsigned long class_number_imag(unsigned long p);

// Independent oracle: number of reduced primitive binary quadratic forms
// of discriminant -p. Same preconditions as class_number_imag.
unsigned long class_number_imag_forms(unsigned long p);

// (x + y*sqrt(p))/2 with x, y > 0 of equal parity and x^2 - p*y^2 = 4*norm;
// represents the power-th power of the fundamental unit.
struct PellUnit {
    unsigned long prime = 0;
    mpz_class x, y;
    int norm = 0; // +1 or -1
    unsigned long power = 1;
};

// Least unit > 1 of the ring of integers of Q(sqrt(p)), p ≡ 1 (mod 4),
// computed from the continued fraction of (1 + sqrt(p))/2.
PellUnit fundamental_unit(unsigned long p);

PellUnit unit_mul(const PellUnit& a, const PellUnit& b);
PellUnit unit_power(const PellUnit& u, unsigned long k);

// A = (x+y)/2, B = y with eps^{2h} = (x + y*sqrt(p))/2, and
// C = (c+d)/2, D = d with eps^{h}  = (c + d*sqrt(p))/2.
struct TheoremCoefficients {
    mpz_class A, B, C, D;
};

// Requires h odd and positive, and norm(eps^h) == -1; both are enforced.
TheoremCoefficients theorem_coefficients(unsigned long p, unsigned long h);

} // namespace qwilson

#endif
