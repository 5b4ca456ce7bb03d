/* Test-only oracles and generators, shared by the unit suites and the
   acceptance binary. Kept independent of the library's reduction path. */
#ifndef QWILSON_TESTS_ORACLES_HPP
#define QWILSON_TESTS_ORACLES_HPP

#include <random>
#include <vector>

#include "qwilson/residue_poly.hpp"

namespace qwilson::testing {

// Classical long division by the monic modulus 1 + q + ... + q^{p-1}
// over the integers.
struct OracleDivision {
    std::vector<mpz_class> quotient;
    std::vector<mpz_class> remainder; // length p-1
};

inline OracleDivision divide_by_modulus(const RawPoly& raw) {
    const unsigned long p = raw.prime;
    unsigned long deg = 0;
    for (const auto& [e, c] : raw.terms)
        if (c != 0 && e > deg) deg = e;
    std::vector<mpz_class> work(deg + 1);
    for (const auto& [e, c] : raw.terms) work[e] += c;

    OracleDivision out;
    out.quotient.assign(deg >= p - 1 ? deg - (p - 1) + 1 : 1, mpz_class(0));
    for (unsigned long i = deg; i >= p - 1; --i) {
        mpz_class c = work[i];
        if (c != 0) {
            out.quotient[i - (p - 1)] += c;
            for (unsigned long k = 0; k < p; ++k) work[i - (p - 1) + k] -= c;
        }
        if (i == p - 1) break;
    }
    out.remainder.assign(p - 1, mpz_class(0));
    for (unsigned long i = 0; i < p - 1 && i <= deg; ++i) out.remainder[i] = work[i];
    return out;
}

// quotient * modulus + remainder as a dense coefficient vector.
inline std::vector<mpz_class> reconstruct(const OracleDivision& d, unsigned long p) {
    std::vector<mpz_class> out(d.quotient.size() + p);
    for (std::size_t i = 0; i < d.quotient.size(); ++i)
        for (unsigned long k = 0; k < p; ++k) out[i + k] += d.quotient[i];
    for (std::size_t i = 0; i < d.remainder.size(); ++i) out[i] += d.remainder[i];
    return out;
}

inline RawPoly random_raw(unsigned long p, std::mt19937_64& rng) {
    std::uniform_int_distribution<unsigned long> exp_dist(0, 4 * p);
    std::uniform_int_distribution<long> coeff_dist(-50, 50);
    std::uniform_int_distribution<int> nterms(1, 12);
    RawPoly raw(p);
    const int n = nterms(rng);
    for (int i = 0; i < n; ++i) raw.add_term(exp_dist(rng), coeff_dist(rng));
    return raw;
}

inline ResiduePoly random_canonical(unsigned long p, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> coeff_dist(-100, 100);
    std::vector<mpz_class> v(p - 1);
    for (auto& c : v) c = coeff_dist(rng);
    return ResiduePoly(p, std::move(v));
}

// Dense view of a raw polynomial, sized to match reconstruct().
inline std::vector<mpz_class> dense_of(const RawPoly& raw, std::size_t size) {
    std::vector<mpz_class> out(size);
    for (const auto& [e, c] : raw.terms) {
        if (c == 0) continue; // canceled terms may sit above the true degree
        out.at(e) += c;
    }
    return out;
}

} // namespace qwilson::testing

#endif
