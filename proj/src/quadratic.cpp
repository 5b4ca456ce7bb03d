#include "qwilson/quadratic.hpp"

#include <cmath>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "qwilson/numeric.hpp"

namespace qwilson {

static void check_odd_prime(unsigned long p, const char* who) {
    if (!is_odd_prime(p))
        throw std::invalid_argument(std::string(who) + ": modulus must be an odd prime");
}

int legendre(long long a, unsigned long p) {
    check_odd_prime(p, "legendre");
    long long r = a % static_cast<long long>(p);
    if (r < 0) r += static_cast<long long>(p);
    if (r == 0) return 0;
    unsigned long e = powmod(static_cast<unsigned long>(r), (p - 1) / 2, p);
    if (e == 1) return 1;
    if (e == p - 1) return -1;
    throw std::logic_error("legendre: Euler criterion returned a non-unit");
}

ResidueSets::ResidueSets(unsigned long p) : prime_(p), table_(p, 0) {
    check_odd_prime(p, "residue_sets");
    for (unsigned long k = 1; k < p; ++k) table_[mulmod(k, k, p)] = 1;
    for (unsigned long k = 1; k < p; ++k)
        (table_[k] ? residues_ : nonresidues_).push_back(k);
    if (residues_.size() != (p - 1) / 2 || nonresidues_.size() != (p - 1) / 2)
        throw std::logic_error("residue_sets: partition sizes are off");
}

bool ResidueSets::is_residue(unsigned long k) const {
    k %= prime_;
    return table_[k] != 0;
}

unsigned long ResidueSets::lower_nonresidue_count() const {
    unsigned long n = 0;
    for (unsigned long k = 1; k <= half(); ++k)
        if (!table_[k]) ++n;
    return n;
}

std::vector<unsigned long> ResidueSets::upper_residues() const {
    std::vector<unsigned long> out;
    for (unsigned long k = half() + 1; k < prime_; ++k)
        if (table_[k]) out.push_back(k);
    return out;
}

ResidueSets residue_sets(unsigned long p) { return ResidueSets(p); }

static void check_3_mod_4(unsigned long p, const char* who) {
    check_odd_prime(p, who);
    if (p % 4 != 3 || p <= 3)
        throw std::domain_error(std::string(who) + ": requires a prime p ≡ 3 (mod 4), p > 3");
}

unsigned long class_number_imag(unsigned long p) {
    check_3_mod_4(p, "class_number_imag");
    long long sum = 0;
    for (unsigned long k = 1; k <= (p - 1) / 2; ++k) sum += legendre(static_cast<long long>(k), p);
    long long den = 2 - legendre(2, p);
    if (den <= 0 || sum % den != 0)
        throw std::logic_error("class_number_imag: character sum not divisible by 2-(2/p)");
    long long h = sum / den;
    if (h <= 0) throw std::logic_error("class_number_imag: nonpositive value");
    return static_cast<unsigned long>(h);
}

unsigned long class_number_imag_forms(unsigned long p) {
    check_3_mod_4(p, "class_number_imag_forms");
    // Reduced forms (a, b, c) of discriminant -p: b^2 - 4ac = -p, |b| <= a <= c,
    // with b >= 0 whenever |b| == a or a == c. The discriminant is odd, so b is odd.
    unsigned long count = 0;
    for (unsigned long a = 1; 3 * a * a <= p; ++a) {
        for (unsigned long bb = 1; bb <= a; bb += 2) {
            unsigned long t = bb * bb + p;
            if (t % (4 * a) != 0) continue;
            unsigned long c = t / (4 * a);
            if (c < a) continue;
            if (std::gcd(std::gcd(a, bb), c) != 1) continue;
            ++count;                          // (a, +bb, c)
            if (bb != a && a != c) ++count;   // (a, -bb, c) is distinct and reduced
        }
    }
    return count;
}

static void validate_unit(const PellUnit& u, const char* who) {
    if (u.norm != 1 && u.norm != -1)
        throw std::logic_error(std::string(who) + ": norm must be +1 or -1");
    if (mpz_sgn(u.x.get_mpz_t()) <= 0 || mpz_sgn(u.y.get_mpz_t()) <= 0)
        throw std::logic_error(std::string(who) + ": unit components must be positive");
    if (mpz_odd_p(u.x.get_mpz_t()) != mpz_odd_p(u.y.get_mpz_t()))
        throw std::logic_error(std::string(who) + ": x and y must have equal parity");
    mpz_class lhs = u.x * u.x - mpz_class(u.prime) * u.y * u.y;
    if (lhs != 4 * u.norm)
        throw std::logic_error(std::string(who) + ": x^2 - p*y^2 != 4*norm");
}

static long long floor_div_ll(long long a, long long b) {
    long long q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

static unsigned long isqrt_ul(unsigned long n) {
    unsigned long r = static_cast<unsigned long>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

PellUnit fundamental_unit(unsigned long p) {
    check_odd_prime(p, "fundamental_unit");
    if (p % 4 != 1)
        throw std::domain_error("fundamental_unit: requires a prime p ≡ 1 (mod 4)");

    // Continued fraction of w = (1 + sqrt(p))/2. Complete quotients are
    // (P + sqrt(p))/Q; the first repeated (P, Q) state closes a period and
    // yields an integer Moebius map fixing w, whose bottom row (c, d) gives
    // the fundamental automorph eps = c*w + d.
    const long long s = static_cast<long long>(isqrt_ul(p));
    long long P = 1, Q = 2;

    mpz_class h1 = 1, h2 = 0; // numerator convergents h_{i-1}, h_{i-2}
    mpz_class k1 = 0, k2 = 1; // denominator convergents k_{i-1}, k_{i-2}

    struct Snapshot {
        mpz_class h1, h2, k1, k2;
    };
    std::map<std::pair<long long, long long>, Snapshot> seen;

    for (unsigned long iter = 0; iter < 1000000; ++iter) {
        auto state = std::make_pair(P, Q);
        auto it = seen.find(state);
        if (it != seen.end()) {
            const Snapshot& m = it->second;
            mpz_class det = m.h1 * m.k2 - m.h2 * m.k1; // = +-1
            if (det != 1 && det != -1)
                throw std::logic_error("fundamental_unit: convergent determinant not a unit");
            // T = M_n * M_m^{-1}; M_m^{-1} = det * [[k2, -h2], [-k1, h1]].
            mpz_class a = det * (h1 * m.k2 - h2 * m.k1);
            mpz_class b = det * (h2 * m.h1 - h1 * m.h2);
            mpz_class c = det * (k1 * m.k2 - k2 * m.k1);
            mpz_class d = det * (k2 * m.h1 - k1 * m.h2);
            if (a != c + d || 4 * b != c * static_cast<long>(p - 1))
                throw std::logic_error("fundamental_unit: fixed-point relation violated");
            PellUnit u;
            u.prime = p;
            u.x = abs(2 * d + c);
            u.y = abs(c);
            if (u.y == 0) throw std::logic_error("fundamental_unit: degenerate period");
            mpz_class nrm = (u.x * u.x - mpz_class(p) * u.y * u.y) / 4;
            u.norm = (nrm == 1) ? 1 : -1;
            u.power = 1;
            validate_unit(u, "fundamental_unit");
            return u;
        }
        seen.emplace(state, Snapshot{h1, h2, k1, k2});

        long long a_i = (Q > 0) ? floor_div_ll(P + s, Q) : floor_div_ll(-P - s - 1, -Q);
        long long Pn = a_i * Q - P;
        long long Qn = (static_cast<long long>(p) - Pn * Pn) / Q;
        if (Qn == 0) throw std::logic_error("fundamental_unit: p is a perfect square?");

        const mpz_class ai_z = static_cast<long>(a_i);
        mpz_class hn = ai_z * h1 + h2;
        mpz_class kn = ai_z * k1 + k2;
        h2 = std::move(h1); h1 = std::move(hn);
        k2 = std::move(k1); k1 = std::move(kn);
        P = Pn; Q = Qn;
    }
    throw std::runtime_error("fundamental_unit: period not found within iteration cap");
}

PellUnit unit_mul(const PellUnit& a, const PellUnit& b) {
    if (a.prime != b.prime) throw std::invalid_argument("unit_mul: mismatched primes");
    PellUnit r;
    r.prime = a.prime;
    mpz_class x = a.x * b.x + mpz_class(a.prime) * a.y * b.y;
    mpz_class y = a.x * b.y + b.x * a.y;
    if (mpz_odd_p(x.get_mpz_t()) || mpz_odd_p(y.get_mpz_t()))
        throw std::logic_error("unit_mul: half-integer product is not integral");
    r.x = x / 2;
    r.y = y / 2;
    r.norm = a.norm * b.norm;
    r.power = a.power + b.power;
    validate_unit(r, "unit_mul");
    return r;
}

PellUnit unit_power(const PellUnit& u, unsigned long k) {
    if (k == 0) throw std::invalid_argument("unit_power: k must be >= 1");
    validate_unit(u, "unit_power");
    PellUnit base = u;
    std::optional<PellUnit> result;
    while (k > 0) {
        if (k & 1UL) result = result ? unit_mul(*result, base) : base;
        k >>= 1;
        if (k > 0) base = unit_mul(base, base);
    }
    return *result;
}

TheoremCoefficients theorem_coefficients(unsigned long p, unsigned long h) {
    if (h == 0 || h % 2 == 0)
        throw std::domain_error("theorem_coefficients: h must be odd and positive");
    PellUnit eps = fundamental_unit(p);
    PellUnit eh = unit_power(eps, h);
    if (eh.norm != -1)
        throw std::domain_error("theorem_coefficients: norm of eps^h is +1; "
                                "expected -1 for an odd power of the fundamental unit");
    PellUnit e2h = unit_mul(eh, eh);
    TheoremCoefficients tc;
    mpz_class xy = e2h.x + e2h.y;
    mpz_class cd = eh.x + eh.y;
    if (mpz_odd_p(xy.get_mpz_t()) || mpz_odd_p(cd.get_mpz_t()))
        throw std::logic_error("theorem_coefficients: parity violation in unit components");
    tc.A = xy / 2;
    tc.B = e2h.y;
    tc.C = cd / 2;
    tc.D = eh.y;
    return tc;
}

} // namespace qwilson
