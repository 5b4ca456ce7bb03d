#include "qwilson/residue_poly.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

#include "qwilson/numeric.hpp"

namespace qwilson {

static void check_modulus(unsigned long p) {
    if (!is_odd_prime(p))
        throw std::invalid_argument("modulus must be an odd prime, got " + std::to_string(p));
}

ResiduePoly::ResiduePoly(unsigned long p, std::vector<mpz_class> coeffs)
    : prime_(p), coeffs_(std::move(coeffs)) {
    check_modulus(p);
    if (coeffs_.size() != p - 1)
        throw std::invalid_argument("canonical coefficient vector must have length p-1");
}

ResiduePoly ResiduePoly::zero(unsigned long p) {
    check_modulus(p);
    return ResiduePoly(p, std::vector<mpz_class>(p - 1));
}

ResiduePoly ResiduePoly::one(unsigned long p) { return constant(p, 1); }

ResiduePoly ResiduePoly::constant(unsigned long p, const mpz_class& c) {
    check_modulus(p);
    std::vector<mpz_class> v(p - 1);
    v[0] = c;
    return ResiduePoly(p, std::move(v));
}

ResiduePoly ResiduePoly::monomial(unsigned long p, unsigned long e) {
    check_modulus(p);
    std::vector<mpz_class> v(p - 1);
    e %= p;
    if (e == p - 1) {
        for (auto& c : v) c = -1;
    } else {
        v[e] = 1;
    }
    return ResiduePoly(p, std::move(v));
}

bool ResiduePoly::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

void RawPoly::add_term(unsigned long exponent, const mpz_class& c) {
    if (c == 0) return;
    terms[exponent] += c;
}

namespace detail {

ExponentAccumulator::ExponentAccumulator(unsigned long p) : prime_(p), slots_(p) {
    check_modulus(p);
}

void ExponentAccumulator::add_term(unsigned long exponent, const mpz_class& c) {
    slots_[exponent % prime_] += c;
}

void ExponentAccumulator::add_shifted(const ResiduePoly& a, unsigned long shift) {
    const unsigned long p = prime_;
    shift %= p;
    const auto& ac = a.coeffs();
    for (unsigned long i = 0; i < p - 1; ++i) {
        if (mpz_sgn(ac[i].get_mpz_t()) == 0) continue;
        unsigned long k = i + shift;
        if (k >= p) k -= p;
        mpz_add(slots_[k].get_mpz_t(), slots_[k].get_mpz_t(), ac[i].get_mpz_t());
    }
}

void ExponentAccumulator::sub_shifted(const ResiduePoly& a, unsigned long shift) {
    const unsigned long p = prime_;
    shift %= p;
    const auto& ac = a.coeffs();
    for (unsigned long i = 0; i < p - 1; ++i) {
        if (mpz_sgn(ac[i].get_mpz_t()) == 0) continue;
        unsigned long k = i + shift;
        if (k >= p) k -= p;
        mpz_sub(slots_[k].get_mpz_t(), slots_[k].get_mpz_t(), ac[i].get_mpz_t());
    }
}

void ExponentAccumulator::add_shifted_scaled(const ResiduePoly& a, unsigned long shift,
                                             const mpz_class& c) {
    const unsigned long p = prime_;
    shift %= p;
    const auto& ac = a.coeffs();
    for (unsigned long i = 0; i < p - 1; ++i) {
        if (mpz_sgn(ac[i].get_mpz_t()) == 0) continue;
        unsigned long k = i + shift;
        if (k >= p) k -= p;
        mpz_addmul(slots_[k].get_mpz_t(), ac[i].get_mpz_t(), c.get_mpz_t());
    }
}

ResiduePoly ExponentAccumulator::take() {
    const unsigned long p = prime_;
    std::vector<mpz_class> out(p - 1);
    const mpz_class& top = slots_[p - 1];
    if (mpz_sgn(top.get_mpz_t()) == 0) {
        for (unsigned long i = 0; i < p - 1; ++i) out[i] = std::move(slots_[i]);
    } else {
        for (unsigned long i = 0; i < p - 1; ++i) {
            mpz_sub(slots_[i].get_mpz_t(), slots_[i].get_mpz_t(), top.get_mpz_t());
            out[i] = std::move(slots_[i]);
        }
    }
    ResiduePoly r(p, std::move(out));
    slots_.assign(p, mpz_class());
    return r;
}

} // namespace detail

ResiduePoly reduce(const RawPoly& raw) {
    check_modulus(raw.prime);
    detail::ExponentAccumulator acc(raw.prime);
    for (const auto& [e, c] : raw.terms) acc.add_term(e, c);
    return acc.take();
}

static void check_same_prime(const ResiduePoly& a, const ResiduePoly& b) {
    if (a.prime() != b.prime())
        throw std::invalid_argument("mismatched moduli: " + std::to_string(a.prime()) +
                                    " vs " + std::to_string(b.prime()));
}

ResiduePoly add(const ResiduePoly& a, const ResiduePoly& b) {
    check_same_prime(a, b);
    std::vector<mpz_class> v(a.coeffs());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += b.coeff(i);
    return ResiduePoly(a.prime(), std::move(v));
}

ResiduePoly sub(const ResiduePoly& a, const ResiduePoly& b) {
    check_same_prime(a, b);
    std::vector<mpz_class> v(a.coeffs());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= b.coeff(i);
    return ResiduePoly(a.prime(), std::move(v));
}

ResiduePoly neg(const ResiduePoly& a) {
    std::vector<mpz_class> v(a.coeffs());
    for (auto& c : v) c = -c;
    return ResiduePoly(a.prime(), std::move(v));
}

ResiduePoly mul(const ResiduePoly& a, const ResiduePoly& b) {
    check_same_prime(a, b);
    detail::ExponentAccumulator acc(a.prime());
    const auto& bc = b.coeffs();
    for (unsigned long j = 0; j < bc.size(); ++j) {
        if (mpz_sgn(bc[j].get_mpz_t()) == 0) continue;
        acc.add_shifted_scaled(a, j, bc[j]);
    }
    return acc.take();
}

ResiduePoly scalar_mul(const ResiduePoly& a, const mpz_class& c) {
    std::vector<mpz_class> v(a.coeffs());
    for (auto& x : v) x *= c;
    return ResiduePoly(a.prime(), std::move(v));
}

unsigned long eval_at_one_mod_p(const ResiduePoly& a) {
    mpz_class s = 0;
    for (const auto& c : a.coeffs()) s += c;
    return mpz_fdiv_ui(s.get_mpz_t(), a.prime());
}

std::string to_string(const ResiduePoly& a) {
    std::ostringstream os;
    bool first = true;
    const auto& cs = a.coeffs();
    for (std::size_t i = 0; i < cs.size(); ++i) {
        int sgn = mpz_sgn(cs[i].get_mpz_t());
        if (sgn == 0) continue;
        mpz_class mag = abs(cs[i]);
        if (first) {
            if (sgn < 0) os << "-";
            first = false;
        } else {
            os << (sgn < 0 ? " - " : " + ");
        }
        bool unit_coeff = (mag == 1);
        if (i == 0) {
            os << mag.get_str();
        } else {
            if (!unit_coeff) os << mag.get_str() << "*";
            os << "q";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

} // namespace qwilson
