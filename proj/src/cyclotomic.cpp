#include "qwilson/cyclotomic.hpp"

#include <mpfr.h>

#include <cmath>
#include <stdexcept>

#include "qwilson/numeric.hpp"
#include "qwilson/quadratic.hpp"

namespace qwilson {

CyclotomicElement root_product(unsigned long p, const std::vector<unsigned long>& exponents) {
    if (!is_odd_prime(p)) throw std::invalid_argument("root_product: modulus must be an odd prime");
    std::vector<char> seen(p, 0);
    for (unsigned long e : exponents) {
        if (e < 1 || e > p - 1)
            throw std::invalid_argument("root_product: exponents must lie in [1, p-1]");
        if (seen[e]) throw std::invalid_argument("root_product: duplicate exponent");
        seen[e] = 1;
    }
    ResiduePoly acc = ResiduePoly::one(p);
    for (unsigned long e : exponents) {
        detail::ExponentAccumulator next(p);
        next.add_shifted(acc, 0);
        next.sub_shifted(acc, e);
        acc = next.take();
    }
    return acc;
}

CyclotomicElement half_range_root_product(unsigned long p, unsigned long r) {
    if (!is_odd_prime(p)) throw std::invalid_argument("half_range_root_product: bad modulus");
    r %= p;
    if (r == 0) throw std::domain_error("half_range_root_product: r divisible by p");
    std::vector<unsigned long> exps;
    exps.reserve((p - 1) / 2);
    unsigned long e = 0;
    for (unsigned long j = 1; j <= (p - 1) / 2; ++j) {
        e += r;
        if (e >= p) e -= p;
        exps.push_back(e);
    }
    return root_product(p, exps);
}

CyclotomicElement gauss_sum(unsigned long p) {
    if (!is_odd_prime(p)) throw std::invalid_argument("gauss_sum: bad modulus");
    if (p % 4 != 1) throw std::domain_error("gauss_sum: requires p ≡ 1 (mod 4)");
    ResidueSets rs(p);
    detail::ExponentAccumulator acc(p);
    for (unsigned long j = 1; j < p; ++j) acc.add_term(j, rs.is_residue(j) ? 1 : -1);
    return acc.take();
}

CyclotomicElement automorphism(const CyclotomicElement& a, unsigned long s) {
    const unsigned long p = a.prime();
    s %= p;
    if (s == 0) throw std::domain_error("automorphism: s divisible by p");
    detail::ExponentAccumulator acc(p);
    for (unsigned long i = 0; i < p - 1; ++i) {
        if (mpz_sgn(a.coeff(i).get_mpz_t()) == 0) continue;
        acc.add_term(mulmod(i, s, p), a.coeff(i));
    }
    return acc.take();
}

std::vector<IdentityCheckResult> proof_identity_suite(unsigned long p) {
    if (!is_odd_prime(p) || p < 5)
        throw std::invalid_argument("proof_identity_suite: need an odd prime p >= 5");
    const bool is3mod4 = (p % 4 == 3);
    ResidueSets rs(p);
    CyclotomicElement over_Q = root_product(p, rs.residues());
    CyclotomicElement over_N = root_product(p, rs.nonresidues());

    std::vector<IdentityCheckResult> out;
    auto push = [&out](const char* name, bool applicable, bool pass) {
        out.push_back({name, applicable, applicable && pass});
    };

    push("identity-uv", true, mul(over_Q, over_N) == ResiduePoly::constant(p, p));

    // p ≡ 3 (mod 4) side.
    {
        bool u_neg_v = false, qsum = false, sum16 = false, hmod4 = false, u_over_w = false;
        if (is3mod4) {
            u_neg_v = (over_Q == neg(over_N));

            unsigned long qs = 0;
            for (unsigned long k : rs.residues()) qs = (qs + k) % p;
            qsum = (qs == 0);

            unsigned long s16 = 0;
            for (unsigned long k : rs.upper_residues()) s16 = (s16 + mulmod(16 % p, k, p)) % p;
            sum16 = (s16 == 1 % p);

            unsigned long h = class_number_imag(p);
            // h ≡ -1 - 2|M cap N| (mod 4)
            long long want = -1 - 2 * static_cast<long long>(rs.lower_nonresidue_count());
            hmod4 = (static_cast<long long>(h % 4) == ((want % 4) + 4) % 4);

            CyclotomicElement w = half_range_root_product(p, 16);
            ResiduePoly signed_zeta_w = mul(w, ResiduePoly::monomial(p, 1));
            if (((h + 1) / 2) % 2 == 1) signed_zeta_w = neg(signed_zeta_w); // (-1)^{(1+h)/2}
            u_over_w = (over_Q == signed_zeta_w);
        }
        push("identity-u-neg-v", is3mod4, u_neg_v);
        push("identity-qsum", is3mod4, qsum);
        push("identity-mprime-16k", is3mod4, sum16);
        push("identity-hminus-mod4", is3mod4, hmod4);
        push("identity-u-over-w", is3mod4, u_over_w);
    }

    // p ≡ 1 (mod 4) side.
    {
        bool gsq = false, gfix = false, pi4 = false, pi16 = false, signs = false;
        if (!is3mod4) {
            CyclotomicElement g = gauss_sum(p);
            gsq = (mul(g, g) == ResiduePoly::constant(p, p));
            gfix = (automorphism(g, 4) == g);

            unsigned long e4 = static_cast<unsigned long>(
                ((static_cast<unsigned __int128>(p) * p - 1) / 4) % p);
            pi4 = (half_range_root_product(p, 4) == mul(g, ResiduePoly::monomial(p, e4)));
            pi16 = (half_range_root_product(p, 16) == mul(g, ResiduePoly::monomial(p, p - 1)));

            // #{1 <= j <= (p-1)/2 : sin(4 pi j / p) < 0} = #{j : p/4 < j < p/2}.
            unsigned long count = (p - 1) / 2 - p / 4;
            signs = (count == (p - 1) / 4);
        }
        push("identity-gauss-square", !is3mod4, gsq);
        push("identity-gauss-sigma4", !is3mod4, gfix);
        push("identity-pi4", !is3mod4, pi4);
        push("identity-pi16", !is3mod4, pi16);
        push("identity-sign-count", !is3mod4, signs);
    }
    return out;
}

unsigned long class_number_real_exact(unsigned long p) {
    if (!is_odd_prime(p) || p % 4 != 1)
        throw std::domain_error("class_number_real_exact: requires a prime p ≡ 1 (mod 4)");
    ResidueSets rs(p);
    CyclotomicElement v2 = scalar_mul(root_product(p, rs.nonresidues()), 2);
    CyclotomicElement sqrt_p = gauss_sum(p);

    mpz_class max_abs = 0;
    for (const auto& c : v2.coeffs())
        if (mpz_cmpabs(c.get_mpz_t(), max_abs.get_mpz_t()) > 0) max_abs = abs(c);
    // A match forces 2*c == -coeff(2V) at any non-residue exponent, so once
    // c clears every coefficient of 2V no larger h can work.
    mpz_class bound = 2 * max_abs + p;

    PellUnit eps = fundamental_unit(p);
    PellUnit square = unit_mul(eps, eps);
    PellUnit cur = eps; // eps^h for odd h
    for (unsigned long h = 1;; h += 2) {
        ResiduePoly rhs = add(ResiduePoly::constant(p, cur.y * p), scalar_mul(sqrt_p, cur.x));
        if (v2 == rhs) return h;
        if (cur.x > bound)
            throw std::runtime_error("class_number_real_exact: no odd h matched within the "
                                     "coefficient bound (p=" + std::to_string(p) + ")");
        cur = unit_mul(cur, square);
    }
}

namespace {

// Minimal RAII wrapper over mpfr_t for the numeric cross-check path.
class Real {
  public:
    explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
    Real(const Real&) = delete;
    Real& operator=(const Real&) = delete;
    ~Real() { mpfr_clear(v_); }
    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

  private:
    mpfr_t v_;
};

} // namespace

unsigned long class_number_real_numeric(unsigned long p) {
    if (!is_odd_prime(p) || p % 4 != 1)
        throw std::domain_error("class_number_real_numeric: requires a prime p ≡ 1 (mod 4)");
    ResidueSets rs(p);
    PellUnit eps = fundamental_unit(p);

    for (int attempt = 0; attempt < 4; ++attempt) {
        const mpfr_prec_t prec = static_cast<mpfr_prec_t>((64 + 4 * p) << attempt);
        Real pi(prec), term(prec), v(prec), sqrtp(prec), eps_r(prec), h_r(prec), t(prec);

        mpfr_const_pi(pi.get(), MPFR_RNDN);
        mpfr_set_ui(v.get(), 1, MPFR_RNDN);
        for (unsigned long k : rs.nonresidues()) {
            mpfr_mul_ui(term.get(), pi.get(), k, MPFR_RNDN);
            mpfr_div_ui(term.get(), term.get(), p, MPFR_RNDN);
            mpfr_sin(term.get(), term.get(), MPFR_RNDN);
            mpfr_mul_ui(term.get(), term.get(), 2, MPFR_RNDN);
            mpfr_mul(v.get(), v.get(), term.get(), MPFR_RNDN);
        }
        mpfr_sqrt_ui(sqrtp.get(), p, MPFR_RNDN);

        // eps = (x + y*sqrt(p)) / 2
        mpfr_set_z(t.get(), eps.y.get_mpz_t(), MPFR_RNDN);
        mpfr_mul(eps_r.get(), t.get(), sqrtp.get(), MPFR_RNDN);
        mpfr_set_z(t.get(), eps.x.get_mpz_t(), MPFR_RNDN);
        mpfr_add(eps_r.get(), eps_r.get(), t.get(), MPFR_RNDN);
        mpfr_div_ui(eps_r.get(), eps_r.get(), 2, MPFR_RNDN);

        // h = log(V / sqrt(p)) / log(eps)
        mpfr_div(h_r.get(), v.get(), sqrtp.get(), MPFR_RNDN);
        mpfr_log(h_r.get(), h_r.get(), MPFR_RNDN);
        mpfr_log(t.get(), eps_r.get(), MPFR_RNDN);
        mpfr_div(h_r.get(), h_r.get(), t.get(), MPFR_RNDN);

        long h = mpfr_get_si(h_r.get(), MPFR_RNDN);
        mpfr_sub_si(t.get(), h_r.get(), h, MPFR_RNDN);
        double residue = std::fabs(mpfr_get_d(t.get(), MPFR_RNDN));
        if (residue <= 1e-6) {
            if (h < 1)
                throw std::logic_error("class_number_real_numeric: nonpositive class number");
            return static_cast<unsigned long>(h);
        }
    }
    throw std::runtime_error("class_number_real_numeric: rounding residue stayed above 1e-6");
}

} // namespace qwilson
