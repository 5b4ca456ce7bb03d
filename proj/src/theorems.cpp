#include "qwilson/theorems.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdio>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "qwilson/numeric.hpp"

namespace qwilson {

std::string to_string(CheckStatus s) {
    switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
    case CheckStatus::inapplicable: return "inapplicable";
    }
    throw std::logic_error("to_string: bad CheckStatus");
}

CheckStatus check_status_from_string(std::string_view s) {
    if (s == "pass") return CheckStatus::pass;
    if (s == "fail") return CheckStatus::fail;
    if (s == "skipped") return CheckStatus::skipped;
    if (s == "inapplicable") return CheckStatus::inapplicable;
    throw std::invalid_argument("unknown check status: " + std::string(s));
}

bool VerificationReport::all_passed() const {
    for (const auto& c : checks)
        if (c.status == CheckStatus::fail || c.status == CheckStatus::skipped) return false;
    return true;
}

CheckSelection CheckSelection::all() {
    CheckSelection s;
    s.theorem4_stated = true;
    return s;
}

CheckSelection CheckSelection::none() {
    CheckSelection s;
    s.theorem1 = s.theorem2 = s.theorem3 = s.theorem4 = false;
    s.theorem4_stated = s.corollaries = s.proof_identities = false;
    return s;
}

bool CheckSelection::any() const {
    return theorem1 || theorem2 || theorem3 || theorem4 || theorem4_stated || corollaries ||
           proof_identities;
}

CheckSelection CheckSelection::parse(std::string_view csv) {
    CheckSelection s = CheckSelection::none();
    std::string token;
    std::istringstream in{std::string(csv)};
    while (std::getline(in, token, ',')) {
        if (token.empty()) continue;
        if (token == "1") s.theorem1 = true;
        else if (token == "2") s.theorem2 = true;
        else if (token == "3") s.theorem3 = true;
        else if (token == "4") s.theorem4 = true;
        else if (token == "4-stated") s.theorem4_stated = true;
        else if (token == "corollaries") s.corollaries = true;
        else if (token == "proof-identities") s.proof_identities = true;
        else throw std::invalid_argument("unknown theorem selector: '" + token + "'");
    }
    if (!s.any()) throw std::invalid_argument("empty theorem selection");
    return s;
}

std::string poly_digest(const ResiduePoly& a) {
    std::ostringstream head, all;
    unsigned shown = 0, nonzero = 0;
    const auto& cs = a.coeffs();
    for (std::size_t i = 0; i < cs.size(); ++i) {
        all << i << ':' << cs[i].get_str() << ';';
        if (mpz_sgn(cs[i].get_mpz_t()) == 0) continue;
        ++nonzero;
        if (shown < 16) {
            if (shown > 0) head << ' ';
            head << "q^" << i << ':' << cs[i].get_str();
            ++shown;
        }
    }
    std::ostringstream out;
    out << "nonzero=" << nonzero;
    if (nonzero > 0) out << ' ' << head.str();
    if (nonzero > shown) out << " ...";
    char hex[32];
    std::snprintf(hex, sizeof hex, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(all.str())));
    out << " fnv1a64=" << hex;
    return out.str();
}

ResiduePoly rhs_theorem3(unsigned long p, const TheoremCoefficients& tc, const ResidueSets& rs) {
    RawPoly r(p);
    r.add_term(0, tc.A);
    for (unsigned long j : rs.nonresidues()) r.add_term(j, tc.B);
    return reduce(r);
}

ResiduePoly rhs_theorem4(unsigned long p, const TheoremCoefficients& tc, const ResidueSets& rs) {
    RawPoly r(p);
    r.add_term(1, -tc.C);
    for (unsigned long j : rs.nonresidues()) r.add_term(j + 1, -tc.D);
    return reduce(r);
}

static void require_1_mod_4(unsigned long p, const char* who) {
    if (!is_odd_prime(p) || p % 4 != 1)
        throw std::domain_error(std::string(who) + ": requires a prime p ≡ 1 (mod 4)");
}

ResiduePoly rhs_theorem3(unsigned long p) {
    require_1_mod_4(p, "rhs_theorem3");
    TheoremCoefficients tc = theorem_coefficients(p, class_number_real_exact(p));
    return rhs_theorem3(p, tc, residue_sets(p));
}

ResiduePoly rhs_theorem4(unsigned long p) {
    require_1_mod_4(p, "rhs_theorem4");
    TheoremCoefficients tc = theorem_coefficients(p, class_number_real_exact(p));
    return rhs_theorem4(p, tc, residue_sets(p));
}

namespace {

// Lazily computed per-prime values shared by all checks of one report.
struct PrimeContext {
    explicit PrimeContext(unsigned long prime) : p(prime) {}

    unsigned long p;

    std::optional<ResidueSets> sets_;
    std::optional<ResiduePoly> wilson_, half16_, half1_;
    std::optional<unsigned long> h_minus_, h_minus_forms_, h_real_;
    std::optional<PellUnit> eps_;
    std::optional<TheoremCoefficients> coeffs_;
    std::optional<std::vector<IdentityCheckResult>> identities_;

    const ResidueSets& sets() {
        if (!sets_) sets_.emplace(p);
        return *sets_;
    }
    const ResiduePoly& wilson() {
        if (!wilson_) wilson_ = wilson_product(p);
        return *wilson_;
    }
    const ResiduePoly& half16() {
        if (!half16_) half16_ = half_product(p, 16);
        return *half16_;
    }
    const ResiduePoly& half1() {
        if (!half1_) half1_ = half_product(p, 1);
        return *half1_;
    }
    unsigned long h_minus() {
        if (!h_minus_) h_minus_ = class_number_imag(p);
        return *h_minus_;
    }
    unsigned long h_minus_forms() {
        if (!h_minus_forms_) h_minus_forms_ = class_number_imag_forms(p);
        return *h_minus_forms_;
    }
    unsigned long h_real() {
        if (!h_real_) h_real_ = class_number_real_exact(p);
        return *h_real_;
    }
    const PellUnit& eps() {
        if (!eps_) eps_ = fundamental_unit(p);
        return *eps_;
    }
    const TheoremCoefficients& coeffs() {
        if (!coeffs_) coeffs_ = theorem_coefficients(p, h_real());
        return *coeffs_;
    }
    const std::vector<IdentityCheckResult>& identities() {
        if (!identities_) identities_ = proof_identity_suite(p);
        return *identities_;
    }
};

struct CheckOutcome {
    CheckStatus status = CheckStatus::fail;
    std::optional<CheckWitness> witness;
};

CheckOutcome poly_equality_outcome(const ResiduePoly& lhs, const ResiduePoly& rhs) {
    const bool eq = (lhs == rhs);
    // The q→1 evaluations are compared independently of the coefficient
    // comparison; a disagreement between the two verdicts is a reduction bug.
    const bool evals_eq = (eval_at_one_mod_p(lhs) == eval_at_one_mod_p(rhs));
    if (eq && evals_eq) return {CheckStatus::pass, std::nullopt};
    CheckWitness w{poly_digest(lhs), poly_digest(rhs), ""};
    if (eq != evals_eq && eq)
        w.note = "canonical forms equal but q=1 evaluations differ (reduction bug)";
    return {CheckStatus::fail, std::move(w)};
}

CheckOutcome values_equal_outcome(const std::string& lhs_label, unsigned long lhs,
                                  const std::string& rhs_label, unsigned long rhs) {
    if (lhs == rhs) return {CheckStatus::pass, std::nullopt};
    return {CheckStatus::fail, CheckWitness{lhs_label + " = " + std::to_string(lhs),
                                            rhs_label + " = " + std::to_string(rhs), ""}};
}

// (-1)^{(h+1)/2} for odd h; throws on even h (the parity corollary itself
// is what even h falsifies, and callers report that as a failure).
int sign_from_h(unsigned long h) {
    if (h % 2 == 0) throw std::domain_error("class number is even; parity corollary violated");
    return ((h + 1) / 2) % 2 == 1 ? -1 : 1;
}

CheckOutcome run_theorem1(PrimeContext& ctx) {
    return poly_equality_outcome(ctx.wilson(), ResiduePoly::constant(ctx.p, -1));
}

CheckOutcome run_theorem2(PrimeContext& ctx) {
    int sign = sign_from_h(ctx.h_minus());
    ResiduePoly rhs = ResiduePoly::monomial(ctx.p, 1);
    if (sign < 0) rhs = neg(rhs);
    return poly_equality_outcome(ctx.half16(), rhs);
}

CheckOutcome run_hminus_agreement(PrimeContext& ctx) {
    return values_equal_outcome("character-sum h(-p)", ctx.h_minus(),
                                "reduced-forms h(-p)", ctx.h_minus_forms());
}

CheckOutcome run_theorem3(PrimeContext& ctx) {
    return poly_equality_outcome(ctx.wilson(), rhs_theorem3(ctx.p, ctx.coeffs(), ctx.sets()));
}

CheckOutcome run_theorem4(PrimeContext& ctx) {
    return poly_equality_outcome(ctx.half16(), rhs_theorem4(ctx.p, ctx.coeffs(), ctx.sets()));
}

CheckOutcome run_theorem4_stated(PrimeContext& ctx) {
    return poly_equality_outcome(ctx.half1(), rhs_theorem4(ctx.p, ctx.coeffs(), ctx.sets()));
}

CheckOutcome run_corollary_mordell(PrimeContext& ctx) {
    const unsigned long p = ctx.p;
    unsigned long lhs = factorial_mod((p - 1) / 2, p);
    int sign = sign_from_h(ctx.h_minus());
    unsigned long rhs = (sign > 0) ? 1 : p - 1;
    return values_equal_outcome("((p-1)/2)! mod p", lhs, "(-1)^{(h(-p)+1)/2} mod p", rhs);
}

CheckOutcome run_corollary_chowla(PrimeContext& ctx) {
    const unsigned long p = ctx.p;
    unsigned long lhs = factorial_mod((p - 1) / 2, p);
    int sign = sign_from_h(ctx.h_real());
    unsigned long u_mod = mpz_fdiv_ui(ctx.eps().x.get_mpz_t(), p);
    unsigned long rhs = mulmod(u_mod, inverse_mod(2, p), p);
    if (sign < 0) rhs = (p - rhs) % p;
    return values_equal_outcome("((p-1)/2)! mod p", lhs, "(-1)^{(h(p)+1)/2} u/2 mod p", rhs);
}

CheckOutcome run_corollary_unit(PrimeContext& ctx) {
    const PellUnit& e = ctx.eps();
    unsigned long h = ctx.h_real();
    mpz_class pell = e.x * e.x - mpz_class(ctx.p) * e.y * e.y;
    std::ostringstream lhs;
    lhs << "norm=" << e.norm << " x^2-p*y^2=" << pell.get_str() << " h=" << h;
    if (e.norm == -1 && pell == -4 && h % 2 == 1) return {CheckStatus::pass, std::nullopt};
    return {CheckStatus::fail, CheckWitness{lhs.str(), "norm=-1 x^2-p*y^2=-4 h odd", ""}};
}

CheckOutcome run_corollary_wilson_eval(PrimeContext& ctx) {
    return values_equal_outcome("full product at q=1", eval_at_one_mod_p(ctx.wilson()),
                                "p-1", ctx.p - 1);
}

CheckOutcome run_corollary_half_eval(PrimeContext& ctx) {
    return values_equal_outcome("half product at q=1", eval_at_one_mod_p(ctx.half16()),
                                "((p-1)/2)! mod p", factorial_mod((ctx.p - 1) / 2, ctx.p));
}

CheckOutcome run_identity(PrimeContext& ctx, const char* name) {
    for (const auto& r : ctx.identities()) {
        if (r.name != name) continue;
        if (!r.applicable)
            throw std::logic_error("identity roster applicability out of sync");
        if (r.pass) return {CheckStatus::pass, std::nullopt};
        return {CheckStatus::fail, CheckWitness{"", "", "exact ring identity does not hold"}};
    }
    throw std::logic_error(std::string("identity check not found: ") + name);
}

CheckOutcome run_classnum_cross(PrimeContext& ctx) {
    return values_equal_outcome("exact h(p)", ctx.h_real(), "numeric h(p)",
                                class_number_real_numeric(ctx.p));
}

enum class Group { t1, t2, t3, t4, t4_stated, corollaries, identities };

struct RosterEntry {
    const char* name;
    Group group;
    bool (*applicable)(unsigned long p);
    CheckOutcome (*run)(PrimeContext&);
};

bool any_prime(unsigned long) { return true; }
bool p_3mod4(unsigned long p) { return p % 4 == 3; }
bool p_1mod4(unsigned long p) { return p % 4 == 1; }

const std::vector<RosterEntry>& roster() {
    static const std::vector<RosterEntry> entries = {
        {"theorem1", Group::t1, p_3mod4, run_theorem1},
        {"theorem2", Group::t2, p_3mod4, run_theorem2},
        {"hminus-agreement", Group::t2, p_3mod4, run_hminus_agreement},
        {"theorem3", Group::t3, p_1mod4, run_theorem3},
        {"theorem4", Group::t4, p_1mod4, run_theorem4},
        {"theorem4-stated", Group::t4_stated, p_1mod4, run_theorem4_stated},
        {"corollary-mordell", Group::corollaries, p_3mod4, run_corollary_mordell},
        {"corollary-chowla", Group::corollaries, p_1mod4, run_corollary_chowla},
        {"corollary-unit", Group::corollaries, p_1mod4, run_corollary_unit},
        {"corollary-wilson-eval", Group::corollaries, any_prime, run_corollary_wilson_eval},
        {"corollary-half-eval", Group::corollaries, any_prime, run_corollary_half_eval},
        {"identity-uv", Group::identities, any_prime,
         [](PrimeContext& c) { return run_identity(c, "identity-uv"); }},
        {"identity-u-neg-v", Group::identities, p_3mod4,
         [](PrimeContext& c) { return run_identity(c, "identity-u-neg-v"); }},
        {"identity-qsum", Group::identities, p_3mod4,
         [](PrimeContext& c) { return run_identity(c, "identity-qsum"); }},
        {"identity-mprime-16k", Group::identities, p_3mod4,
         [](PrimeContext& c) { return run_identity(c, "identity-mprime-16k"); }},
        {"identity-hminus-mod4", Group::identities, p_3mod4,
         [](PrimeContext& c) { return run_identity(c, "identity-hminus-mod4"); }},
        {"identity-u-over-w", Group::identities, p_3mod4,
         [](PrimeContext& c) { return run_identity(c, "identity-u-over-w"); }},
        {"identity-gauss-square", Group::identities, p_1mod4,
         [](PrimeContext& c) { return run_identity(c, "identity-gauss-square"); }},
        {"identity-gauss-sigma4", Group::identities, p_1mod4,
         [](PrimeContext& c) { return run_identity(c, "identity-gauss-sigma4"); }},
        {"identity-pi4", Group::identities, p_1mod4,
         [](PrimeContext& c) { return run_identity(c, "identity-pi4"); }},
        {"identity-pi16", Group::identities, p_1mod4,
         [](PrimeContext& c) { return run_identity(c, "identity-pi16"); }},
        {"identity-sign-count", Group::identities, p_1mod4,
         [](PrimeContext& c) { return run_identity(c, "identity-sign-count"); }},
        {"classnum-real-cross", Group::identities, p_1mod4, run_classnum_cross},
    };
    return entries;
}

bool group_selected(Group g, const CheckSelection& sel) {
    switch (g) {
    case Group::t1: return sel.theorem1;
    case Group::t2: return sel.theorem2;
    case Group::t3: return sel.theorem3;
    case Group::t4: return sel.theorem4;
    case Group::t4_stated: return sel.theorem4_stated;
    case Group::corollaries: return sel.corollaries;
    case Group::identities: return sel.proof_identities;
    }
    throw std::logic_error("group_selected: bad group");
}

CheckRecord run_entry(const RosterEntry& entry, PrimeContext& ctx, bool include_timing) {
    CheckRecord rec;
    rec.name = entry.name;
    if (!entry.applicable(ctx.p)) {
        rec.status = CheckStatus::inapplicable;
        return rec;
    }
    const auto t0 = std::chrono::steady_clock::now();
    try {
        CheckOutcome out = entry.run(ctx);
        rec.status = out.status;
        rec.witness = std::move(out.witness);
    } catch (const std::exception& e) {
        rec.status = CheckStatus::fail;
        rec.witness = CheckWitness{"", "", std::string("error: ") + e.what()};
    }
    if (include_timing) {
        const auto dt = std::chrono::steady_clock::now() - t0;
        rec.ms = std::chrono::duration_cast<std::chrono::milliseconds>(dt).count();
    }
    return rec;
}

ReportInputs gather_inputs(const PrimeContext& ctx) {
    ReportInputs in;
    if (ctx.h_minus_) in.h_minus_p = *ctx.h_minus_;
    if (ctx.h_real_) in.h_p = *ctx.h_real_;
    if (ctx.eps_) {
        in.u = ctx.eps_->x.get_str();
        in.v = ctx.eps_->y.get_str();
    }
    if (ctx.coeffs_) {
        in.A = ctx.coeffs_->A.get_str();
        in.B = ctx.coeffs_->B.get_str();
        in.C = ctx.coeffs_->C.get_str();
        in.D = ctx.coeffs_->D.get_str();
    }
    return in;
}

const RosterEntry& roster_entry(const char* name) {
    for (const auto& e : roster())
        if (std::string_view(e.name) == name) return e;
    throw std::logic_error(std::string("no roster entry named ") + name);
}

void require_verifiable_prime(unsigned long p) {
    if (!is_odd_prime(p) || p < 5)
        throw std::invalid_argument("verification requires a prime p >= 5");
}

} // namespace

CheckRecord verify_theorem1(unsigned long p) {
    require_verifiable_prime(p);
    PrimeContext ctx{p};
    return run_entry(roster_entry("theorem1"), ctx, false);
}

CheckRecord verify_theorem2(unsigned long p) {
    require_verifiable_prime(p);
    PrimeContext ctx{p};
    return run_entry(roster_entry("theorem2"), ctx, false);
}

CheckRecord verify_theorem3(unsigned long p) {
    require_verifiable_prime(p);
    PrimeContext ctx{p};
    return run_entry(roster_entry("theorem3"), ctx, false);
}

CheckRecord verify_theorem4(unsigned long p, unsigned long t) {
    require_verifiable_prime(p);
    PrimeContext ctx{p};
    if (t == 16) return run_entry(roster_entry("theorem4"), ctx, false);
    if (t == 1) return run_entry(roster_entry("theorem4-stated"), ctx, false);
    // Generic multiplier: same right-hand side, product with base q^{t j}.
    CheckRecord rec;
    rec.name = "theorem4-t" + std::to_string(t);
    if (p % 4 != 1) {
        rec.status = CheckStatus::inapplicable;
        return rec;
    }
    try {
        CheckOutcome out = poly_equality_outcome(
            half_product(p, t), rhs_theorem4(p, ctx.coeffs(), ctx.sets()));
        rec.status = out.status;
        rec.witness = std::move(out.witness);
    } catch (const std::exception& e) {
        rec.status = CheckStatus::fail;
        rec.witness = CheckWitness{"", "", std::string("error: ") + e.what()};
    }
    return rec;
}

std::vector<CheckRecord> verify_corollaries(unsigned long p) {
    require_verifiable_prime(p);
    PrimeContext ctx{p};
    std::vector<CheckRecord> out;
    for (const auto& e : roster())
        if (e.group == Group::corollaries) out.push_back(run_entry(e, ctx, false));
    return out;
}

VerificationReport verify_prime(unsigned long p, const CheckSelection& sel, bool include_timing) {
    require_verifiable_prime(p);
    PrimeContext ctx{p};
    VerificationReport rep;
    rep.p = p;
    rep.p_mod_4 = static_cast<unsigned>(p % 4);
    for (const auto& entry : roster()) {
        if (!group_selected(entry.group, sel)) continue;
        rep.checks.push_back(run_entry(entry, ctx, include_timing));
    }
    rep.inputs = gather_inputs(ctx);
    return rep;
}

void run_range(unsigned long p_min, unsigned long p_max, const RunOptions& opts,
               const std::function<void(const VerificationReport&)>& sink) {
    if (p_min > p_max) throw std::invalid_argument("run_range: p_min > p_max");
    if (!opts.selection.any()) throw std::invalid_argument("run_range: empty selection");
    const std::vector<unsigned long> primes = primes_in_range(p_min, p_max);
    const std::size_t n = primes.size();

    if (opts.jobs <= 1 || n <= 1) {
        for (unsigned long p : primes) {
            VerificationReport rep = verify_prime(p, opts.selection, opts.include_timing);
            sink(rep);
            if (opts.fail_fast && !rep.all_passed()) return;
        }
        return;
    }

    std::vector<std::optional<VerificationReport>> results(n);
    std::vector<char> done(n, 0);
    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};
    std::mutex mu;
    std::condition_variable cv;

    const unsigned nworkers = static_cast<unsigned>(std::min<std::size_t>(opts.jobs, n));
    std::vector<std::thread> pool;
    pool.reserve(nworkers);
    for (unsigned w = 0; w < nworkers; ++w) {
        pool.emplace_back([&] {
            while (!stop.load(std::memory_order_relaxed)) {
                const std::size_t i = next.fetch_add(1);
                if (i >= n) break;
                VerificationReport r = verify_prime(primes[i], opts.selection, opts.include_timing);
                {
                    std::lock_guard<std::mutex> lk(mu);
                    results[i] = std::move(r);
                    done[i] = 1;
                }
                cv.notify_all();
            }
        });
    }

    // Emission happens here, strictly in prime order, so output bytes do not
    // depend on the parallelism degree.
    for (std::size_t j = 0; j < n; ++j) {
        VerificationReport rep;
        {
            std::unique_lock<std::mutex> lk(mu);
            cv.wait(lk, [&] { return done[j] != 0; });
            rep = std::move(*results[j]);
        }
        sink(rep);
        if (opts.fail_fast && !rep.all_passed()) {
            stop.store(true);
            break;
        }
    }
    stop.store(true);
    for (auto& t : pool) t.join();
}

std::vector<VerificationReport> run_range(unsigned long p_min, unsigned long p_max,
                                          const RunOptions& opts) {
    std::vector<VerificationReport> out;
    run_range(p_min, p_max, opts, [&out](const VerificationReport& r) { out.push_back(r); });
    return out;
}

} // namespace qwilson
