/* Assembles both sides of each verified congruence as canonical ring
   elements, compares them exactly, runs the classical q→1 corollaries and
   the supporting-identity suite, and aggregates everything into per-prime
   reports suitable for machine emission. */
#ifndef QWILSON_THEOREMS_HPP
#define QWILSON_THEOREMS_HPP

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qwilson/cyclotomic.hpp"
#include "qwilson/qnumber.hpp"
#include "qwilson/quadratic.hpp"
#include "qwilson/residue_poly.hpp"

namespace qwilson {

enum class CheckStatus { pass, fail, skipped, inapplicable };

std::string to_string(CheckStatus s);
CheckStatus check_status_from_string(std::string_view s);

struct CheckWitness {
    std::string lhs, rhs, note;
    bool operator==(const CheckWitness&) const = default;
};

struct CheckRecord {
    std::string name;
    CheckStatus status = CheckStatus::skipped;
    long long ms = 0;
    std::optional<CheckWitness> witness; // present on failure only
    bool operator==(const CheckRecord&) const = default;
};

struct ReportInputs {
    std::optional<unsigned long> h_minus_p, h_p;
    std::optional<std::string> u, v, A, B, C, D;
    bool operator==(const ReportInputs&) const = default;
};

struct VerificationReport {
    unsigned long p = 0;
    unsigned p_mod_4 = 0;
    std::vector<CheckRecord> checks;
    ReportInputs inputs;

    bool operator==(const VerificationReport&) const = default;
    // True when no check failed and none was skipped.
    bool all_passed() const;
};

// Which check groups to run. "4-stated" is the literal t=1 variant of the
// fourth congruence; it is off by default because its truth is the open
// experimental question rather than an established claim.
struct CheckSelection {
    bool theorem1 = true;
    bool theorem2 = true;
    bool theorem3 = true;
    bool theorem4 = true;
    bool theorem4_stated = false;
    bool corollaries = true;
    bool proof_identities = true;

    static CheckSelection all();
    static CheckSelection none();
    // Comma list over {1,2,3,4,4-stated,corollaries,proof-identities}.
    static CheckSelection parse(std::string_view csv);
    bool any() const;
    bool operator==(const CheckSelection&) const = default;
};

// First 16 nonzero coefficients plus an FNV-1a hash of the full canonical
// sequence; the failure-witness form of a ring element.
std::string poly_digest(const ResiduePoly& a);

// Right-hand sides of the two p ≡ 1 (mod 4) congruences.
ResiduePoly rhs_theorem3(unsigned long p);
ResiduePoly rhs_theorem3(unsigned long p, const TheoremCoefficients& tc, const ResidueSets& rs);
ResiduePoly rhs_theorem4(unsigned long p);
ResiduePoly rhs_theorem4(unsigned long p, const TheoremCoefficients& tc, const ResidueSets& rs);

// Single-check entry points. A prime in the wrong residue class yields
// status "inapplicable", never an exception.
CheckRecord verify_theorem1(unsigned long p);
CheckRecord verify_theorem2(unsigned long p);
CheckRecord verify_theorem3(unsigned long p);
CheckRecord verify_theorem4(unsigned long p, unsigned long t);
std::vector<CheckRecord> verify_corollaries(unsigned long p);

// All selected checks for one prime, in the fixed roster order.
VerificationReport verify_prime(unsigned long p, const CheckSelection& sel, bool include_timing);

struct RunOptions {
    CheckSelection selection;
    unsigned jobs = 1;
    bool fail_fast = false;
    bool include_timing = false;
};

// Reports for every prime >= 5 in [p_min, p_max], ascending. The sink
// overload streams reports in prime order regardless of the parallelism
// degree; with fail_fast the stream stops after the first failing prime
// (whose report is still delivered).
void run_range(unsigned long p_min, unsigned long p_max, const RunOptions& opts,
               const std::function<void(const VerificationReport&)>& sink);
std::vector<VerificationReport> run_range(unsigned long p_min, unsigned long p_max,
                                          const RunOptions& opts);

} // namespace qwilson

#endif
