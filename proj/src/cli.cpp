#include "qwilson/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <string>

#include "qwilson/numeric.hpp"
#include "qwilson/report_io.hpp"
#include "qwilson/theorems.hpp"

namespace qwilson {

namespace {

constexpr const char* kDefaultTheorems = "1,2,3,4,corollaries,proof-identities";

int cmd_verify(unsigned long min, unsigned long max, const std::string& theorems,
               const std::string& format, unsigned jobs, bool fail_fast, bool timing,
               std::ostream& out, std::ostream& err) {
    RunOptions opts;
    opts.selection = CheckSelection::parse(theorems);
    opts.jobs = jobs;
    opts.fail_fast = fail_fast;
    opts.include_timing = timing;

    bool any_fail = false;
    auto note_status = [&any_fail](const VerificationReport& r) {
        if (!r.all_passed()) any_fail = true;
    };

    if (format == "json") {
        run_range(min, max, opts, [&](const VerificationReport& r) {
            write_report_json(out, r);
            note_status(r);
        });
    } else if (format == "csv") {
        write_csv_header(out);
        run_range(min, max, opts, [&](const VerificationReport& r) {
            write_report_csv(out, r);
            note_status(r);
        });
    } else if (format == "human") {
        run_range(min, max, opts, [&](const VerificationReport& r) {
            write_report_human(out, r);
            note_status(r);
        });
    } else {
        err << "unknown format: " << format << "\n";
        return 2;
    }
    out.flush();
    return any_fail ? 1 : 0;
}

void print_poly(std::ostream& out, const char* label, const ResiduePoly& a) {
    out << "  " << label << " = " << to_string(a) << "\n";
}

int cmd_inspect(unsigned long p, std::ostream& out) {
    out << "p = " << p << " (" << p % 4 << " mod 4)\n";
    const ResiduePoly wilson = wilson_product(p);
    const ResiduePoly half16 = half_product(p, 16);
    if (p % 4 == 3) {
        const unsigned long h = class_number_imag(p);
        const unsigned long hf = class_number_imag_forms(p);
        out << "h(-p) = " << h << " (character-sum formula), " << hf
            << " (reduced-forms count)\n";
        out << "full product vs -1:\n";
        print_poly(out, "lhs", wilson);
        print_poly(out, "rhs", ResiduePoly::constant(p, -1));
        int sign = ((h + 1) / 2) % 2 == 1 ? -1 : 1;
        ResiduePoly rhs2 = ResiduePoly::monomial(p, 1);
        if (sign < 0) rhs2 = neg(rhs2);
        out << "half product (t=16) vs (-1)^{(h(-p)+1)/2} q:\n";
        print_poly(out, "lhs", half16);
        print_poly(out, "rhs", rhs2);
    } else {
        const unsigned long h = class_number_real_exact(p);
        const PellUnit eps = fundamental_unit(p);
        const TheoremCoefficients tc = theorem_coefficients(p, h);
        const ResidueSets rs = residue_sets(p);
        out << "h(p) = " << h << " (exact), " << class_number_real_numeric(p)
            << " (numeric cross-check)\n";
        out << "eps_p = (" << eps.x.get_str() << " + " << eps.y.get_str()
            << "*sqrt(" << p << "))/2, norm " << eps.norm << "\n";
        out << "A = " << tc.A.get_str() << ", B = " << tc.B.get_str()
            << ", C = " << tc.C.get_str() << ", D = " << tc.D.get_str() << "\n";
        out << "full product vs A + B*sum_{(j/p)=-1} q^j:\n";
        print_poly(out, "lhs", wilson);
        print_poly(out, "rhs", rhs_theorem3(p, tc, rs));
        out << "half product (t=16) vs -Cq - D*sum_{(j/p)=-1} q^{j+1}:\n";
        print_poly(out, "lhs", half16);
        print_poly(out, "rhs", rhs_theorem4(p, tc, rs));
    }
    return 0;
}

int cmd_classnum(unsigned long p, std::ostream& out) {
    if (p % 4 == 3) {
        out << "h(-" << p << ") = " << class_number_imag(p) << " (character-sum formula)\n";
        out << "h(-" << p << ") = " << class_number_imag_forms(p) << " (reduced-forms count)\n";
    } else {
        const PellUnit eps = fundamental_unit(p);
        out << "h(" << p << ") = " << class_number_real_exact(p) << " (exact ring match)\n";
        out << "h(" << p << ") = " << class_number_real_numeric(p) << " (numeric cross-check)\n";
        out << "eps_" << p << " = (" << eps.x.get_str() << " + " << eps.y.get_str()
            << "*sqrt(" << p << "))/2, norm " << eps.norm << "\n";
    }
    return 0;
}

unsigned default_jobs_from_env(std::ostream& err, bool& ok) {
    ok = true;
    const char* env = std::getenv("QWILSON_JOBS");
    if (env == nullptr || *env == '\0') return 1;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == nullptr || *end != '\0' || v < 1) {
        err << "invalid QWILSON_JOBS value: '" << env << "'\n";
        ok = false;
        return 1;
    }
    return static_cast<unsigned>(v);
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact verifier for q-analogue factorial congruences in Z[q]/(1+q+...+q^{p-1})"};
    app.name("qwilson");
    app.require_subcommand(1);

    bool env_ok = true;
    const unsigned env_jobs = default_jobs_from_env(err, env_ok);
    if (!env_ok) return 2;

    unsigned long min = 0, max = 0, prime = 0;
    std::string theorems = kDefaultTheorems;
    std::string format = "human";
    unsigned jobs = env_jobs;
    bool fail_fast = false;
    bool timing = false;

    CLI::App* verify = app.add_subcommand("verify", "verify congruences over a prime range");
    verify->add_option("--min", min, "lower end of the range (inclusive)")->required();
    verify->add_option("--max", max, "upper end of the range (inclusive)")->required();
    verify->add_option("--theorems", theorems,
                       "comma list over {1,2,3,4,4-stated,corollaries,proof-identities}");
    verify->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"human", "json", "csv"}));
    verify->add_option("--jobs", jobs, "parallel verification degree (env QWILSON_JOBS)")
        ->check(CLI::PositiveNumber);
    verify->add_flag("--fail-fast", fail_fast, "stop after the first failing prime");
    verify->add_flag("--timing", timing,
                     "record measured per-check milliseconds in machine formats");

    CLI::App* inspect = app.add_subcommand("inspect", "print both sides of each congruence");
    inspect->add_option("prime", prime, "odd prime >= 5")->required();

    CLI::App* classnum = app.add_subcommand("classnum", "class number with cross-checks");
    classnum->add_option("prime", prime, "prime > 3")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) {
            if (min > max) {
                err << "invalid range: --min " << min << " > --max " << max << "\n";
                return 2;
            }
            return cmd_verify(min, max, theorems, format, jobs, fail_fast, timing, out, err);
        }
        if (inspect->parsed()) {
            if (!is_odd_prime(prime) || prime < 5) {
                err << "inspect: argument must be a prime >= 5, got " << prime << "\n";
                return 2;
            }
            return cmd_inspect(prime, out);
        }
        if (classnum->parsed()) {
            if (!is_odd_prime(prime) || prime <= 3) {
                err << "classnum: argument must be a prime > 3, got " << prime << "\n";
                return 2;
            }
            return cmd_classnum(prime, out);
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "no subcommand given\n";
    return 2;
}

} // namespace qwilson
