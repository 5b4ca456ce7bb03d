#include "qwilson/report_io.hpp"

#include <json.hpp>

namespace qwilson {

using ordered_json = nlohmann::ordered_json;

static ordered_json witness_to_json(const CheckWitness& w) {
    return ordered_json{{"lhs", w.lhs}, {"rhs", w.rhs}, {"note", w.note}};
}

static ordered_json check_to_json(const CheckRecord& c) {
    ordered_json j{{"name", c.name}, {"status", to_string(c.status)}, {"ms", c.ms}};
    if (c.witness) j["witness"] = witness_to_json(*c.witness);
    return j;
}

static ordered_json inputs_to_json(const ReportInputs& in) {
    ordered_json j = ordered_json::object();
    if (in.h_minus_p) j["h_minus_p"] = *in.h_minus_p;
    if (in.h_p) j["h_p"] = *in.h_p;
    if (in.u) j["u"] = *in.u;
    if (in.v) j["v"] = *in.v;
    if (in.A) j["A"] = *in.A;
    if (in.B) j["B"] = *in.B;
    if (in.C) j["C"] = *in.C;
    if (in.D) j["D"] = *in.D;
    return j;
}

std::string report_to_json(const VerificationReport& rep) {
    ordered_json j;
    j["p"] = rep.p;
    j["p_mod_4"] = rep.p_mod_4;
    ordered_json checks = ordered_json::array();
    for (const auto& c : rep.checks) checks.push_back(check_to_json(c));
    j["checks"] = std::move(checks);
    j["inputs"] = inputs_to_json(rep.inputs);
    return j.dump();
}

VerificationReport report_from_json(std::string_view json_text) {
    const ordered_json j = ordered_json::parse(json_text);
    VerificationReport rep;
    rep.p = j.at("p").get<unsigned long>();
    rep.p_mod_4 = j.at("p_mod_4").get<unsigned>();
    for (const auto& jc : j.at("checks")) {
        CheckRecord c;
        c.name = jc.at("name").get<std::string>();
        c.status = check_status_from_string(jc.at("status").get<std::string>());
        c.ms = jc.at("ms").get<long long>();
        if (jc.contains("witness")) {
            const auto& jw = jc.at("witness");
            c.witness = CheckWitness{jw.at("lhs").get<std::string>(),
                                     jw.at("rhs").get<std::string>(),
                                     jw.at("note").get<std::string>()};
        }
        rep.checks.push_back(std::move(c));
    }
    const auto& ji = j.at("inputs");
    if (ji.contains("h_minus_p")) rep.inputs.h_minus_p = ji.at("h_minus_p").get<unsigned long>();
    if (ji.contains("h_p")) rep.inputs.h_p = ji.at("h_p").get<unsigned long>();
    if (ji.contains("u")) rep.inputs.u = ji.at("u").get<std::string>();
    if (ji.contains("v")) rep.inputs.v = ji.at("v").get<std::string>();
    if (ji.contains("A")) rep.inputs.A = ji.at("A").get<std::string>();
    if (ji.contains("B")) rep.inputs.B = ji.at("B").get<std::string>();
    if (ji.contains("C")) rep.inputs.C = ji.at("C").get<std::string>();
    if (ji.contains("D")) rep.inputs.D = ji.at("D").get<std::string>();
    return rep;
}

void write_report_json(std::ostream& os, const VerificationReport& rep) {
    os << report_to_json(rep) << '\n';
}

void write_csv_header(std::ostream& os) { os << "p,check,status,ms\n"; }

void write_report_csv(std::ostream& os, const VerificationReport& rep) {
    for (const auto& c : rep.checks)
        os << rep.p << ',' << c.name << ',' << to_string(c.status) << ',' << c.ms << '\n';
}

void write_report_human(std::ostream& os, const VerificationReport& rep) {
    os << "p=" << rep.p << " (" << rep.p_mod_4 << " mod 4)";
    if (rep.inputs.h_minus_p) os << "  h(-p)=" << *rep.inputs.h_minus_p;
    if (rep.inputs.h_p) os << "  h(p)=" << *rep.inputs.h_p;
    if (rep.inputs.u && rep.inputs.v)
        os << "  eps=(" << *rep.inputs.u << "+" << *rep.inputs.v << "*sqrt(p))/2";
    os << '\n';
    for (const auto& c : rep.checks) {
        os << "  " << c.name;
        for (std::size_t i = c.name.size(); i < 24; ++i) os << ' ';
        os << to_string(c.status);
        if (c.ms > 0) os << "  (" << c.ms << " ms)";
        os << '\n';
        if (c.witness) {
            if (!c.witness->lhs.empty()) os << "      lhs: " << c.witness->lhs << '\n';
            if (!c.witness->rhs.empty()) os << "      rhs: " << c.witness->rhs << '\n';
            if (!c.witness->note.empty()) os << "      note: " << c.witness->note << '\n';
        }
    }
}

} // namespace qwilson
