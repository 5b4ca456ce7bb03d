/* Report serialization: one JSON object per prime (emitted as a line),
   a flat CSV projection, and a human-readable listing. JSON/CSV content
   is deterministic so report files can be diffed across runs. */
#ifndef QWILSON_REPORT_IO_HPP
#define QWILSON_REPORT_IO_HPP

#include <ostream>
#include <string>
#include <string_view>

#include "qwilson/theorems.hpp"

namespace qwilson {

std::string report_to_json(const VerificationReport& rep);
VerificationReport report_from_json(std::string_view json_text);

void write_report_json(std::ostream& os, const VerificationReport& rep);
void write_report_human(std::ostream& os, const VerificationReport& rep);

// CSV rows are {p, check, status, ms}; call the header writer once first.
void write_csv_header(std::ostream& os);
void write_report_csv(std::ostream& os, const VerificationReport& rep);

} // namespace qwilson

#endif
