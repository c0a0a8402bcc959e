#pragma once

#include <ostream>
#include <span>
#include <string>

#include <json.hpp>

#include <qseries/harness.hpp>
#include <qseries/series.hpp>

namespace qseries {

// Exact integers travel as decimal strings.
nlohmann::json to_json(const Report &r);
nlohmann::json to_json(const QSeries &f);

// Columns: kind,subject,order,status,witness_exponent,witness_lhs,witness_rhs,millis,detail
void write_csv_header(std::ostream &os);
void write_csv_row(std::ostream &os, const Report &r);
void write_csv(std::ostream &os, std::span<const Report> reports);

std::string csv_quote(std::string_view field);

// One-line human summary, e.g. "HIR-4: pass (N=200, 3.1 ms)".
std::string summary_line(const Report &r);

} // namespace qseries
