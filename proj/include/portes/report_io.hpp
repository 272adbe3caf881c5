#pragma once

#include <iosfwd>
#include <string>

#include "portes/acf.hpp"
#include "portes/monte_carlo.hpp"

namespace portes {

/// Render a report as the fixed-width table used on stdout. P-values are
/// printed with 9 decimals so the 1/(nrep+1) quantization of Monte Carlo
/// p-values is visible; NA marks undefined p-values and negative df prints
/// as zero.
std::string format_table(const TestReport& rep);

/// Render a report as JSON with the stable field order
/// {method, mode, nrep?, seed?, rows:[{lag, statistic, df?, pvalue}]};
/// NA p-values serialize as null. Identical reports yield identical bytes.
std::string format_json(const TestReport& rep);

/// Parse a numeric CSV (RFC 4180, '.' decimals) into an n x k panel, one
/// column per component series. Parse errors name the offending row and
/// column.
SeriesMatrix read_csv(std::istream& in, bool header);

/// Write a panel as CSV with columns V1..Vk.
void write_csv(std::ostream& out, const SeriesMatrix& z, bool header);

}  // namespace portes
