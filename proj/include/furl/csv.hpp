#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "furl/interner.hpp"
#include "furl/oracle.hpp"
#include "furl/trials.hpp"

namespace furl {

// 10 significant digits, '.' decimal separator.
std::string format_value(double v);

// Header `node,estimate`, one row per interned node in id order, node printed
// as its original input token.
void write_estimates_csv(std::ostream& os, const LocalCounts& counts,
                         const NodeInterner& interner);

// Header `node,degree,estimate`.
void write_scatter_csv(std::ostream& os, const std::vector<std::size_t>& degrees,
                       const LocalCounts& counts, const NodeInterner& interner);

void write_report_header(std::ostream& os);
void write_report_row(std::ostream& os, const TrialReport& report);
// Aggregate row: the seed column carries a label instead of a number.
void write_report_row(std::ostream& os, const TrialReport& report,
                      const std::string& seed_label);

}  // namespace furl
