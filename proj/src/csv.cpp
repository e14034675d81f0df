#include "furl/csv.hpp"

#include <cstdio>

namespace furl {

std::string format_value(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

void write_estimates_csv(std::ostream& os, const LocalCounts& counts,
                         const NodeInterner& interner) {
    os << "node,estimate\n";
    for (NodeId u = 0; u < interner.size(); ++u) {
        os << interner.token(u) << ',' << format_value(count_of(counts, u)) << '\n';
    }
}

void write_scatter_csv(std::ostream& os, const std::vector<std::size_t>& degrees,
                       const LocalCounts& counts, const NodeInterner& interner) {
    os << "node,degree,estimate\n";
    for (NodeId u = 0; u < interner.size(); ++u) {
        os << interner.token(u) << ',' << degrees[u] << ','
           << format_value(count_of(counts, u)) << '\n';
    }
}

void write_report_header(std::ostream& os) {
    os << "variant,xi,delta,J,seed,mre,wall_ms,n_nodes,n_edges\n";
}

namespace {

void write_report_fields(std::ostream& os, const TrialReport& r,
                         const std::string& seed_field) {
    os << variant_name(r.variant) << ',' << format_value(r.xi) << ','
       << format_value(r.delta) << ',' << r.bucket << ',' << seed_field << ','
       << format_value(r.mre) << ',' << format_value(r.wall_ms) << ',' << r.n_nodes
       << ',' << r.n_edges << '\n';
}

}  // namespace

void write_report_row(std::ostream& os, const TrialReport& report) {
    write_report_fields(os, report, std::to_string(report.seed));
}

void write_report_row(std::ostream& os, const TrialReport& report,
                      const std::string& seed_label) {
    write_report_fields(os, report, seed_label);
}

}  // namespace furl
