#pragma once

#include <string>
#include <vector>

namespace lat {

// Provenance of a published number relative to this engine's formulas.
enum class Provenance {
    MatchesFormula,     // published cell agrees with the formula within tolerance
    PaperInconsistent,  // published cell contradicts the stated formula; both shown
    DerivedOnly,        // no exact published counterpart; informational
};

const char* provenance_token(Provenance p);  // "matches-formula" etc.
Provenance provenance_from_token(const std::string& token);

struct ReportRow {
    std::string label;
    std::string published_display;  // verbatim printed cell, "" when none
    double published = 0.0;         // numeric reading of the cell, NaN when none
    double computed = 0.0;
    double tol_rel = 0.0;           // fraction of |published|
    double tol_abs = 0.0;           // absolute, same units as published
    Provenance provenance = Provenance::MatchesFormula;
};

struct TableReport {
    std::string section;  // table id, e.g. "8.8.2"
    std::string title;
    std::vector<ReportRow> rows;
};

// Half of the least significant printed digit of the first numeral in the
// string ("1,320" -> 0.5, "0.16" -> 0.005); 0 when no numeral is found.
// Lets a row accept any value that rounds to the printed cell.
double printed_half_ulp(const std::string& text);

// (computed - published) / |published|; NaN when published is NaN or zero.
double row_delta(const ReportRow& row);

// matches-formula rows must agree within max(tol_abs, tol_rel * |published|);
// rows of other provenance (and rows with no published value) always pass.
bool row_ok(const ReportRow& row);
bool report_ok(const TableReport& report);
bool reports_ok(const std::vector<TableReport>& reports);

std::string render_human(const std::vector<TableReport>& reports);
std::string render_csv(const std::vector<TableReport>& reports);
std::string render_json(const std::vector<TableReport>& reports);

// Inverse of render_csv: parse_csv(render_csv(x)) reproduces x exactly.
std::vector<TableReport> parse_csv(const std::string& csv);

}  // namespace lat
