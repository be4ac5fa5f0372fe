#include "lat/report.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace lat {

namespace {

std::string fmt_full(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string fmt_short(double v) {
    if (std::isnan(v)) return "-";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::string csv_quote(const std::string& s) {
    bool needs = s.find_first_of(",\"\n") != std::string::npos;
    if (!needs) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

std::string pad_left(const std::string& s, size_t w) {
    return s.size() >= w ? s : std::string(w - s.size(), ' ') + s;
}

std::string pad_right(const std::string& s, size_t w) {
    return s.size() >= w ? s : s + std::string(w - s.size(), ' ');
}

}  // namespace

const char* provenance_token(Provenance p) {
    switch (p) {
        case Provenance::MatchesFormula: return "matches-formula";
        case Provenance::PaperInconsistent: return "paper-inconsistent";
        case Provenance::DerivedOnly: return "derived-only";
    }
    return "unknown";
}

Provenance provenance_from_token(const std::string& token) {
    if (token == "matches-formula") return Provenance::MatchesFormula;
    if (token == "paper-inconsistent") return Provenance::PaperInconsistent;
    if (token == "derived-only") return Provenance::DerivedOnly;
    throw std::invalid_argument("unknown provenance token '" + token + "'");
}

double printed_half_ulp(const std::string& text) {
    size_t i = 0;
    while (i < text.size() && !(std::isdigit(static_cast<unsigned char>(text[i])))) ++i;
    if (i == text.size()) return 0.0;
    bool seen_dot = false;
    int decimals = 0;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            if (seen_dot) ++decimals;
        } else if (c == ',' && !seen_dot) {
            continue;  // thousands separator
        } else if (c == '.' && !seen_dot) {
            seen_dot = true;
        } else {
            break;
        }
    }
    return 0.5 * std::pow(10.0, -decimals);
}

double row_delta(const ReportRow& row) {
    if (std::isnan(row.published) || row.published == 0.0)
        return std::numeric_limits<double>::quiet_NaN();
    return (row.computed - row.published) / std::abs(row.published);
}

bool row_ok(const ReportRow& row) {
    if (row.provenance != Provenance::MatchesFormula) return true;
    if (std::isnan(row.published)) return true;
    double tol = std::max(row.tol_abs, row.tol_rel * std::abs(row.published));
    return std::abs(row.computed - row.published) <= tol;
}

bool report_ok(const TableReport& report) {
    for (const ReportRow& r : report.rows)
        if (!row_ok(r)) return false;
    return true;
}

bool reports_ok(const std::vector<TableReport>& reports) {
    for (const TableReport& t : reports)
        if (!report_ok(t)) return false;
    return true;
}

std::string render_human(const std::vector<TableReport>& reports) {
    std::ostringstream os;
    for (const TableReport& t : reports) {
        os << "[" << t.section << "] " << t.title << "\n";
        os << pad_right("  row", 40) << pad_left("published", 16) << pad_left("computed", 14)
           << pad_left("delta", 10) << pad_left("provenance", 20) << pad_left("status", 8)
           << "\n";
        for (const ReportRow& r : t.rows) {
            double d = row_delta(r);
            std::string delta = std::isnan(d) ? "-" : fmt_short(d * 100.0) + "%";
            std::string status;
            if (r.provenance == Provenance::MatchesFormula)
                status = row_ok(r) ? "ok" : "FAIL";
            else if (r.provenance == Provenance::PaperInconsistent)
                status = "delta";
            else
                status = "info";
            os << pad_right("  " + r.label, 40)
               << pad_left(r.published_display.empty() ? "-" : r.published_display, 16)
               << pad_left(fmt_short(r.computed), 14) << pad_left(delta, 10)
               << pad_left(provenance_token(r.provenance), 20) << pad_left(status, 8) << "\n";
        }
        os << "\n";
    }
    return os.str();
}

std::string render_csv(const std::vector<TableReport>& reports) {
    std::ostringstream os;
    os << "section,title,label,published_display,published,computed,tol_rel,tol_abs,"
          "provenance,ok\n";
    for (const TableReport& t : reports) {
        for (const ReportRow& r : t.rows) {
            os << csv_quote(t.section) << ',' << csv_quote(t.title) << ',' << csv_quote(r.label)
               << ',' << csv_quote(r.published_display) << ',' << fmt_full(r.published) << ','
               << fmt_full(r.computed) << ',' << fmt_full(r.tol_rel) << ',' << fmt_full(r.tol_abs)
               << ',' << provenance_token(r.provenance) << ',' << (row_ok(r) ? "1" : "0") << '\n';
        }
    }
    return os.str();
}

std::string render_json(const std::vector<TableReport>& reports) {
    nlohmann::json out = nlohmann::json::array();
    for (const TableReport& t : reports) {
        nlohmann::json table;
        table["section"] = t.section;
        table["title"] = t.title;
        table["ok"] = report_ok(t);
        nlohmann::json rows = nlohmann::json::array();
        for (const ReportRow& r : t.rows) {
            nlohmann::json row;
            row["label"] = r.label;
            row["published_display"] = r.published_display;
            if (std::isnan(r.published))
                row["published"] = nullptr;
            else
                row["published"] = r.published;
            row["computed"] = r.computed;
            double d = row_delta(r);
            if (std::isnan(d))
                row["delta"] = nullptr;
            else
                row["delta"] = d;
            row["tol_rel"] = r.tol_rel;
            row["tol_abs"] = r.tol_abs;
            row["provenance"] = provenance_token(r.provenance);
            row["ok"] = row_ok(r);
            rows.push_back(std::move(row));
        }
        table["rows"] = std::move(rows);
        out.push_back(std::move(table));
    }
    return out.dump(2) + "\n";
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(cur);
    return fields;
}

}  // namespace

std::vector<TableReport> parse_csv(const std::string& csv) {
    std::vector<TableReport> out;
    std::istringstream is(csv);
    std::string line;
    bool first = true;
    while (std::getline(is, line)) {
        if (first) {
            first = false;  // header
            continue;
        }
        if (line.empty()) continue;
        std::vector<std::string> f = split_csv_line(line);
        if (f.size() != 10) throw std::runtime_error("report csv: bad field count");
        ReportRow row;
        row.label = f[2];
        row.published_display = f[3];
        row.published = std::strtod(f[4].c_str(), nullptr);
        row.computed = std::strtod(f[5].c_str(), nullptr);
        row.tol_rel = std::strtod(f[6].c_str(), nullptr);
        row.tol_abs = std::strtod(f[7].c_str(), nullptr);
        row.provenance = provenance_from_token(f[8]);
        if (out.empty() || out.back().section != f[0] || out.back().title != f[1]) {
            out.push_back({f[0], f[1], {}});
        }
        out.back().rows.push_back(std::move(row));
    }
    return out;
}

}  // namespace lat
