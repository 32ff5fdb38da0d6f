#include "padicrep/report.hpp"

#include <sstream>

namespace padicrep {

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        default: return "skipped";
    }
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    return out;
}

std::string CheckReport::json_line() const {
    std::ostringstream os;
    os << "{\"check\":\"" << json_escape(id) << "\",\"p\":" << p << ",\"r\":" << r
       << ",\"status\":\"" << to_string(status) << "\",\"witness\":\"" << json_escape(witness)
       << "\"}";
    return os.str();
}

std::string CheckReport::csv_line() const {
    std::ostringstream os;
    std::string w = witness;
    for (auto& c : w)
        if (c == ',' || c == '\n') c = ';';
    os << id << "," << p << "," << r << "," << to_string(status) << "," << w;
    return os.str();
}

void SweepSummary::count(const CheckReport& r) {
    switch (r.status) {
        case CheckStatus::pass: ++passed; break;
        case CheckStatus::fail: ++failed; break;
        default: ++skipped; break;
    }
}

std::string SweepSummary::str() const {
    std::ostringstream os;
    os << "pass=" << passed << " fail=" << failed << " skipped=" << skipped;
    return os.str();
}

std::string reports_json(const std::vector<CheckReport>& reports) {
    std::ostringstream os;
    for (const auto& r : reports) os << r.json_line() << "\n";
    return os.str();
}

std::string reports_csv(const std::vector<CheckReport>& reports) {
    std::ostringstream os;
    os << "check,p,r,status,witness\n";
    for (const auto& r : reports) os << r.csv_line() << "\n";
    return os.str();
}

std::string reports_markdown(const std::vector<CheckReport>& reports) {
    std::ostringstream os;
    os << "| check | p | r | status | witness |\n|---|---|---|---|---|\n";
    for (const auto& r : reports) {
        std::string w = r.witness;
        for (auto& c : w)
            if (c == '|' || c == '\n') c = ';';
        os << "| " << r.id << " | " << r.p << " | " << r.r << " | " << to_string(r.status)
           << " | " << w << " |\n";
    }
    SweepSummary s;
    for (const auto& r : reports) s.count(r);
    os << "\n" << s.str() << "\n";
    return os.str();
}

} // namespace padicrep
