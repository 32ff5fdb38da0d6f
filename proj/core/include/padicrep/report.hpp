#pragma once

#include "padicrep/fp.hpp"

#include <string>
#include <vector>

namespace padicrep {

enum class CheckStatus { pass, fail, skipped };

std::string to_string(CheckStatus s);

struct CheckReport {
    std::string id;
    u32 p = 0;
    u64 r = 0;
    CheckStatus status = CheckStatus::skipped;
    std::string witness; // dims, JH multisets, offending data; required on fail

    std::string json_line() const;
    std::string csv_line() const;
};

struct SweepSummary {
    u64 passed = 0, failed = 0, skipped = 0;
    void count(const CheckReport& r);
    std::string str() const;
};

std::string reports_markdown(const std::vector<CheckReport>& reports);
std::string reports_json(const std::vector<CheckReport>& reports);
std::string reports_csv(const std::vector<CheckReport>& reports);
std::string json_escape(const std::string& s);

} // namespace padicrep
