#pragma once

#include "tmcv/bundle.hpp"

#include <string>
#include <vector>

namespace tmcv {

// Verified: computed from the root datum alone. DataValidated: rests on bundled
// data that passed validation. OutOfScope: recorded, nothing is computed.
// Failed: a check ran and did not give the required answer.
enum class Status { Verified, DataValidated, OutOfScope, Failed };
std::string status_name(Status s);

struct ReportSection {
    std::string title;
    Status status = Status::Verified;
    std::vector<std::string> evidence;
};

struct Report {
    Kind kind = Kind::A1;
    Int p = 0;
    std::string criterion;
    std::vector<ReportSection> sections;

    // 0 when no section failed, 1 otherwise.
    int exit_status() const;
};

inline constexpr const char* kReportSchema = "tmcv.report/1";

// Throws UnsupportedCase for a non-prime p and MissingData when a needed file is absent.
Report build_report(const DatasetBundle& bundle, Kind k, Int p);

std::string render_text(const Report& r);
Json to_json(const Report& r);
Report report_from_json(const Json& j);

bool is_prime(Int p);

} // namespace tmcv
