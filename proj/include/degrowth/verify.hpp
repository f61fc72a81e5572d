#pragma once

#include "degrowth/zoo.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace degrowth {

enum class RowStatus { pass, fail, report, no_formula, error };

std::string status_name(RowStatus s);

/// One checked value: deg f^n (direction "forward") or deg f^-n ("inverse").
struct VerifyRow {
    std::string entry;
    std::string params;  // "d=1,p=2"
    std::string direction;
    std::size_t n = 0;
    std::optional<Rat> expected;
    std::optional<std::uint64_t> computed;
    bool exact = true;  // false when the line method supplied the value
    RowStatus status = RowStatus::pass;
    std::string note;
};

struct VerifyReport {
    std::vector<VerifyRow> rows;
    /// A hard-mode row failed or errored.
    bool failed() const;
};

struct VerifyOptions {
    /// Harness self-check: the laws of these entry names are shifted by +1.
    std::vector<std::string> off_by_one;
    std::uint64_t seed = 1;
    std::size_t threads = 0;  // 0: one per hardware thread
};

/// Checks every entry's degree laws for n = 1..horizon_hint, in entry order.
VerifyReport verify_paper(const std::vector<ZooEntry>& entries, const VerifyOptions& opts = {});
/// Same over verification_entries().
VerifyReport verify_paper(const VerifyOptions& opts = {});

std::string params_string(const ZooParams& p);
nlohmann::json to_json(const VerifyReport& r);
/// "entry,params,direction,n,expected,computed,method,status\n..."
std::string to_csv(const VerifyReport& r);
std::string to_text(const VerifyReport& r);

}  // namespace degrowth
