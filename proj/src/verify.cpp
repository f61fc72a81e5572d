#include "degrowth/verify.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

namespace degrowth {

std::string status_name(RowStatus s) {
    switch (s) {
        case RowStatus::pass: return "pass";
        case RowStatus::fail: return "FAIL";
        case RowStatus::report: return "report";
        case RowStatus::no_formula: return "no-formula";
        case RowStatus::error: return "ERROR";
    }
    return "?";
}

bool VerifyReport::failed() const {
    return std::any_of(rows.begin(), rows.end(),
                       [](const VerifyRow& r) { return r.status == RowStatus::fail || r.status == RowStatus::error; });
}

std::string params_string(const ZooParams& p) {
    std::string out;
    for (const auto& [k, v] : p) {
        if (!out.empty()) out += ",";
        out += k + "=" + std::to_string(v);
    }
    return out;
}

namespace {

void check_direction(const ZooEntry& e, bool inverse, const DegreeLaw& law, bool mutate, const VerifyOptions& opts,
                     std::vector<VerifyRow>& out) {
    const std::size_t h = e.horizon_hint;
    VerifyRow base;
    base.entry = e.name;
    base.params = params_string(e.params);
    base.direction = inverse ? "inverse" : "forward";
    try {
        auto degs = entry_degrees(e, h, inverse, opts.seed);
        for (std::size_t n = 1; n <= h; ++n) {
            auto want = law(n);
            if (!want) continue;
            VerifyRow row = base;
            row.n = n;
            row.expected = mutate ? *want + 1 : *want;
            row.computed = degs.sequence[n];
            row.exact = n <= degs.exact_upto;
            const bool match = Rat(static_cast<unsigned long>(*row.computed)) == *row.expected;
            if (e.mode == CheckMode::report) {
                row.status = RowStatus::report;
                row.note = match ? "matches" : "differs";
            } else {
                row.status = match ? RowStatus::pass : RowStatus::fail;
            }
            out.push_back(std::move(row));
        }
    } catch (const Error& err) {
        VerifyRow row = base;
        row.status = e.mode == CheckMode::report ? RowStatus::report : RowStatus::error;
        row.note = err.what();
        out.push_back(std::move(row));
    }
}

std::vector<VerifyRow> verify_entry(const ZooEntry& e, const VerifyOptions& opts) {
    std::vector<VerifyRow> rows;
    const bool mutate = std::find(opts.off_by_one.begin(), opts.off_by_one.end(), e.name) != opts.off_by_one.end();
    if (!e.expected_degree && !e.expected_inverse_degree) {
        VerifyRow row;
        row.entry = e.name;
        row.params = params_string(e.params);
        row.direction = "forward";
        row.status = RowStatus::no_formula;
        row.note = e.formula;
        rows.push_back(std::move(row));
        return rows;
    }
    if (e.expected_degree) check_direction(e, false, e.expected_degree, mutate, opts, rows);
    if (e.expected_inverse_degree && e.map.has_inverse_info())
        check_direction(e, true, e.expected_inverse_degree, mutate, opts, rows);
    return rows;
}

}  // namespace

VerifyReport verify_paper(const std::vector<ZooEntry>& entries, const VerifyOptions& opts) {
    // Entries are independent; workers take the next index, rows are joined in entry order.
    std::vector<std::vector<VerifyRow>> per(entries.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i; (i = next++) < entries.size();) per[i] = verify_entry(entries[i], opts);
    };
    std::size_t threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min(threads, entries.size());
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    VerifyReport rep;
    for (auto& rows : per) rep.rows.insert(rep.rows.end(), rows.begin(), rows.end());
    return rep;
}

VerifyReport verify_paper(const VerifyOptions& opts) { return verify_paper(verification_entries(), opts); }

nlohmann::json to_json(const VerifyReport& r) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : r.rows) {
        rows.push_back({{"entry", row.entry},
                        {"params", row.params},
                        {"direction", row.direction},
                        {"n", row.n},
                        {"expected", row.expected ? nlohmann::json(to_string(*row.expected)) : nlohmann::json()},
                        {"computed", row.computed ? nlohmann::json(*row.computed) : nlohmann::json()},
                        {"method", row.exact ? "exact" : "line"},
                        {"status", status_name(row.status)},
                        {"note", row.note}});
    }
    return {{"failed", r.failed()}, {"rows", rows}};
}

std::string to_csv(const VerifyReport& r) {
    std::ostringstream out;
    out << "entry,params,direction,n,expected,computed,method,status\n";
    for (const auto& row : r.rows) {
        out << row.entry << ",\"" << row.params << "\"," << row.direction << "," << row.n << ","
            << (row.expected ? to_string(*row.expected) : "") << ","
            << (row.computed ? std::to_string(*row.computed) : "") << "," << (row.exact ? "exact" : "line") << ","
            << status_name(row.status) << "\n";
    }
    return out.str();
}

std::string to_text(const VerifyReport& r) {
    std::ostringstream out;
    std::size_t pass = 0, fail = 0, other = 0;
    for (const auto& row : r.rows) {
        std::string name = row.entry + (row.params.empty() ? "" : "(" + row.params + ")");
        out << name << std::string(name.size() < 28 ? 28 - name.size() : 1, ' ') << row.direction << "  ";
        if (row.status == RowStatus::no_formula || row.status == RowStatus::error ||
            (row.status == RowStatus::report && !row.computed)) {
            out << status_name(row.status) << "  " << row.note << "\n";
        } else {
            out << "n=" << row.n << "  expected " << to_string(*row.expected) << "  computed " << *row.computed
                << (row.exact ? "" : " (line)") << "  " << status_name(row.status);
            if (!row.note.empty()) out << " (" << row.note << ")";
            out << "\n";
        }
        if (row.status == RowStatus::pass) ++pass;
        else if (row.status == RowStatus::fail || row.status == RowStatus::error) ++fail;
        else ++other;
    }
    out << pass << " passed, " << fail << " failed, " << other << " reported or without formula\n";
    return out.str();
}

}  // namespace degrowth
