#ifndef CONSTACODE_VERIFY_HPP
#define CONSTACODE_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace constacode::cli {

/// One verification check: pass/fail on string equality of expected vs
/// computed, or flagged for known discrepancies that are reported without
/// failing the suite.
struct CheckRecord {
    enum class Status { Pass, Fail, Flagged };
    std::string id;
    std::string claim;
    std::string expected;
    std::string computed;
    Status status = Status::Fail;
    double ms = 0.0;
};

struct RunReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<CheckRecord> checks;
    int passed = 0, failed = 0, flagged = 0;
};

/// suite: "paper-examples", "theorems" or "all".
RunReport run_verify(const std::string& suite, bool extended, std::uint64_t seed, std::int64_t cap, int threads);

std::string report_to_json(const RunReport& rep);     // stable: no timings
std::string report_to_table(const RunReport& rep);    // human, with timings

}  // namespace constacode::cli

#endif
