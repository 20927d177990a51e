#pragma once
// Named verification checks over the whole engine, producing a reproducible
// report shared by the command line driver and the test binaries.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace a4ring {

// canonical execution order of the known check names
const std::vector<std::string>& known_checks();

// knobs of a verification run
struct RunConfig {
    int max_n = 6;          // tower depth floor (runs build deeper when tensor targets need it)
    int max_k = 2;          // highest certified shift level
    int syzygy_sweep = 30;  // subgroup chain verified for 2 <= n <= syzygy_sweep
    std::uint64_t seed = 1;
    int exhaustive_cap = 22;
    std::uint64_t sample_cap = 1ull << 20;
    bool deep_tensors = false;  // run the tensor-shift identities at every k <= max_k
    bool timings = false;       // measured elapsed_ms (off = zeros, byte-stable reports)
    std::vector<std::string> checks = known_checks();
    std::string format = "text";  // "text" | "json"
};

// rejects nonpositive bounds, a sweep below 2, unknown check names, an empty
// check list, and unknown formats with std::invalid_argument
void validate(const RunConfig& config);

struct CheckResult {
    std::string check_id;
    std::string statement;
    std::string status;  // "pass" | "fail" | "report" | "indeterminate"
    std::vector<std::string> witnesses;  // single-line certificates
    long elapsed_ms = 0;
    std::vector<std::pair<std::string, std::string>> parameters;
};

// runs the selected checks in canonical order (duplicates collapsed); the
// result list is deterministic for a fixed config when timings are off
std::vector<CheckResult> run(const RunConfig& config);

struct Summary {
    int pass = 0, fail = 0, report = 0, indeterminate = 0;
};
Summary summarize(const std::vector<CheckResult>& results);

// 0 when nothing failed, 1 otherwise; indeterminate alone stays 0
int exit_code(const std::vector<CheckResult>& results);

// one header block and one line per result; byte-identical across runs with
// the same config when timings are off
std::string render_text(const RunConfig& config, const std::vector<CheckResult>& results);
std::string render_json(const RunConfig& config, const std::vector<CheckResult>& results);

}  // namespace a4ring
