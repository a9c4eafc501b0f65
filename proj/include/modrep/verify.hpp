#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "modrep/branching.hpp"
#include "modrep/partition.hpp"

namespace modrep::verify {

enum class LemmaId { L52, L47, L12, L17, L23, L29, L18, L20A, JSEQ, MULLX, NUWF, CLOSED };

const char *to_string(LemmaId id);
std::optional<LemmaId> lemma_from_string(std::string_view name);

/// Registration order; the calibration pair MULLX, CLOSED runs first.
const std::vector<LemmaId> &all_lemma_ids();

struct Sweep {
    int n_min = 1;
    int n_max = 0;
    std::vector<int> primes;

    friend bool operator==(const Sweep &, const Sweep &) = default;
};

struct LemmaCheck {
    LemmaId id;
    Sweep sweep;
    std::string description;
};

struct Counterexample {
    // Position in the sweep: prime index, n, enumeration index. Shard merges
    // sort on it so that merged and unsharded runs agree.
    std::array<std::int64_t, 3> order{};
    std::string input;
    std::string observed;
    std::string expected;

    friend bool operator==(const Counterexample &a, const Counterexample &b) {
        return a.input == b.input && a.observed == b.observed &&
               a.expected == b.expected;
    }
};

struct LemmaReport {
    LemmaId id = LemmaId::L52;
    Sweep sweep;
    std::int64_t instances = 0;
    std::vector<Counterexample> counterexamples;
    std::int64_t truncated = 0; // counterexamples found beyond the cap
    std::map<std::string, std::int64_t> observations;
    std::chrono::milliseconds elapsed{0};

    bool pass() const { return counterexamples.empty() && truncated == 0; }
};

struct RunOptions {
    Orientation orientation = kCalibratedOrientation;
    std::size_t cap = 25;
    int shard_count = 1;
    int shard_index = 0;
    int ceiling = 36;
};

/// The default sweep of each check.
LemmaCheck default_check(LemmaId id);
std::vector<LemmaCheck> default_checks();

/// Throws SweepTooLarge when n_max exceeds the ceiling, MalformedPartition
/// for a bad shard specification.
LemmaReport run_check(const LemmaCheck &check, const RunOptions &options = {});

/// Combines two shards of the same check.
LemmaReport merge_reports(const LemmaReport &a, const LemmaReport &b,
                          std::size_t cap = 25);

struct RunConfig {
    std::optional<int> n_max; // replaces every check's n_max when set
    RunOptions options;
    bool parallel = true;
};

struct RunResult {
    std::vector<LemmaReport> reports;
    int exit_status = 0; // 0 all pass, 1 counterexample found
    bool calibration_aborted = false;
};

/// Runs the calibration checks, then (if they pass) every other check.
RunResult run_all(const RunConfig &config = {});

nlohmann::ordered_json to_json(const LemmaReport &report,
                               bool with_elapsed = true);
LemmaReport report_from_json(const nlohmann::ordered_json &j);
/// One JSON object per line.
std::string to_jsonl(const std::vector<LemmaReport> &reports,
                     bool with_elapsed = true);

/// (n)^M predicted by the one-row closed form: ((a+1)^b, a^{p-1-b}) where
/// n = a(p-1) + b, 0 <= b < p-1.
Partition closed_form_row(int n, Prime p);

/// (n-i, i)^M at p = 5 predicted by ((a+1)^b, a^{4-b}, 1^i) where
/// n - i = 4a + b, 0 <= b <= 3. Zero parts are dropped; the result can be
/// 5-singular when the formula is used outside its range.
Partition closed_form_two_row(int n, int i);

/// Smallest n at which the two-row closed form is asserted for i >= 1.
inline constexpr int kTwoRowClosedFormMinN = 12;

struct OrientationTrial {
    Orientation orientation;
    std::int64_t mullx_failures = 0;
    std::int64_t closed_failures = 0;
    bool pass() const { return mullx_failures == 0 && closed_failures == 0; }
};

struct CalibrationReport {
    std::vector<OrientationTrial> trials;
    std::optional<Orientation> selected; // set iff exactly one trial passes
    bool matches_frozen() const {
        return selected && *selected == kCalibratedOrientation;
    }
};

/// Runs MULLX and CLOSED under both orientations for n <= n_max.
CalibrationReport calibrate(int n_max = 12);

} // namespace modrep::verify
