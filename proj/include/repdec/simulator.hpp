#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "repdec/repeated_decoder.hpp"

namespace repdec {

enum class MessageMode { zero, random };

struct TrialConfig {
    RepeatedCode code;
    AssignmentStrategy strategy = CountAssignment{};
    std::uint32_t tau = 0;
    std::uint32_t trials = 1;
    std::uint64_t seed = 0;
    /// Resample error values so that two errors in one column never produce the same received symbol.
    bool distinct_column_values = false;
    MessageMode message = MessageMode::zero;
    /// Draw error values from the whole field, so a chosen coordinate may stay correct.
    bool allow_zero_values = false;
    /// Optional y-degree cap passed to decode.
    std::optional<std::uint32_t> y_cap = std::nullopt;
};

/// Throws std::invalid_argument if tau > l n, trials == 0 or the strategy is invalid.
void validate(const TrialConfig& config);

struct ErrorEntry {
    std::uint32_t block = 0;
    std::uint32_t position = 0;
    Elem delta = 0;  // nonzero
};

struct ErrorPattern {
    std::vector<ErrorEntry> entries;  // distinct coordinates
    std::uint32_t weight() const noexcept { return static_cast<std::uint32_t>(entries.size()); }
    /// tau_i: number of errored blocks at each position.
    std::vector<std::uint32_t> column_counts(std::uint32_t n) const;
};

/// Independent stream for one trial, a function of (seed, tau, trial) only.
std::mt19937_64 trial_stream(std::uint64_t seed, std::uint32_t tau, std::uint64_t trial);

struct Injection {
    ReceivedWord word;
    ErrorPattern pattern;
};

/// Adds a uniform nonzero value at tau distinct coordinates chosen uniformly
/// among the l n coordinates of `sent` (l rows of n). Several errored blocks
/// may share a position. With allow_zero_values the added value is uniform
/// over the whole field and zero entries are dropped from the pattern.
/// Throws std::invalid_argument if tau > l n.
Injection inject_errors(const Field& field, const ReceivedWord& sent, std::uint32_t tau, std::mt19937_64& rng,
                        bool distinct_column_values = false, bool allow_zero_values = false);

struct TrialOutcome {
    bool success = false;
    std::uint32_t list_size = 0;
    std::uint64_t sent_score = 0;
    double decode_us = 0.0;
};

/// One trial, reproducible in isolation.
TrialOutcome run_trial(const TrialConfig& config, std::uint64_t trial);

struct TrialReport {
    std::string code_label;
    std::string strategy_label;
    std::uint32_t tau = 0;
    std::uint64_t successes = 0;
    std::uint64_t trials = 0;
    double rate = 0.0;
    double mean_list = 0.0;
    std::uint32_t max_list = 0;
    double p50_decode_us = 0.0;
    double mean_decode_us = 0.0;
    double wall_seconds = 0.0;
};

TrialReport summarize(const TrialConfig& config, const std::vector<TrialOutcome>& outcomes, double wall_seconds);

/// Reference implementation: trials in index order on the calling thread.
TrialReport run_trials_serial(const TrialConfig& config);

/// Trials spread over up to `threads` OpenMP workers (0 = runtime default).
/// Success and list-size fields equal run_trials_serial for the same config.
TrialReport run_trials(const TrialConfig& config, unsigned threads = 0);

std::string describe_code(const RepeatedCode& code);

/// A strategy evaluated over a grid of error counts.
struct Series {
    std::string label;
    TrialConfig base;  // tau is overridden per grid point
    std::vector<std::uint32_t> taus;
};

struct TimingRatio {
    std::string numerator;    // slower series label
    std::string denominator;  // faster series label
    std::uint32_t tau = 0;
    double ratio = 0.0;             // p50 time of `numerator` / p50 time of `denominator`
    double normalized_ratio = 0.0;  // same after dividing each time by p^(m - m_min)
};

struct CompareReport {
    std::vector<std::pair<std::string, std::vector<TrialReport>>> series;
    std::vector<TimingRatio> ratios;
};

/// Runs every series and forms pairwise median-time ratios at shared tau values.
/// Time normalization divides by p^(m - m_min) across fields of one characteristic.
CompareReport compare_strategies(const std::vector<Series>& series, unsigned threads = 0);

/// Built-in series for tables 1..9 (grids hard-coded). Throws std::out_of_range for other ids.
struct TableSpec {
    int id = 0;
    std::string title;
    std::vector<Series> series;
};
TableSpec builtin_table(int id, std::uint32_t trials, std::uint64_t seed);

void write_csv_header(std::ostream& os, bool with_series);
void write_csv_row(std::ostream& os, const TrialReport& r, const std::string* series = nullptr);
void write_text_table(std::ostream& os, const std::vector<std::pair<std::string, std::vector<TrialReport>>>& series);
void write_ratios(std::ostream& os, const std::vector<TimingRatio>& ratios);

}  // namespace repdec
