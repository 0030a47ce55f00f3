#include "repdec/simulator.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace repdec {

void validate(const TrialConfig& config) {
    if (config.trials == 0) throw std::invalid_argument("trials must be at least 1");
    if (config.tau > config.code.length())
        throw std::invalid_argument("tau = " + std::to_string(config.tau) + " exceeds code length " +
                                    std::to_string(config.code.length()));
    validate_strategy(config.strategy, config.code.repetitions());
}

std::vector<std::uint32_t> ErrorPattern::column_counts(std::uint32_t n) const {
    std::vector<std::uint32_t> counts(n, 0);
    for (const auto& e : entries) ++counts.at(e.position);
    return counts;
}

std::mt19937_64 trial_stream(std::uint64_t seed, std::uint32_t tau, std::uint64_t trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), tau,
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
    return std::mt19937_64(seq);
}

Injection inject_errors(const Field& field, const ReceivedWord& sent, std::uint32_t tau, std::mt19937_64& rng,
                        bool distinct_column_values, bool allow_zero_values) {
    const std::uint32_t total = sent.blocks() * sent.length();
    if (tau > total) throw std::invalid_argument("cannot place " + std::to_string(tau) + " errors in " +
                                                 std::to_string(total) + " coordinates");
    std::vector<std::uint32_t> coords(total);
    std::iota(coords.begin(), coords.end(), 0u);
    for (std::uint32_t t = 0; t < tau; ++t) {
        std::uniform_int_distribution<std::uint32_t> pick(t, total - 1);
        std::swap(coords[t], coords[pick(rng)]);
    }
    coords.resize(tau);
    std::sort(coords.begin(), coords.end());

    Injection out{sent, {}};
    out.pattern.entries.reserve(tau);
    std::uniform_int_distribution<Elem> value(allow_zero_values ? 0 : 1, field.size() - 1);
    std::vector<std::vector<Elem>> used(sent.length());  // received values of errored entries per column
    for (auto c : coords) {
        const std::uint32_t block = c / sent.length(), position = c % sent.length();
        const Elem original = sent.at(block, position);
        Elem delta = value(rng);
        if (delta == 0) continue;
        if (distinct_column_values) {
            auto& seen = used[position];
            if (seen.size() >= field.size() - 1)
                throw std::invalid_argument("field too small for distinct error values in one column");
            while (delta == 0 || std::find(seen.begin(), seen.end(), field.add(original, delta)) != seen.end())
                delta = value(rng);
            seen.push_back(field.add(original, delta));
        }
        out.word.at(block, position) = field.add(original, delta);
        out.pattern.entries.push_back({block, position, delta});
    }
    return out;
}

TrialOutcome run_trial(const TrialConfig& config, std::uint64_t trial) {
    const RepeatedCode& code = config.code;
    const Field& f = code.field();
    auto rng = trial_stream(config.seed, config.tau, trial);

    std::vector<Elem> message(code.dimension(), 0);
    if (config.message == MessageMode::random) {
        std::uniform_int_distribution<Elem> sym(0, f.size() - 1);
        for (auto& c : message) c = sym(rng);
    }
    const Codeword sent = code.inner().encode(UniPoly(message));
    const ReceivedWord clean(code.repetitions(), code.inner().length(), lift(code, sent));
    const auto injected =
        inject_errors(f, clean, config.tau, rng, config.distinct_column_values, config.allow_zero_values);

    const auto start = std::chrono::steady_clock::now();
    const DecodeOutput out = decode(code, injected.word, config.strategy, config.y_cap);
    const auto stop = std::chrono::steady_clock::now();

    TrialOutcome r;
    r.success = find_candidate(out, sent) >= 0;
    r.list_size = static_cast<std::uint32_t>(out.candidates.size());
    r.sent_score = score(out.multiplicities, sent);
    r.decode_us = std::chrono::duration<double, std::micro>(stop - start).count();
    return r;
}

std::string describe_code(const RepeatedCode& code) {
    std::ostringstream os;
    os << "[" << code.inner().length() << "," << code.dimension() << "," << code.inner().min_distance() << "] over "
       << code.field().describe() << ", l=" << code.repetitions();
    return os.str();
}

TrialReport summarize(const TrialConfig& config, const std::vector<TrialOutcome>& outcomes, double wall_seconds) {
    TrialReport r;
    r.code_label = describe_code(config.code);
    r.strategy_label = to_string(config.strategy);
    r.tau = config.tau;
    r.trials = outcomes.size();
    r.wall_seconds = wall_seconds;
    std::uint64_t list_total = 0;
    double time_total = 0;
    std::vector<double> times;
    times.reserve(outcomes.size());
    for (const auto& o : outcomes) {
        r.successes += o.success;
        list_total += o.list_size;
        r.max_list = std::max(r.max_list, o.list_size);
        time_total += o.decode_us;
        times.push_back(o.decode_us);
    }
    if (!outcomes.empty()) {
        r.rate = static_cast<double>(r.successes) / static_cast<double>(r.trials);
        r.mean_list = static_cast<double>(list_total) / static_cast<double>(r.trials);
        r.mean_decode_us = time_total / static_cast<double>(r.trials);
        auto mid = times.begin() + static_cast<std::ptrdiff_t>(times.size() / 2);
        std::nth_element(times.begin(), mid, times.end());
        r.p50_decode_us = *mid;
    }
    return r;
}

TrialReport run_trials_serial(const TrialConfig& config) {
    validate(config);
    std::vector<TrialOutcome> outcomes(config.trials);
    const auto start = std::chrono::steady_clock::now();
    for (std::uint32_t t = 0; t < config.trials; ++t) outcomes[t] = run_trial(config, t);
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return summarize(config, outcomes, wall);
}

TrialReport run_trials(const TrialConfig& config, unsigned threads) {
    validate(config);
    std::vector<TrialOutcome> outcomes(config.trials);
    const auto count = static_cast<std::int64_t>(config.trials);
    const auto start = std::chrono::steady_clock::now();
#ifdef _OPENMP
    const int workers = threads > 0 ? static_cast<int>(threads) : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 4) num_threads(workers)
#endif
    for (std::int64_t t = 0; t < count; ++t) outcomes[t] = run_trial(config, static_cast<std::uint64_t>(t));
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    (void)threads;
    return summarize(config, outcomes, wall);
}

CompareReport compare_strategies(const std::vector<Series>& series, unsigned threads) {
    CompareReport report;
    std::uint32_t min_degree = ~0u;
    for (const auto& s : series) min_degree = std::min(min_degree, s.base.code.field().degree());

    for (const auto& s : series) {
        std::vector<TrialReport> rows;
        for (auto tau : s.taus) {
            TrialConfig cfg = s.base;
            cfg.tau = tau;
            rows.push_back(run_trials(cfg, threads));
        }
        report.series.emplace_back(s.label, std::move(rows));
    }

    auto norm = [&](std::size_t idx) {
        const Field& f = series[idx].base.code.field();
        return std::pow(static_cast<double>(f.characteristic()), static_cast<double>(f.degree() - min_degree));
    };
    for (std::size_t a = 0; a < series.size(); ++a) {
        for (std::size_t b = a + 1; b < series.size(); ++b) {
            for (const auto& ra : report.series[a].second) {
                for (const auto& rb : report.series[b].second) {
                    if (ra.tau != rb.tau || ra.p50_decode_us <= 0 || rb.p50_decode_us <= 0) continue;
                    const bool a_slower = ra.p50_decode_us >= rb.p50_decode_us;
                    const auto& slow = a_slower ? ra : rb;
                    const auto& fast = a_slower ? rb : ra;
                    const std::size_t is = a_slower ? a : b, ifast = a_slower ? b : a;
                    TimingRatio t;
                    t.numerator = series[is].label;
                    t.denominator = series[ifast].label;
                    t.tau = ra.tau;
                    t.ratio = slow.p50_decode_us / fast.p50_decode_us;
                    t.normalized_ratio = (slow.p50_decode_us / norm(is)) / (fast.p50_decode_us / norm(ifast));
                    report.ratios.push_back(t);
                }
            }
        }
    }
    return report;
}

namespace {

Series make_series(std::string label, const FieldPtr& field, std::uint32_t n, std::uint32_t k, std::uint32_t ell,
                   AssignmentStrategy strategy, std::vector<std::uint32_t> taus, std::uint32_t trials,
                   std::uint64_t seed) {
    TrialConfig cfg{RepeatedCode(RSCode(field, n, k), ell), strategy, 0, trials, seed, false, MessageMode::zero, false, std::nullopt};
    return {std::move(label), std::move(cfg), std::move(taus)};
}

}  // namespace

TableSpec builtin_table(int id, std::uint32_t trials, std::uint64_t seed) {
    const auto gf64 = Field::make(2, 6);
    const auto gf512 = Field::make(2, 9);
    const std::uint32_t dims[] = {14, 40, 54};
    if (id < 1 || id > 9) throw std::out_of_range("table id must be in 1..9");
    const std::uint32_t k = dims[(id - 1) / 3];
    const int kind = (id - 1) % 3;  // 0: count, 1: thresholds, 2: long RS code, multiplicity one

    static const std::vector<std::uint32_t> count_grid[] = {
        {227, 228, 229, 230, 232, 233, 234}, {155, 156, 157, 160, 165, 170}, {95, 96, 98, 100, 105, 110, 111}};
    static const std::vector<std::uint32_t> threshold_grid[] = {
        {185, 186, 187, 188, 190, 219, 220}, {113, 114, 115, 116, 117, 150, 152, 153}, {60, 61, 64, 65, 88, 89, 90}};
    static const std::vector<std::uint32_t> long_grid[] = {{229, 230, 231}, {175, 176, 177, 178}, {150, 155, 156, 157}};
    const std::size_t g = static_cast<std::size_t>((id - 1) / 3);

    TableSpec spec;
    spec.id = id;
    std::ostringstream title;
    switch (kind) {
        case 0:
            title << "repeated [" << 5 * 63 << "," << k << "] code, inner [63," << k << "] over GF(2^6), count";
            spec.series.push_back(make_series("count", gf64, 63, k, 5, CountAssignment{}, count_grid[g], trials, seed));
            break;
        case 1:
            title << "repeated [" << 5 * 63 << "," << k << "] code, inner [63," << k << "] over GF(2^6), threshold";
            spec.series.push_back(make_series("threshold b=3", gf64, 63, k, 5, ThresholdAssignment{3},
                                              threshold_grid[g], trials, seed));
            spec.series.push_back(make_series("threshold b=2", gf64, 63, k, 5, ThresholdAssignment{2},
                                              threshold_grid[g], trials, seed));
            break;
        default:
            title << "[315," << k << "] RS code over GF(2^9), multiplicity one";
            spec.series.push_back(
                make_series("rs315 count", gf512, 315, k, 1, CountAssignment{}, long_grid[g], trials, seed));
            break;
    }
    spec.title = title.str();
    return spec;
}

void write_csv_header(std::ostream& os, bool with_series) {
    if (with_series) os << "series,";
    os << "tau,successes,trials,rate,mean_list,p50_decode_us\n";
}

void write_csv_row(std::ostream& os, const TrialReport& r, const std::string* series) {
    if (series) os << *series << ",";
    os << r.tau << "," << r.successes << "," << r.trials << "," << std::fixed << std::setprecision(4) << r.rate << ","
       << std::setprecision(3) << r.mean_list << "," << std::setprecision(1) << r.p50_decode_us << "\n";
    os.unsetf(std::ios::floatfield);
}

void write_text_table(std::ostream& os,
                      const std::vector<std::pair<std::string, std::vector<TrialReport>>>& series) {
    os << std::left << std::setw(18) << "series" << std::right << std::setw(6) << "tau" << std::setw(14)
       << "success" << std::setw(9) << "rate" << std::setw(10) << "mean_list" << std::setw(14) << "p50_us" << "\n";
    for (const auto& [label, rows] : series) {
        for (const auto& r : rows) {
            std::ostringstream frac;
            frac << r.successes << "/" << r.trials;
            os << std::left << std::setw(18) << label << std::right << std::setw(6) << r.tau << std::setw(14)
               << frac.str() << std::setw(9) << std::fixed << std::setprecision(4) << r.rate << std::setw(10)
               << std::setprecision(3) << r.mean_list << std::setw(14) << std::setprecision(1) << r.p50_decode_us
               << "\n";
            os.unsetf(std::ios::floatfield);
        }
    }
}

void write_ratios(std::ostream& os, const std::vector<TimingRatio>& ratios) {
    for (const auto& r : ratios) {
        os << "tau=" << r.tau << ": '" << r.denominator << "' is " << std::fixed << std::setprecision(2) << r.ratio
           << "x faster than '" << r.numerator << "' (p50 decode time";
        if (std::abs(r.normalized_ratio - r.ratio) > 1e-12)
            os << "; " << r.normalized_ratio << "x after dividing by p^(m - m_min)";
        os << ")\n";
        os.unsetf(std::ios::floatfield);
    }
}

}  // namespace repdec
