// Command-line front end: encode, decode, simulate, bounds, table.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "repdec/bounds.hpp"
#include "repdec/config.hpp"
#include "repdec/simulator.hpp"

using namespace repdec;

namespace {

struct CodeFlags {
    std::string config;
    std::string field = "2^6";
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    std::uint32_t ell = 1;
    std::string strategy = "count";
    std::optional<std::uint32_t> b;
    std::vector<Elem> eval_points;
    std::string format = "text";
    unsigned threads = 0;
    std::optional<std::uint32_t> y_cap;
};

void add_code_flags(CLI::App* app, CodeFlags& f) {
    app->add_option("--config", f.config, "JSON config file; its values override flags")->check(CLI::ExistingFile);
    app->add_option("--field", f.field, "field as p^m or q (default modulus)")->capture_default_str();
    app->add_option("--n", f.n, "inner code length");
    app->add_option("--k", f.k, "inner code dimension");
    app->add_option("--l", f.ell, "repetition count")->capture_default_str();
    app->add_option("--strategy", f.strategy, "multiplicity assignment")
        ->check(CLI::IsMember({"count", "threshold"}))
        ->capture_default_str();
    app->add_option("--b", f.b, "threshold for --strategy threshold (default floor(l/2)+1)");
    app->add_option("--eval-points", f.eval_points, "explicit evaluation points (default: powers of a primitive element)");
    app->add_option("--y-cap", f.y_cap, "upper limit on the y-degree of Q (default floor(C/w))");
}

struct Resolved {
    RunConfig cfg;
    FieldPtr field;
    std::uint32_t n = 0, k = 0, ell = 1;
    std::string strategy;
    std::optional<std::uint32_t> b;
    std::optional<std::uint32_t> y_cap;
};

Resolved resolve(const CodeFlags& f) {
    Resolved r;
    if (!f.config.empty()) r.cfg = load_config(f.config);
    r.field = r.cfg.field ? r.cfg.field : parse_field(f.field);
    r.n = r.cfg.n.value_or(f.n);
    r.k = r.cfg.k.value_or(f.k);
    r.ell = r.cfg.ell.value_or(f.ell);
    r.strategy = r.cfg.strategy.value_or(f.strategy);
    r.b = r.cfg.b ? r.cfg.b : f.b;
    r.y_cap = r.cfg.y_cap ? r.cfg.y_cap : f.y_cap;
    if (!r.cfg.eval_points && !f.eval_points.empty()) r.cfg.eval_points = f.eval_points;
    if (r.cfg.eval_points && r.n == 0) r.n = static_cast<std::uint32_t>(r.cfg.eval_points->size());
    if (r.n == 0 || r.k == 0) throw ConfigError("code needs --n and --k (or a config file)");
    if (r.ell == 0) throw ConfigError("--l must be at least 1");
    return r;
}

RepeatedCode build_code(const Resolved& r) { return RepeatedCode(make_code(r.field, r.n, r.k, r.cfg.eval_points), r.ell); }

std::vector<Elem> parse_symbols(const std::string& text) {
    std::istringstream in(text);
    std::vector<Elem> out;
    long long v;
    while (in >> v) {
        if (v < 0) throw ConfigError("negative symbol in message");
        out.push_back(static_cast<Elem>(v));
    }
    if (!in.eof()) throw ConfigError("message must be whitespace-separated symbol indices");
    return out;
}

int cmd_encode(const CodeFlags& flags, const std::string& message, std::optional<std::uint32_t> tau,
               std::optional<std::uint64_t> seed, const std::string& output) {
    const auto r = resolve(flags);
    const auto code = build_code(r);
    std::vector<Elem> msg = parse_symbols(message);
    for (auto v : msg)
        if (v >= r.field->size()) throw ConfigError("message symbol outside the field");
    const Codeword c = code.inner().encode(UniPoly(msg));
    ReceivedWord word(code.repetitions(), code.inner().length(), lift(code, c));
    if (tau) {
        if (!seed) throw ConfigError("--tau needs an explicit --seed");
        auto rng = trial_stream(*seed, *tau, 0);
        word = inject_errors(*r.field, word, *tau, rng, r.cfg.distinct_column_values.value_or(false),
                             r.cfg.allow_zero_values.value_or(false))
                   .word;
    }
    if (output.empty() || output == "-") {
        write_received_word(std::cout, word);
    } else {
        std::ofstream out(output);
        if (!out) throw ConfigError("cannot write " + output);
        write_received_word(out, word);
    }
    return 0;
}

int cmd_decode(const CodeFlags& flags, const std::string& input, bool verbose) {
    const auto r = resolve(flags);
    const auto code = build_code(r);
    const auto strategy = make_strategy(r.strategy, r.b, r.ell);
    ReceivedWord word = [&] {
        if (input.empty() || input == "-") return read_received_word(std::cin, r.ell, r.n, *r.field);
        std::ifstream in(input);
        if (!in) throw ConfigError("cannot open received word file " + input);
        return read_received_word(in, r.ell, r.n, *r.field);
    }();

    const DecodeOutput out = decode(code, word, strategy, r.y_cap);
    const auto& d = out.diagnostics;
    std::cout << "code: " << describe_code(code) << "\nstrategy: " << to_string(strategy) << "\n";
    std::cout << "multiplicities:";
    for (std::uint32_t i = 0; i < out.multiplicities.length(); ++i)
        for (const auto& [beta, m] : out.multiplicities.column(i)) std::cout << " m[" << i + 1 << "," << beta << "]=" << m;
    std::cout << "\nconditions: " << d.conditions << "  N: " << d.budget << "  C: " << d.weighted_cap
              << "  L: " << d.y_cap << "\nQ leading monomial: " << to_string(d.q_leading)
              << "  weighted degree: " << d.q_weighted_degree << "\n";
    if (verbose) std::cout << "Q = " << to_string(out.q, WeightedOrder(interpolation_weight(code.inner()))) << "\n";
    std::cout << "candidates: " << out.candidates.size() << "\n";
    for (const auto& c : out.candidates) {
        std::cout << "  distance " << c.distance << "  score " << c.score << "  message [";
        for (std::size_t t = 0; t < code.dimension(); ++t) std::cout << (t ? " " : "") << c.message.coeff(t);
        std::cout << "]  codeword [";
        for (std::size_t t = 0; t < c.inner.size(); ++t) std::cout << (t ? " " : "") << c.inner[t];
        std::cout << "]\n";
    }
    return out.candidates.empty() ? 2 : 0;
}

int cmd_simulate(const CodeFlags& flags, std::vector<std::uint32_t> taus, std::optional<std::uint32_t> trials,
                 std::optional<std::uint64_t> seed, bool distinct, bool zero_values, const std::string& message) {
    const auto r = resolve(flags);
    if (!r.cfg.taus.empty()) taus = r.cfg.taus;
    if (r.cfg.trials) trials = r.cfg.trials;
    if (r.cfg.seed) seed = r.cfg.seed;
    if (taus.empty()) throw ConfigError("simulate needs at least one --tau");
    if (!seed) throw ConfigError("simulate needs an explicit --seed");

    TrialConfig cfg{build_code(r), make_strategy(r.strategy, r.b, r.ell), 0, trials.value_or(100), *seed,
                    r.cfg.distinct_column_values.value_or(distinct), MessageMode::zero,
                    r.cfg.allow_zero_values.value_or(zero_values), r.y_cap};
    const std::string msg = r.cfg.message.value_or(message);
    if (msg == "random")
        cfg.message = MessageMode::random;
    else if (msg != "zero")
        throw ConfigError("--message must be zero or random");

    std::vector<TrialReport> rows;
    for (auto tau : taus) {
        cfg.tau = tau;
        rows.push_back(run_trials(cfg, flags.threads));
    }
    if (flags.format == "csv") {
        write_csv_header(std::cout, false);
        for (const auto& row : rows) write_csv_row(std::cout, row);
    } else {
        std::cout << describe_code(cfg.code) << ", strategy " << to_string(cfg.strategy) << ", seed " << cfg.seed << "\n";
        write_text_table(std::cout, {{to_string(cfg.strategy), rows}});
    }
    return 0;
}

int cmd_bounds(std::int64_t n, std::int64_t k, std::int64_t ell, std::optional<std::int64_t> b, const std::string& format) {
    bounds::BoundInput in{n, k, ell, b};
    const auto records = bounds::all_bounds(in);
    if (format == "csv") {
        std::cout << "name,value,exact,applicable\n";
        for (const auto& rec : records)
            std::cout << rec.name << "," << rec.value << "," << rec.exact << "," << (rec.applicable ? "yes" : "no") << "\n";
        return 0;
    }
    std::cout << "n=" << n << " k=" << k << " l=" << ell << " d=" << in.d() << "\n";
    for (const auto& rec : records) {
        std::cout << rec.name << ": " << rec.value;
        if (rec.exact != rec.value) std::cout << "  (exact " << rec.exact << ")";
        std::cout << "  [" << (rec.applicable ? "applicable" : "not applicable") << ": " << rec.note << "]\n";
    }
    return 0;
}

int cmd_table(int id, std::uint32_t trials, std::uint64_t seed, unsigned threads, const std::string& format,
              bool zero_values, std::optional<std::uint32_t> y_cap) {
    auto spec = builtin_table(id, trials, seed);
    for (auto& s : spec.series) {
        s.base.allow_zero_values = zero_values;
        s.base.y_cap = y_cap;
    }
    const auto report = compare_strategies(spec.series, threads);
    if (format == "csv") {
        write_csv_header(std::cout, true);
        for (const auto& [label, rows] : report.series)
            for (const auto& row : rows) write_csv_row(std::cout, row, &label);
        return 0;
    }
    std::cout << "table " << id << ": " << spec.title << " (" << trials << " trials per tau, seed " << seed << ")\n";
    write_text_table(std::cout, report.series);
    write_ratios(std::cout, report.ratios);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"List decoding of repeated Reed-Solomon codes"};
    app.require_subcommand(1);

    CodeFlags enc_flags, dec_flags, sim_flags;

    auto* enc = app.add_subcommand("encode", "encode a message into the repeated code, optionally adding errors");
    add_code_flags(enc, enc_flags);
    std::string enc_message, enc_output;
    std::optional<std::uint32_t> enc_tau;
    std::optional<std::uint64_t> enc_seed;
    enc->add_option("--message", enc_message, "message coefficients, low degree first (default zero)");
    enc->add_option("--tau", enc_tau, "number of random errors to inject");
    enc->add_option("--seed", enc_seed, "seed for error injection");
    enc->add_option("--output", enc_output, "output file (default stdout)");

    auto* dec = app.add_subcommand("decode", "list-decode a received word");
    add_code_flags(dec, dec_flags);
    std::string dec_input;
    bool dec_verbose = false;
    dec->add_option("--input", dec_input, "received word file: l rows of n symbol indices (default stdin)");
    dec->add_flag("--verbose", dec_verbose, "print the interpolation polynomial");

    auto* sim = app.add_subcommand("simulate", "Monte-Carlo success rate over a tau grid");
    add_code_flags(sim, sim_flags);
    std::vector<std::uint32_t> sim_taus;
    std::optional<std::uint32_t> sim_trials;
    std::optional<std::uint64_t> sim_seed;
    bool sim_distinct = false;
    std::string sim_message = "zero";
    sim->add_option("--tau", sim_taus, "error counts")->delimiter(',');
    sim->add_option("--trials", sim_trials, "trials per tau (default 100)");
    sim->add_option("--seed", sim_seed, "base seed (required)");
    sim->add_flag("--distinct-column-values", sim_distinct, "errors in one column never share a received value");
    bool sim_zero = false;
    sim->add_flag("--allow-zero-errors", sim_zero, "error values uniform over the whole field (zero leaves the symbol intact)");
    sim->add_option("--message", sim_message, "sent message: zero or random")->check(CLI::IsMember({"zero", "random"}));
    sim->add_option("--threads", sim_flags.threads, "worker cap (0 = OpenMP default)");
    sim->add_option("--format", sim_flags.format, "output format")->check(CLI::IsMember({"text", "csv"}));

    auto* bnd = app.add_subcommand("bounds", "closed-form error-count bounds");
    std::int64_t bn = 0, bk = 0, bl = 0;
    std::optional<std::int64_t> bb;
    std::string bformat = "text";
    bnd->add_option("--n", bn, "inner code length")->required();
    bnd->add_option("--k", bk, "inner code dimension")->required();
    bnd->add_option("--l", bl, "repetition count")->required();
    bnd->add_option("--b", bb, "threshold (default: both floor(l/2)+1 and floor(l/2))");
    bnd->add_option("--format", bformat, "output format")->check(CLI::IsMember({"text", "csv"}));

    auto* tbl = app.add_subcommand("table", "regenerate one of the built-in experiment tables 1..9");
    int tid = 0;
    std::uint32_t ttrials = 100;
    std::optional<std::uint64_t> tseed;
    unsigned tthreads = 0;
    std::string tformat = "text";
    tbl->add_option("--id", tid, "table id")->required()->check(CLI::Range(1, 9));
    tbl->add_option("--trials", ttrials, "trials per tau")->capture_default_str();
    tbl->add_option("--seed", tseed, "base seed (required)");
    tbl->add_option("--threads", tthreads, "worker cap (0 = OpenMP default)");
    tbl->add_option("--format", tformat, "output format")->check(CLI::IsMember({"text", "csv"}));
    bool tzero = false;
    std::optional<std::uint32_t> tycap;
    tbl->add_flag("--allow-zero-errors", tzero, "error values uniform over the whole field");
    tbl->add_option("--y-cap", tycap, "upper limit on the y-degree of Q");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*enc) return cmd_encode(enc_flags, enc_message, enc_tau, enc_seed, enc_output);
        if (*dec) return cmd_decode(dec_flags, dec_input, dec_verbose);
        if (*sim) return cmd_simulate(sim_flags, sim_taus, sim_trials, sim_seed, sim_distinct, sim_zero, sim_message);
        if (*bnd) return cmd_bounds(bn, bk, bl, bb, bformat);
        if (*tbl) {
            if (!tseed) throw ConfigError("table needs an explicit --seed");
            if (ttrials == 0) throw ConfigError("--trials must be at least 1");
            return cmd_table(tid, ttrials, *tseed, tthreads, tformat, tzero, tycap);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
