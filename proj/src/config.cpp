#include "repdec/config.hpp"

#include <fstream>
#include <istream>
#include <ostream>

namespace repdec {

using nlohmann::json;

FieldPtr parse_field(const std::string& text) {
    try {
        const auto caret = text.find('^');
        if (caret != std::string::npos) {
            const auto p = static_cast<std::uint32_t>(std::stoul(text.substr(0, caret)));
            const auto m = static_cast<std::uint32_t>(std::stoul(text.substr(caret + 1)));
            return Field::make(p, m);
        }
        std::uint64_t q = std::stoull(text);
        const auto primes = prime_factors(q);
        if (primes.size() != 1) throw ConfigError("field size " + text + " is not a prime power");
        std::uint32_t m = 0;
        while (q > 1) {
            q /= primes[0];
            ++m;
        }
        return Field::make(static_cast<std::uint32_t>(primes[0]), m);
    } catch (const std::logic_error& e) {
        throw ConfigError("bad field '" + text + "': " + e.what());
    }
}

json field_to_json(const Field& field) {
    return {{"p", field.characteristic()}, {"m", field.degree()}, {"modulus", field.modulus()}};
}

FieldPtr field_from_json(const json& j) {
    if (j.is_string()) return parse_field(j.get<std::string>());
    if (j.is_number_integer()) return parse_field(std::to_string(j.get<std::int64_t>()));
    try {
        const auto p = j.at("p").get<std::uint32_t>();
        const auto m = j.at("m").get<std::uint32_t>();
        if (j.contains("modulus")) return Field::make(p, m, j.at("modulus").get<std::vector<std::uint32_t>>());
        return Field::make(p, m);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("bad field spec: ") + e.what());
    }
}

RunConfig parse_config(const json& j) {
    RunConfig c;
    try {
        if (j.contains("field")) c.field = field_from_json(j.at("field"));
        if (j.contains("code")) {
            const auto& code = j.at("code");
            if (code.contains("n")) c.n = code.at("n").get<std::uint32_t>();
            if (code.contains("k")) c.k = code.at("k").get<std::uint32_t>();
            if (code.contains("eval_points")) {
                const auto& pts = code.at("eval_points");
                if (pts.is_string()) {
                    if (pts.get<std::string>() != "powers") throw ConfigError("eval_points must be \"powers\" or a list");
                } else {
                    c.eval_points = pts.get<std::vector<Elem>>();
                }
            }
        }
        if (j.contains("l")) c.ell = j.at("l").get<std::uint32_t>();
        if (j.contains("strategy")) c.strategy = j.at("strategy").get<std::string>();
        if (j.contains("b")) c.b = j.at("b").get<std::uint32_t>();
        if (j.contains("tau")) {
            const auto& t = j.at("tau");
            c.taus = t.is_array() ? t.get<std::vector<std::uint32_t>>() : std::vector<std::uint32_t>{t.get<std::uint32_t>()};
        }
        if (j.contains("trials")) c.trials = j.at("trials").get<std::uint32_t>();
        if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
        if (j.contains("distinct_column_values")) c.distinct_column_values = j.at("distinct_column_values").get<bool>();
        if (j.contains("message")) c.message = j.at("message").get<std::string>();
        if (j.contains("allow_zero_values")) c.allow_zero_values = j.at("allow_zero_values").get<bool>();
        if (j.contains("y_cap")) c.y_cap = j.at("y_cap").get<std::uint32_t>();
    } catch (const json::exception& e) {
        throw ConfigError(std::string("bad config: ") + e.what());
    }
    return c;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path);
    try {
        return parse_config(json::parse(in));
    } catch (const json::parse_error& e) {
        throw ConfigError("config " + path + " is not valid JSON: " + e.what());
    }
}

RSCode make_code(const FieldPtr& field, std::uint32_t n, std::uint32_t k,
                 const std::optional<std::vector<Elem>>& eval_points) {
    if (eval_points) {
        if (eval_points->size() != n)
            throw ConfigError("eval_points lists " + std::to_string(eval_points->size()) + " points but n = " +
                              std::to_string(n));
        return RSCode(field, k, *eval_points);
    }
    return RSCode(field, n, k);
}

AssignmentStrategy make_strategy(const std::string& name, std::optional<std::uint32_t> b, std::uint32_t ell) {
    if (name == "count") return CountAssignment{};
    if (name == "threshold") {
        AssignmentStrategy s = ThresholdAssignment{b.value_or(ell / 2 + 1)};
        validate_strategy(s, ell);
        return s;
    }
    throw ConfigError("unknown strategy '" + name + "' (expected count or threshold)");
}

ReceivedWord read_received_word(std::istream& in, std::uint32_t blocks, std::uint32_t n, const Field& field) {
    std::vector<Elem> data;
    data.reserve(static_cast<std::size_t>(blocks) * n);
    std::string token;
    while (in >> token) {
        std::size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(token, &used);
        } catch (const std::logic_error&) {
            used = 0;
        }
        if (used != token.size()) throw ConfigError("received word: '" + token + "' is not a symbol index");
        if (v >= field.size()) throw ConfigError("received word: symbol " + token + " outside the field");
        data.push_back(static_cast<Elem>(v));
    }
    if (data.size() != static_cast<std::size_t>(blocks) * n)
        throw ConfigError("received word has " + std::to_string(data.size()) + " symbols, expected " +
                          std::to_string(static_cast<std::size_t>(blocks) * n) + " (" + std::to_string(blocks) +
                          " rows of " + std::to_string(n) + ")");
    return ReceivedWord(blocks, n, std::move(data));
}

void write_received_word(std::ostream& out, const ReceivedWord& word) {
    for (std::uint32_t j = 0; j < word.blocks(); ++j) {
        for (std::uint32_t i = 0; i < word.length(); ++i) out << (i ? " " : "") << word.at(j, i);
        out << "\n";
    }
}

}  // namespace repdec
