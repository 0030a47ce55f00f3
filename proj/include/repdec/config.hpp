#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "repdec/simulator.hpp"

namespace repdec {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// "2^6", "64" or "3": a prime power with the shipped default modulus.
FieldPtr parse_field(const std::string& text);

/// {"p": 2, "m": 6, "modulus": [1, 1, 0, 0, 0, 0, 1]}; modulus low-to-high, optional.
nlohmann::json field_to_json(const Field& field);
FieldPtr field_from_json(const nlohmann::json& j);

/// Everything the CLI can take from a config file. Unset members fall back to flags.
struct RunConfig {
    FieldPtr field;
    std::optional<std::uint32_t> n;
    std::optional<std::uint32_t> k;
    std::optional<std::vector<Elem>> eval_points;  // absent: powers of the primitive element
    std::optional<std::uint32_t> ell;
    std::optional<std::string> strategy;  // "count" | "threshold"
    std::optional<std::uint32_t> b;
    std::vector<std::uint32_t> taus;
    std::optional<std::uint32_t> trials;
    std::optional<std::uint64_t> seed;
    std::optional<bool> distinct_column_values;
    std::optional<std::string> message;  // "zero" | "random"
    std::optional<bool> allow_zero_values;
    std::optional<std::uint32_t> y_cap;
};

/// Schema:
///   {"field": {...}, "code": {"n": 63, "k": 14, "eval_points": "powers" | [..]},
///    "l": 5, "strategy": "count" | "threshold", "b": 3, "tau": [..] | 229,
///    "trials": 1000, "seed": 1, "distinct_column_values": false, "message": "zero" | "random",
///    "allow_zero_values": false, "y_cap": 4}
RunConfig parse_config(const nlohmann::json& j);
RunConfig load_config(const std::string& path);

RSCode make_code(const FieldPtr& field, std::uint32_t n, std::uint32_t k,
                 const std::optional<std::vector<Elem>>& eval_points);

AssignmentStrategy make_strategy(const std::string& name, std::optional<std::uint32_t> b, std::uint32_t ell);

/// Whitespace-separated symbol indices, row-major, l rows of n entries.
ReceivedWord read_received_word(std::istream& in, std::uint32_t blocks, std::uint32_t n, const Field& field);
void write_received_word(std::ostream& out, const ReceivedWord& word);

}  // namespace repdec
