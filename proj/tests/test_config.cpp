#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "repdec/config.hpp"

using namespace repdec;

TEST_SUITE("config") {

TEST_CASE("field specifications") {
    CHECK(parse_field("2^6")->size() == 64);
    CHECK(parse_field("64")->degree() == 6);
    CHECK(parse_field("3")->characteristic() == 3);
    CHECK(parse_field("512")->degree() == 9);
    CHECK_THROWS_AS(parse_field("12"), ConfigError);
    CHECK_THROWS_AS(parse_field("abc"), ConfigError);
    CHECK_THROWS_AS(parse_field("4^2"), ConfigError);
    auto f = Field::make(2, 6);
    CHECK(*field_from_json(field_to_json(*f)) == *f);
    CHECK(field_from_json(nlohmann::json("2^4"))->size() == 16);
    CHECK(field_from_json(nlohmann::json(9))->size() == 9);
    CHECK_THROWS_AS(field_from_json(nlohmann::json::object({{"p", 2}})), ConfigError);
}

TEST_CASE("config parsing") {
    const auto j = nlohmann::json::parse(R"({
        "field": "2^6", "code": {"n": 63, "k": 14, "eval_points": "powers"},
        "l": 5, "strategy": "threshold", "b": 3, "tau": [185, 187],
        "trials": 50, "seed": 7, "distinct_column_values": true, "message": "random",
        "allow_zero_values": true, "y_cap": 4})");
    const RunConfig c = parse_config(j);
    CHECK(c.field->size() == 64);
    CHECK(*c.n == 63);
    CHECK(*c.k == 14);
    CHECK_FALSE(c.eval_points.has_value());
    CHECK(*c.ell == 5);
    CHECK(*c.strategy == "threshold");
    CHECK(*c.b == 3);
    CHECK(c.taus == std::vector<std::uint32_t>{185, 187});
    CHECK(*c.trials == 50);
    CHECK(*c.seed == 7);
    CHECK(*c.distinct_column_values);
    CHECK(*c.message == "random");
    CHECK(*c.allow_zero_values);
    CHECK(*c.y_cap == 4);

    const RunConfig single = parse_config(nlohmann::json::parse(R"({"tau": 229, "code": {"eval_points": [0, 1, 2]}})"));
    CHECK(single.taus == std::vector<std::uint32_t>{229});
    CHECK(*single.eval_points == std::vector<Elem>{0, 1, 2});
    CHECK_FALSE(single.field);

    CHECK_THROWS_AS(parse_config(nlohmann::json::parse(R"({"l": "five"})")), ConfigError);
    CHECK_THROWS_AS(parse_config(nlohmann::json::parse(R"({"code": {"eval_points": "random"}})")), ConfigError);
}

TEST_CASE("config files") {
    const std::string path = "repdec_test_config.json";
    {
        std::ofstream out(path);
        out << R"({"field": {"p": 3, "m": 1}, "code": {"n": 3, "k": 1, "eval_points": [0, 1, 2]}, "l": 5})";
    }
    const RunConfig c = load_config(path);
    const RSCode code = make_code(c.field, *c.n, *c.k, c.eval_points);
    CHECK(code.points() == std::vector<Elem>{0, 1, 2});
    {
        std::ofstream out(path);
        out << "{ not json";
    }
    CHECK_THROWS_AS(load_config(path), ConfigError);
    std::remove(path.c_str());
    CHECK_THROWS_AS(load_config("does/not/exist.json"), ConfigError);
    CHECK_THROWS_AS(make_code(Field::make(3, 1), 2, 1, std::vector<Elem>{0, 1, 2}), ConfigError);
}

TEST_CASE("strategies by name") {
    CHECK(std::holds_alternative<CountAssignment>(make_strategy("count", std::nullopt, 5)));
    CHECK(std::get<ThresholdAssignment>(make_strategy("threshold", std::nullopt, 5)).b == 3);
    CHECK(std::get<ThresholdAssignment>(make_strategy("threshold", 2, 5)).b == 2);
    CHECK_THROWS_AS(make_strategy("threshold", 6, 5), std::invalid_argument);
    CHECK_THROWS_AS(make_strategy("majority", std::nullopt, 5), ConfigError);
}

TEST_CASE("received word input and output") {
    auto f = Field::make(3, 1);
    std::istringstream in("0 0 0\n0 0 1\n0 2 2\n");
    const ReceivedWord w = read_received_word(in, 3, 3, *f);
    CHECK(w.at(2, 1) == 2);
    std::ostringstream out;
    write_received_word(out, w);
    CHECK(out.str() == "0 0 0\n0 0 1\n0 2 2\n");

    std::istringstream shortw("0 1");
    CHECK_THROWS_AS(read_received_word(shortw, 1, 3, *f), ConfigError);
    std::istringstream bad("0 x 1");
    CHECK_THROWS_AS(read_received_word(bad, 1, 3, *f), ConfigError);
    std::istringstream big("0 3 1");
    CHECK_THROWS_AS(read_received_word(big, 1, 3, *f), ConfigError);
}

}  // TEST_SUITE
