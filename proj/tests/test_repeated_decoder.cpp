#include "doctest.h"

#include <algorithm>
#include <random>

#include "repdec/repeated_decoder.hpp"
#include "repdec/simulator.hpp"

using namespace repdec;

namespace {

// The 5 x 3 word over GF(3) from the worked example.
ReceivedWord example_word() {
    return ReceivedWord(5, 3, {0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 1, 0, 2, 2});
}

RepeatedCode example_code() { return RepeatedCode(RSCode(Field::make(3, 1), 1, {0, 1, 2}), 5); }

using Entries = std::vector<std::tuple<std::uint32_t, Elem, std::uint32_t>>;

Entries nonzero_entries(const MultiplicityMatrix& m) {
    Entries out;
    for (std::uint32_t i = 0; i < m.length(); ++i)
        for (const auto& [beta, mult] : m.column(i)) out.emplace_back(i, beta, mult);
    return out;
}

ReceivedWord lifted_word(const RepeatedCode& code, const Codeword& c) {
    return ReceivedWord(code.repetitions(), code.inner().length(), lift(code, c));
}

}  // namespace

TEST_SUITE("repeated_decoder") {

TEST_CASE("worked example: multiplicity assignments") {
    const auto code = example_code();
    const auto& f = code.field();
    const ReceivedWord r = example_word();
    // positions are 0-based here
    CHECK(nonzero_entries(assign_multiplicities(f, r, CountAssignment{})) ==
          Entries{{0, 0, 5}, {1, 0, 3}, {1, 1, 1}, {1, 2, 1}, {2, 0, 2}, {2, 1, 2}, {2, 2, 1}});
    CHECK(nonzero_entries(assign_multiplicities(f, r, ThresholdAssignment{3})) == Entries{{0, 0, 1}, {1, 0, 1}});
    CHECK(nonzero_entries(assign_multiplicities(f, r, ThresholdAssignment{2})) ==
          Entries{{0, 0, 1}, {1, 0, 1}, {2, 0, 1}, {2, 1, 1}});
    const auto count = assign_multiplicities(f, r, CountAssignment{});
    CHECK(score(count, {0, 0, 0}) == 10);
    CHECK(condition_count(count) == 30);
}

TEST_CASE("worked example decodes to the zero word") {
    const auto code = example_code();
    for (const AssignmentStrategy& s : {AssignmentStrategy{CountAssignment{}}, AssignmentStrategy{ThresholdAssignment{3}},
                                        AssignmentStrategy{ThresholdAssignment{2}}}) {
        const auto out = decode(code, example_word(), s);
        CAPTURE(to_string(s));
        REQUIRE_FALSE(out.candidates.empty());
        CHECK(out.candidates.front().inner == Codeword{0, 0, 0});
        CHECK(out.candidates.front().distance == 5);
        CHECK(find_candidate(out, {0, 0, 0}) == 0);
    }
}

TEST_CASE("lift and received word layout") {
    RepeatedCode code(RSCode(Field::make(2, 3), 7, 2), 3);
    CHECK(code.length() == 21);
    CHECK(code.min_distance() == 18);
    const Codeword c = code.inner().encode(UniPoly({1, 4}));
    const auto l = lift(code, c);
    REQUIRE(l.size() == 21);
    const ReceivedWord w = lifted_word(code, c);
    for (std::uint32_t j = 0; j < 3; ++j)
        for (std::uint32_t i = 0; i < 7; ++i) CHECK(w.at(j, i) == c[i]);
    CHECK_THROWS_AS(RepeatedCode(RSCode(Field::make(2, 3), 7, 2), 0), std::invalid_argument);
    CHECK_THROWS_AS(ReceivedWord(2, 3, {1, 2}), std::invalid_argument);
}

TEST_CASE("strategy labels and validation") {
    CHECK(to_string(AssignmentStrategy{CountAssignment{}}) == "count");
    CHECK(to_string(AssignmentStrategy{ThresholdAssignment{3}}) == "threshold(b=3)");
    CHECK_NOTHROW(validate_strategy(ThresholdAssignment{5}, 5));
    CHECK_THROWS_AS(validate_strategy(ThresholdAssignment{0}, 5), std::invalid_argument);
    CHECK_THROWS_AS(validate_strategy(ThresholdAssignment{6}, 5), std::invalid_argument);
}

TEST_CASE("matrix shape invariants") {
    std::mt19937_64 rng(41);
    auto f = Field::make(2, 4);
    RepeatedCode code(RSCode(f, 15, 3), 5);
    const ReceivedWord sent = lifted_word(code, Codeword(15, 0));
    for (int t = 0; t < 50; ++t) {
        const auto inj = inject_errors(*f, sent, 30, rng);
        const auto count = assign_multiplicities(*f, inj.word, CountAssignment{});
        for (std::uint32_t i = 0; i < 15; ++i) {
            std::uint32_t sum = 0;
            for (const auto& [beta, m] : count.column(i)) sum += m;
            CHECK(sum == 5);
        }
        // Count score of the sent word is l n - tau
        CHECK(score(count, Codeword(15, 0)) == 75 - 30);
        for (std::uint32_t b : {3u, 4u, 5u}) {
            const auto th = assign_multiplicities(*f, inj.word, ThresholdAssignment{b});
            CHECK(th.max_multiplicity() <= 1);
            for (std::uint32_t i = 0; i < 15; ++i) CHECK(th.column(i).size() <= 1);
        }
        CHECK(assign_multiplicities(*f, inj.word, ThresholdAssignment{1}) ==
              [&] {
                  MultiplicityMatrix m(15, 16);
                  for (std::uint32_t i = 0; i < 15; ++i)
                      for (const auto& [beta, mult] : count.column(i)) m.set(i, beta, 1);
                  return m;
              }());
    }
}

TEST_CASE("list contains every codeword whose score exceeds the weighted degree") {
    std::mt19937_64 rng(43);
    auto f = Field::make(2, 3);
    RepeatedCode code(RSCode(f, 7, 2), 3);
    std::vector<std::pair<UniPoly, Codeword>> all;
    for (Elem a = 0; a < 8; ++a)
        for (Elem b = 0; b < 8; ++b) all.emplace_back(UniPoly({a, b}), code.inner().encode(UniPoly({a, b})));
    for (int t = 0; t < 200; ++t) {
        const auto& sent = all[rng() % all.size()].second;
        const auto inj = inject_errors(*f, lifted_word(code, sent), static_cast<std::uint32_t>(rng() % 15), rng);
        const AssignmentStrategy s = (t % 3 == 0) ? AssignmentStrategy{CountAssignment{}}
                                                  : AssignmentStrategy{ThresholdAssignment{1 + static_cast<std::uint32_t>(t % 3)}};
        const auto out = decode(code, inj.word, s);
        for (const auto& [h, c] : all) {
            const bool listed = find_candidate(out, c) >= 0;
            if (score(out.multiplicities, c) > out.diagnostics.q_weighted_degree) REQUIRE(listed);
            if (listed) REQUIRE(evaluate_y(*f, out.q, h).is_zero());
        }
        for (std::size_t i = 1; i < out.candidates.size(); ++i)
            CHECK(out.candidates[i - 1].distance <= out.candidates[i].distance);
    }
}

TEST_CASE("noise-free words decode at distance zero") {
    auto f = Field::make(2, 6);
    RepeatedCode code(RSCode(f, 63, 14), 5);
    const Codeword c = code.inner().encode(UniPoly({9, 0, 3, 1}));
    for (const AssignmentStrategy& s : {AssignmentStrategy{CountAssignment{}}, AssignmentStrategy{ThresholdAssignment{3}}}) {
        const auto out = decode(code, lifted_word(code, c), s);
        REQUIRE_FALSE(out.candidates.empty());
        CHECK(out.candidates.front().inner == c);
        CHECK(out.candidates.front().distance == 0);
        CHECK(out.candidates.front().message == UniPoly({9, 0, 3, 1}));
    }
}

TEST_CASE("an explicit y cap limits the interpolation polynomial") {
    std::mt19937_64 rng(47);
    auto f = Field::make(2, 4);
    RepeatedCode code(RSCode(f, 15, 3), 5);
    const auto inj = inject_errors(*f, lifted_word(code, Codeword(15, 0)), 25, rng);
    const auto full = decode(code, inj.word, CountAssignment{});
    const auto capped = decode(code, inj.word, CountAssignment{}, 2);
    CHECK(capped.diagnostics.y_cap == std::min<std::uint32_t>(2, full.diagnostics.y_cap));
    CHECK(capped.q.y_degree() <= 2);
    CHECK(capped.diagnostics.q_weighted_degree >= full.diagnostics.q_weighted_degree);
}

TEST_CASE("threshold decoding erases ambiguous columns") {
    auto f = Field::make(2, 4);
    RepeatedCode code(RSCode(f, 15, 3), 4);
    ReceivedWord w = lifted_word(code, Codeword(15, 0));
    // column 0: two blocks carry 5, two carry 0, no value reaches b = 3
    w.at(0, 0) = 5;
    w.at(1, 0) = 5;
    const auto m = assign_multiplicities(*f, w, ThresholdAssignment{3});
    CHECK(m.column(0).empty());
    const auto out = decode(code, w, ThresholdAssignment{3});
    CHECK(find_candidate(out, Codeword(15, 0)) >= 0);
}

}  // TEST_SUITE
