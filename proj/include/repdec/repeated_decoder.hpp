#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "repdec/interpolation.hpp"
#include "repdec/rscode.hpp"

namespace repdec {

/// The repetition code C^l = {(c, ..., c) : c in C} of an RS code C.
/// l = 1 is the plain RS code.
class RepeatedCode {
public:
    RepeatedCode(RSCode inner, std::uint32_t repetitions);

    const RSCode& inner() const noexcept { return inner_; }
    const Field& field() const noexcept { return inner_.field(); }
    std::uint32_t repetitions() const noexcept { return ell_; }
    std::uint32_t length() const noexcept { return ell_ * inner_.length(); }
    std::uint32_t dimension() const noexcept { return inner_.dimension(); }
    std::uint32_t min_distance() const noexcept { return ell_ * inner_.min_distance(); }

private:
    RSCode inner_;
    std::uint32_t ell_;
};

/// l x n received matrix; at(block, position) is r_i^j with block j, position i (0-based).
/// Storage is row-major: block 0 first.
class ReceivedWord {
public:
    ReceivedWord(std::uint32_t blocks, std::uint32_t n);
    ReceivedWord(std::uint32_t blocks, std::uint32_t n, std::vector<Elem> row_major);

    std::uint32_t blocks() const noexcept { return blocks_; }
    std::uint32_t length() const noexcept { return n_; }
    Elem at(std::uint32_t block, std::uint32_t position) const { return data_[block * n_ + position]; }
    Elem& at(std::uint32_t block, std::uint32_t position) { return data_[block * n_ + position]; }
    const std::vector<Elem>& row_major() const noexcept { return data_; }

    bool operator==(const ReceivedWord&) const = default;

private:
    std::uint32_t blocks_;
    std::uint32_t n_;
    std::vector<Elem> data_;
};

/// m(i, beta) = number of blocks with r_i^j == beta.
struct CountAssignment {};

/// m(i, beta) = 1 iff at least `b` blocks agree on beta at position i.
struct ThresholdAssignment {
    std::uint32_t b = 1;
};

using AssignmentStrategy = std::variant<CountAssignment, ThresholdAssignment>;

std::string to_string(const AssignmentStrategy& s);

/// Throws std::invalid_argument for a threshold outside [1, repetitions].
void validate_strategy(const AssignmentStrategy& s, std::uint32_t repetitions);

MultiplicityMatrix assign_multiplicities(const Field& field, const ReceivedWord& word, const AssignmentStrategy& strategy);

/// sum_i m(i, c_i)
std::uint64_t score(const MultiplicityMatrix& m, const Codeword& candidate);

/// (c, ..., c), l copies.
std::vector<Elem> lift(const RepeatedCode& code, const Codeword& c);

struct Candidate {
    UniPoly message;
    Codeword inner;                  // c in C
    std::uint32_t distance = 0;      // Hamming distance of (c, ..., c) to the received word
    std::uint64_t score = 0;
};

struct DecodeDiagnostics {
    std::uint64_t conditions = 0;
    std::uint64_t budget = 0;
    std::uint64_t weighted_cap = 0;
    std::uint32_t y_cap = 0;
    std::uint64_t q_weighted_degree = 0;
    Monomial q_leading;
    std::uint32_t max_multiplicity = 0;
};

struct DecodeOutput {
    std::vector<Candidate> candidates;  // ascending distance, then message coefficients
    DecodeDiagnostics diagnostics;
    MultiplicityMatrix multiplicities{0, 0};
    BiPoly q;
};

/// assign_multiplicities -> compute_q -> y_roots -> encode, lift and rank.
/// An empty candidate list is a decoding failure, not an error.
/// `y_cap` replaces the y-degree bound L = floor(C / w) when it is smaller.
DecodeOutput decode(const RepeatedCode& code, const ReceivedWord& word, const AssignmentStrategy& strategy,
                    std::optional<std::uint32_t> y_cap = std::nullopt);

/// Index of the candidate whose inner codeword equals `sent`, or -1.
int find_candidate(const DecodeOutput& out, const Codeword& sent);

}  // namespace repdec
