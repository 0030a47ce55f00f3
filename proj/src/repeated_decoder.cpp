#include "repdec/repeated_decoder.hpp"

#include <algorithm>
#include <stdexcept>

#include "repdec/factorization.hpp"

namespace repdec {

RepeatedCode::RepeatedCode(RSCode inner, std::uint32_t repetitions) : inner_(std::move(inner)), ell_(repetitions) {
    if (ell_ < 1) throw std::invalid_argument("repetition count must be at least 1");
}

ReceivedWord::ReceivedWord(std::uint32_t blocks, std::uint32_t n)
    : blocks_(blocks), n_(n), data_(static_cast<std::size_t>(blocks) * n, 0) {}

ReceivedWord::ReceivedWord(std::uint32_t blocks, std::uint32_t n, std::vector<Elem> row_major)
    : blocks_(blocks), n_(n), data_(std::move(row_major)) {
    if (data_.size() != static_cast<std::size_t>(blocks) * n)
        throw std::invalid_argument("received word has " + std::to_string(data_.size()) + " symbols, expected " +
                                    std::to_string(static_cast<std::size_t>(blocks) * n));
}

std::string to_string(const AssignmentStrategy& s) {
    if (std::holds_alternative<CountAssignment>(s)) return "count";
    return "threshold(b=" + std::to_string(std::get<ThresholdAssignment>(s).b) + ")";
}

void validate_strategy(const AssignmentStrategy& s, std::uint32_t repetitions) {
    if (const auto* t = std::get_if<ThresholdAssignment>(&s); t && (t->b < 1 || t->b > repetitions))
        throw std::invalid_argument("threshold b must lie in [1, " + std::to_string(repetitions) + "]");
}

MultiplicityMatrix assign_multiplicities(const Field& field, const ReceivedWord& word,
                                         const AssignmentStrategy& strategy) {
    validate_strategy(strategy, word.blocks());
    MultiplicityMatrix m(word.length(), field.size());
    const auto* threshold = std::get_if<ThresholdAssignment>(&strategy);
    std::vector<Elem> column(word.blocks());
    for (std::uint32_t i = 0; i < word.length(); ++i) {
        for (std::uint32_t j = 0; j < word.blocks(); ++j) column[j] = word.at(j, i);
        std::sort(column.begin(), column.end());
        for (std::size_t a = 0; a < column.size();) {
            std::size_t b = a;
            while (b < column.size() && column[b] == column[a]) ++b;
            const auto count = static_cast<std::uint32_t>(b - a);
            if (threshold == nullptr)
                m.set(i, column[a], count);
            else if (count >= threshold->b)
                m.set(i, column[a], 1);
            a = b;
        }
    }
    return m;
}

std::uint64_t score(const MultiplicityMatrix& m, const Codeword& candidate) {
    if (candidate.size() != m.length()) throw std::invalid_argument("candidate length does not match multiplicities");
    std::uint64_t total = 0;
    for (std::uint32_t i = 0; i < m.length(); ++i) total += m.get(i, candidate[i]);
    return total;
}

std::vector<Elem> lift(const RepeatedCode& code, const Codeword& c) {
    if (c.size() != code.inner().length()) throw std::invalid_argument("codeword length does not match inner code");
    std::vector<Elem> out;
    out.reserve(code.length());
    for (std::uint32_t j = 0; j < code.repetitions(); ++j) out.insert(out.end(), c.begin(), c.end());
    return out;
}

DecodeOutput decode(const RepeatedCode& code, const ReceivedWord& word, const AssignmentStrategy& strategy,
                    std::optional<std::uint32_t> y_cap) {
    if (word.blocks() != code.repetitions() || word.length() != code.inner().length())
        throw std::invalid_argument("received word dimensions do not match the code");
    const Field& f = code.field();

    DecodeOutput out;
    out.multiplicities = assign_multiplicities(f, word, strategy);
    const WeightedOrder order(interpolation_weight(code.inner()));
    std::uint32_t cap = degree_bound(order, monomial_budget(out.multiplicities)).y_cap;
    if (y_cap) cap = std::min(cap, *y_cap);
    auto interp = compute_q_with_cap(code.inner(), out.multiplicities, cap);

    out.diagnostics.conditions = interp.conditions;
    out.diagnostics.budget = interp.budget;
    out.diagnostics.weighted_cap = interp.weighted_cap;
    out.diagnostics.y_cap = interp.y_cap;
    out.diagnostics.q_weighted_degree = interp.weighted_degree;
    out.diagnostics.q_leading = interp.leading;
    out.diagnostics.max_multiplicity = out.multiplicities.max_multiplicity();

    const int max_degree = static_cast<int>(code.dimension()) - 1;
    for (auto& h : y_roots(f, interp.q, max_degree)) {
        Candidate c;
        c.inner = code.inner().encode(h);
        c.message = std::move(h);
        c.score = score(out.multiplicities, c.inner);
        std::uint32_t dist = 0;
        for (std::uint32_t j = 0; j < word.blocks(); ++j)
            for (std::uint32_t i = 0; i < word.length(); ++i) dist += word.at(j, i) != c.inner[i];
        c.distance = dist;
        out.candidates.push_back(std::move(c));
    }
    std::sort(out.candidates.begin(), out.candidates.end(), [](const Candidate& a, const Candidate& b) {
        return a.distance != b.distance ? a.distance < b.distance : a.message < b.message;
    });
    out.q = std::move(interp.q);
    return out;
}

int find_candidate(const DecodeOutput& out, const Codeword& sent) {
    for (std::size_t i = 0; i < out.candidates.size(); ++i)
        if (out.candidates[i].inner == sent) return static_cast<int>(i);
    return -1;
}

}  // namespace repdec
