#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "repdec/galois.hpp"
#include "repdec/polynomial.hpp"
#include "repdec/rscode.hpp"

namespace repdec {

/// Required zero multiplicities m(i, beta) at the points (a_i, beta).
/// Positions are 0-based. Only nonzero entries are stored, sorted by beta.
class MultiplicityMatrix {
public:
    using Entry = std::pair<Elem, std::uint32_t>;  // (beta, multiplicity)

    MultiplicityMatrix(std::uint32_t n, std::uint32_t q);

    std::uint32_t length() const noexcept { return static_cast<std::uint32_t>(columns_.size()); }
    std::uint32_t field_size() const noexcept { return q_; }

    std::uint32_t get(std::uint32_t position, Elem beta) const;
    /// Setting 0 removes the entry. Throws std::out_of_range on bad indices.
    void set(std::uint32_t position, Elem beta, std::uint32_t multiplicity);

    const std::vector<Entry>& column(std::uint32_t position) const { return columns_.at(position); }

    std::uint32_t max_multiplicity() const noexcept;
    std::uint64_t total() const noexcept;
    bool is_zero() const noexcept;

    bool operator==(const MultiplicityMatrix&) const = default;

private:
    std::uint32_t q_;
    std::vector<std::vector<Entry>> columns_;
};

/// Sum over entries of C(m + 1, 2).
std::uint64_t condition_count(const MultiplicityMatrix& m);

/// 1 + condition_count(m).
inline std::uint64_t monomial_budget(const MultiplicityMatrix& m) { return 1 + condition_count(m); }

/// Number of monomials x^i y^j with i + j*w <= cap.
std::uint64_t count_monomials_up_to(std::uint32_t w, std::uint64_t cap);

struct DegreeBound {
    std::uint64_t weighted_cap;  // smallest C with at least N monomials of weighted degree <= C
    std::uint32_t y_cap;         // floor(C / w)
};

/// Throws std::invalid_argument for N == 0.
DegreeBound degree_bound(const WeightedOrder& order, std::uint64_t budget);

/// Weight used for the interpolation order of a code: k - 1, raised to 1 for k = 1
/// (for constant messages every weight >= 0 bounds deg Q(x, h) the same way).
std::uint32_t interpolation_weight(const RSCode& code);

struct InterpolationResult {
    BiPoly q;
    Monomial leading;
    std::uint64_t weighted_degree = 0;
    std::uint32_t y_cap = 0;
    std::uint64_t weighted_cap = 0;
    std::uint64_t conditions = 0;
    std::uint64_t budget = 0;
};

/// Minimal nonzero polynomial (under the (1, w) order) vanishing at every
/// (a_i, beta) to order m(i, beta), restricted to y-degree <= the budget's
/// y cap. Leading coefficient normalized to 1.
///
/// Constraints are processed position-ascending, beta-ascending, then Hasse
/// shifts (r, s) by total degree with s ascending. Each step keeps y_cap + 1
/// candidates, one per leading y exponent: the candidate with the smallest
/// leading monomial among those violating the constraint cancels the others
/// and is then multiplied by (x - a_i).
InterpolationResult compute_q(const RSCode& code, const MultiplicityMatrix& m);

/// Same as compute_q but with an explicit y-degree cap (used by oracles).
InterpolationResult compute_q_with_cap(const RSCode& code, const MultiplicityMatrix& m, std::uint32_t y_cap);

/// True iff f vanishes to order >= m(i, beta) at every (a_i, beta).
bool satisfies_constraints(const RSCode& code, const MultiplicityMatrix& m, const BiPoly& f);

}  // namespace repdec
