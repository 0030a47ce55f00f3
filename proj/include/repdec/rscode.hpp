#pragma once

#include <cstdint>
#include <vector>

#include "repdec/galois.hpp"
#include "repdec/polynomial.hpp"

namespace repdec {

using Codeword = std::vector<Elem>;

/// Reed-Solomon code {(h(a_1), ..., h(a_n)) : deg h <= k-1}.
class RSCode {
public:
    /// Evaluation points a_i = g^(i-1) for the field's primitive g. Requires n <= q-1.
    RSCode(FieldPtr field, std::uint32_t n, std::uint32_t k);
    /// Explicit, pairwise distinct evaluation points (0 allowed).
    RSCode(FieldPtr field, std::uint32_t k, std::vector<Elem> points);

    const Field& field() const noexcept { return *field_; }
    const FieldPtr& field_ptr() const noexcept { return field_; }
    std::uint32_t length() const noexcept { return n_; }
    std::uint32_t dimension() const noexcept { return k_; }
    std::uint32_t min_distance() const noexcept { return n_ - k_ + 1; }
    const std::vector<Elem>& points() const noexcept { return points_; }

    /// Throws std::invalid_argument if deg(message) > k-1.
    Codeword encode(const UniPoly& message) const;

    /// Unique polynomial of degree <= n-1 through (a_i, values_i).
    UniPoly interpolate(const std::vector<Elem>& values) const;

    bool is_codeword(const Codeword& word) const;

    /// k x n generator matrix whose rows encode the monomials 1, x, ..., x^(k-1).
    std::vector<std::vector<Elem>> generator_matrix() const;

private:
    void validate() const;

    FieldPtr field_;
    std::uint32_t n_;
    std::uint32_t k_;
    std::vector<Elem> points_;
};

inline Codeword encode(const RSCode& code, const UniPoly& message) { return code.encode(message); }
inline UniPoly lagrange_interpolate(const RSCode& code, const std::vector<Elem>& values) {
    return code.interpolate(values);
}
inline bool is_codeword(const RSCode& code, const Codeword& word) { return code.is_codeword(word); }

std::uint32_t hamming_distance(const std::vector<Elem>& a, const std::vector<Elem>& b);
std::uint32_t hamming_weight(const std::vector<Elem>& a);

}  // namespace repdec
