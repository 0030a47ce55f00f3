#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace repdec::bounds {

using Rational = boost::rational<std::int64_t>;

/// Parameters of the repetition code of an [n, k] RS code, l copies.
struct BoundInput {
    std::int64_t n = 0;
    std::int64_t k = 0;
    std::int64_t ell = 0;
    std::optional<std::int64_t> b;

    std::int64_t d() const noexcept { return n - k + 1; }
    std::int64_t ell_half() const noexcept { return ell / 2; }
    /// n / (k - 1); requires k >= 2.
    Rational gamma() const;
    /// (l n - 1) / (k - 1); requires k >= 2.
    Rational delta() const;
};

std::int64_t floor_of(const Rational& r);

/// Guaranteed error count with threshold assignment, for b = floor(l/2) + 1 or
/// b = floor(l/2), valid when no nonzero error value repeats b times in a column.
/// Throws std::invalid_argument for any other b.
std::int64_t bound_assignment2(std::int64_t n, std::int64_t k, std::int64_t ell, std::int64_t b);

/// Largest k (as an exact rational) for which bound_assignment2 reaches half the
/// minimum distance of a length-l*n RS code with the same dimension.
Rational rate_threshold(std::int64_t n, std::int64_t ell, std::int64_t b);

/// (l n (a + 1/2 - l/2) - (k-1) a (a+1)/2 - 1) / (a - l + 2). Throws DomainError at a = l - 2.
Rational h_function(const BoundInput& in, const Rational& a);

/// floor(H(delta)); needs k >= 2 and l >= 3.
std::int64_t bound_highrate(std::int64_t n, std::int64_t k, std::int64_t ell);

/// floor(d l (l+1)/4 - 1/2)
std::int64_t bound_corollary(std::int64_t d, std::int64_t ell);

/// J(a) = (-n(l+3) - 1)/(a+2) - (k-1) a (a+1) / (2(a+2)) + l n
Rational j_function(const BoundInput& in, const Rational& a);

enum class Trend { increasing, decreasing, constant, neither };
std::string to_string(Trend t);

/// Shape of J over the integers a_lo..a_hi (inclusive), by exact comparison.
Trend j_trend(const BoundInput& in, std::int64_t a_lo, std::int64_t a_hi);
bool j_is_monotone_on(const BoundInput& in, std::int64_t a_lo, std::int64_t a_hi);

/// J evaluated at a = l, floored.
std::int64_t bound_lowrate_increasing(std::int64_t n, std::int64_t k, std::int64_t ell);
/// J evaluated at a = 2l, floored.
std::int64_t bound_lowrate_decreasing(std::int64_t n, std::int64_t k, std::int64_t ell);

/// tau + n(l^2+l)/2 - sum_i (tau_i + 2 tau_i l - tau_i^2)/2, with tau = sum tau_i.
/// Throws std::invalid_argument when some tau_i is outside [0, l].
std::int64_t equation_count(std::int64_t ell, std::span<const std::int64_t> tau_profile);

/// sum_i [tau_i + C(l - tau_i + 1, 2)], the per-column form of equation_count.
std::int64_t equation_count_direct(std::int64_t ell, std::span<const std::int64_t> tau_profile);

/// Number of monomials of (1, k-1)-weighted degree <= a(k-1) + b:
/// a(a+1)/2 (k-1) + (a+1)(b+1). Requires a >= 0 and 0 <= b <= k-2.
std::int64_t monomial_count(std::int64_t k, std::int64_t a, std::int64_t b);

/// The pair (a, b) with l n - tau - 1 = a (k-1) + b and 0 <= b <= k-2.
struct BudgetSplit {
    std::int64_t a;
    std::int64_t b;
};
BudgetSplit budget_split(std::int64_t n, std::int64_t k, std::int64_t ell, std::int64_t tau);

/// floor((d - 1) / 2) for an MDS code of minimum distance d.
std::int64_t unique_decoding_radius(std::int64_t d);

struct BoundRecord {
    std::string name;
    std::string value;   // integer bound, or exact rational for thresholds
    std::string exact;   // exact rational before flooring
    bool applicable = true;
    std::string note;
};

/// Every bound that can be evaluated for the input, with applicability flags.
std::vector<BoundRecord> all_bounds(const BoundInput& in);

}  // namespace repdec::bounds
