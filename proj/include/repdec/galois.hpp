#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace repdec {

/// Canonical element index: polynomial-basis coefficients packed as base-p digits.
using Elem = std::uint32_t;

class FieldError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Finite field GF(p^m) with an explicit monic irreducible modulus.
///
/// Elements are canonical indices in [0, q). Index 0 is zero and index 1 is
/// the constant polynomial 1. Multiplication goes through log/antilog tables
/// built against a verified primitive element; the schoolbook routine is kept
/// for cross-checking. Immutable after construction.
class Field {
public:
    /// Throws FieldError if p is not prime, the modulus is not monic of degree
    /// m, it is reducible over GF(p), or q exceeds 2^16.
    Field(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus);

    /// Field built from the shipped default modulus for (p, m).
    static std::shared_ptr<const Field> make(std::uint32_t p, std::uint32_t m);
    static std::shared_ptr<const Field> make(std::uint32_t p, std::uint32_t m,
                                             std::vector<std::uint32_t> modulus);

    /// Default modulus (low-to-high coefficients) for p in {2, 3} and m <= 10.
    static std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t m);

    std::uint32_t characteristic() const noexcept { return p_; }
    std::uint32_t degree() const noexcept { return m_; }
    std::uint32_t size() const noexcept { return q_; }
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
    bool is_binary() const noexcept { return p_ == 2; }

    Elem add(Elem a, Elem b) const noexcept {
        if (p_ == 2) return a ^ b;
        if (!add_table_.empty()) return add_table_[a * q_ + b];
        return add_digits(a, b);
    }
    Elem neg(Elem a) const noexcept { return p_ == 2 ? a : neg_[a]; }
    Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

    Elem mul(Elem a, Elem b) const noexcept {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    /// Throws DomainError for a == 0.
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const noexcept;

    /// Polynomial product reduced by the modulus, without tables.
    Elem mul_schoolbook(Elem a, Elem b) const noexcept;

    /// Integer n reduced into the prime subfield.
    Elem from_int(std::int64_t n) const noexcept;

    Elem primitive() const noexcept { return primitive_; }
    /// g^e for the primitive element g.
    Elem exp(std::uint32_t e) const noexcept { return exp_[e % (q_ - 1)]; }
    /// Discrete log base the primitive element; a must be nonzero.
    std::uint32_t log(Elem a) const noexcept { return log_[a]; }

    /// Multiplicative order of a nonzero element.
    std::uint64_t order(Elem a) const;

    /// Binomial coefficient C(n, r) reduced mod p, via Lucas' theorem.
    std::uint32_t binomial_mod_p(std::uint64_t n, std::uint64_t r) const noexcept;

    std::string describe() const;

    bool operator==(const Field& o) const noexcept {
        return p_ == o.p_ && m_ == o.m_ && modulus_ == o.modulus_;
    }

private:
    Elem add_digits(Elem a, Elem b) const noexcept;
    Elem find_primitive() const;

    std::uint32_t p_;
    std::uint32_t m_;
    std::uint32_t q_;
    std::vector<std::uint32_t> modulus_;
    Elem primitive_ = 1;
    std::vector<Elem> exp_;            // length 2(q-1), exp_[i] = g^i
    std::vector<std::uint32_t> log_;   // log_[0] unused
    std::vector<Elem> neg_;
    std::vector<Elem> add_table_;      // only for odd p and q <= 256
    std::vector<std::uint32_t> small_binom_;  // p x p table of C(a, b) mod p
};

using FieldPtr = std::shared_ptr<const Field>;

/// Trial division irreducibility test over GF(p); coefficients low-to-high.
bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> poly);

/// Distinct prime factors of n, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// Generator of the multiplicative group, found by scanning candidates in
/// index order and rejecting any g with g^((q-1)/r) == 1 for a prime r | q-1.
Elem primitive_element(const Field& field);

/// Element value carrying its field. Arithmetic between elements of
/// different fields throws FieldError.
class FieldElement {
public:
    FieldElement(FieldPtr field, Elem index);

    static FieldElement zero(FieldPtr field) { return {std::move(field), 0}; }
    static FieldElement one(FieldPtr field) { return {std::move(field), 1}; }

    const FieldPtr& field() const noexcept { return field_; }
    Elem index() const noexcept { return index_; }
    bool is_zero() const noexcept { return index_ == 0; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inverse() const;
    FieldElement pow(std::uint64_t e) const;

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

private:
    const Field& same_field(const FieldElement& o) const;

    FieldPtr field_;
    Elem index_;
};

}  // namespace repdec
