#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "repdec/galois.hpp"

namespace repdec {

/// Univariate polynomial over a field, coefficients low degree first.
/// Always trimmed: the zero polynomial has no coefficients.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Elem> coeffs);

    static UniPoly constant(Elem c) { return UniPoly({c}); }
    /// x - a
    static UniPoly linear_root(const Field& f, Elem a) { return UniPoly({f.neg(a), 1}); }

    const std::vector<Elem>& coeffs() const noexcept { return c_; }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    Elem coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }

    Elem evaluate(const Field& f, Elem x) const noexcept;

    bool operator==(const UniPoly&) const = default;
    auto operator<=>(const UniPoly& o) const = default;

private:
    void trim() noexcept;
    std::vector<Elem> c_;
};

UniPoly add(const Field& f, const UniPoly& a, const UniPoly& b);
UniPoly sub(const Field& f, const UniPoly& a, const UniPoly& b);
UniPoly mul(const Field& f, const UniPoly& a, const UniPoly& b);
UniPoly scale(const Field& f, const UniPoly& a, Elem c);

struct DivMod {
    UniPoly quotient;
    UniPoly remainder;
};
/// Throws DomainError on division by the zero polynomial.
DivMod divmod(const Field& f, const UniPoly& a, const UniPoly& b);

std::string to_string(const UniPoly& p, char var = 'x');

/// Exponent pair: x^x_exp * y^y_exp.
struct Monomial {
    std::uint32_t x_exp = 0;
    std::uint32_t y_exp = 0;

    // Storage order only (y-major); the decoding order is WeightedOrder.
    bool operator==(const Monomial&) const = default;
    std::strong_ordering operator<=>(const Monomial& o) const noexcept {
        if (auto c = y_exp <=> o.y_exp; c != 0) return c;
        return x_exp <=> o.x_exp;
    }
};

/// The (1, w)-weighted degree order: deg(x^i y^j) = i + j*w, ties broken in
/// favour of the larger y exponent.
class WeightedOrder {
public:
    explicit WeightedOrder(std::uint32_t w);

    std::uint32_t weight() const noexcept { return w_; }

    std::uint64_t degree(Monomial m) const noexcept {
        return static_cast<std::uint64_t>(m.x_exp) + static_cast<std::uint64_t>(m.y_exp) * w_;
    }

    std::strong_ordering compare(Monomial a, Monomial b) const noexcept {
        if (auto c = degree(a) <=> degree(b); c != 0) return c;
        return a.y_exp <=> b.y_exp;
    }
    bool less(Monomial a, Monomial b) const noexcept { return compare(a, b) < 0; }

private:
    std::uint32_t w_;
};

inline std::uint64_t weighted_degree(const WeightedOrder& order, Monomial m) { return order.degree(m); }

/// Sparse bivariate polynomial; stored coefficients are nonzero.
class BiPoly {
public:
    using Terms = std::map<Monomial, Elem>;

    BiPoly() = default;

    static BiPoly constant(Elem c);
    static BiPoly monomial(Monomial m, Elem c = 1);
    /// y - h(x)
    static BiPoly y_minus(const Field& f, const UniPoly& h);
    /// Dense form indexed by y exponent, each entry a coefficient vector in x.
    static BiPoly from_dense(const std::vector<std::vector<Elem>>& rows);

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Elem coeff(Monomial m) const noexcept;
    void set(Monomial m, Elem c);
    void add_term(const Field& f, Monomial m, Elem c);

    /// -1 for the zero polynomial.
    int y_degree() const noexcept;
    int x_degree() const noexcept;
    /// Throws DomainError for the zero polynomial.
    Monomial leading_monomial(const WeightedOrder& order) const;
    std::uint64_t weighted_degree(const WeightedOrder& order) const;

    std::vector<std::vector<Elem>> to_dense() const;

    Elem evaluate(const Field& f, Elem x, Elem y) const noexcept;

    bool operator==(const BiPoly&) const = default;

private:
    Terms terms_;
};

BiPoly add(const Field& f, const BiPoly& a, const BiPoly& b);
BiPoly mul(const Field& f, const BiPoly& a, const BiPoly& b);
BiPoly scale(const Field& f, const BiPoly& a, Elem c);

struct Point {
    Elem x = 0;
    Elem y = 0;
};

/// Coefficient of x^r y^s in f(x + point.x, y + point.y).
Elem hasse_coefficient(const Field& field, const BiPoly& f, Point point, Monomial shift);

/// Smallest r + s with a nonzero shifted coefficient. Throws DomainError for f == 0.
std::uint32_t multiplicity_at(const Field& field, const BiPoly& f, Point point);

/// The univariate polynomial f(x, h(x)).
UniPoly evaluate_y(const Field& field, const BiPoly& f, const UniPoly& h);

/// Terms rendered as coef*x^i*y^j, highest monomial first when an order is given.
std::string to_string(const BiPoly& f);
std::string to_string(const BiPoly& f, const WeightedOrder& order);
std::string to_string(Monomial m);

}  // namespace repdec
