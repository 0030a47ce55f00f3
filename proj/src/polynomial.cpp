#include "repdec/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace repdec {

UniPoly::UniPoly(std::vector<Elem> coeffs) : c_(std::move(coeffs)) { trim(); }

void UniPoly::trim() noexcept {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Elem UniPoly::evaluate(const Field& f, Elem x) const noexcept {
    Elem acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = f.add(f.mul(acc, x), c_[i]);
    return acc;
}

UniPoly add(const Field& f, const UniPoly& a, const UniPoly& b) {
    std::vector<Elem> out(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.add(a.coeff(i), b.coeff(i));
    return UniPoly(std::move(out));
}

UniPoly sub(const Field& f, const UniPoly& a, const UniPoly& b) {
    std::vector<Elem> out(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.sub(a.coeff(i), b.coeff(i));
    return UniPoly(std::move(out));
}

UniPoly mul(const Field& f, const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const auto& ac = a.coeffs();
    const auto& bc = b.coeffs();
    std::vector<Elem> out(ac.size() + bc.size() - 1, 0);
    for (std::size_t i = 0; i < ac.size(); ++i) {
        if (ac[i] == 0) continue;
        for (std::size_t j = 0; j < bc.size(); ++j) out[i + j] = f.add(out[i + j], f.mul(ac[i], bc[j]));
    }
    return UniPoly(std::move(out));
}

UniPoly scale(const Field& f, const UniPoly& a, Elem c) {
    std::vector<Elem> out(a.coeffs());
    for (auto& v : out) v = f.mul(v, c);
    return UniPoly(std::move(out));
}

DivMod divmod(const Field& f, const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    std::vector<Elem> rem(a.coeffs());
    const int db = b.degree();
    if (a.degree() < db) return {UniPoly{}, a};
    std::vector<Elem> quot(a.degree() - db + 1, 0);
    const Elem lead_inv = f.inv(b.coeffs().back());
    for (int i = a.degree(); i >= db; --i) {
        const Elem c = f.mul(rem[i], lead_inv);
        quot[i - db] = c;
        if (c == 0) continue;
        for (int t = 0; t <= db; ++t) rem[i - db + t] = f.sub(rem[i - db + t], f.mul(c, b.coeffs()[t]));
    }
    rem.resize(db);
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

std::string to_string(const UniPoly& p, char var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        if (p.coeffs()[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << p.coeffs()[i];
        if (i >= 1) os << "*" << var;
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

WeightedOrder::WeightedOrder(std::uint32_t w) : w_(w) {
    if (w == 0) throw std::invalid_argument("weighted order requires w >= 1");
}

BiPoly BiPoly::constant(Elem c) { return monomial({0, 0}, c); }

BiPoly BiPoly::monomial(Monomial m, Elem c) {
    BiPoly out;
    out.set(m, c);
    return out;
}

BiPoly BiPoly::y_minus(const Field& f, const UniPoly& h) {
    BiPoly out = monomial({0, 1});
    for (std::size_t i = 0; i < h.coeffs().size(); ++i) out.set({static_cast<std::uint32_t>(i), 0}, f.neg(h.coeffs()[i]));
    return out;
}

BiPoly BiPoly::from_dense(const std::vector<std::vector<Elem>>& rows) {
    BiPoly out;
    for (std::size_t j = 0; j < rows.size(); ++j)
        for (std::size_t i = 0; i < rows[j].size(); ++i)
            if (rows[j][i] != 0)
                out.terms_.emplace(Monomial{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)}, rows[j][i]);
    return out;
}

Elem BiPoly::coeff(Monomial m) const noexcept {
    auto it = terms_.find(m);
    return it == terms_.end() ? 0 : it->second;
}

void BiPoly::set(Monomial m, Elem c) {
    if (c == 0)
        terms_.erase(m);
    else
        terms_[m] = c;
}

void BiPoly::add_term(const Field& f, Monomial m, Elem c) { set(m, f.add(coeff(m), c)); }

int BiPoly::y_degree() const noexcept {
    // map is y-major, so the last key has the largest y exponent
    return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.y_exp);
}

int BiPoly::x_degree() const noexcept {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.x_exp));
    return d;
}

Monomial BiPoly::leading_monomial(const WeightedOrder& order) const {
    if (terms_.empty()) throw DomainError("zero polynomial has no leading monomial");
    Monomial best = terms_.begin()->first;
    for (const auto& [m, c] : terms_)
        if (order.less(best, m)) best = m;
    return best;
}

std::uint64_t BiPoly::weighted_degree(const WeightedOrder& order) const {
    return order.degree(leading_monomial(order));
}

std::vector<std::vector<Elem>> BiPoly::to_dense() const {
    std::vector<std::vector<Elem>> rows(static_cast<std::size_t>(y_degree() + 1));
    for (const auto& [m, c] : terms_) {
        auto& row = rows[m.y_exp];
        if (row.size() <= m.x_exp) row.resize(m.x_exp + 1, 0);
        row[m.x_exp] = c;
    }
    return rows;
}

Elem BiPoly::evaluate(const Field& f, Elem x, Elem y) const noexcept {
    Elem acc = 0;
    for (const auto& [m, c] : terms_) acc = f.add(acc, f.mul(c, f.mul(f.pow(x, m.x_exp), f.pow(y, m.y_exp))));
    return acc;
}

BiPoly add(const Field& f, const BiPoly& a, const BiPoly& b) {
    BiPoly out = a;
    for (const auto& [m, c] : b.terms()) out.add_term(f, m, c);
    return out;
}

BiPoly mul(const Field& f, const BiPoly& a, const BiPoly& b) {
    BiPoly out;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms())
            out.add_term(f, {ma.x_exp + mb.x_exp, ma.y_exp + mb.y_exp}, f.mul(ca, cb));
    return out;
}

BiPoly scale(const Field& f, const BiPoly& a, Elem c) {
    BiPoly out;
    for (const auto& [m, v] : a.terms()) out.set(m, f.mul(v, c));
    return out;
}

Elem hasse_coefficient(const Field& field, const BiPoly& f, Point point, Monomial shift) {
    Elem acc = 0;
    for (const auto& [m, c] : f.terms()) {
        if (m.x_exp < shift.x_exp || m.y_exp < shift.y_exp) continue;
        const std::uint32_t bx = field.binomial_mod_p(m.x_exp, shift.x_exp);
        const std::uint32_t by = field.binomial_mod_p(m.y_exp, shift.y_exp);
        if (bx == 0 || by == 0) continue;
        Elem term = field.mul(c, field.mul(field.from_int(bx), field.from_int(by)));
        term = field.mul(term, field.pow(point.x, m.x_exp - shift.x_exp));
        term = field.mul(term, field.pow(point.y, m.y_exp - shift.y_exp));
        acc = field.add(acc, term);
    }
    return acc;
}

std::uint32_t multiplicity_at(const Field& field, const BiPoly& f, Point point) {
    if (f.is_zero()) throw DomainError("multiplicity of the zero polynomial is unbounded");
    std::uint32_t total = 0;
    for (const auto& [m, c] : f.terms()) total = std::max(total, m.x_exp + m.y_exp);
    for (std::uint32_t t = 0; t <= total; ++t)
        for (std::uint32_t s = 0; s <= t; ++s)
            if (hasse_coefficient(field, f, point, {t - s, s}) != 0) return t;
    // A nonzero polynomial has a nonzero shifted coefficient of degree <= its total degree.
    return total;
}

UniPoly evaluate_y(const Field& field, const BiPoly& f, const UniPoly& h) {
    const auto rows = f.to_dense();
    // Horner in y: (((q_L) h + q_{L-1}) h + ...) + q_0
    UniPoly acc;
    for (std::size_t j = rows.size(); j-- > 0;) acc = add(field, mul(field, acc, h), UniPoly(rows[j]));
    return acc;
}

std::string to_string(Monomial m) {
    std::ostringstream os;
    if (m.x_exp == 0 && m.y_exp == 0) return "1";
    bool first = true;
    if (m.x_exp > 0) {
        os << "x";
        if (m.x_exp > 1) os << "^" << m.x_exp;
        first = false;
    }
    if (m.y_exp > 0) {
        if (!first) os << "*";
        os << "y";
        if (m.y_exp > 1) os << "^" << m.y_exp;
    }
    return os.str();
}

namespace {

std::string render(const std::vector<std::pair<Monomial, Elem>>& terms) {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms) {
        if (!first) os << " + ";
        first = false;
        os << c;
        if (m.x_exp != 0 || m.y_exp != 0) os << "*" << to_string(m);
    }
    return os.str();
}

}  // namespace

std::string to_string(const BiPoly& f) {
    std::vector<std::pair<Monomial, Elem>> terms(f.terms().rbegin(), f.terms().rend());
    return render(terms);
}

std::string to_string(const BiPoly& f, const WeightedOrder& order) {
    std::vector<std::pair<Monomial, Elem>> terms(f.terms().begin(), f.terms().end());
    std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) { return order.less(b.first, a.first); });
    return render(terms);
}

}  // namespace repdec
