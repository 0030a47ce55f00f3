#include "repdec/interpolation.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace repdec {

MultiplicityMatrix::MultiplicityMatrix(std::uint32_t n, std::uint32_t q) : q_(q), columns_(n) {}

std::uint32_t MultiplicityMatrix::get(std::uint32_t position, Elem beta) const {
    const auto& col = columns_.at(position);
    auto it = std::lower_bound(col.begin(), col.end(), beta, [](const Entry& e, Elem b) { return e.first < b; });
    return (it != col.end() && it->first == beta) ? it->second : 0;
}

void MultiplicityMatrix::set(std::uint32_t position, Elem beta, std::uint32_t multiplicity) {
    if (beta >= q_) throw std::out_of_range("field value out of range");
    auto& col = columns_.at(position);
    auto it = std::lower_bound(col.begin(), col.end(), beta, [](const Entry& e, Elem b) { return e.first < b; });
    const bool present = it != col.end() && it->first == beta;
    if (multiplicity == 0) {
        if (present) col.erase(it);
    } else if (present) {
        it->second = multiplicity;
    } else {
        col.insert(it, {beta, multiplicity});
    }
}

std::uint32_t MultiplicityMatrix::max_multiplicity() const noexcept {
    std::uint32_t m = 0;
    for (const auto& col : columns_)
        for (const auto& [b, v] : col) m = std::max(m, v);
    return m;
}

std::uint64_t MultiplicityMatrix::total() const noexcept {
    std::uint64_t t = 0;
    for (const auto& col : columns_)
        for (const auto& [b, v] : col) t += v;
    return t;
}

bool MultiplicityMatrix::is_zero() const noexcept {
    return std::all_of(columns_.begin(), columns_.end(), [](const auto& c) { return c.empty(); });
}

std::uint64_t condition_count(const MultiplicityMatrix& m) {
    std::uint64_t total = 0;
    for (std::uint32_t i = 0; i < m.length(); ++i)
        for (const auto& [beta, mult] : m.column(i)) total += static_cast<std::uint64_t>(mult) * (mult + 1) / 2;
    return total;
}

std::uint64_t count_monomials_up_to(std::uint32_t w, std::uint64_t cap) {
    std::uint64_t count = 0;
    for (std::uint64_t j = 0; j * w <= cap; ++j) count += cap - j * w + 1;
    return count;
}

DegreeBound degree_bound(const WeightedOrder& order, std::uint64_t budget) {
    if (budget == 0) throw std::invalid_argument("monomial budget must be positive");
    const std::uint32_t w = order.weight();
    // Count grows at least by one per step of C; walk up from a cheap lower estimate.
    std::uint64_t cap = 0;
    while (count_monomials_up_to(w, cap) < budget) ++cap;
    return {cap, static_cast<std::uint32_t>(cap / w)};
}

std::uint32_t interpolation_weight(const RSCode& code) { return std::max<std::uint32_t>(code.dimension() - 1, 1); }

namespace {

// Candidate polynomial in dense form: rows[t] holds the x-coefficients of y^t.
// Its leading monomial is always x^lead_x * y^index.
struct Candidate {
    std::vector<std::vector<Elem>> rows;
    std::uint32_t lead_x = 0;
};

class KoetterKernel {
public:
    KoetterKernel(const Field& field, std::uint32_t w, std::uint32_t y_cap) : f_(field), w_(w) {
        cands_.resize(y_cap + 1);
        for (std::uint32_t j = 0; j <= y_cap; ++j) {
            cands_[j].rows.assign(y_cap + 1, {});
            cands_[j].rows[j] = {1};
        }
        disc_.resize(y_cap + 1);
    }

    void set_point(Elem alpha, Elem beta) {
        alpha_ = alpha;
        beta_ = beta;
        beta_pow_.assign(cands_.size() + 1, 1);
        for (std::size_t e = 1; e < beta_pow_.size(); ++e) beta_pow_[e] = f_.mul(beta_pow_[e - 1], beta);
    }

    void apply(std::uint32_t r, std::uint32_t s) {
        if (r > 0) ensure_alpha_powers();
        bool any = false;
        std::size_t best = 0;
        for (std::size_t j = 0; j < cands_.size(); ++j) {
            disc_[j] = discrepancy(cands_[j], r, s);
            if (disc_[j] == 0) continue;
            if (!any || lead_less(j, best)) best = j;
            any = true;
        }
        if (!any) return;

        Candidate& pivot = cands_[best];
        const Elem pivot_inv = f_.inv(disc_[best]);
        for (std::size_t j = 0; j < cands_.size(); ++j) {
            if (j == best || disc_[j] == 0) continue;
            const Elem factor = f_.mul(disc_[j], pivot_inv);
            auto& rows = cands_[j].rows;
            for (std::size_t t = 0; t < rows.size(); ++t) {
                const auto& src = pivot.rows[t];
                if (src.empty()) continue;
                auto& dst = rows[t];
                if (dst.size() < src.size()) dst.resize(src.size(), 0);
                for (std::size_t i = 0; i < src.size(); ++i) dst[i] = f_.sub(dst[i], f_.mul(factor, src[i]));
            }
        }
        // pivot <- (x - alpha) * pivot
        const Elem neg_alpha = f_.neg(alpha_);
        for (auto& row : pivot.rows) {
            if (row.empty()) continue;
            row.push_back(0);
            for (std::size_t i = row.size() - 1; i > 0; --i) row[i] = f_.add(row[i - 1], f_.mul(neg_alpha, row[i]));
            row[0] = f_.mul(neg_alpha, row[0]);
        }
        ++pivot.lead_x;
    }

    std::size_t minimal() const {
        std::size_t best = 0;
        for (std::size_t j = 1; j < cands_.size(); ++j)
            if (lead_less(j, best)) best = j;
        return best;
    }

    const Candidate& candidate(std::size_t j) const { return cands_[j]; }

private:
    bool lead_less(std::size_t a, std::size_t b) const {
        const std::uint64_t da = cands_[a].lead_x + static_cast<std::uint64_t>(a) * w_;
        const std::uint64_t db = cands_[b].lead_x + static_cast<std::uint64_t>(b) * w_;
        return da != db ? da < db : a < b;
    }

    void ensure_alpha_powers() {
        std::size_t need = 1;
        for (const auto& c : cands_)
            for (const auto& row : c.rows) need = std::max(need, row.size());
        if (alpha_pow_.empty() || alpha_cached_ != alpha_) {
            alpha_pow_.assign(1, 1);
            alpha_cached_ = alpha_;
        }
        while (alpha_pow_.size() < need) alpha_pow_.push_back(f_.mul(alpha_pow_.back(), alpha_));
    }

    bool binom_odd(std::uint64_t n, std::uint64_t r) const { return (n & r) == r; }

    // Coefficient of x^r y^s in g(x + alpha, y + beta).
    Elem discrepancy(const Candidate& g, std::uint32_t r, std::uint32_t s) const {
        Elem acc = 0;
        const bool binary = f_.is_binary();
        for (std::size_t t = s; t < g.rows.size(); ++t) {
            const auto& row = g.rows[t];
            if (row.size() <= r) continue;
            Elem ys;
            if (binary) {
                if (!binom_odd(t, s)) continue;
                ys = beta_pow_[t - s];
            } else {
                const auto c = f_.binomial_mod_p(t, s);
                if (c == 0) continue;
                ys = f_.mul(f_.from_int(c), beta_pow_[t - s]);
            }
            Elem inner = 0;
            if (r == 0) {
                for (std::size_t i = row.size(); i-- > 0;) inner = f_.add(f_.mul(inner, alpha_), row[i]);
            } else if (binary) {
                for (std::size_t i = r; i < row.size(); ++i)
                    if (row[i] != 0 && binom_odd(i, r)) inner = f_.add(inner, f_.mul(row[i], alpha_pow_[i - r]));
            } else {
                for (std::size_t i = r; i < row.size(); ++i) {
                    if (row[i] == 0) continue;
                    const auto c = f_.binomial_mod_p(i, r);
                    if (c == 0) continue;
                    inner = f_.add(inner, f_.mul(f_.mul(f_.from_int(c), row[i]), alpha_pow_[i - r]));
                }
            }
            acc = f_.add(acc, f_.mul(inner, ys));
        }
        return acc;
    }

    const Field& f_;
    std::uint32_t w_;
    std::vector<Candidate> cands_;
    std::vector<Elem> disc_;
    Elem alpha_ = 0;
    Elem beta_ = 0;
    Elem alpha_cached_ = 0;
    std::vector<Elem> alpha_pow_;
    std::vector<Elem> beta_pow_;
};

}  // namespace

InterpolationResult compute_q_with_cap(const RSCode& code, const MultiplicityMatrix& m, std::uint32_t y_cap) {
    if (m.length() != code.length()) throw std::invalid_argument("multiplicity matrix length does not match code");
    const Field& f = code.field();
    const std::uint32_t w = interpolation_weight(code);
    const WeightedOrder order(w);

    KoetterKernel kernel(f, w, y_cap);
    for (std::uint32_t i = 0; i < m.length(); ++i) {
        for (const auto& [beta, mult] : m.column(i)) {
            kernel.set_point(code.points()[i], beta);
            for (std::uint32_t total = 0; total < mult; ++total)
                for (std::uint32_t s = 0; s <= total; ++s) kernel.apply(total - s, s);
        }
    }

    const std::size_t best = kernel.minimal();
    const Candidate& c = kernel.candidate(best);
    BiPoly q = BiPoly::from_dense(c.rows);
    const Monomial lead{c.lead_x, static_cast<std::uint32_t>(best)};
    q = scale(f, q, f.inv(q.coeff(lead)));

    InterpolationResult out;
    out.q = std::move(q);
    out.leading = lead;
    out.weighted_degree = order.degree(lead);
    out.y_cap = y_cap;
    out.conditions = condition_count(m);
    out.budget = out.conditions + 1;
    out.weighted_cap = degree_bound(order, out.budget).weighted_cap;

#ifdef REPDEC_CHECKED
    if (!satisfies_constraints(code, m, out.q)) throw std::logic_error("interpolation result violates a constraint");
    if (out.q.leading_monomial(order).x_exp != lead.x_exp || out.q.leading_monomial(order).y_exp != lead.y_exp)
        throw std::logic_error("interpolation leading monomial bookkeeping is inconsistent");
#endif
    return out;
}

InterpolationResult compute_q(const RSCode& code, const MultiplicityMatrix& m) {
    const WeightedOrder order(interpolation_weight(code));
    const auto bound = degree_bound(order, monomial_budget(m));
    return compute_q_with_cap(code, m, bound.y_cap);
}

bool satisfies_constraints(const RSCode& code, const MultiplicityMatrix& m, const BiPoly& f) {
    for (std::uint32_t i = 0; i < m.length(); ++i)
        for (const auto& [beta, mult] : m.column(i))
            for (std::uint32_t total = 0; total < mult; ++total)
                for (std::uint32_t s = 0; s <= total; ++s)
                    if (hasse_coefficient(code.field(), f, {code.points()[i], beta}, {total - s, s}) != 0) return false;
    return true;
}

}  // namespace repdec
