#include "repdec/factorization.hpp"

#include <algorithm>
#include <limits>

namespace repdec {

namespace {

using Rows = std::vector<std::vector<Elem>>;

void strip_x_content(Rows& rows) {
    std::size_t v = std::numeric_limits<std::size_t>::max();
    for (const auto& row : rows)
        for (std::size_t i = 0; i < row.size() && i < v; ++i)
            if (row[i] != 0) {
                v = i;
                break;
            }
    if (v == 0 || v == std::numeric_limits<std::size_t>::max()) return;
    for (auto& row : rows) row.erase(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(std::min(v, row.size())));
}

// rows(x, x*y + gamma)
Rows substitute(const Field& f, const Rows& rows, Elem gamma) {
    Rows out(rows.size());
    std::vector<Elem> gpow(rows.size() + 1, 1);
    for (std::size_t e = 1; e < gpow.size(); ++e) gpow[e] = f.mul(gpow[e - 1], gamma);
    for (std::size_t t = 0; t < rows.size(); ++t) {
        std::vector<Elem> acc;
        for (std::size_t s = t; s < rows.size(); ++s) {
            if (rows[s].empty()) continue;
            const auto c = f.binomial_mod_p(s, t);
            if (c == 0) continue;
            const Elem factor = f.mul(f.from_int(c), gpow[s - t]);
            if (factor == 0) continue;
            if (acc.size() < rows[s].size()) acc.resize(rows[s].size(), 0);
            for (std::size_t i = 0; i < rows[s].size(); ++i) acc[i] = f.add(acc[i], f.mul(factor, rows[s][i]));
        }
        while (!acc.empty() && acc.back() == 0) acc.pop_back();
        if (!acc.empty()) acc.insert(acc.begin(), t, 0);  // multiply by x^t
        out[t] = std::move(acc);
    }
    while (!out.empty() && out.back().empty()) out.pop_back();
    return out;
}

void search(const Field& f, Rows rows, int depth, int max_degree, std::vector<Elem>& prefix,
            std::vector<std::vector<Elem>>& found) {
    if (depth > max_degree) {
        found.push_back(prefix);
        return;
    }
    strip_x_content(rows);
    std::vector<Elem> at_zero(rows.size(), 0);
    for (std::size_t t = 0; t < rows.size(); ++t) at_zero[t] = rows[t].empty() ? 0 : rows[t][0];
    for (Elem gamma : univariate_roots(f, UniPoly(at_zero))) {
        prefix.push_back(gamma);
        search(f, substitute(f, rows, gamma), depth + 1, max_degree, prefix, found);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Elem> univariate_roots(const Field& field, const UniPoly& p) {
    std::vector<Elem> roots;
    if (p.is_zero()) {
        roots.resize(field.size());
        for (Elem a = 0; a < field.size(); ++a) roots[a] = a;
        return roots;
    }
    if (p.degree() == 0) return roots;
    for (Elem a = 0; a < field.size(); ++a)
        if (p.evaluate(field, a) == 0) roots.push_back(a);
    return roots;
}

std::vector<UniPoly> y_roots(const Field& field, const BiPoly& q, int max_degree) {
    if (q.is_zero()) throw DomainError("root finding on the zero polynomial");
    std::vector<UniPoly> out;
    if (max_degree < 0 || q.y_degree() < 1) return out;

    std::vector<std::vector<Elem>> found;
    std::vector<Elem> prefix;
    search(field, q.to_dense(), 0, max_degree, prefix, found);

    for (auto& coeffs : found) {
        UniPoly h(std::move(coeffs));
        if (evaluate_y(field, q, h).is_zero()) out.push_back(std::move(h));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace repdec
