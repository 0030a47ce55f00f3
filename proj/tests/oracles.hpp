#pragma once

// Slow, independent reference computations used only by the tests.

#include <cstdint>
#include <optional>
#include <vector>

#include "repdec/interpolation.hpp"

namespace oracle {

using repdec::Elem;
using repdec::Field;

/// C(a, r) mod p.
inline std::uint64_t binom_mod(std::uint64_t a, std::uint64_t r, std::uint32_t p) {
    // Lucas: product of the digit-wise binomials
    std::uint64_t out = 1;
    while (a || r) {
        const std::uint64_t ad = a % p, rd = r % p;
        if (rd > ad) return 0;
        std::uint64_t c = 1;
        for (std::uint64_t t = 0; t < rd; ++t) c = c * (ad - t) / (t + 1);
        out = out * (c % p) % p;
        a /= p;
        r /= p;
    }
    return out;
}

struct Mono {
    std::uint32_t x, y;
};

/// Monomials with weighted degree <= cap, ascending in the (1,w) order
/// (weighted degree, then y exponent).
inline std::vector<Mono> ordered_monomials(std::uint32_t w, std::uint32_t cap) {
    std::vector<Mono> out;
    for (std::uint32_t d = 0; d <= cap; ++d)
        for (std::uint32_t y = 0; y * w <= d; ++y) out.push_back({d - y * w, y});
    return out;
}

/// One linear condition: coefficient of x^r y^s in Q(x + alpha, y + beta).
struct Condition {
    Elem alpha, beta;
    std::uint32_t r, s;
};

inline std::vector<Condition> conditions(const std::vector<Elem>& points, const repdec::MultiplicityMatrix& m) {
    std::vector<Condition> out;
    for (std::uint32_t i = 0; i < m.length(); ++i)
        for (const auto& [beta, mult] : m.column(i))
            for (std::uint32_t r = 0; r < mult; ++r)
                for (std::uint32_t s = 0; r + s < mult; ++s) out.push_back({points[i], beta, r, s});
    return out;
}

inline Elem condition_entry(const Field& f, const Condition& c, Mono mono) {
    if (mono.x < c.r || mono.y < c.s) return 0;
    const auto bx = binom_mod(mono.x, c.r, f.characteristic());
    const auto by = binom_mod(mono.y, c.s, f.characteristic());
    if (bx == 0 || by == 0) return 0;
    Elem v = f.mul(f.pow(c.alpha, mono.x - c.r), f.pow(c.beta, mono.y - c.s));
    // multiply by the integer bx*by mod p embedded in the prime field
    Elem scalar = 0;
    for (std::uint64_t t = 0; t < bx * by % f.characteristic(); ++t) scalar = f.add(scalar, 1);
    return f.mul(v, scalar);
}

/// Leading monomial (x, y) of the minimal nonzero polynomial satisfying the
/// conditions, found by scanning monomials in increasing order and stopping at
/// the first column that is linearly dependent on the earlier ones.
inline std::optional<Mono> minimal_leading_monomial(const Field& f, const std::vector<Elem>& points,
                                                    const repdec::MultiplicityMatrix& m, std::uint32_t w,
                                                    std::uint32_t max_cap) {
    const auto conds = conditions(points, m);
    const auto monos = ordered_monomials(w, max_cap);
    struct Basis {
        std::vector<Elem> col;
        std::size_t pivot;
    };
    std::vector<Basis> basis;
    for (const Mono& mono : monos) {
        std::vector<Elem> col(conds.size());
        for (std::size_t r = 0; r < conds.size(); ++r) col[r] = condition_entry(f, conds[r], mono);
        for (const auto& b : basis) {
            const Elem c = col[b.pivot];
            if (c == 0) continue;
            for (std::size_t r = 0; r < col.size(); ++r) col[r] = f.sub(col[r], f.mul(c, b.col[r]));
        }
        std::size_t pivot = col.size();
        for (std::size_t r = 0; r < col.size(); ++r)
            if (col[r] != 0) {
                pivot = r;
                break;
            }
        if (pivot == col.size()) return mono;
        const Elem inv = f.inv(col[pivot]);
        for (auto& v : col) v = f.mul(v, inv);
        basis.push_back({std::move(col), pivot});
    }
    return std::nullopt;
}

}  // namespace oracle
