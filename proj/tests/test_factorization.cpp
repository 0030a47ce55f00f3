#include "doctest.h"

#include <algorithm>
#include <random>

#include "repdec/factorization.hpp"

using namespace repdec;

namespace {

// Every h of degree <= d with Q(x, h(x)) = 0, by enumeration.
std::vector<UniPoly> exhaustive_roots(const Field& f, const BiPoly& q, int d) {
    std::vector<UniPoly> out;
    std::vector<Elem> c(static_cast<std::size_t>(d + 1), 0);
    while (true) {
        const UniPoly h(c);
        if (evaluate_y(f, q, h).is_zero()) out.push_back(h);
        std::size_t i = 0;
        while (i < c.size() && ++c[i] == f.size()) c[i++] = 0;
        if (i == c.size()) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

UniPoly random_uni(std::mt19937_64& rng, const Field& f, int deg) {
    std::vector<Elem> c(static_cast<std::size_t>(deg + 1));
    for (auto& x : c) x = static_cast<Elem>(rng() % f.size());
    return UniPoly(c);
}

}  // namespace

TEST_SUITE("factorization") {

TEST_CASE("degenerate inputs") {
    auto f = Field::make(2, 4);
    const auto y = y_roots(*f, BiPoly::monomial({0, 1}), 3);
    REQUIRE(y.size() == 1);
    CHECK(y[0].is_zero());
    CHECK(y_roots(*f, BiPoly::monomial({1, 0}), 3).empty());
    CHECK(y_roots(*f, BiPoly::constant(5), 3).empty());
    CHECK_THROWS_AS(y_roots(*f, BiPoly(), 3), DomainError);
}

TEST_CASE("product of linear factors times an x-polynomial") {
    auto f = Field::make(2, 4);
    const UniPoly h1({3, 7, 1}), h2({0, 9});
    BiPoly q = mul(*f, BiPoly::y_minus(*f, h1), BiPoly::y_minus(*f, h2));
    q = mul(*f, q, BiPoly::from_dense({{1, 0, 0, 1}}));  // x^3 + 1
    const auto roots = y_roots(*f, q, 2);
    CHECK(roots == std::vector<UniPoly>{h2, h1});
    CHECK(roots == exhaustive_roots(*f, q, 2));
    // degree bound excludes h1
    CHECK(y_roots(*f, q, 1) == std::vector<UniPoly>{h2});
}

TEST_CASE("repeated roots are reported once") {
    auto f = Field::make(3, 2);
    const UniPoly h({2, 5});
    const BiPoly lin = BiPoly::y_minus(*f, h);
    const BiPoly q = mul(*f, mul(*f, lin, lin), lin);
    CHECK(y_roots(*f, q, 3) == std::vector<UniPoly>{h});
}

TEST_CASE("random products agree with exhaustive search") {
    std::mt19937_64 rng(31);
    for (auto f : {Field::make(2, 3), Field::make(3, 2), Field::make(5, 1, {0, 1})}) {
        for (int t = 0; t < 25; ++t) {
            BiPoly q = BiPoly::from_dense({random_uni(rng, *f, 2).coeffs()});
            if (q.is_zero()) q = BiPoly::constant(1);
            const int factors = 1 + static_cast<int>(rng() % 3);
            for (int j = 0; j < factors; ++j) q = mul(*f, q, BiPoly::y_minus(*f, random_uni(rng, *f, 1)));
            // a factor that is not linear in y
            BiPoly extra = BiPoly::monomial({0, 2});
            extra.add_term(*f, {1, 0}, 1);
            extra.add_term(*f, {0, 0}, static_cast<Elem>(rng() % f->size()));
            if (t % 2) q = mul(*f, q, extra);
            CAPTURE(f->describe());
            REQUIRE(y_roots(*f, q, 1) == exhaustive_roots(*f, q, 1));
        }
    }
}

TEST_CASE("univariate roots") {
    auto f = Field::make(2, 4);
    UniPoly p = mul(*f, UniPoly::linear_root(*f, 3), UniPoly::linear_root(*f, 11));
    p = mul(*f, p, UniPoly::linear_root(*f, 3));
    CHECK(univariate_roots(*f, p) == std::vector<Elem>{3, 11});
    CHECK(univariate_roots(*f, UniPoly({1})).empty());
    CHECK(univariate_roots(*f, UniPoly({1, 1, 1})).size() == 2);  // x^2 + x + 1 splits in GF(4) inside GF(16)
}

}  // TEST_SUITE
