#include "doctest.h"

#include <vector>

#include "repdec/galois.hpp"

using namespace repdec;

namespace {

std::vector<FieldPtr> small_fields() {
    std::vector<FieldPtr> out;
    for (std::uint32_t m = 1; m <= 6; ++m) out.push_back(Field::make(2, m));
    for (std::uint32_t m = 1; m <= 3; ++m) out.push_back(Field::make(3, m));
    out.push_back(Field::make(5, 1, {0, 1}));
    out.push_back(Field::make(5, 2, {3, 0, 1}));  // x^2 - 2, 2 is a non-square mod 5
    out.push_back(Field::make(7, 2, {1, 0, 1}));  // x^2 + 1, -1 is a non-square mod 7
    return out;
}

// Pascal's triangle mod p.
std::vector<std::vector<std::uint32_t>> pascal(std::uint32_t rows, std::uint32_t p) {
    std::vector<std::vector<std::uint32_t>> t(rows, std::vector<std::uint32_t>(rows, 0));
    for (std::uint32_t n = 0; n < rows; ++n) {
        t[n][0] = 1 % p;
        for (std::uint32_t r = 1; r <= n; ++r) t[n][r] = (t[n - 1][r - 1] + t[n - 1][r]) % p;
    }
    return t;
}

}  // namespace

TEST_SUITE("galois") {

TEST_CASE("field axioms hold exhaustively for small fields") {
    for (const auto& fp : small_fields()) {
        const Field& f = *fp;
        CAPTURE(f.describe());
        const Elem q = f.size();
        for (Elem a = 0; a < q; ++a) {
            CHECK(f.add(a, 0) == a);
            CHECK(f.mul(a, 1) == a);
            CHECK(f.mul(a, 0) == 0);
            CHECK(f.add(a, f.neg(a)) == 0);
            if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
            for (Elem b = 0; b < q; ++b) {
                REQUIRE(f.add(a, b) == f.add(b, a));
                REQUIRE(f.mul(a, b) == f.mul(b, a));
                REQUIRE(f.sub(f.add(a, b), b) == a);
            }
        }
        // associativity and distributivity on a stride of triples
        for (Elem a = 0; a < q; a += 3)
            for (Elem b = 1; b < q; b += 5)
                for (Elem c = 2; c < q; c += 7) {
                    REQUIRE(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                    REQUIRE(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
                    REQUIRE(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                }
    }
}

TEST_CASE("table multiplication agrees with schoolbook reduction") {
    for (std::uint32_t m : {4u, 6u, 9u}) {
        auto f = Field::make(2, m);
        for (Elem a = 0; a < f->size(); ++a)
            for (Elem b = 0; b < f->size(); b += (m == 9 ? 3 : 1)) REQUIRE(f->mul(a, b) == f->mul_schoolbook(a, b));
    }
    for (const auto& f : small_fields())
        for (Elem a = 0; a < f->size(); ++a)
            for (Elem b = 0; b < f->size(); ++b) REQUIRE(f->mul(a, b) == f->mul_schoolbook(a, b));
}

TEST_CASE("Frobenius map is additive") {
    for (const auto& fp : small_fields()) {
        const Field& f = *fp;
        const auto p = f.characteristic();
        for (Elem a = 0; a < f.size(); ++a)
            for (Elem b = 0; b < f.size(); ++b) REQUIRE(f.pow(f.add(a, b), p) == f.add(f.pow(a, p), f.pow(b, p)));
    }
}

TEST_CASE("a^q = a and pow agrees with repeated multiplication") {
    for (const auto& fp : small_fields()) {
        const Field& f = *fp;
        for (Elem a = 0; a < f.size(); ++a) {
            CHECK(f.pow(a, f.size()) == a);
            Elem acc = 1;
            for (std::uint64_t e = 0; e < 12; ++e) {
                REQUIRE(f.pow(a, e) == acc);
                acc = f.mul(acc, a);
            }
        }
    }
}

TEST_CASE("inverse and division") {
    auto f = Field::make(2, 6);
    CHECK_THROWS_AS(f->inv(0), DomainError);
    CHECK_THROWS_AS(f->div(5, 0), DomainError);
    for (Elem a = 1; a < f->size(); ++a) CHECK(f->div(a, a) == 1);
}

TEST_CASE("primitive elements generate the multiplicative group") {
    auto f64 = Field::make(2, 6);
    CHECK(f64->order(f64->primitive()) == 63);
    CHECK(primitive_element(*f64) == f64->primitive());
    std::vector<bool> seen(64, false);
    for (std::uint32_t e = 0; e < 63; ++e) seen[f64->exp(e)] = true;
    for (Elem a = 1; a < 64; ++a) CHECK(seen[a]);
    for (Elem a = 1; a < 64; ++a) CHECK(f64->exp(f64->log(a)) == a);

    auto f3 = Field::make(3, 1);
    CHECK(f3->primitive() == 2);
    CHECK(f3->order(2) == 2);
    CHECK(f3->order(1) == 1);

    auto f512 = Field::make(2, 9);
    CHECK(f512->order(f512->primitive()) == 511);
}

TEST_CASE("element orders divide q - 1") {
    for (const auto& fp : small_fields())
        for (Elem a = 1; a < fp->size(); ++a) CHECK((fp->size() - 1) % fp->order(a) == 0);
}

TEST_CASE("Lucas binomials match Pascal's triangle") {
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        auto f = p <= 3 ? Field::make(p, 2) : Field::make(p, 1, {0, 1});
        const auto t = pascal(60, p);
        for (std::uint32_t n = 0; n < 60; ++n)
            for (std::uint32_t r = 0; r <= n; ++r) REQUIRE(f->binomial_mod_p(n, r) == t[n][r]);
        CHECK(f->binomial_mod_p(3, 5) == 0);
    }
}

TEST_CASE("from_int reduces into the prime subfield") {
    auto f3 = Field::make(3, 2);
    CHECK(f3->from_int(-1) == f3->neg(1));
    CHECK(f3->from_int(3) == 0);
    CHECK(f3->from_int(4) == 1);
    auto f2 = Field::make(2, 4);
    CHECK(f2->from_int(7) == 1);
    CHECK(f2->from_int(-2) == 0);
}

TEST_CASE("irreducibility test and modulus validation") {
    const std::vector<std::uint32_t> x2x1{1, 1, 1}, x2p1{1, 0, 1};
    CHECK(is_irreducible(2, x2x1));
    CHECK_FALSE(is_irreducible(2, x2p1));
    CHECK_THROWS_AS(Field(2, 2, {1, 0, 1}), FieldError);
    CHECK_THROWS_AS(Field(4, 1, {0, 1}), FieldError);
    CHECK_THROWS_AS(Field(2, 3, {1, 1, 0, 2}), FieldError);
    CHECK_THROWS_AS(Field(2, 3, {1, 1, 0}), FieldError);
    CHECK_THROWS_AS(Field::make(2, 17), FieldError);
    CHECK_THROWS_AS(Field::make(5, 2), FieldError);
    for (std::uint32_t m = 1; m <= 10; ++m) {
        CHECK(is_irreducible(2, Field::default_modulus(2, m)));
        CHECK(is_irreducible(3, Field::default_modulus(3, m)));
    }
}

TEST_CASE("prime factorization helper") {
    CHECK(prime_factors(63) == std::vector<std::uint64_t>{3, 7});
    CHECK(prime_factors(511) == std::vector<std::uint64_t>{7, 73});
    CHECK(prime_factors(64) == std::vector<std::uint64_t>{2});
    CHECK(prime_factors(1).empty());
}

TEST_CASE("FieldElement arithmetic and field mismatch") {
    auto f = Field::make(2, 4);
    auto g = Field::make(3, 2);
    FieldElement a(f, 6), b(f, 11);
    CHECK((a + b).index() == f->add(6, 11));
    CHECK((a * b).index() == f->mul(6, 11));
    CHECK((a / b * b) == a);
    CHECK((a - a).is_zero());
    CHECK((-a + a).is_zero());
    CHECK((a.inverse() * a) == FieldElement::one(f));
    CHECK(a.pow(15) == FieldElement::one(f));
    CHECK_THROWS_AS(FieldElement::zero(f).inverse(), DomainError);
    CHECK_THROWS_AS(a + FieldElement(g, 1), FieldError);
    CHECK_THROWS_AS(FieldElement(f, 16), FieldError);
}

TEST_CASE("describe and equality") {
    CHECK(Field::make(2, 6)->describe() == "GF(2^6)");
    CHECK(*Field::make(2, 6) == *Field::make(2, 6));
    CHECK_FALSE(*Field::make(2, 6) == *Field::make(2, 5));
}

}  // TEST_SUITE
