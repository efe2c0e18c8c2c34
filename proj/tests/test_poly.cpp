#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "poly.hpp"

using namespace ferrers;

namespace {

Poly random_poly(std::mt19937& rng, int arity) {
    std::uniform_int_distribution<int> nterms(0, 4), expo(0, 3), coef(-5, 5);
    Poly p(arity);
    const int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        Exponents e = kNoVars;
        for (int v = 0; v < arity; ++v) e[v] = expo(rng);
        p.add_term(e, coef(rng));
    }
    return p;
}

}  // namespace

TEST_CASE("difference of squares") {
    Poly a(3), b(3);
    a.add_term({1, 0, 0}, 1);
    a.add_term({0, 1, 0}, 1);  // x1 + x2
    b.add_term({1, 0, 0}, 1);
    b.add_term({0, 1, 0}, -1);  // x1 - x2
    Poly expect(3);
    expect.add_term({2, 0, 0}, 1);
    expect.add_term({0, 2, 0}, -1);
    CHECK(a * b == expect);
}

TEST_CASE("zero annihilates") {
    Poly p(1);
    p.add_term({2, 0, 0}, 3);
    p.add_term({0, 0, 0}, Rat(1, 2));
    CHECK((p * Poly(1)).is_zero());
}

TEST_CASE("cancellation prunes stored terms") {
    Poly p(1);
    p.add_term({1, 0, 0}, 2);
    p.add_term({1, 0, 0}, -2);
    CHECK(p.is_zero());
    CHECK(p.terms().empty());
}

TEST_CASE("evaluation") {
    Poly p(3);
    p.add_term({1, 1, 1}, 1);
    const long ones[3] = {1, 1, 1};
    CHECK(p.eval(ones) == 1);

    Poly q(3);
    q.add_term({1, 0, 0}, 1);
    q.add_term({0, 1, 0}, -1);  // x1 - x2
    const long sym[3] = {3, 3, 0};
    CHECK(q.eval(sym) == 0);
    const long asym[3] = {3, 5, 0};
    CHECK(q.eval(asym) == -2);
}

TEST_CASE("degree and scalar accessors") {
    Poly p(3);
    CHECK(p.total_degree() == -1);
    CHECK(p.is_scalar());
    CHECK(p.scalar_part() == 0);
    p.add_term({0, 0, 0}, Rat(7, 3));
    CHECK(p.total_degree() == 0);
    CHECK(p.is_scalar());
    CHECK(p.scalar_part() == Rat(7, 3));
    p.add_term({2, 1, 0}, 1);
    CHECK(p.total_degree() == 3);
    CHECK_FALSE(p.is_scalar());
}

TEST_CASE("arity mismatch rejected") {
    Poly a(1), b(3);
    a.add_term({1, 0, 0}, 1);
    b.add_term({1, 0, 0}, 1);
    CHECK_THROWS_AS(a + b, UsageError);
    CHECK_THROWS_AS(a * b, UsageError);
    const long pt[1] = {2};
    CHECK_THROWS_AS(b.eval(pt), UsageError);
}

TEST_CASE("ring axioms on randomized inputs") {
    std::mt19937 rng(20260823);
    for (int round = 0; round < 200; ++round) {
        const int arity = (round % 2 == 0) ? 1 : 3;
        Poly a = random_poly(rng, arity);
        Poly b = random_poly(rng, arity);
        Poly c = random_poly(rng, arity);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        CHECK(a.scaled(Rat(3, 2)).scaled(Rat(2, 3)) == a);
    }
}
