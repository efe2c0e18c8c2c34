#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "analysis.hpp"
#include "doctest.h"
#include "umbral.hpp"

using namespace ferrers;

namespace {

Series specialized(Target target, int order) {
    Pipeline pipe(order);
    const Series& g = pipe.get(target);
    std::vector<long> ones(static_cast<size_t>(g.arity()), 1);
    return g.eval_at(ones);
}

// Divide a relation by its overall monomial t-power (part of the polynomial
// content over the integers).
UniRelation strip_t_content(const UniRelation& rel) {
    int v = rel.c.size();
    for (const UniPoly* p : {&rel.a, &rel.b, &rel.c}) {
        const int pv = upoly_valuation(*p);
        if (pv >= 0 && pv < v) v = pv;
    }
    auto shift = [v](const UniPoly& p) {
        if (upoly_deg(p) < 0) return p;
        return UniPoly(p.begin() + v, p.end());
    };
    return {rel.name, shift(rel.a), shift(rel.b), shift(rel.c)};
}

}  // namespace

TEST_CASE("univariate polynomial helpers") {
    UniPoly p{1, -2};               // 1 - 2t
    UniPoly q{0, 0, 1};             // t^2
    CHECK(upoly_mul(p, q) == UniPoly{0, 0, 1, -2});
    CHECK(upoly_add(p, UniPoly{-1, 2}).empty());
    CHECK(upoly_deg(p) == 1);
    CHECK(upoly_valuation(q) == 2);
    CHECK(upoly_deg(UniPoly{}) == -1);
    CHECK(upoly_pow(p, 2) == UniPoly{1, -4, 4});
}

TEST_CASE("specialized relation transcriptions") {
    UniRelation pe = rel_punceq();
    CHECK(upoly_valuation(pe.a) == 2);
    CHECK(upoly_deg(pe.a) == 8);
    CHECK(upoly_deg(pe.b) == 8);
    CHECK(pe.c[10] == -1);
    UniRelation fe = rel_fdfpeq();
    CHECK(fe.a[0] == 1);
    CHECK(fe.a[8] == 256);
    CHECK(fe.b[6] == -1);
    CHECK(fe.b[10] == -16);
    CHECK(fe.c[14] == 1);
}

TEST_CASE("discriminant factorization of the wicketed relation") {
    UniRelation fe = rel_fdfpeq();
    UniPoly disc = upoly_add(upoly_mul(fe.b, fe.b),
                             upoly_scale(upoly_mul(fe.a, fe.c), -4));
    // t^12 (2t-1)^8 (1 - 4t^2)
    UniPoly t12(13, Rat(0));
    t12[12] = 1;
    UniPoly expect = upoly_mul(upoly_mul(t12, upoly_pow(UniPoly{-1, 2}, 8)),
                               UniPoly{1, 0, -4});
    CHECK(disc == expect);
}

TEST_CASE("residual verification of the specialized relations") {
    Series phi1 = specialized(Target::Gated, 20);
    Series psi1 = specialized(Target::Wicketed, 20);
    ResidualReport r1 = verify_quadratic(phi1, to_series_relation(rel_punceq(), 20));
    CHECK(r1.conclusive);
    CHECK(r1.vanishes);
    ResidualReport r2 = verify_quadratic(psi1, to_series_relation(rel_fdfpeq(), 20));
    CHECK(r2.conclusive);
    CHECK(r2.vanishes);
    // Wrong series: finite residual detected.
    Series f1 = specialized(Target::Ferrers, 20);
    ResidualReport r3 = verify_quadratic(f1, to_series_relation(rel_fdfpeq(), 20));
    CHECK(r3.conclusive);
    CHECK_FALSE(r3.vanishes);
    CHECK(r3.min_degree >= 0);
    // Order below the constant coefficient's reach proves nothing.
    Series psi_small = specialized(Target::Wicketed, 3);
    ResidualReport r4 =
        verify_quadratic(psi_small, to_series_relation(rel_fdfpeq(), 3));
    CHECK_FALSE(r4.conclusive);
}

TEST_CASE("catalytic relations at integer sample points") {
    Pipeline pipe(16);
    QuadraticRelation r123 = rel_punceq123(16);
    const long pt[3] = {2, 3, 5};
    ResidualReport rr = verify_quadratic(pipe.gated(), r123, pt);
    CHECK(rr.conclusive);
    CHECK(rr.vanishes);
    // Perturbed coefficient: negative control.
    QuadraticRelation bad = r123;
    bad.b = bad.b + Series::monomial(3, 16, 1, 5, {1, 1, 1});
    ResidualReport rb = verify_quadratic(pipe.gated(), bad, pt);
    CHECK_FALSE(rb.vanishes);

    QuadraticRelation r1 = rel_fdfpeq1(16);
    const long x[1] = {3};
    ResidualReport rw = verify_quadratic(pipe.wicketed(), r1, x);
    CHECK(rw.conclusive);
    CHECK(rw.vanishes);

    // Symbolic verification without sampling.
    CHECK(verify_quadratic(pipe.gated(), r123).vanishes);
    CHECK(verify_quadratic(pipe.wicketed(), r1).vanishes);
    CHECK(verify_quadratic(pipe.ferrers(), rel_f_rational(16)).vanishes);

    CHECK_THROWS_AS(verify_quadratic(pipe.gated(), rel_fdfpeq1(16)), UsageError);
}

TEST_CASE("specialization report") {
    SpecializationReport rep = specialization_check(16);
    CHECK(rep.all_pass);
    CHECK(rep.checks.size() == 12);  // 2 specialized + 5 + 5 sampled
    for (const auto& chk : rep.checks) CHECK(chk.pass);
}

TEST_CASE("series solutions of the quadratics") {
    Series phi1 = specialized(Target::Gated, 16);
    Series psi1 = specialized(Target::Wicketed, 16);
    CHECK(solve_quadratic_series(rel_punceq(), 16, {{6, 1}, {7, 7}}) == phi1);
    CHECK(solve_quadratic_series(rel_fdfpeq(), 16, {{8, 1}, {9, 8}}) == psi1);

    // C = 0: the zero branch is rejected by a nonzero prefix.
    UniRelation degen{"degenerate", {1}, {-1, 2}, {}};  // G^2 + (2t-1)G = 0
    Series root = solve_quadratic_series(degen, 8, {{0, 1}});
    Series expect = Series::one(0, 8) - Series::monomial(0, 8, 2, 1);
    CHECK(root == expect);
    CHECK_THROWS_AS(solve_quadratic_series(degen, 8, {{0, 5}}), DomainError);
    CHECK_THROWS_AS(solve_quadratic_series(degen, 8, {}), DomainError);
    UniRelation no_a{"linear", {}, {1}, {0, 1}};
    CHECK_THROWS_AS(solve_quadratic_series(no_a, 8, {}), DomainError);
}

TEST_CASE("nullspace of exact rational matrices") {
    // x + y = 0 has kernel spanned by (1, -1).
    auto basis = nullspace({{Rat(1), Rat(1)}});
    REQUIRE(basis.size() == 1);
    CHECK(basis[0][0] * Rat(1) + basis[0][1] * Rat(1) == 0);
    // Full-rank square system has trivial kernel.
    CHECK(nullspace({{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}).empty());
    // Rank-1 3x3.
    auto b3 = nullspace({{Rat(1), Rat(2), Rat(3)},
                         {Rat(2), Rat(4), Rat(6)},
                         {Rat(3), Rat(6), Rat(9)}});
    CHECK(b3.size() == 2);
    for (const auto& v : b3)
        CHECK(v[0] + 2 * v[1] + 3 * v[2] == 0);
}

TEST_CASE("guessing the wicketed relation") {
    Series psi1 = specialized(Target::Wicketed, 40);
    auto res = guess_quadratic_auto(psi1);
    REQUIRE(res.has_value());
    CHECK_FALSE(res->effectively_linear);
    CHECK_FALSE(res->multiple_solutions);
    UniRelation expect = rel_fdfpeq();
    CHECK(res->rel.a == expect.a);
    CHECK(res->rel.b == expect.b);
    CHECK(res->rel.c == expect.c);
}

TEST_CASE("guessing the gated relation") {
    Series phi1 = specialized(Target::Gated, 40);
    auto res = guess_quadratic(phi1, 6, 8, 10);
    REQUIRE(res.has_value());
    // The minimal relation is the displayed one divided by its overall
    // polynomial content t^2.
    UniRelation expect = strip_t_content(rel_punceq());
    CHECK(res->rel.a == expect.a);
    CHECK(res->rel.b == expect.b);
    CHECK(res->rel.c == expect.c);
    CHECK(guess_quadratic_auto(phi1).has_value());
}

TEST_CASE("guessing a rational series yields a flagged linear relation") {
    Series f1 = specialized(Target::Ferrers, 20);
    auto res = guess_quadratic(f1, 0, 1, 2);
    REQUIRE(res.has_value());
    CHECK(res->effectively_linear);
    CHECK(res->rel.a.empty());
    CHECK(res->rel.b == UniPoly{-1, 2});
    CHECK(res->rel.c == UniPoly{0, 0, 1});
    auto any = guess_quadratic_auto(f1);
    REQUIRE(any.has_value());
    CHECK(any->effectively_linear);
}

TEST_CASE("guesser input validation") {
    Series short_series = specialized(Target::Wicketed, 10);
    CHECK_THROWS_AS(guess_quadratic(short_series, 8, 8, 14), UsageError);
    CHECK_THROWS_AS(guess_quadratic(specialized(Target::Wicketed, 20), -1, 2, 2),
                    UsageError);
    Pipeline pipe(12);
    CHECK_THROWS_AS(guess_quadratic(pipe.gated(), 2, 2, 2), UsageError);
}

TEST_CASE("closed form for the wicketed series") {
    Series cf = closed_form_psi(10);
    CHECK(cf.min_degree() == 8);
    CHECK(cf.coeff(8).scalar_part() == 1);
    CHECK(cf.coeff(9).scalar_part() == 8);
    CHECK(cf.coeff(10).scalar_part() == 41);
    CHECK(cf == specialized(Target::Wicketed, 10));
}
