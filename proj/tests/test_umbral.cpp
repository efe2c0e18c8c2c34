#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "umbral.hpp"

using namespace ferrers;

namespace {

Series random_series(std::mt19937& rng, int arity, int order) {
    std::uniform_int_distribution<int> nterms(0, 4), expo(0, 4), deg(0, 6),
        coef(-3, 3);
    Series s(arity, order);
    const int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        Exponents e = kNoVars;
        for (int v = 0; v < arity; ++v) e[v] = expo(rng);
        s.add_term(deg(rng), e, coef(rng));
    }
    return s;
}

}  // namespace

TEST_CASE("initial condition") {
    Series i4 = initial_condition(4);
    Series e4(1, 4);
    e4.add_term(2, {1, 0, 0}, 1);
    e4.add_term(3, {2, 0, 0}, 1);
    e4.add_term(4, {3, 0, 0}, 1);
    CHECK(i4 == e4);
    CHECK(initial_condition(1).is_zero());
    CHECK(initial_condition(2) == Series::monomial(1, 2, 1, 2, {1, 0, 0}));
}

TEST_CASE("single-row operator on monomials") {
    Series m = Series::monomial(1, 4, 1, 2, {1, 0, 0});  // x t^2
    Series out = op_u0().apply(m);
    Series expect(1, 4);
    expect.add_term(3, {1, 0, 0}, 1);
    expect.add_term(4, {2, 0, 0}, 1);
    CHECK(out == expect);
    CHECK(op_u0().apply(Series(1, 5)).is_zero());
}

TEST_CASE("ferrers fixed point doubles") {
    Series f = solve_fixed_point(initial_condition(12), op_u0());
    const long one[1] = {1};
    Series f1 = f.eval_at(one);
    CHECK(f1.coeff(0).scalar_part() == 0);
    CHECK(f1.coeff(1).scalar_part() == 0);
    Rat expect(1);
    for (int n = 2; n <= 12; ++n) {
        CHECK(f1.coeff(n).scalar_part() == expect);
        expect *= 2;
    }
}

TEST_CASE("gate creation operator") {
    // Needs top width >= 3.
    for (int h = 0; h <= 6; ++h)
        CHECK(op_u1().apply(Series::monomial(1, 8, 1, h, {2, 0, 0})).is_zero());
    // x^3 t^4 at order 6: only (b1,b2,b3) = (1,1,1) survives.
    Series out = op_u1().apply(Series::monomial(1, 6, 1, 4, {3, 0, 0}));
    CHECK(out == Series::monomial(3, 6, 1, 6, {1, 1, 1}));
}

TEST_CASE("gate extension operator") {
    Series out = op_u2().apply(Series::monomial(3, 8, 1, 6, {1, 1, 1}));
    CHECK(out == Series::monomial(3, 8, 1, 8, {1, 1, 1}));
    // No x2/x3 content: empty range.
    CHECK(op_u2().apply(Series::monomial(3, 8, 1, 3, {5, 0, 0})).is_zero());
}

TEST_CASE("gate closing operator") {
    Series out = op_u3().apply(Series::monomial(3, 8, 1, 6, {1, 1, 1}));
    CHECK(out == Series::monomial(1, 8, 1, 8, {3, 0, 0}));
    CHECK(op_u3().apply(Series(3, 6)).is_zero());
}

TEST_CASE("closing operator: summation form equals substitution form") {
    std::mt19937 rng(404);
    for (int round = 0; round < 100; ++round) {
        Series p = random_series(rng, 3, 10);
        CHECK(op_u3().apply(p) == apply_u3_substitution(p));
    }
}

TEST_CASE("closed rational forms agree with the summation forms") {
    const long pt3[3] = {2, 3, 5};
    const long pt1[1] = {2};
    for (int a = 3; a <= 4; ++a) {
        Series m = Series::monomial(1, 10, 1, a + 1, {a, 0, 0});
        CHECK(op_u1().apply(m).eval_at(pt3) ==
              op_u1().closed_form_at(m, pt3, 10));
    }
    Series m2 = Series::monomial(3, 10, 1, 6, {1, 2, 1});
    CHECK(op_u2().apply(m2).eval_at(pt3) ==
          op_u2().closed_form_at(m2, pt3, 10));
    Series m3 = Series::monomial(3, 10, 1, 6, {1, 1, 1});
    CHECK(op_u3().apply(m3).eval_at(pt1) ==
          op_u3().closed_form_at(m3, pt1, 10));
    CHECK_THROWS_AS(op_u0().closed_form_at(m2, pt1, 10), UsageError);
    const long bad[3] = {2, 2, 5};
    CHECK_THROWS_AS(op_u1().closed_form_at(m2, bad, 10), UsageError);
}

TEST_CASE("linearity and degree gain on randomized inputs") {
    std::mt19937 rng(31337);
    for (const UmbralOperator& op : {op_u0(), op_u1(), op_u2(), op_u3()}) {
        for (int round = 0; round < 100; ++round) {
            Series p = random_series(rng, op.input_arity, 10);
            Series q = random_series(rng, op.input_arity, 10);
            CHECK(op.apply(p + q) == op.apply(p) + op.apply(q));
            CHECK(op.apply(p.scaled(Rat(-3, 2))) == op.apply(p).scaled(Rat(-3, 2)));
            Series out = op.apply(p);
            if (!out.is_zero())
                CHECK(out.min_degree() >= p.min_degree() + op.t_gain);
        }
    }
}

TEST_CASE("operator arity contract") {
    CHECK_THROWS_AS(op_u0().apply(Series(3, 4)), UsageError);
    CHECK_THROWS_AS(op_u2().apply(Series(1, 4)), UsageError);
}

TEST_CASE("fixed point solver guards") {
    UmbralOperator no_gain{OperatorKind::U0, 1, 1, 0};
    CHECK_THROWS_AS(solve_fixed_point(initial_condition(4), no_gain),
                    DomainError);
    CHECK_THROWS_AS(solve_fixed_point(Series(3, 4), op_u0()), UsageError);
    CHECK_THROWS_AS(solve_fixed_point(Series(1, 4), op_u1()), UsageError);
}

TEST_CASE("pipeline series") {
    Pipeline pipe(10);
    const long one[1] = {1};
    const long ones3[3] = {1, 1, 1};

    Series f1 = pipe.ferrers().eval_at(one);
    CHECK(f1.coeff(2).scalar_part() == 1);
    CHECK(f1.coeff(5).scalar_part() == 8);
    CHECK(f1.coeff(10).scalar_part() == 256);

    Series phi1 = pipe.gated().eval_at(ones3);
    CHECK(phi1.min_degree() == 6);
    CHECK(phi1.coeff(6).scalar_part() == 1);
    CHECK(phi1.coeff(7).scalar_part() == 7);
    CHECK(phi1.coeff(8).scalar_part() == 32);
    CHECK(phi1.coeff(9).scalar_part() == 121);
    CHECK(phi1.coeff(10).scalar_part() == 410);

    Series psi1 = pipe.wicketed().eval_at(one);
    CHECK(psi1.min_degree() == 8);
    CHECK(psi1.coeff(8).scalar_part() == 1);
    CHECK(psi1.coeff(9).scalar_part() == 8);
    CHECK(psi1.coeff(10).scalar_part() == 41);

    Pipeline small(5);
    CHECK(small.gated().is_zero());
    CHECK(small.ferrers() ==
          solve_fixed_point(initial_condition(5), op_u0()));
}

TEST_CASE("width bound holds along the pipeline") {
    Pipeline pipe(14);
    CHECK(pipe.ferrers().width_bound_ok());
    CHECK(pipe.gated().width_bound_ok());
    CHECK(pipe.wicketed().width_bound_ok());
}
