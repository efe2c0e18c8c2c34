#include "umbral.hpp"

namespace ferrers {

namespace {

Series apply_u0_sum(const Series& p) {
    const int N = p.order();
    Series r(1, N);
    for (int d = 0; d <= N; ++d) {
        for (const auto& [e, c] : p.coeff(d).terms()) {
            const int a = e[0];
            // x^a -> sum_{b>=a} x^b t^{b-a+1}
            for (int b = a; d + b - a + 1 <= N; ++b)
                r.add_term(d + b - a + 1, {b, 0, 0}, c);
        }
    }
    return r;
}

Series apply_u1_sum(const Series& p) {
    const int N = p.order();
    Series r(3, N);
    for (int d = 0; d <= N; ++d) {
        for (const auto& [e, c] : p.coeff(d).terms()) {
            const int a = e[0];
            // x^a -> sum over 1<=b1<=a-2, 1<=b2<=a-1-b1, b3>=a-b1-b2
            for (int b1 = 1; b1 <= a - 2; ++b1) {
                for (int b2 = 1; b2 <= a - 1 - b1; ++b2) {
                    for (int b3 = a - b1 - b2;
                         d + 2 + b1 + b2 + b3 - a <= N; ++b3)
                        r.add_term(d + 2 + b1 + b2 + b3 - a, {b1, b2, b3}, c);
                }
            }
        }
    }
    return r;
}

Series apply_u2_sum(const Series& p) {
    const int N = p.order();
    Series r(3, N);
    for (int d = 0; d <= N; ++d) {
        for (const auto& [e, c] : p.coeff(d).terms()) {
            const int b1 = e[0], b2 = e[1], b3 = e[2];
            // x1 passes through; sum over b2<=c2<=b2+b3-1, c3>=b2+b3-c2
            for (int c2 = b2; c2 <= b2 + b3 - 1; ++c2) {
                for (int c3 = b2 + b3 - c2;
                     d + 2 + c2 + c3 - b2 - b3 <= N; ++c3)
                    r.add_term(d + 2 + c2 + c3 - b2 - b3, {b1, c2, c3}, c);
            }
        }
    }
    return r;
}

Series apply_u3_sum(const Series& p) {
    const int N = p.order();
    Series r(1, N);
    for (int d = 0; d <= N; ++d) {
        for (const auto& [e, c] : p.coeff(d).terms()) {
            const int b1 = e[0], b2 = e[1], b3 = e[2];
            // x1^b1 x2^b2 x3^b3 -> sum_{a>=b1+b2+b3} x^a t^{1+a-b1-b3}
            for (int a = b1 + b2 + b3; d + 1 + a - b1 - b3 <= N; ++a)
                r.add_term(d + 1 + a - b1 - b3, {a, 0, 0}, c);
        }
    }
    return r;
}

// p evaluated at a single integer, as an arity-0 t-series.
Series eval1(const Series& p, long x) {
    const long pt[1] = {x};
    return p.eval_at(pt);
}

Series u1_closed_at(const Series& p, long x1, long x2, long x3, int order) {
    if (x1 == x2 || x1 == x3 || x2 == x3)
        throw UsageError("closed-form cross-check needs pairwise distinct points");
    Series px1 = eval1(p, x1).with_order(order);
    Series px2 = eval1(p, x2).with_order(order);
    Series px3 = eval1(p, x3).with_order(order);
    Rat d12(x1 - x2), d13(x1 - x3), d23(x2 - x3);
    Series geom = Series::geometric(0, order, Rat(x3), 1);  // 1/(1-x3 t)
    Series t2 = Series::monomial(0, order, 1, 2);
    Series a = px1.scaled(Rat(x2) * Rat(x3) / (d12 * d13));
    Series b = px3.scaled(Rat(x1) * Rat(x2) * d12 / (d12 * d13 * d23)) -
               px2.scaled(Rat(x1) * Rat(x3) * d13 / (d12 * d13 * d23));
    return (a + b) * t2 * geom;
}

Series u2_closed_at(const Series& p, long x1, long x2, long x3, int order) {
    if (x2 == x3)
        throw UsageError("closed-form cross-check needs x2 != x3");
    const long pa[3] = {x1, x2, x2};
    const long pb[3] = {x1, x2, x3};
    Series diff = p.eval_at(pa).with_order(order) - p.eval_at(pb).with_order(order);
    Series geom = Series::geometric(0, order, Rat(x3), 1);
    Series pre = Series::monomial(0, order, Rat(x3) / Rat(x2 - x3), 2);
    return pre * geom * diff;
}

Series u3_closed_at(const Series& p, long x, int order) {
    // t/(1-tx) * p(x, tx, x) with x numeric.
    const SubstImage images[3] = {
        {Rat(x), 0, -1, 0}, {Rat(x), 1, -1, 0}, {Rat(x), 0, -1, 0}};
    Series inner = p.substituted(images, 0).with_order(order);
    Series geom = Series::geometric(0, order, Rat(x), 1);
    return Series::monomial(0, order, 1, 1) * geom * inner;
}

}  // namespace

Series UmbralOperator::apply(const Series& p) const {
    if (p.arity() != input_arity) throw UsageError("operator input arity mismatch");
    switch (kind) {
        case OperatorKind::U0: return apply_u0_sum(p);
        case OperatorKind::U1: return apply_u1_sum(p);
        case OperatorKind::U2: return apply_u2_sum(p);
        case OperatorKind::U3: return apply_u3_sum(p);
    }
    throw InternalError("unreachable operator kind");
}

Series UmbralOperator::closed_form_at(const Series& p,
                                      std::span<const long> point,
                                      int order) const {
    if (p.arity() != input_arity) throw UsageError("operator input arity mismatch");
    switch (kind) {
        case OperatorKind::U1:
            if (point.size() != 3) throw UsageError("U1 needs a 3-point");
            return u1_closed_at(p, point[0], point[1], point[2], order);
        case OperatorKind::U2:
            if (point.size() != 3) throw UsageError("U2 needs a 3-point");
            return u2_closed_at(p, point[0], point[1], point[2], order);
        case OperatorKind::U3:
            if (point.size() != 1) throw UsageError("U3 needs a 1-point");
            return u3_closed_at(p, point[0], order);
        case OperatorKind::U0:
            throw UsageError("U0 has no separate closed form to cross-check");
    }
    throw InternalError("unreachable operator kind");
}

UmbralOperator op_u0() { return {OperatorKind::U0, 1, 1, 1}; }
UmbralOperator op_u1() { return {OperatorKind::U1, 1, 3, 2}; }
UmbralOperator op_u2() { return {OperatorKind::U2, 3, 3, 2}; }
UmbralOperator op_u3() { return {OperatorKind::U3, 3, 1, 1}; }

Series apply_u3_substitution(const Series& p) {
    if (p.arity() != 3) throw UsageError("U3 input must have arity 3");
    const int N = p.order();
    const SubstImage images[3] = {
        {1, 0, 0, 1}, {1, 1, 0, 1}, {1, 0, 0, 1}};  // x1->x, x2->tx, x3->x
    Series inner = p.substituted(images, 1);
    Series geom = Series::geometric(1, N, 1, 1, {1, 0, 0});  // 1/(1-xt)
    return Series::monomial(1, N, 1, 1) * geom * inner;
}

Series initial_condition(int order) {
    Series s(1, order);
    for (int a = 1; a + 1 <= order; ++a) s.add_term(a + 1, {a, 0, 0}, 1);
    return s;
}

Series solve_fixed_point(const Series& initial, const UmbralOperator& step) {
    if (step.t_gain < 1)
        throw DomainError("fixed-point iteration needs a t-degree-gaining operator");
    if (initial.arity() != step.input_arity || step.input_arity != step.output_arity)
        throw UsageError("fixed-point step must preserve the initial's arity");
    Series g = initial;
    Series delta = initial;
    int rounds = 0;
    while (!delta.is_zero()) {
        if (++rounds > initial.order() + 2)
            throw InternalError("fixed-point iteration failed to stabilize");
        int before = delta.min_degree();
        delta = step.apply(delta);
        int after = delta.min_degree();
        if (after >= 0 && before >= 0 && after < before + step.t_gain)
            throw InternalError("operator application lost its t-degree gain");
        g += delta;
    }
    return g;
}

Pipeline::Pipeline(int order) : order_(order) {
    if (order < 0) throw UsageError("pipeline order must be >= 0");
}

const Series& Pipeline::ferrers() {
    if (!f_) {
        f_ = solve_fixed_point(initial_condition(order_), op_u0());
        if (!f_->width_bound_ok())
            throw InternalError("width bound violated in F(x,t)");
    }
    return *f_;
}

const Series& Pipeline::gated() {
    if (!phi_) {
        phi_ = solve_fixed_point(op_u1().apply(ferrers()), op_u2());
        if (!phi_->width_bound_ok())
            throw InternalError("width bound violated in phi123");
    }
    return *phi_;
}

const Series& Pipeline::wicketed() {
    if (!psi1_) {
        psi1_ = solve_fixed_point(op_u3().apply(gated()), op_u0());
        if (!psi1_->width_bound_ok())
            throw InternalError("width bound violated in psi1");
    }
    return *psi1_;
}

const Series& Pipeline::get(Target t) {
    switch (t) {
        case Target::Ferrers: return ferrers();
        case Target::Gated: return gated();
        case Target::Wicketed: return wicketed();
    }
    throw InternalError("unreachable target");
}

}  // namespace ferrers
