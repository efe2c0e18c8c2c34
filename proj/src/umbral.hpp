#pragma once

#include "series.hpp"

namespace ferrers {

enum class OperatorKind { U0, U1, U2, U3 };

// One row-adding evolution operator: the coefficient-linear extension of a
// monomial rewriting rule with t-weights. Implemented from the truncated
// monomial summation forms; the closed rational forms have removable
// singularities at coincident catalytic points and are kept only as
// cross-check oracles (see closed_form_at below).
struct UmbralOperator {
    OperatorKind kind;
    int input_arity;
    int output_arity;
    int t_gain;  // minimal t-degree added per application

    Series apply(const Series& p) const;

    // The paper's closed rational form, expanded as an arity-0 series after
    // evaluating the catalytic variables at pairwise distinct integers.
    // Only meaningful for U1, U2, U3; the monomial input is c * t^t_deg * x^exps.
    Series closed_form_at(const Series& p, std::span<const long> point,
                          int order) const;
};

UmbralOperator op_u0();
UmbralOperator op_u1();
UmbralOperator op_u2();
UmbralOperator op_u3();

// U3 via its substitution form t/(1-tx) * p(x, tx, x).
Series apply_u3_substitution(const Series& p);

// Height-one diagrams: I(x) = sum_{a>=1} x^a t^{a+1}.
Series initial_condition(int order);

// Unique G with G = initial + step(G) up to the initial's order. Requires
// step.t_gain >= 1 so the iteration freezes coefficients bottom-up.
Series solve_fixed_point(const Series& initial, const UmbralOperator& step);

enum class Target { Ferrers, Gated, Wicketed };

// Composes the three evolution solves, caching intermediates:
//   F    = I + U0(F)            (arity 1)
//   phi  = U1(F) + U2(phi)      (arity 3)
//   psi1 = U3(phi) + U0(psi1)   (arity 1)
class Pipeline {
public:
    explicit Pipeline(int order);

    const Series& ferrers();
    const Series& gated();
    const Series& wicketed();
    const Series& get(Target t);

    int order() const { return order_; }

private:
    int order_;
    std::optional<Series> f_, phi_, psi1_;
};

}  // namespace ferrers
