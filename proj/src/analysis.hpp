#pragma once

#include <optional>
#include <string>
#include <vector>

#include "series.hpp"

namespace ferrers {

// Univariate polynomial in t, dense, index = degree. Zero-trimmed.
using UniPoly = std::vector<Rat>;

UniPoly upoly_mul(const UniPoly& a, const UniPoly& b);
UniPoly upoly_add(const UniPoly& a, const UniPoly& b);
UniPoly upoly_scale(const UniPoly& a, const Rat& c);
UniPoly upoly_pow(const UniPoly& a, int n);
UniPoly upoly_trim(UniPoly a);
int upoly_deg(const UniPoly& a);       // -1 for zero
int upoly_valuation(const UniPoly& a); // -1 for zero

// A(t) G^2 + B(t) G + C(t) = 0 with univariate polynomial coefficients.
struct UniRelation {
    std::string name;
    UniPoly a, b, c;

    bool operator==(const UniRelation& other) const {
        return a == other.a && b == other.b && c == other.c;
    }
    std::string to_string() const;  // e.g. "(256 t^8 ...) G^2 + ... = 0"
};

// The paper's specialized equations, exactly as displayed.
UniRelation rel_punceq();   // gated, x1=x2=x3=1
UniRelation rel_fdfpeq();   // wicketed, x=1

// Relation with Series coefficients (possibly catalytic), for verification.
struct QuadraticRelation {
    std::string name;
    Series a, b, c;
};

QuadraticRelation rel_punceq123(int order);   // arity 3
QuadraticRelation rel_fdfpeq1(int order);     // arity 1
QuadraticRelation rel_f_rational(int order);  // arity 1, A = 0 (linear)
QuadraticRelation to_series_relation(const UniRelation& rel, int order);
// Relation named on the CLI surface, built at the given order. For the
// catalytic relations the caller evaluates at sample points via verify.
QuadraticRelation relation_by_name(const std::string& name, int order);

struct ResidualReport {
    bool conclusive = true;  // false when the order is below the relation's reach
    bool vanishes = false;
    int min_degree = -1;  // least nonzero t-degree of the residual; -1 if none
    int order = 0;        // order the residual was checked through
};

// Computes A G^2 + B G + C exactly. When point is nonempty, both the
// relation coefficients and G are first evaluated there.
ResidualReport verify_quadratic(const Series& g, const QuadraticRelation& rel,
                                std::span<const long> point = {});

// Expected low-order coefficients used to pick the correct branch.
using RootPrefix = std::vector<std::pair<int, Rat>>;

// (-B +- sqrt(B^2-4AC)) / (2A) as a truncated series; leading t-powers are
// cancelled exactly before dividing. The branch matching the prefix wins.
Series solve_quadratic_series(const UniRelation& rel, int order,
                              const RootPrefix& prefix);

struct GuessResult {
    UniRelation rel;           // canonical: integer, content 1, sign-fixed
    bool effectively_linear = false;  // A vanished identically
    bool multiple_solutions = false;  // nullspace dim > 1 at minimal degrees
    int deg_a = 0, deg_b = 0, deg_c = 0;
};

// Fits A G^2 + B G + C = 0 through all supplied terms of g (arity 0) by exact
// rational linear algebra, then minimizes the degree bounds coordinatewise.
std::optional<GuessResult> guess_quadratic(const Series& g, int max_deg_a,
                                           int max_deg_b, int max_deg_c);

// Default bounds (8, 8, 14) with one automatic escalation; bounds are clamped
// so the unknown count never exceeds the number of supplied terms.
std::optional<GuessResult> guess_quadratic_auto(const Series& g);

// ((1 - sqrt(1-4t^2)) / (2 t^2)) * (t^2/(1-2t))^4, arity 0.
Series closed_form_psi(int order);

// Nullspace basis of an exact rational matrix (rows x cols).
std::vector<std::vector<Rat>> nullspace(
    const std::vector<std::vector<Rat>>& matrix);

struct SpecializationCheck {
    std::string relation;
    std::vector<long> point;
    bool pass = false;
    int residual_min_degree = -1;
};

struct SpecializationReport {
    bool all_pass = false;
    int order = 0;
    std::vector<SpecializationCheck> checks;
};

// Confirms the specialized equations at x=1 points and the refined catalytic
// equations at the supplied integer sample points (defaults if empty).
SpecializationReport specialization_check(
    int order, const std::vector<std::vector<long>>& gated_points = {},
    const std::vector<long>& wicketed_points = {});

}  // namespace ferrers
