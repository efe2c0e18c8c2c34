#pragma once

#include <span>
#include <string>
#include <vector>

#include "poly.hpp"

namespace ferrers {

// Image of one catalytic variable under substitution: coeff * t^t_deg * y^var_exp
// where y is the output variable with index `var` (-1 for no variable part).
struct SubstImage {
    Rat coeff{1};
    int t_deg = 0;
    int var = -1;
    int var_exp = 0;
};

// Power series in t truncated at a fixed inclusive order, with Poly
// coefficients. The truncation order is a per-value property, not global
// state; binary operations truncate at the minimum of the two orders.
class Series {
public:
    Series(int arity, int order);

    static Series zero(int arity, int order) { return Series(arity, order); }
    static Series one(int arity, int order);
    // coeff * t^t_deg * x^exps as a series.
    static Series monomial(int arity, int order, const Rat& coeff, int t_deg,
                           const Exponents& exps = kNoVars);
    // Sum_{k>=0} (coeff * t^t_deg * x^exps)^k truncated at order.
    // Requires t_deg >= 1; a t-free monomial has no convergent expansion.
    static Series geometric(int arity, int order, const Rat& coeff, int t_deg,
                            const Exponents& exps = kNoVars);

    int order() const { return order_; }
    int arity() const { return arity_; }
    const Poly& coeff(int t_deg) const;
    void add_term(int t_deg, const Exponents& exps, const Rat& coeff);
    void add_poly(int t_deg, const Poly& p);

    bool is_zero() const;
    // Least t-degree with a nonzero coefficient; -1 if the series is zero.
    int min_degree() const;

    friend Series operator+(const Series& a, const Series& b);
    friend Series operator-(const Series& a, const Series& b);
    friend Series operator*(const Series& a, const Series& b);
    Series& operator+=(const Series& other);
    Series scaled(const Rat& c) const;

    bool operator==(const Series& other) const;

    // Copy truncated (or zero-extended) to the given order.
    Series with_order(int order) const;
    // Divides by t^k; all coefficients below t^k must vanish.
    Series shifted_down(int k) const;

    // Multiplicative inverse; the constant term must be a nonzero scalar.
    Series inverse() const;
    // Square root with constant term +1; requires coeff(0) == 1.
    Series sqrt() const;

    // Applies one image per catalytic variable. Output arity is out_arity;
    // terms pushed past the truncation order are discarded.
    Series substituted(std::span<const SubstImage> images, int out_arity) const;
    // Evaluates the catalytic variables at integers; arity-0 result.
    Series eval_at(std::span<const long> point) const;

    // WIDTH BOUND: total catalytic degree of the t^k coefficient is <= k.
    bool width_bound_ok() const;

    // {"order":N,"vars":[...],"terms":[{"t":k,"monos":[{"e":[...],"c":"..."}]}]}
    std::string to_json() const;

private:
    int order_;
    int arity_;
    std::vector<Poly> coeffs_;
};

}  // namespace ferrers
