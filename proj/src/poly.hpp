#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "rational.hpp"

namespace ferrers {

// Exponent vector of a monomial in the catalytic variables. Slots beyond the
// polynomial's arity stay zero. std::map ordering on this gives deterministic
// term order everywhere (printing, JSON, hashing-free equality).
using Exponents = std::array<int, 3>;

inline constexpr Exponents kNoVars{0, 0, 0};

// Sparse polynomial in 0, 1 or 3 catalytic variables with exact rational
// coefficients. Arity 0 means a pure scalar (used for series specialized at
// integer points). Zero coefficients are never stored.
class Poly {
public:
    explicit Poly(int arity);

    static Poly monomial(int arity, const Rat& coeff, const Exponents& exps);
    static Poly constant(int arity, const Rat& value);

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, Rat>& terms() const { return terms_; }

    // Accumulates coeff onto the given monomial, pruning on cancellation.
    void add_term(const Exponents& exps, const Rat& coeff);

    Poly& operator+=(const Poly& other);
    Poly& operator-=(const Poly& other);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);

    Poly scaled(const Rat& c) const;

    bool operator==(const Poly& other) const = default;

    // Max total exponent over all terms; -1 for the zero polynomial.
    int total_degree() const;

    // True iff the only monomial present (if any) has all exponents zero.
    bool is_scalar() const;
    // The coefficient of the all-zero monomial (zero if absent).
    Rat scalar_part() const;

    Rat eval(std::span<const long> point) const;

private:
    int arity_;
    std::map<Exponents, Rat> terms_;
};

}  // namespace ferrers
