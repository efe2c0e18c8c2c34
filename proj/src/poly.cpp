#include "poly.hpp"

namespace ferrers {

namespace {

void check_arity(int arity) {
    if (arity != 0 && arity != 1 && arity != 3)
        throw UsageError("polynomial arity must be 0, 1 or 3");
}

void check_same_arity(const Poly& a, const Poly& b) {
    if (a.arity() != b.arity()) throw UsageError("polynomial arity mismatch");
}

}  // namespace

Poly::Poly(int arity) : arity_(arity) { check_arity(arity); }

Poly Poly::monomial(int arity, const Rat& coeff, const Exponents& exps) {
    Poly p(arity);
    p.add_term(exps, coeff);
    return p;
}

Poly Poly::constant(int arity, const Rat& value) {
    return monomial(arity, value, kNoVars);
}

void Poly::add_term(const Exponents& exps, const Rat& coeff) {
    if (coeff == 0) return;
    for (int i = arity_; i < 3; ++i)
        if (exps[i] != 0) throw UsageError("exponent outside polynomial arity");
    for (int i = 0; i < arity_; ++i)
        if (exps[i] < 0) throw UsageError("negative exponent");
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& other) {
    check_same_arity(*this, other);
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& other) {
    check_same_arity(*this, other);
    for (const auto& [e, c] : other.terms_) add_term(e, Rat(-c));
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    check_same_arity(a, b);
    Poly r(a.arity());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Exponents e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Poly Poly::scaled(const Rat& c) const {
    Poly r(arity_);
    if (c == 0) return r;
    for (const auto& [e, coeff] : terms_) r.terms_.emplace(e, coeff * c);
    return r;
}

int Poly::total_degree() const {
    int deg = -1;
    for (const auto& [e, c] : terms_) deg = std::max(deg, e[0] + e[1] + e[2]);
    return deg;
}

bool Poly::is_scalar() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first == kNoVars;
}

Rat Poly::scalar_part() const {
    auto it = terms_.find(kNoVars);
    return it == terms_.end() ? Rat(0) : it->second;
}

Rat Poly::eval(std::span<const long> point) const {
    if (static_cast<int>(point.size()) != arity_)
        throw UsageError("evaluation point size does not match arity");
    Rat sum(0);
    for (const auto& [e, c] : terms_) {
        Rat v = c;
        for (int i = 0; i < arity_; ++i) {
            Int p, base(point[i]);
            mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(),
                       static_cast<unsigned long>(e[i]));
            v *= Rat(p);
        }
        sum += v;
    }
    return sum;
}

}  // namespace ferrers
