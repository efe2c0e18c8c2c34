#include "series.hpp"

#include <algorithm>

#include "json.hpp"

namespace ferrers {

namespace {

void check_same_arity(const Series& a, const Series& b) {
    if (a.arity() != b.arity()) throw UsageError("series arity mismatch");
}

}  // namespace

Series::Series(int arity, int order)
    : order_(order), arity_(arity), coeffs_(order >= 0 ? order + 1 : 0, Poly(arity)) {
    if (order < 0) throw UsageError("series order must be >= 0");
}

Series Series::one(int arity, int order) {
    return monomial(arity, order, 1, 0);
}

Series Series::monomial(int arity, int order, const Rat& coeff, int t_deg,
                        const Exponents& exps) {
    Series s(arity, order);
    if (t_deg < 0) throw UsageError("negative t-degree");
    s.add_term(t_deg, exps, coeff);
    return s;
}

Series Series::geometric(int arity, int order, const Rat& coeff, int t_deg,
                         const Exponents& exps) {
    if (t_deg < 1)
        throw DomainError("geometric expansion requires t-degree >= 1");
    Series s(arity, order);
    Rat c(1);
    Exponents e = kNoVars;
    for (int k = 0; k * t_deg <= order; ++k) {
        s.add_term(k * t_deg, e, c);
        c *= coeff;
        for (int i = 0; i < 3; ++i) e[i] += exps[i];
    }
    return s;
}

const Poly& Series::coeff(int t_deg) const {
    if (t_deg < 0 || t_deg > order_) throw UsageError("t-degree out of range");
    return coeffs_[t_deg];
}

void Series::add_term(int t_deg, const Exponents& exps, const Rat& coeff) {
    if (t_deg < 0) throw UsageError("negative t-degree");
    if (t_deg > order_) return;
    coeffs_[t_deg].add_term(exps, coeff);
}

void Series::add_poly(int t_deg, const Poly& p) {
    if (t_deg < 0) throw UsageError("negative t-degree");
    if (t_deg > order_) return;
    coeffs_[t_deg] += p;
}

bool Series::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Poly& p) { return p.is_zero(); });
}

int Series::min_degree() const {
    for (int k = 0; k <= order_; ++k)
        if (!coeffs_[k].is_zero()) return k;
    return -1;
}

Series operator+(const Series& a, const Series& b) {
    check_same_arity(a, b);
    Series r(a.arity(), std::min(a.order(), b.order()));
    for (int k = 0; k <= r.order(); ++k) {
        r.coeffs_[k] = a.coeffs_[k];
        r.coeffs_[k] += b.coeffs_[k];
    }
    return r;
}

Series operator-(const Series& a, const Series& b) {
    return a + b.scaled(-1);
}

Series operator*(const Series& a, const Series& b) {
    check_same_arity(a, b);
    Series r(a.arity(), std::min(a.order(), b.order()));
    for (int i = 0; i <= std::min(a.order(), r.order()); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (int j = 0; i + j <= r.order() && j <= b.order(); ++j) {
            if (b.coeffs_[j].is_zero()) continue;
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return r;
}

Series& Series::operator+=(const Series& other) {
    check_same_arity(*this, other);
    for (int k = 0; k <= std::min(order_, other.order_); ++k)
        coeffs_[k] += other.coeffs_[k];
    return *this;
}

Series Series::scaled(const Rat& c) const {
    Series r(arity_, order_);
    for (int k = 0; k <= order_; ++k) r.coeffs_[k] = coeffs_[k].scaled(c);
    return r;
}

bool Series::operator==(const Series& other) const {
    if (arity_ != other.arity_ || order_ != other.order_) return false;
    return coeffs_ == other.coeffs_;
}

Series Series::with_order(int order) const {
    Series r(arity_, order);
    for (int k = 0; k <= std::min(order, order_); ++k) r.coeffs_[k] = coeffs_[k];
    return r;
}

Series Series::shifted_down(int k) const {
    for (int j = 0; j < std::min(k, order_ + 1); ++j)
        if (!coeffs_[j].is_zero())
            throw DomainError("cannot divide by t^k: nonzero low-order terms");
    Series r(arity_, order_ - k >= 0 ? order_ - k : 0);
    for (int j = k; j <= order_; ++j) r.coeffs_[j - k] = coeffs_[j];
    return r;
}

Series Series::inverse() const {
    const Poly& c0 = coeffs_[0];
    if (!c0.is_scalar() || c0.scalar_part() == 0)
        throw DomainError("series inverse needs a nonzero scalar constant term");
    Rat inv0 = 1 / c0.scalar_part();
    Series r(arity_, order_);
    r.add_term(0, kNoVars, inv0);
    for (int k = 1; k <= order_; ++k) {
        Poly acc(arity_);
        for (int j = 1; j <= k; ++j) acc += coeffs_[j] * r.coeffs_[k - j];
        r.coeffs_[k] = acc.scaled(-inv0);
    }
    return r;
}

Series Series::sqrt() const {
    const Poly& c0 = coeffs_[0];
    if (!c0.is_scalar() || c0.scalar_part() != 1)
        throw DomainError("series sqrt supports constant term 1 only");
    Series r(arity_, order_);
    r.add_term(0, kNoVars, 1);
    for (int k = 1; k <= order_; ++k) {
        Poly acc = coeffs_[k];
        for (int j = 1; j < k; ++j) acc -= r.coeffs_[j] * r.coeffs_[k - j];
        r.coeffs_[k] = acc.scaled(Rat(1, 2));
    }
    return r;
}

Series Series::substituted(std::span<const SubstImage> images,
                           int out_arity) const {
    if (static_cast<int>(images.size()) != arity_)
        throw UsageError("one substitution image per catalytic variable required");
    for (const auto& img : images) {
        if (img.t_deg < 0 || img.var_exp < 0)
            throw UsageError("substitution image must have nonnegative degrees");
        if (img.var >= out_arity)
            throw UsageError("substitution image variable outside output arity");
    }
    Series r(out_arity, order_);
    for (int k = 0; k <= order_; ++k) {
        for (const auto& [e, c] : coeffs_[k].terms()) {
            Rat cc = c;
            int shift = 0;
            Exponents out = kNoVars;
            for (int i = 0; i < arity_; ++i) {
                if (e[i] == 0) continue;
                const SubstImage& img = images[i];
                Rat p;
                mpz_pow_ui(p.get_num().get_mpz_t(),
                           img.coeff.get_num().get_mpz_t(),
                           static_cast<unsigned long>(e[i]));
                mpz_pow_ui(p.get_den().get_mpz_t(),
                           img.coeff.get_den().get_mpz_t(),
                           static_cast<unsigned long>(e[i]));
                cc *= p;
                shift += img.t_deg * e[i];
                if (img.var >= 0) out[img.var] += img.var_exp * e[i];
            }
            if (k + shift <= order_) r.add_term(k + shift, out, cc);
        }
    }
    return r;
}

Series Series::eval_at(std::span<const long> point) const {
    if (static_cast<int>(point.size()) != arity_)
        throw UsageError("evaluation point size does not match series arity");
    Series r(0, order_);
    for (int k = 0; k <= order_; ++k)
        r.add_term(k, kNoVars, coeffs_[k].eval(point));
    return r;
}

bool Series::width_bound_ok() const {
    for (int k = 0; k <= order_; ++k)
        if (coeffs_[k].total_degree() > k) return false;
    return true;
}

std::string Series::to_json() const {
    nlohmann::json j;
    j["order"] = order_;
    std::vector<std::string> vars;
    if (arity_ == 1) vars = {"x"};
    if (arity_ == 3) vars = {"x1", "x2", "x3"};
    j["vars"] = vars;
    auto terms = nlohmann::json::array();
    for (int k = 0; k <= order_; ++k) {
        if (coeffs_[k].is_zero()) continue;
        nlohmann::json row;
        row["t"] = k;
        auto monos = nlohmann::json::array();
        for (const auto& [e, c] : coeffs_[k].terms()) {
            nlohmann::json m;
            m["e"] = std::vector<int>(e.begin(), e.begin() + arity_);
            m["c"] = rat_to_string(c);
            monos.push_back(std::move(m));
        }
        row["monos"] = std::move(monos);
        terms.push_back(std::move(row));
    }
    j["terms"] = std::move(terms);
    return j.dump();
}

}  // namespace ferrers
