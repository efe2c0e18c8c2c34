#include "analysis.hpp"

#include <algorithm>

#include "umbral.hpp"

namespace ferrers {

UniPoly upoly_trim(UniPoly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

UniPoly upoly_mul(const UniPoly& a, const UniPoly& b) {
    if (a.empty() || b.empty()) return {};
    UniPoly r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return upoly_trim(std::move(r));
}

UniPoly upoly_add(const UniPoly& a, const UniPoly& b) {
    UniPoly r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return upoly_trim(std::move(r));
}

UniPoly upoly_scale(const UniPoly& a, const Rat& c) {
    if (c == 0) return {};
    UniPoly r = a;
    for (auto& x : r) x *= c;
    return upoly_trim(std::move(r));
}

UniPoly upoly_pow(const UniPoly& a, int n) {
    UniPoly r{Rat(1)};
    for (int i = 0; i < n; ++i) r = upoly_mul(r, a);
    return r;
}

int upoly_deg(const UniPoly& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[i] != 0) return i;
    return -1;
}

int upoly_valuation(const UniPoly& a) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) return static_cast<int>(i);
    return -1;
}

namespace {

std::string upoly_to_string(const UniPoly& p) {
    if (upoly_deg(p) < 0) return "0";
    std::string out;
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0) continue;
        if (!out.empty()) out += p[i] > 0 ? " + " : " - ";
        else if (p[i] < 0) out += "-";
        Rat mag = abs(p[i]);
        std::string c = rat_to_string(mag);
        if (i == 0) {
            out += c;
        } else {
            if (mag != 1) out += c + "*";
            out += "t";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

Series series_of(const UniPoly& p, int order) {
    Series s(0, order);
    for (size_t i = 0; i < p.size(); ++i)
        s.add_term(static_cast<int>(i), kNoVars, p[i]);
    return s;
}

UniPoly upoly_of(const Series& s) {
    if (s.arity() != 0) throw UsageError("expected an arity-0 series");
    UniPoly p(s.order() + 1, Rat(0));
    for (int k = 0; k <= s.order(); ++k) p[k] = s.coeff(k).scalar_part();
    return upoly_trim(std::move(p));
}

// t^d * x^e as a one-term arity-1 t-polynomial series.
Series xt(int order, const Rat& c, int t_deg, int x_deg) {
    return Series::monomial(1, order, c, t_deg, {x_deg, 0, 0});
}

}  // namespace

std::string UniRelation::to_string() const {
    return "(" + upoly_to_string(a) + ") G^2 + (" + upoly_to_string(b) +
           ") G + (" + upoly_to_string(c) + ") = 0";
}

UniRelation rel_punceq() {
    const UniPoly p{1, -3, 1};   // 1 - 3t + t^2
    const UniPoly q{1, -2};      // 1 - 2t
    UniRelation r;
    r.name = "punceq";
    r.a = upoly_mul(UniPoly{0, 0, 1}, upoly_mul(upoly_pow(q, 4), p));
    r.b = upoly_mul(UniPoly{0, 0, 0, 0, 1}, upoly_mul(p, upoly_pow(q, 2)));
    r.c = UniPoly(11, Rat(0));
    r.c[10] = -1;
    return r;
}

UniRelation rel_fdfpeq() {
    const UniPoly q{-1, 2};  // 2t - 1
    UniRelation r;
    r.name = "fdfpeq";
    r.a = upoly_pow(q, 8);
    r.b = upoly_scale(upoly_mul(UniPoly{0, 0, 0, 0, 0, 0, 1}, upoly_pow(q, 4)),
                      -1);
    r.c = UniPoly(15, Rat(0));
    r.c[14] = 1;
    return r;
}

QuadraticRelation rel_punceq123(int order) {
    const int N = order;
    auto mono3 = [N](const Rat& c, int t_deg, int e1, int e2, int e3) {
        return Series::monomial(3, N, c, t_deg, {e1, e2, e3});
    };
    // x2 - x3 + x3(x3-x2) t + x3 t^2
    Series f1 = mono3(1, 0, 0, 1, 0) - mono3(1, 0, 0, 0, 1) +
                mono3(1, 1, 0, 0, 2) - mono3(1, 1, 0, 1, 1) + mono3(1, 2, 0, 0, 1);
    // 1 - x1 t - t
    Series g1 = Series::one(3, N) - mono3(1, 1, 1, 0, 0) - mono3(1, 1, 0, 0, 0);
    // 1 - x2 t - 2t + t^2
    Series g2 = Series::one(3, N) - mono3(1, 1, 0, 1, 0) - mono3(2, 1, 0, 0, 0) +
                mono3(1, 2, 0, 0, 0);
    // 1 - x3 t - t and 1 - x3 t + t
    Series g3m = Series::one(3, N) - mono3(1, 1, 0, 0, 1) - mono3(1, 1, 0, 0, 0);
    Series g3p = Series::one(3, N) - mono3(1, 1, 0, 0, 1) + mono3(1, 1, 0, 0, 0);
    QuadraticRelation r{"punceq123", Series(3, N), Series(3, N), Series(3, N)};
    r.a = f1 * g1 * g1 * g2 * g3m * g3m;
    r.b = mono3(1, 4, 1, 1, 1) * g2 * g3p * g3m * g1;
    r.c = mono3(-1, 10, 2, 2, 2);
    return r;
}

QuadraticRelation rel_fdfpeq1(int order) {
    const int N = order;
    // xt + t - 1
    Series h1 = xt(N, 1, 1, 1) + xt(N, 1, 1, 0) - Series::one(1, N);
    // x t^2 - t^2 + 2t - 1
    Series h2 = xt(N, 1, 2, 1) - xt(N, 1, 2, 0) + xt(N, 2, 1, 0) -
                Series::one(1, N);
    // x t^2 - t^2 - xt - t + 1
    Series h3 = xt(N, 1, 2, 1) - xt(N, 1, 2, 0) - xt(N, 1, 1, 1) -
                xt(N, 1, 1, 0) + Series::one(1, N);
    // xt - t - 1
    Series h4 = xt(N, 1, 1, 1) - xt(N, 1, 1, 0) - Series::one(1, N);
    QuadraticRelation r{"fdfpeq1", Series(1, N), Series(1, N), Series(1, N)};
    r.a = h1 * h1 * h1 * h1 * h1 * h1 * h2 * h3;
    r.b = xt(N, -1, 6, 2) * h1 * h1 * h1 * h4 * h2;
    r.c = xt(N, -1, 14, 5);
    return r;
}

QuadraticRelation rel_f_rational(int order) {
    const int N = order;
    QuadraticRelation r{"F-rational", Series(1, N), Series(1, N), Series(1, N)};
    // (1 - t - xt) F - x t^2 = 0
    r.b = Series::one(1, N) - xt(N, 1, 1, 0) - xt(N, 1, 1, 1);
    r.c = xt(N, -1, 2, 1);
    return r;
}

QuadraticRelation to_series_relation(const UniRelation& rel, int order) {
    return {rel.name, series_of(rel.a, order).with_order(order),
            series_of(rel.b, order), series_of(rel.c, order)};
}

QuadraticRelation relation_by_name(const std::string& name, int order) {
    if (name == "punceq") return to_series_relation(rel_punceq(), order);
    if (name == "fdfpeq") return to_series_relation(rel_fdfpeq(), order);
    if (name == "punceq123") return rel_punceq123(order);
    if (name == "fdfpeq1") return rel_fdfpeq1(order);
    if (name == "F-rational") return rel_f_rational(order);
    throw UsageError("unknown relation: " + name);
}

ResidualReport verify_quadratic(const Series& g, const QuadraticRelation& rel,
                                std::span<const long> point) {
    Series gg = g;
    Series a = rel.a, b = rel.b, c = rel.c;
    if (!point.empty()) {
        if (g.arity() != 0) gg = g.eval_at(point);
        if (a.arity() != 0) {
            a = a.eval_at(point);
            b = b.eval_at(point);
            c = c.eval_at(point);
        }
    }
    if (gg.arity() != a.arity())
        throw UsageError("series/relation arity mismatch (sample point needed?)");
    Series residual = a * gg * gg + b * gg + c;
    ResidualReport rep;
    rep.order = residual.order();
    rep.min_degree = residual.min_degree();
    rep.vanishes = rep.min_degree < 0;
    // Below the reach of the constant coefficient every series satisfies the
    // relation trivially, so a vanishing residual proves nothing.
    const int c_val = c.min_degree();
    if (c_val < 0 || rep.order < c_val) rep.conclusive = false;
    return rep;
}

Series solve_quadratic_series(const UniRelation& rel, int order,
                              const RootPrefix& prefix) {
    const int val_a = upoly_valuation(rel.a);
    if (val_a < 0) throw DomainError("quadratic solve needs A not identically zero");
    const int work = order + val_a;
    // discriminant as an exact polynomial
    UniPoly disc = upoly_add(upoly_mul(rel.b, rel.b),
                             upoly_scale(upoly_mul(rel.a, rel.c), -4));
    Series root(0, work);  // sqrt(disc) as a series, zero iff disc == 0
    if (upoly_deg(disc) >= 0) {
        const int v = upoly_valuation(disc);
        if (v % 2 != 0)
            throw DomainError("discriminant valuation is odd; no series sqrt");
        auto lead_root = exact_sqrt(disc[v]);
        if (!lead_root)
            throw DomainError("leading discriminant coefficient is not a square");
        UniPoly unit(disc.begin() + v, disc.end());
        const Rat inv_lead = 1 / disc[v];
        for (auto& x : unit) x *= inv_lead;
        // sqrt of the unit part, shifted up by t^{v/2}. The shift is done by
        // hand so the result keeps its full working order: a truncating
        // product would silently drop the top v/2 valid coefficients.
        Series unit_sqrt = series_of(unit, work).sqrt().scaled(*lead_root);
        for (int k = 0; k + v / 2 <= work; ++k)
            root.add_term(k + v / 2, kNoVars, unit_sqrt.coeff(k).scalar_part());
    }
    Series minus_b = series_of(upoly_scale(rel.b, -1), work);
    UniPoly a2 = upoly_scale(rel.a, 2);
    Series a_unit_inv =
        series_of(UniPoly(a2.begin() + val_a, a2.end()), order).inverse();
    std::optional<Series> chosen;
    for (int sign : {+1, -1}) {
        Series num = minus_b + root.scaled(sign);
        if (!num.is_zero() && num.min_degree() < val_a) continue;
        Series branch = num.shifted_down(val_a).with_order(order) * a_unit_inv;
        bool ok = true;
        for (const auto& [deg, coeff] : prefix) {
            if (deg > order || branch.coeff(deg).scalar_part() != coeff) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        if (chosen && *chosen == branch) continue;
        if (chosen)
            throw DomainError("root selection prefix matches both branches");
        chosen = branch;
    }
    if (!chosen) throw DomainError("no quadratic branch matches the prefix");
    return *chosen;
}

std::vector<std::vector<Rat>> nullspace(
    const std::vector<std::vector<Rat>>& matrix) {
    if (matrix.empty()) return {};
    const size_t rows = matrix.size(), cols = matrix[0].size();
    std::vector<std::vector<Rat>> m = matrix;
    std::vector<int> pivot_col_of_row;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        const Rat inv = 1 / m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rat f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivot_col_of_row.push_back(static_cast<int>(c));
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col_of_row) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (size_t free_c = 0; free_c < cols; ++free_c) {
        if (is_pivot[free_c]) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[free_c] = 1;
        for (size_t i = 0; i < pivot_col_of_row.size(); ++i)
            v[pivot_col_of_row[i]] = -m[i][free_c];
        basis.push_back(std::move(v));
    }
    return basis;
}

namespace {

// Nullspace of the ansatz system for given degree bounds; g2 is G^2.
std::vector<std::vector<Rat>> ansatz_nullspace(const UniPoly& g,
                                               const UniPoly& g2, int terms,
                                               int da, int db, int dc) {
    const int cols = da + db + dc + 3;
    std::vector<std::vector<Rat>> m(terms, std::vector<Rat>(cols, Rat(0)));
    auto at = [](const UniPoly& p, int k) -> Rat {
        return (k >= 0 && k < static_cast<int>(p.size())) ? p[k] : Rat(0);
    };
    for (int k = 0; k < terms; ++k) {
        for (int j = 0; j <= da; ++j) m[k][j] = at(g2, k - j);
        for (int j = 0; j <= db; ++j) m[k][da + 1 + j] = at(g, k - j);
        for (int j = 0; j <= dc; ++j)
            if (k == j) m[k][da + db + 2 + j] = 1;
    }
    return nullspace(m);
}

// Canonicalize: integer coefficients, content 1, positive leading coefficient
// of A (of B when A vanishes).
GuessResult canonicalize(const std::vector<Rat>& v, int da, int db, int dc) {
    GuessResult res;
    res.deg_a = da;
    res.deg_b = db;
    res.deg_c = dc;
    UniPoly a(v.begin(), v.begin() + da + 1);
    UniPoly b(v.begin() + da + 1, v.begin() + da + db + 2);
    UniPoly c(v.begin() + da + db + 2, v.end());
    Int denom_lcm(1);
    for (const UniPoly* p : {&a, &b, &c})
        for (const Rat& x : *p)
            mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(),
                    x.get_den().get_mpz_t());
    Int content(0);
    for (UniPoly* p : {&a, &b, &c})
        for (Rat& x : *p) {
            x *= Rat(denom_lcm);
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(),
                    x.get_num().get_mpz_t());
        }
    if (content != 0)
        for (UniPoly* p : {&a, &b, &c})
            for (Rat& x : *p) x /= Rat(content);
    res.effectively_linear = upoly_deg(a) < 0;
    const UniPoly& sign_src = res.effectively_linear ? b : a;
    const int lead = upoly_deg(sign_src);
    if (lead >= 0 && sign_src[lead] < 0)
        for (UniPoly* p : {&a, &b, &c})
            for (Rat& x : *p) x = -x;
    res.rel.a = upoly_trim(std::move(a));
    res.rel.b = upoly_trim(std::move(b));
    res.rel.c = upoly_trim(std::move(c));
    res.rel.name = "guessed";
    return res;
}

// Shrink the largest bound until the unknown count fits the budget.
void clamp_bounds(int& da, int& db, int& dc, int budget) {
    while (da + db + dc + 3 > budget) {
        int* largest = &da;
        if (*largest <= db) largest = &db;
        if (*largest <= dc) largest = &dc;
        if (*largest == 0) throw UsageError("too few series terms for guessing");
        --*largest;
    }
}

}  // namespace

std::optional<GuessResult> guess_quadratic(const Series& g, int max_deg_a,
                                           int max_deg_b, int max_deg_c) {
    if (g.arity() != 0)
        throw UsageError("guessing works on specialized (arity-0) series");
    if (max_deg_a < 0 || max_deg_b < 0 || max_deg_c < 0)
        throw UsageError("negative degree bound");
    const int terms = g.order() + 1;
    int da = max_deg_a, db = max_deg_b, dc = max_deg_c;
    if (da + db + dc + 3 + 5 > terms)
        throw UsageError("too few series terms for the requested degree bounds");
    UniPoly gp = upoly_of(g);
    UniPoly g2 = upoly_of((g * g).with_order(g.order()));
    auto ns = ansatz_nullspace(gp, g2, terms, da, db, dc);
    if (ns.empty()) return std::nullopt;
    // Coordinatewise degree minimization keeps the candidate canonical: the
    // minimal bounds of a true relation admit exactly its scalar multiples.
    auto shrinkable = [&](int ta, int tb, int tc) {
        return !ansatz_nullspace(gp, g2, terms, ta, tb, tc).empty();
    };
    while (da > 0 && shrinkable(da - 1, db, dc)) --da;
    while (db > 0 && shrinkable(da, db - 1, dc)) --db;
    while (dc > 0 && shrinkable(da, db, dc - 1)) --dc;
    ns = ansatz_nullspace(gp, g2, terms, da, db, dc);
    if (ns.empty()) throw InternalError("nullspace vanished during minimization");
    GuessResult res = canonicalize(ns.front(), da, db, dc);
    res.multiple_solutions = ns.size() > 1;
    // Re-verify against every supplied term.
    Series check = to_series_relation(res.rel, g.order()).a * g * g;
    check += series_of(res.rel.b, g.order()) * g;
    check += series_of(res.rel.c, g.order());
    if (!check.is_zero())
        throw InternalError("guessed relation fails the supplied terms");
    return res;
}

std::optional<GuessResult> guess_quadratic_auto(const Series& g) {
    const int terms = g.order() + 1;
    int da = 8, db = 8, dc = 14;
    clamp_bounds(da, db, dc, terms - 5);
    auto res = guess_quadratic(g, da, db, dc);
    if (res) return res;
    // One escalation; the hard budget is the equation count itself, the
    // 5-term safety margin is re-imposed on the minimized result below.
    da += 4;
    db += 4;
    dc += 4;
    clamp_bounds(da, db, dc, terms);
    UniPoly gp = upoly_of(g);
    UniPoly g2 = upoly_of((g * g).with_order(g.order()));
    if (ansatz_nullspace(gp, g2, terms, da, db, dc).empty()) return std::nullopt;
    while (da > 0 && !ansatz_nullspace(gp, g2, terms, da - 1, db, dc).empty())
        --da;
    while (db > 0 && !ansatz_nullspace(gp, g2, terms, da, db - 1, dc).empty())
        --db;
    while (dc > 0 && !ansatz_nullspace(gp, g2, terms, da, db, dc - 1).empty())
        --dc;
    if (da + db + dc + 3 + 5 > terms) return std::nullopt;
    return guess_quadratic(g, da, db, dc);
}

Series closed_form_psi(int order) {
    const int work = order + 2;
    Series under = Series::one(0, work) - Series::monomial(0, work, 4, 2);
    Series catalan =
        (Series::one(0, work) - under.sqrt()).shifted_down(2).scaled(Rat(1, 2));
    catalan = catalan.with_order(order);
    Series ferrers_factor =
        Series::monomial(0, order, 1, 2) *
        (Series::one(0, order) - Series::monomial(0, order, 2, 1)).inverse();
    Series f4 = ferrers_factor * ferrers_factor;
    f4 = f4 * f4;
    return catalan * f4;
}

SpecializationReport specialization_check(
    int order, const std::vector<std::vector<long>>& gated_points,
    const std::vector<long>& wicketed_points) {
    std::vector<std::vector<long>> pts3 = gated_points;
    if (pts3.empty())
        pts3 = {{1, 1, 1}, {2, 3, 5}, {1, 2, 4}, {3, 4, 7}, {2, 5, 9}};
    std::vector<long> pts1 = wicketed_points;
    if (pts1.empty()) pts1 = {1, 2, 3, 5, 7};

    Pipeline pipe(order);
    const Series& phi = pipe.gated();
    const Series& psi1 = pipe.wicketed();

    SpecializationReport rep;
    rep.order = order;
    rep.all_pass = true;
    auto record = [&](const std::string& name, std::vector<long> pt,
                      const ResidualReport& rr) {
        SpecializationCheck chk;
        chk.relation = name;
        chk.point = std::move(pt);
        chk.pass = rr.conclusive && rr.vanishes;
        chk.residual_min_degree = rr.min_degree;
        rep.all_pass = rep.all_pass && chk.pass;
        rep.checks.push_back(std::move(chk));
    };

    const long ones3[3] = {1, 1, 1};
    const long one1[1] = {1};
    record("punceq", {1, 1, 1},
           verify_quadratic(phi, to_series_relation(rel_punceq(), order), ones3));
    record("fdfpeq", {1},
           verify_quadratic(psi1, to_series_relation(rel_fdfpeq(), order), one1));
    QuadraticRelation r123 = rel_punceq123(order);
    for (const auto& pt : pts3)
        record("punceq123", pt, verify_quadratic(phi, r123, pt));
    QuadraticRelation r1 = rel_fdfpeq1(order);
    for (long x : pts1) {
        const long pt[1] = {x};
        record("fdfpeq1", {x}, verify_quadratic(psi1, r1, pt));
    }
    return rep;
}

}  // namespace ferrers
