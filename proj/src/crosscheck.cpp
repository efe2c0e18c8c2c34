#include "crosscheck.hpp"

#include <algorithm>
#include <sstream>

#include "umbral.hpp"

namespace ferrers {

namespace {

Rat census_count(const Census& c, int h) {
    if (h < 0 || h > c.max_hp) return 0;
    return Rat(static_cast<unsigned long>(c.counts[h]));
}

Rat series_count(const Series& s, int h) {
    if (h > s.order()) return 0;
    return s.coeff(h).scalar_part();
}

Rat catalytic_coeff(const Series& s, int h, const Exponents& exps) {
    if (h > s.order()) return 0;
    const auto& terms = s.coeff(h).terms();
    auto it = terms.find(exps);
    return it == terms.end() ? Rat(0) : it->second;
}

}  // namespace

std::optional<std::string> compare_census(const Census& census,
                                          const Series& specialized,
                                          int first_hp) {
    if (specialized.arity() != 0)
        throw UsageError("census comparison needs an arity-0 series");
    const int to = std::min(census.max_hp, specialized.order());
    for (int h = first_hp; h <= to; ++h) {
        const Rat brute = census_count(census, h);
        const Rat coeff = series_count(specialized, h);
        if (brute != coeff) {
            std::ostringstream os;
            os << census.object << ": hp=" << h << " brute-force="
               << rat_to_string(brute) << " series=" << rat_to_string(coeff);
            return os.str();
        }
    }
    return std::nullopt;
}

CrosscheckReport crosscheck(int max_hp) {
    if (max_hp < 0 || max_hp > 30)
        throw UsageError("cross-check supports 0 <= max_hp <= 30");
    CrosscheckReport rep;
    std::ostringstream detail;
    auto fail = [&](const std::string& msg) {
        rep.pass = false;
        rep.detail = msg + "\n" + detail.str();
    };

    Pipeline pipe(max_hp);
    const long one1[1] = {1};
    const long ones3[3] = {1, 1, 1};
    const Series f1 = pipe.ferrers().eval_at(one1);
    const Series phi111 = pipe.gated().eval_at(ones3);
    const Series psi11 = pipe.wicketed().eval_at(one1);

    // Exhaustive generators are exponential in hp; the dynamic programs carry
    // the comparison the rest of the way to max_hp.
    struct Kind {
        const char* name;
        int gen_cap;
        Census (*gen)(int);
        Census (*dp)(int);
        const Series* series;
    };
    const Kind kinds[] = {
        {"ferrers", 20, count_ferrers, count_ferrers_dp, &f1},
        {"gated", 16, count_gated, count_gated_dp, &phi111},
        {"wicketed", 16, count_wicketed, count_wicketed_dp, &psi11},
    };
    for (const Kind& k : kinds) {
        const int gen_hp = std::min(max_hp, k.gen_cap);
        const Census gen = k.gen(gen_hp);
        const Census dp = k.dp(max_hp);
        for (int h = 0; h <= gen_hp; ++h) {
            if (gen.counts[h] != dp.counts[h]) {
                std::ostringstream os;
                os << k.name << ": hp=" << h << " generator=" << gen.counts[h]
                   << " dynamic-program=" << dp.counts[h];
                fail(os.str());
                return rep;
            }
        }
        if (auto msg = compare_census(dp, *k.series,
                                      first_half_perimeter(k.name))) {
            fail(*msg);
            return rep;
        }
        detail << k.name << ": counts agree through hp=" << max_hp
               << " (generator through hp=" << gen_hp << ")\n";
    }

    // Refined spot checks against the catalytic coefficients.
    const int refined_hp = std::min(max_hp, 12);
    for (const auto& [key, count] : count_gated_refined(refined_hp)) {
        const auto [b1, b2, b3, h] = key;
        const Rat coeff = catalytic_coeff(pipe.gated(), h, {b1, b2, b3});
        if (coeff != Rat(static_cast<unsigned long>(count))) {
            std::ostringstream os;
            os << "gated refined: (b1,b2,b3,hp)=(" << b1 << "," << b2 << ","
               << b3 << "," << h << ") brute-force=" << count
               << " coefficient=" << rat_to_string(coeff);
            fail(os.str());
            return rep;
        }
    }
    for (const auto& [key, count] : count_wicketed_refined(refined_hp)) {
        const auto [w, h] = key;
        const Rat coeff = catalytic_coeff(pipe.wicketed(), h, {w, 0, 0});
        if (coeff != Rat(static_cast<unsigned long>(count))) {
            std::ostringstream os;
            os << "wicketed refined: (top_width,hp)=(" << w << "," << h
               << ") brute-force=" << count
               << " coefficient=" << rat_to_string(coeff);
            fail(os.str());
            return rep;
        }
    }
    // Reverse direction: no coefficient without a matching brute-force count.
    const auto gated_ref = count_gated_refined(refined_hp);
    for (int h = 0; h <= refined_hp; ++h) {
        for (const auto& [exps, coeff] : pipe.gated().coeff(h).terms()) {
            if (!gated_ref.count({exps[0], exps[1], exps[2], h})) {
                std::ostringstream os;
                os << "gated refined: coefficient x1^" << exps[0] << " x2^"
                   << exps[1] << " x3^" << exps[2] << " t^" << h << " = "
                   << rat_to_string(coeff) << " has no brute-force counterpart";
                fail(os.str());
                return rep;
            }
        }
    }
    detail << "refined counts agree through hp=" << refined_hp << "\n";

    rep.detail = detail.str();
    return rep;
}

}  // namespace ferrers
