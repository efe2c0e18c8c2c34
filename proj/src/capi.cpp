#include "ferrers/ferrers.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>
#include <vector>

#include "analysis.hpp"
#include "crosscheck.hpp"
#include "oracle.hpp"
#include "umbral.hpp"

using namespace ferrers;

struct frs_series {
    Series value;
};

namespace {

thread_local std::string g_last_error;

frs_status fail(frs_status s, const std::string& msg) {
    g_last_error = msg;
    return s;
}

template <class F>
frs_status guarded(F&& body) {
    try {
        g_last_error.clear();
        return body();
    } catch (const UsageError& e) {
        return fail(FRS_ERR_USAGE, e.what());
    } catch (const DomainError& e) {
        return fail(FRS_ERR_DOMAIN, e.what());
    } catch (const InternalError& e) {
        return fail(FRS_ERR_INTERNAL, e.what());
    } catch (const std::exception& e) {
        return fail(FRS_ERR_INTERNAL, e.what());
    }
}

char* dup_string(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (p) std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

frs_status emit(char** out, const std::string& s) {
    if (!out) return fail(FRS_ERR_USAGE, "null output pointer");
    *out = dup_string(s);
    if (!*out) return fail(FRS_ERR_INTERNAL, "out of memory");
    return FRS_OK;
}

Target target_by_name(const std::string& kind) {
    if (kind == "ferrers") return Target::Ferrers;
    if (kind == "gated") return Target::Gated;
    if (kind == "wicketed") return Target::Wicketed;
    throw UsageError("unknown kind: " + kind +
                     " (expected ferrers, gated or wicketed)");
}

std::vector<long> parse_longs(const std::string& text, char sep) {
    std::vector<long> out;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, sep)) {
        if (item.empty()) throw UsageError("empty entry in list: " + text);
        size_t pos = 0;
        long v;
        try {
            v = std::stol(item, &pos);
        } catch (const std::exception&) {
            throw UsageError("malformed integer: " + item);
        }
        if (pos != item.size()) throw UsageError("malformed integer: " + item);
        out.push_back(v);
    }
    return out;
}

std::vector<std::vector<long>> parse_points(const std::string& text) {
    std::vector<std::vector<long>> out;
    std::string tuple;
    std::istringstream is(text);
    while (std::getline(is, tuple, ';')) out.push_back(parse_longs(tuple, ','));
    return out;
}

std::vector<int> to_ints(const std::vector<long>& v) {
    std::vector<int> out;
    for (long x : v) {
        if (x < -1000000 || x > 1000000) throw UsageError("value out of range");
        out.push_back(static_cast<int>(x));
    }
    return out;
}

Census census_by_name(const std::string& kind, int max_hp) {
    if (kind == "ferrers") return count_ferrers_dp(max_hp);
    if (kind == "gated") return count_gated_dp(max_hp);
    if (kind == "wicketed") return count_wicketed_dp(max_hp);
    throw UsageError("unknown kind: " + kind +
                     " (expected ferrers, gated or wicketed)");
}

std::string residual_json(const ResidualReport& r, const char* relation,
                          const std::vector<std::vector<long>>& points,
                          const std::vector<ResidualReport>& per_point) {
    std::ostringstream os;
    auto one = [](std::ostringstream& o, const ResidualReport& rr) {
        o << "{\"conclusive\":" << (rr.conclusive ? "true" : "false")
          << ",\"vanishes\":" << (rr.vanishes ? "true" : "false")
          << ",\"residual_min_degree\":" << rr.min_degree
          << ",\"order\":" << rr.order << "}";
    };
    os << "{\"relation\":\"" << relation << "\",\"summary\":";
    one(os, r);
    if (!points.empty()) {
        os << ",\"points\":[";
        for (size_t i = 0; i < points.size(); ++i) {
            if (i) os << ",";
            os << "{\"point\":[";
            for (size_t j = 0; j < points[i].size(); ++j)
                os << (j ? "," : "") << points[i][j];
            os << "],\"result\":";
            one(os, per_point[i]);
            os << "}";
        }
        os << "]";
    }
    os << "}";
    return os.str();
}

}  // namespace

extern "C" {

const char* frs_status_name(frs_status s) {
    switch (s) {
        case FRS_OK: return "ok";
        case FRS_ERR_USAGE: return "usage-error";
        case FRS_ERR_DOMAIN: return "domain-error";
        case FRS_ERR_INCONCLUSIVE: return "inconclusive";
        case FRS_ERR_NOT_FOUND: return "not-found";
        case FRS_ERR_MISMATCH: return "mismatch";
        case FRS_ERR_INTERNAL: return "internal-error";
    }
    return "unknown";
}

const char* frs_last_error(void) { return g_last_error.c_str(); }

frs_status frs_pipeline_series(const char* kind, int order, frs_series** out) {
    return guarded([&]() -> frs_status {
        if (!kind || !out) return fail(FRS_ERR_USAGE, "null argument");
        if (order < 0) throw UsageError("order must be non-negative");
        Pipeline pipe(order);
        *out = new frs_series{pipe.get(target_by_name(kind))};
        return FRS_OK;
    });
}

frs_status frs_closed_form_psi(int order, frs_series** out) {
    return guarded([&]() -> frs_status {
        if (!out) return fail(FRS_ERR_USAGE, "null argument");
        if (order < 0) throw UsageError("order must be non-negative");
        *out = new frs_series{closed_form_psi(order)};
        return FRS_OK;
    });
}

int frs_series_order(const frs_series* s) { return s ? s->value.order() : -1; }
int frs_series_arity(const frs_series* s) { return s ? s->value.arity() : -1; }

frs_status frs_series_eval(const frs_series* s, const long* point,
                           size_t point_len, frs_series** out) {
    return guarded([&]() -> frs_status {
        if (!s || !out || (!point && point_len > 0))
            return fail(FRS_ERR_USAGE, "null argument");
        *out = new frs_series{s->value.eval_at({point, point_len})};
        return FRS_OK;
    });
}

frs_status frs_series_coeff(const frs_series* s, int t_deg, char** out) {
    return guarded([&]() -> frs_status {
        if (!s) return fail(FRS_ERR_USAGE, "null argument");
        if (s->value.arity() != 0)
            throw UsageError("coefficient extraction needs an arity-0 series");
        if (t_deg < 0 || t_deg > s->value.order())
            throw UsageError("t degree outside the truncation order");
        return emit(out, rat_to_string(s->value.coeff(t_deg).scalar_part()));
    });
}

frs_status frs_series_json(const frs_series* s, char** out) {
    return guarded([&]() -> frs_status {
        if (!s) return fail(FRS_ERR_USAGE, "null argument");
        return emit(out, s->value.to_json());
    });
}

void frs_series_free(frs_series* s) { delete s; }
void frs_string_free(char* s) { std::free(s); }

frs_status frs_verify(const char* relation, int order, const char* points,
                      int symbolic, int* pass, char** report_json) {
    return guarded([&]() -> frs_status {
        if (!relation || !pass) return fail(FRS_ERR_USAGE, "null argument");
        const std::string name = relation;
        const QuadraticRelation rel = relation_by_name(name, order);
        Pipeline pipe(order);
        const Series* g = nullptr;
        if (name == "punceq" || name == "punceq123") g = &pipe.gated();
        else if (name == "fdfpeq" || name == "fdfpeq1") g = &pipe.wicketed();
        else g = &pipe.ferrers();

        std::vector<std::vector<long>> pts;
        if (points && *points) pts = parse_points(points);
        const bool catalytic = rel.b.arity() != 0;

        ResidualReport summary;
        std::vector<ResidualReport> per_point;
        if (symbolic) {
            if (!catalytic)
                throw UsageError(
                    "symbolic verification applies to the catalytic relations");
            if (!pts.empty())
                throw UsageError("symbolic verification takes no sample points");
            summary = verify_quadratic(*g, rel);
        } else if (!catalytic) {
            // Specialized relation: evaluate the pipeline series at x = 1.
            if (!pts.empty())
                throw UsageError(
                    "specialized relation fixes the catalytic point at 1");
            std::vector<long> ones(static_cast<size_t>(g->arity()), 1);
            summary = verify_quadratic(*g, rel, ones);
        } else {
            if (pts.empty()) {
                if (g->arity() == 3)
                    pts = {{1, 1, 1}, {2, 3, 5}, {1, 2, 4}, {3, 4, 7}, {2, 5, 9}};
                else
                    pts = {{1}, {2}, {3}, {5}, {7}};
            }
            summary.conclusive = true;
            summary.vanishes = true;
            summary.order = order;
            summary.min_degree = -1;
            for (const auto& pt : pts) {
                if (static_cast<int>(pt.size()) != g->arity())
                    throw UsageError("sample point arity mismatch");
                ResidualReport rr = verify_quadratic(*g, rel, pt);
                summary.conclusive = summary.conclusive && rr.conclusive;
                summary.vanishes = summary.vanishes && rr.vanishes;
                if (rr.min_degree >= 0 &&
                    (summary.min_degree < 0 || rr.min_degree < summary.min_degree))
                    summary.min_degree = rr.min_degree;
                per_point.push_back(rr);
            }
        }
        *pass = summary.conclusive && summary.vanishes ? 1 : 0;
        if (report_json) {
            frs_status st =
                emit(report_json, residual_json(summary, relation, pts, per_point));
            if (st != FRS_OK) return st;
        }
        if (!summary.conclusive)
            return fail(FRS_ERR_INCONCLUSIVE,
                        "truncation order too small to decide " + name);
        return FRS_OK;
    });
}

frs_status frs_guess(const char* kind, int order, int deg_a, int deg_b,
                     int deg_c, char** text) {
    return guarded([&]() -> frs_status {
        if (!kind || !text) return fail(FRS_ERR_USAGE, "null argument");
        Pipeline pipe(order);
        const Series& g = pipe.get(target_by_name(kind));
        std::vector<long> ones(static_cast<size_t>(g.arity()), 1);
        const Series spec = g.arity() == 0 ? g : g.eval_at(ones);
        std::optional<GuessResult> res;
        if (deg_a < 0 || deg_b < 0 || deg_c < 0)
            res = guess_quadratic_auto(spec);
        else
            res = guess_quadratic(spec, deg_a, deg_b, deg_c);
        if (!res)
            return fail(FRS_ERR_NOT_FOUND,
                        "no quadratic relation within the degree bounds");
        std::ostringstream os;
        os << res->rel.to_string();
        os << "\ndegrees: A " << upoly_deg(res->rel.a) << ", B "
           << upoly_deg(res->rel.b) << ", C " << upoly_deg(res->rel.c);
        if (res->effectively_linear) os << "\nnote: relation is linear (A = 0)";
        if (res->multiple_solutions)
            os << "\nnote: solution space at minimal degrees is not unique";
        return emit(text, os.str());
    });
}

frs_status frs_oracle_json(const char* kind, int max_hp, char** out) {
    return guarded([&]() -> frs_status {
        if (!kind) return fail(FRS_ERR_USAGE, "null argument");
        return emit(out, census_by_name(kind, max_hp).to_json());
    });
}

frs_status frs_oracle_bfile(const char* kind, int max_hp, int offset,
                            char** out) {
    return guarded([&]() -> frs_status {
        if (!kind) return fail(FRS_ERR_USAGE, "null argument");
        const Census c = census_by_name(kind, max_hp);
        return emit(out, c.to_bfile(offset, first_half_perimeter(kind)));
    });
}

frs_status frs_nibbled_json(int max_hp, char** out) {
    return guarded([&]() -> frs_status {
        const auto counts = count_nibbled(max_hp);
        std::ostringstream os;
        os << "{\"object\":\"nibbled\",\"counts\":[";
        bool first = true;
        for (const auto& [key, n] : counts) {
            const auto [h, alpha, beta] = key;
            if (!first) os << ",";
            first = false;
            os << "{\"hp\":" << h << ",\"alpha\":" << alpha
               << ",\"beta\":" << beta << ",\"count\":" << n << "}";
        }
        os << "]}";
        return emit(out, os.str());
    });
}

frs_status frs_crosscheck(int max_hp, int* pass, char** report) {
    return guarded([&]() -> frs_status {
        if (!pass) return fail(FRS_ERR_USAGE, "null argument");
        const CrosscheckReport rep = crosscheck(max_hp);
        *pass = rep.pass ? 1 : 0;
        if (report) {
            frs_status st = emit(report, rep.detail);
            if (st != FRS_OK) return st;
        }
        if (!rep.pass) return fail(FRS_ERR_MISMATCH, rep.detail);
        return FRS_OK;
    });
}

frs_status frs_render(const char* rows_csv, const char* gate_spec,
                      const char* top_csv, char** out) {
    return guarded([&]() -> frs_status {
        if (!rows_csv) return fail(FRS_ERR_USAGE, "null argument");
        FerrersShape base{to_ints(parse_longs(rows_csv, ','))};
        if (!gate_spec || !*gate_spec) {
            if (top_csv && *top_csv)
                throw UsageError("top rows require a gate specification");
            if (!base.valid()) throw DomainError("row widths are not a diagram");
            return emit(out, render_ascii(base));
        }
        GatedShape gated;
        gated.base = base;
        std::string part;
        std::istringstream is(gate_spec);
        bool first = true;
        while (std::getline(is, part, ';')) {
            if (first) {
                auto v = to_ints(parse_longs(part, ','));
                if (v.size() != 1)
                    throw UsageError("gate spec starts with the left width b1");
                gated.left = v[0];
                first = false;
                continue;
            }
            auto v = to_ints(parse_longs(part, ','));
            if (v.size() != 2)
                throw UsageError("each gate row is a gap,right pair");
            gated.rows.push_back({v[0], v[1]});
        }
        if (first) throw UsageError("empty gate specification");
        if (!top_csv || !*top_csv) {
            if (!gated.valid()) throw DomainError("gate does not fit the diagram");
            return emit(out, render_ascii(gated));
        }
        WicketedShape w;
        w.gated = gated;
        w.top_rows = to_ints(parse_longs(top_csv, ','));
        if (!w.valid()) throw DomainError("top rows do not close the gate");
        return emit(out, render_ascii(w));
    });
}

}  // extern "C"
