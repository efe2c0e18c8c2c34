// Command-line front end. Talks to the engine exclusively through the
// public C API in ferrers/ferrers.h.
#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ferrers/ferrers.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;          // relation fails / none found / mismatch
constexpr int kExitInconclusive = 2;  // truncation order cannot decide
constexpr int kExitUsage = 64;
constexpr int kExitInternal = 70;

struct StringOut {
    char* p = nullptr;
    ~StringOut() { frs_string_free(p); }
    std::string str() const { return p ? p : ""; }
};

struct SeriesOut {
    frs_series* p = nullptr;
    ~SeriesOut() { frs_series_free(p); }
};

int exit_code_for(frs_status st) {
    switch (st) {
        case FRS_OK: return kExitPass;
        case FRS_ERR_USAGE:
        case FRS_ERR_DOMAIN: return kExitUsage;
        case FRS_ERR_INCONCLUSIVE: return kExitInconclusive;
        case FRS_ERR_NOT_FOUND:
        case FRS_ERR_MISMATCH: return kExitFail;
        case FRS_ERR_INTERNAL: return kExitInternal;
    }
    return kExitInternal;
}

int report_error(frs_status st) {
    std::fprintf(stderr, "error (%s): %s\n", frs_status_name(st),
                 frs_last_error());
    return exit_code_for(st);
}

std::vector<long> parse_point(const std::string& text) {
    std::vector<long> out;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ',')) out.push_back(std::stol(item));
    return out;
}

// Prints the t-coefficients of a specialized series as "h value" rows
// (table) or as a b-file with running index starting at offset.
int print_specialized(frs_series* s, const std::string& format, int offset,
                      bool offset_given, const std::string& kind) {
    const int order = frs_series_order(s);
    int first = -1;
    std::vector<std::string> vals;
    for (int h = 0; h <= order; ++h) {
        StringOut c;
        frs_status st = frs_series_coeff(s, h, &c.p);
        if (st != FRS_OK) return report_error(st);
        if (first < 0 && c.str() != "0") first = h;
        vals.push_back(c.str());
    }
    if (first < 0) {
        std::printf(
            "no nonzero terms through order %d; the smallest %s shape has a "
            "larger half-perimeter (re-run with a higher --order)\n",
            order, kind.c_str());
        return kExitPass;
    }
    if (format == "bfile") {
        if (!offset_given && kind != "ferrers") {
            std::fprintf(stderr,
                         "error (usage-error): --offset is required for b-file "
                         "output of %s series\n",
                         kind.c_str());
            return kExitUsage;
        }
        const int base = offset_given ? offset : 2;
        for (int h = first; h <= order; ++h)
            std::printf("%d %s\n", base + (h - first), vals[h].c_str());
    } else {
        for (int h = first; h <= order; ++h)
            std::printf("%d %s\n", h, vals[h].c_str());
    }
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact enumeration of Ferrers diagrams, gated Ferrers diagrams and "
        "wicketed Ferrers diagrams by half-perimeter: umbral evolution series, "
        "brute-force censuses, quadratic-relation verification and guessing."};
    app.require_subcommand(1);

    // --- series ---
    std::string s_kind, s_format = "table", s_point;
    int s_order = 16, s_offset = 0;
    bool s_closed = false;
    auto* s_cmd = app.add_subcommand(
        "series", "Umbral evolution series coefficients for one object kind");
    s_cmd->add_option("kind", s_kind, "ferrers | gated | wicketed")->required();
    s_cmd->add_option("--order", s_order, "truncation order (t degree)");
    s_cmd->add_option("--format", s_format, "table | bfile | json")
        ->check(CLI::IsMember({"table", "bfile", "json"}));
    s_cmd->add_option("--point", s_point,
                      "catalytic evaluation point, e.g. 1,1,1 (default all 1)");
    auto* s_off =
        s_cmd->add_option("--offset", s_offset, "first b-file index");
    s_cmd->add_flag("--closed-form", s_closed,
                    "use the closed-form wicketed series instead of the "
                    "evolution pipeline (wicketed only)");

    // --- verify ---
    std::string v_relation, v_points;
    int v_order = 24;
    bool v_symbolic = false;
    auto* v_cmd = app.add_subcommand(
        "verify", "Check a quadratic relation against the computed series");
    v_cmd->add_option("relation", v_relation,
                      "punceq | punceq123 | fdfpeq | fdfpeq1 | F-rational")
        ->required();
    v_cmd->add_option("--order", v_order, "truncation order");
    v_cmd->add_option("--points", v_points,
                      "sample points, e.g. \"1,1,1;2,3,5\" (catalytic "
                      "relations only)");
    v_cmd->add_flag("--symbolic", v_symbolic,
                    "verify with the catalytic variables kept symbolic");

    // --- guess ---
    std::string g_kind;
    int g_order = 40, g_da = -1, g_db = -1, g_dc = -1;
    auto* g_cmd = app.add_subcommand(
        "guess", "Fit A G^2 + B G + C = 0 to the specialized series");
    g_cmd->add_option("kind", g_kind, "ferrers | gated | wicketed")->required();
    g_cmd->add_option("--order", g_order, "number of series terms - 1");
    g_cmd->add_option("--deg-a", g_da, "degree bound for A (default auto)");
    g_cmd->add_option("--deg-b", g_db, "degree bound for B (default auto)");
    g_cmd->add_option("--deg-c", g_dc, "degree bound for C (default auto)");

    // --- crosscheck ---
    int c_max_hp = 14;
    auto* c_cmd = app.add_subcommand(
        "crosscheck",
        "Compare brute-force censuses with the umbral evolution coefficients");
    c_cmd->add_option("--max-hp", c_max_hp, "largest half-perimeter checked");

    // --- oracle ---
    std::string o_kind, o_format = "table";
    int o_max_hp = 14, o_offset = 0;
    auto* o_cmd = app.add_subcommand(
        "oracle", "Brute-force census by half-perimeter");
    o_cmd->add_option("kind", o_kind, "ferrers | gated | wicketed | nibbled")
        ->required();
    o_cmd->add_option("--max-hp", o_max_hp, "largest half-perimeter");
    o_cmd->add_option("--format", o_format, "table | bfile | json")
        ->check(CLI::IsMember({"table", "bfile", "json"}));
    auto* o_off = o_cmd->add_option("--offset", o_offset, "first b-file index");

    // --- render ---
    std::string r_rows, r_gate, r_top;
    auto* r_cmd = app.add_subcommand("render", "ASCII picture of one shape");
    r_cmd->add_option("--rows", r_rows,
                      "row widths bottom to top, e.g. 3,4,4,6,7,8")
        ->required();
    r_cmd->add_option("--gate", r_gate,
                      "gate: left width, then gap,right per row, e.g. "
                      "\"2;1,2;1,3\"");
    r_cmd->add_option("--top", r_top,
                      "closing row width then further full row widths");

    CLI11_PARSE(app, argc, argv);

    if (s_cmd->parsed()) {
        if (s_closed && s_kind != "wicketed") {
            std::fprintf(stderr,
                         "error (usage-error): --closed-form applies to the "
                         "wicketed series only\n");
            return kExitUsage;
        }
        SeriesOut raw;
        frs_status st = s_closed ? frs_closed_form_psi(s_order, &raw.p)
                                 : frs_pipeline_series(s_kind.c_str(), s_order,
                                                       &raw.p);
        if (st != FRS_OK) return report_error(st);
        if (s_format == "json" && s_point.empty()) {
            StringOut js;
            st = frs_series_json(raw.p, &js.p);
            if (st != FRS_OK) return report_error(st);
            std::printf("%s\n", js.p);
            return kExitPass;
        }
        SeriesOut spec;
        if (frs_series_arity(raw.p) == 0 && s_point.empty()) {
            spec.p = raw.p;
            raw.p = nullptr;
        } else {
            std::vector<long> pt;
            if (!s_point.empty()) {
                pt = parse_point(s_point);
            } else {
                pt.assign(static_cast<size_t>(frs_series_arity(raw.p)), 1);
            }
            st = frs_series_eval(raw.p, pt.data(), pt.size(), &spec.p);
            if (st != FRS_OK) return report_error(st);
        }
        if (s_format == "json") {
            StringOut js;
            st = frs_series_json(spec.p, &js.p);
            if (st != FRS_OK) return report_error(st);
            std::printf("%s\n", js.p);
            return kExitPass;
        }
        return print_specialized(spec.p, s_format, s_offset, !s_off->empty(),
                                 s_kind);
    }

    if (v_cmd->parsed()) {
        int pass = 0;
        StringOut report;
        frs_status st = frs_verify(v_relation.c_str(), v_order,
                                   v_points.empty() ? nullptr : v_points.c_str(),
                                   v_symbolic ? 1 : 0, &pass, &report.p);
        if (st != FRS_OK && st != FRS_ERR_INCONCLUSIVE) return report_error(st);
        if (report.p) std::printf("%s\n", report.p);
        if (st == FRS_ERR_INCONCLUSIVE) {
            std::printf("INCONCLUSIVE: %s\n", frs_last_error());
            return kExitInconclusive;
        }
        std::printf("%s: %s\n", v_relation.c_str(), pass ? "PASS" : "FAIL");
        return pass ? kExitPass : kExitFail;
    }

    if (g_cmd->parsed()) {
        StringOut text;
        frs_status st = frs_guess(g_kind.c_str(), g_order, g_da, g_db, g_dc,
                                  &text.p);
        if (st == FRS_ERR_NOT_FOUND) {
            std::printf("no quadratic relation found within the bounds\n");
            return kExitFail;
        }
        if (st != FRS_OK) return report_error(st);
        std::printf("%s\n", text.p);
        return kExitPass;
    }

    if (c_cmd->parsed()) {
        int pass = 0;
        StringOut report;
        frs_status st = frs_crosscheck(c_max_hp, &pass, &report.p);
        if (st != FRS_OK && st != FRS_ERR_MISMATCH) return report_error(st);
        if (report.p) std::printf("%s", report.p);
        std::printf("crosscheck: %s\n", pass ? "PASS" : "FAIL");
        return pass ? kExitPass : kExitFail;
    }

    if (o_cmd->parsed()) {
        if (o_kind == "nibbled") {
            if (o_format == "bfile") {
                std::fprintf(stderr,
                             "error (usage-error): nibbled censuses are keyed "
                             "by (hp, alpha, beta); use json or table\n");
                return kExitUsage;
            }
            StringOut js;
            frs_status st = frs_nibbled_json(o_max_hp, &js.p);
            if (st != FRS_OK) return report_error(st);
            if (o_format == "json") {
                std::printf("%s\n", js.p);
                return kExitPass;
            }
            // table: one "hp alpha beta count" row per JSON entry
            std::string text = js.str();
            size_t pos = 0;
            while ((pos = text.find("{\"hp\":", pos)) != std::string::npos) {
                int hp, alpha, beta;
                unsigned long long count;
                if (std::sscanf(text.c_str() + pos,
                                "{\"hp\":%d,\"alpha\":%d,\"beta\":%d,"
                                "\"count\":%llu",
                                &hp, &alpha, &beta, &count) == 4)
                    std::printf("%d %d %d %llu\n", hp, alpha, beta, count);
                ++pos;
            }
            return kExitPass;
        }
        StringOut text;
        frs_status st;
        if (o_format == "json") {
            st = frs_oracle_json(o_kind.c_str(), o_max_hp, &text.p);
        } else if (o_format == "bfile") {
            if (o_off->empty() && o_kind != "ferrers") {
                std::fprintf(stderr,
                             "error (usage-error): --offset is required for "
                             "b-file output of %s counts\n",
                             o_kind.c_str());
                return kExitUsage;
            }
            const int base = o_off->empty() ? 2 : o_offset;
            st = frs_oracle_bfile(o_kind.c_str(), o_max_hp, base, &text.p);
        } else {
            StringOut json_text;
            st = frs_oracle_json(o_kind.c_str(), o_max_hp, &json_text.p);
            if (st == FRS_OK) {
                std::string body = json_text.str();
                size_t pos = 0;
                while ((pos = body.find("{\"hp\":", pos)) != std::string::npos) {
                    int hp;
                    unsigned long long count;
                    if (std::sscanf(body.c_str() + pos,
                                    "{\"hp\":%d,\"count\":%llu", &hp,
                                    &count) == 2)
                        std::printf("%d %llu\n", hp, count);
                    ++pos;
                }
                return kExitPass;
            }
        }
        if (st != FRS_OK) return report_error(st);
        std::printf("%s", text.p);
        if (o_format == "json") std::printf("\n");
        return kExitPass;
    }

    if (r_cmd->parsed()) {
        StringOut art;
        frs_status st = frs_render(r_rows.c_str(),
                                   r_gate.empty() ? nullptr : r_gate.c_str(),
                                   r_top.empty() ? nullptr : r_top.c_str(),
                                   &art.p);
        if (st != FRS_OK) return report_error(st);
        std::printf("%s", art.p);
        return kExitPass;
    }

    return kExitUsage;
}
