#include "oracle.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "json.hpp"

namespace ferrers {

namespace {

using Cell = std::pair<int, int>;  // (row, col), row 0 at the bottom
using CellSet = std::set<Cell>;

int boundary_edges(const CellSet& cells) {
    int edges = 0;
    for (const auto& [r, c] : cells) {
        if (!cells.count({r + 1, c})) ++edges;
        if (!cells.count({r - 1, c})) ++edges;
        if (!cells.count({r, c + 1})) ++edges;
        if (!cells.count({r, c - 1})) ++edges;
    }
    return edges;
}

CellSet cells_of(const FerrersShape& s) {
    CellSet cells;
    for (int i = 0; i < static_cast<int>(s.row_widths.size()); ++i)
        for (int j = 0; j < s.row_widths[i]; ++j) cells.insert({i, j});
    return cells;
}

CellSet cells_of(const GatedShape& s) {
    CellSet cells = cells_of(s.base);
    int row = static_cast<int>(s.base.row_widths.size());
    for (const auto& gr : s.rows) {
        for (int j = 0; j < s.left; ++j) cells.insert({row, j});
        for (int j = s.left + gr.gap; j < s.left + gr.gap + gr.right; ++j)
            cells.insert({row, j});
        ++row;
    }
    return cells;
}

CellSet cells_of(const WicketedShape& s) {
    CellSet cells = cells_of(s.gated);
    int row = static_cast<int>(s.gated.base.row_widths.size() +
                               s.gated.rows.size());
    for (int w : s.top_rows) {
        for (int j = 0; j < w; ++j) cells.insert({row, j});
        ++row;
    }
    return cells;
}

void check_hp_range(int max_hp) {
    if (max_hp < 0 || max_hp > 30)
        throw UsageError("oracle max half-perimeter must be in [0, 30]");
}

// Enumerates Ferrers row-width vectors with half-perimeter <= max_hp.
void each_ferrers(int max_hp, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> rows;
    std::function<void(int)> rec = [&](int last) {
        fn(rows);
        for (int w = last; static_cast<int>(rows.size()) + 1 + w <= max_hp; ++w) {
            rows.push_back(w);
            rec(w);
            rows.pop_back();
        }
    };
    for (int w = 1; 1 + w <= max_hp; ++w) {
        rows.assign(1, w);
        rec(w);
    }
}

// Enumerates gated shapes with half-perimeter <= max_hp, passing the
// grammar-derived half-perimeter along.
void each_gated(int max_hp,
                const std::function<void(const GatedShape&, int)>& fn) {
    each_ferrers(max_hp, [&](const std::vector<int>& base_rows) {
        const int a = base_rows.back();
        const int base_hp = static_cast<int>(base_rows.size()) + a;
        if (a < 3 || base_hp + 2 > max_hp) return;
        GatedShape shape;
        shape.base.row_widths = base_rows;
        // extension rows per the U2 index ranges
        std::function<void(int)> extend = [&](int hp) {
            fn(shape, hp);
            const auto [b2, b3] = shape.rows.back();
            for (int c2 = b2; c2 <= b2 + b3 - 1; ++c2) {
                for (int c3 = b2 + b3 - c2;
                     hp + 2 + c2 + c3 - b2 - b3 <= max_hp; ++c3) {
                    shape.rows.push_back({c2, c3});
                    extend(hp + 2 + c2 + c3 - b2 - b3);
                    shape.rows.pop_back();
                }
            }
        };
        // creation row per the U1 index ranges
        for (int b1 = 1; b1 <= a - 2; ++b1) {
            shape.left = b1;
            for (int b2 = 1; b2 <= a - 1 - b1; ++b2) {
                for (int b3 = a - b1 - b2;
                     base_hp + 2 + b1 + b2 + b3 - a <= max_hp; ++b3) {
                    shape.rows.assign(1, {b2, b3});
                    extend(base_hp + 2 + b1 + b2 + b3 - a);
                }
            }
        }
    });
}

void each_wicketed(int max_hp,
                   const std::function<void(const WicketedShape&, int)>& fn) {
    each_gated(max_hp - 1, [&](const GatedShape& g, int hp) {
        WicketedShape shape;
        shape.gated = g;
        const int b1 = g.left;
        const auto [b2, b3] = g.rows.back();
        // closing row per the U3 index range, then ordinary U0 rows
        std::function<void(int, int)> grow = [&](int top_w, int w) {
            fn(shape, w);
            for (int b = top_w; w + b - top_w + 1 <= max_hp; ++b) {
                shape.top_rows.push_back(b);
                grow(b, w + b - top_w + 1);
                shape.top_rows.pop_back();
            }
        };
        for (int a = b1 + b2 + b3; hp + 1 + a - b1 - b3 <= max_hp; ++a) {
            shape.top_rows.assign(1, a);
            grow(a, hp + 1 + a - b1 - b3);
        }
    });
}

std::string render_cells(const CellSet& cells, const CellSet& holes) {
    if (cells.empty()) return "";
    int max_r = 0, max_c = 0;
    for (const auto& [r, c] : cells) {
        max_r = std::max(max_r, r);
        max_c = std::max(max_c, c);
    }
    std::string out;
    for (int r = max_r; r >= 0; --r) {  // bottom row last
        std::string line;
        for (int c = 0; c <= max_c; ++c) {
            if (cells.count({r, c}))
                line += '#';
            else if (holes.count({r, c}))
                line += '.';
            else
                line += ' ';
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line;
        out += '\n';
    }
    return out;
}

CellSet hole_cells(const GatedShape& s) {
    CellSet holes;
    int row = static_cast<int>(s.base.row_widths.size());
    for (const auto& gr : s.rows) {
        for (int j = s.left; j < s.left + gr.gap; ++j) holes.insert({row, j});
        ++row;
    }
    return holes;
}

}  // namespace

bool FerrersShape::valid() const {
    if (row_widths.empty()) return false;
    int prev = 1;
    for (int w : row_widths) {
        if (w < prev) return false;
        prev = w;
    }
    return true;
}

int FerrersShape::half_perimeter() const {
    return static_cast<int>(row_widths.size()) + row_widths.back();
}

bool GatedShape::valid() const {
    if (!base.valid() || rows.empty() || left < 1) return false;
    const int a = base.row_widths.back();
    if (left > a - 2) return false;
    const GateRow& first = rows.front();
    if (first.gap < 1 || left + first.gap > a - 1) return false;
    if (left + first.gap + first.right < a) return false;
    for (size_t r = 1; r < rows.size(); ++r) {
        const GateRow& prev = rows[r - 1];
        const GateRow& cur = rows[r];
        if (cur.gap < prev.gap || cur.gap > prev.gap + prev.right - 1)
            return false;
        if (cur.gap + cur.right < prev.gap + prev.right) return false;
    }
    return true;
}

int GatedShape::half_perimeter() const {
    int edges = boundary_edges(cells_of(*this));
    if (edges % 2 != 0) throw InternalError("odd boundary edge count");
    return edges / 2;
}

bool WicketedShape::valid() const {
    if (!gated.valid() || top_rows.empty()) return false;
    const GateRow& top = gated.rows.back();
    if (top_rows.front() < gated.left + top.gap + top.right) return false;
    for (size_t i = 1; i < top_rows.size(); ++i)
        if (top_rows[i] < top_rows[i - 1]) return false;
    return true;
}

int WicketedShape::half_perimeter() const {
    int edges = boundary_edges(cells_of(*this));
    if (edges % 2 != 0) throw InternalError("odd boundary edge count");
    return edges / 2;
}

int WicketedShape::half_perimeter_identity() const {
    const int outer_height = static_cast<int>(gated.base.row_widths.size() +
                                              gated.rows.size() +
                                              top_rows.size());
    const int outer_top_width = top_rows.back();
    const int hole_height = static_cast<int>(gated.rows.size());
    const int hole_top_width = gated.rows.back().gap;
    return outer_height + outer_top_width + hole_height + hole_top_width;
}

std::string Census::to_json() const {
    nlohmann::json j;
    j["object"] = object;
    auto rows = nlohmann::json::array();
    const int first = first_half_perimeter(object);
    for (int h = first; h <= max_hp; ++h) {
        nlohmann::json row;
        row["hp"] = h;
        row["count"] = counts[h];
        rows.push_back(std::move(row));
    }
    j["counts"] = std::move(rows);
    return j.dump();
}

std::string Census::to_bfile(int offset, int first_hp) const {
    std::string out;
    for (int h = first_hp; h <= max_hp; ++h) {
        out += std::to_string(offset + (h - first_hp));
        out += ' ';
        out += std::to_string(counts[h]);
        out += '\n';
    }
    return out;
}

int first_half_perimeter(const std::string& object) {
    if (object == "ferrers") return 2;
    if (object == "gated") return 6;
    if (object == "wicketed") return 8;
    if (object == "nibbled") return 4;
    throw UsageError("unknown object kind: " + object);
}

Census count_ferrers(int max_hp) {
    check_hp_range(max_hp);
    Census c{"ferrers", max_hp, std::vector<std::uint64_t>(max_hp + 1, 0)};
    each_ferrers(max_hp, [&](const std::vector<int>& rows) {
        FerrersShape s{rows};
        const int hp = s.half_perimeter();
        if (boundary_edges(cells_of(s)) != 2 * hp)
            throw InternalError("ferrers half-perimeter mismatch");
        ++c.counts[hp];
    });
    return c;
}

Census count_gated(int max_hp) {
    check_hp_range(max_hp);
    Census c{"gated", max_hp, std::vector<std::uint64_t>(max_hp + 1, 0)};
    each_gated(max_hp, [&](const GatedShape& s, int hp) {
        if (!s.valid()) throw InternalError("generated invalid gated shape");
        if (s.half_perimeter() != hp)
            throw InternalError("gated grammar weight disagrees with geometry");
        ++c.counts[hp];
    });
    return c;
}

Census count_wicketed(int max_hp) {
    check_hp_range(max_hp);
    Census c{"wicketed", max_hp, std::vector<std::uint64_t>(max_hp + 1, 0)};
    each_wicketed(max_hp, [&](const WicketedShape& s, int hp) {
        if (!s.valid()) throw InternalError("generated invalid wicketed shape");
        if (s.half_perimeter() != hp)
            throw InternalError("wicketed grammar weight disagrees with geometry");
        if (s.half_perimeter_identity() != hp)
            throw InternalError("wicketed half-perimeter identity violated");
        ++c.counts[hp];
    });
    return c;
}

Census count_ferrers_dp(int max_hp) {
    check_hp_range(max_hp);
    Census c{"ferrers", max_hp, std::vector<std::uint64_t>(max_hp + 1, 0)};
    // state[h][a]: diagrams with half-perimeter h and top width a
    std::vector<std::vector<std::uint64_t>> state(
        max_hp + 1, std::vector<std::uint64_t>(max_hp + 1, 0));
    for (int a = 1; a + 1 <= max_hp; ++a) state[a + 1][a] = 1;
    for (int h = 0; h <= max_hp; ++h)
        for (int a = 1; a <= max_hp; ++a) {
            if (state[h][a] == 0) continue;
            c.counts[h] += state[h][a];
            for (int b = a; h + b - a + 1 <= max_hp; ++b)
                state[h + b - a + 1][b] += state[h][a];
        }
    return c;
}

namespace {

// Gated states keyed by (b1, b2, b3, h), filled along increasing h.
std::map<std::tuple<int, int, int, int>, std::uint64_t> gated_states(int max_hp) {
    std::map<std::tuple<int, int, int, int>, std::uint64_t> state;
    // seed: U1 applied to every Ferrers state
    std::vector<std::vector<std::uint64_t>> fstate(
        max_hp + 1, std::vector<std::uint64_t>(max_hp + 1, 0));
    for (int a = 1; a + 1 <= max_hp; ++a) fstate[a + 1][a] = 1;
    for (int h = 0; h <= max_hp; ++h)
        for (int a = 1; a <= max_hp; ++a) {
            if (fstate[h][a] == 0) continue;
            for (int b = a; h + b - a + 1 <= max_hp; ++b)
                fstate[h + b - a + 1][b] += fstate[h][a];
        }
    for (int h = 0; h <= max_hp; ++h)
        for (int a = 3; a <= max_hp; ++a) {
            if (fstate[h][a] == 0) continue;
            for (int b1 = 1; b1 <= a - 2; ++b1)
                for (int b2 = 1; b2 <= a - 1 - b1; ++b2)
                    for (int b3 = a - b1 - b2;
                         h + 2 + b1 + b2 + b3 - a <= max_hp; ++b3)
                        state[{b1, b2, b3, h + 2 + b1 + b2 + b3 - a}] +=
                            fstate[h][a];
        }
    // U2 closure: process states in increasing h (U2 strictly increases h)
    for (int h = 0; h <= max_hp; ++h) {
        for (const auto& [key, n] : std::map(state)) {
            const auto [b1, b2, b3, hh] = key;
            if (hh != h || n == 0) continue;
            for (int c2 = b2; c2 <= b2 + b3 - 1; ++c2)
                for (int c3 = b2 + b3 - c2; h + 2 + c2 + c3 - b2 - b3 <= max_hp;
                     ++c3)
                    state[{b1, c2, c3, h + 2 + c2 + c3 - b2 - b3}] += n;
        }
    }
    return state;
}

}  // namespace

Census count_gated_dp(int max_hp) {
    check_hp_range(max_hp);
    Census c{"gated", max_hp, std::vector<std::uint64_t>(max_hp + 1, 0)};
    for (const auto& [key, n] : gated_states(max_hp))
        c.counts[std::get<3>(key)] += n;
    return c;
}

Census count_wicketed_dp(int max_hp) {
    check_hp_range(max_hp);
    Census c{"wicketed", max_hp, std::vector<std::uint64_t>(max_hp + 1, 0)};
    // W[h][a]: wicketed states with half-perimeter h and top width a
    std::vector<std::vector<std::uint64_t>> state(
        max_hp + 1, std::vector<std::uint64_t>(max_hp + 1, 0));
    for (const auto& [key, n] : gated_states(max_hp)) {
        const auto [b1, b2, b3, h] = key;
        for (int a = b1 + b2 + b3; h + 1 + a - b1 - b3 <= max_hp; ++a)
            state[h + 1 + a - b1 - b3][a] += n;
    }
    for (int h = 0; h <= max_hp; ++h)
        for (int a = 1; a <= max_hp; ++a) {
            if (state[h][a] == 0) continue;
            c.counts[h] += state[h][a];
            for (int b = a; h + b - a + 1 <= max_hp; ++b)
                state[h + b - a + 1][b] += state[h][a];
        }
    return c;
}

std::map<std::tuple<int, int, int, int>, std::uint64_t> count_gated_refined(
    int max_hp) {
    check_hp_range(max_hp);
    std::map<std::tuple<int, int, int, int>, std::uint64_t> refined;
    each_gated(max_hp, [&](const GatedShape& s, int hp) {
        const GateRow& top = s.rows.back();
        ++refined[{s.left, top.gap, top.right, hp}];
    });
    return refined;
}

std::map<std::tuple<int, int>, std::uint64_t> count_wicketed_refined(int max_hp) {
    check_hp_range(max_hp);
    std::map<std::tuple<int, int>, std::uint64_t> refined;
    each_wicketed(max_hp, [&](const WicketedShape& s, int hp) {
        ++refined[{s.top_rows.back(), hp}];
    });
    return refined;
}

namespace {

// All E/N step sequences from (0,0) to (m,n) as bitmasks (bit set = N step).
std::vector<unsigned> paths_mn(int m, int n) {
    std::vector<unsigned> out;
    const int len = m + n;
    for (unsigned mask = 0; mask < (1u << len); ++mask) {
        if (__builtin_popcount(mask) == n) out.push_back(mask);
    }
    return out;
}

// Interior vertices of a path as packed (x,y) values.
std::vector<int> interior_vertices(unsigned mask, int len) {
    std::vector<int> v;
    int x = 0, y = 0;
    for (int i = 0; i < len - 1; ++i) {
        if (mask & (1u << i))
            ++y;
        else
            ++x;
        v.push_back(x * 64 + y);
    }
    std::sort(v.begin(), v.end());
    return v;
}

bool disjoint_sorted(const std::vector<int>& a, const std::vector<int>& b) {
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return false;
        if (a[i] < b[j])
            ++i;
        else
            ++j;
    }
    return true;
}

int leading_n_run(unsigned mask, int len) {
    int r = 0;
    while (r < len && (mask & (1u << r))) ++r;
    return r;
}

int trailing_e_run(unsigned mask, int len) {
    int r = 0;
    while (r < len && !(mask & (1u << (len - 1 - r)))) ++r;
    return r;
}

void nibbled_census_into(
    int max_hp, bool reversed_order,
    std::map<std::tuple<int, int, int>, std::uint64_t>& census) {
    check_hp_range(max_hp);
    if (max_hp > 16) throw UsageError("nibbled census limited to max_hp <= 16");
    for (int m = 1; m <= max_hp; ++m) {
        for (int n = 1; m + n + 2 <= max_hp; ++n) {
            const int len = m + n;
            auto all = paths_mn(m, n);
            if (reversed_order) std::reverse(all.begin(), all.end());
            // lower path starts with E (bit 0 clear), upper with N (bit 0 set);
            // a vertex-disjoint pair has exactly one such labelling.
            for (unsigned lo : all) {
                if (lo & 1u) continue;
                auto lo_v = interior_vertices(lo, len);
                for (unsigned up : all) {
                    if (!(up & 1u)) continue;
                    if (!disjoint_sorted(lo_v, interior_vertices(up, len)))
                        continue;
                    const int v1 = leading_n_run(up, len);
                    const int hl = trailing_e_run(up, len);
                    for (int alpha = 0; alpha < v1; ++alpha)
                        for (int beta = 0; beta < hl; ++beta) {
                            const int hp = 2 * len - alpha - beta;
                            if (hp <= max_hp) ++census[{hp, alpha, beta}];
                        }
                }
            }
        }
    }
}

}  // namespace

std::map<std::tuple<int, int, int>, std::uint64_t> count_nibbled(int max_hp) {
    std::map<std::tuple<int, int, int>, std::uint64_t> census;
    nibbled_census_into(max_hp, false, census);
    return census;
}

std::map<std::tuple<int, int, int>, std::uint64_t> count_nibbled_alt(int max_hp) {
    std::map<std::tuple<int, int, int>, std::uint64_t> census;
    nibbled_census_into(max_hp, true, census);
    return census;
}

std::string render_ascii(const FerrersShape& s) {
    if (!s.valid()) throw UsageError("invalid Ferrers shape");
    return render_cells(cells_of(s), {});
}

std::string render_ascii(const GatedShape& s) {
    if (!s.valid()) throw UsageError("invalid gated shape");
    return render_cells(cells_of(s), hole_cells(s));
}

std::string render_ascii(const WicketedShape& s) {
    if (!s.valid()) throw UsageError("invalid wicketed shape");
    return render_cells(cells_of(s), hole_cells(s.gated));
}

}  // namespace ferrers
