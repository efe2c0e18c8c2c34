#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "rational.hpp"

namespace ferrers {

// Plain Ferrers diagram: row widths bottom to top, weakly increasing.
struct FerrersShape {
    std::vector<int> row_widths;

    bool valid() const;
    // height + top width; equals boundary-edge count / 2.
    int half_perimeter() const;
};

// One row of a gate/wicket: gap width (b2/c2) and right width (b3/c3).
// The left width b1 is constant over the whole gate.
struct GateRow {
    int gap;
    int right;
};

// Ferrers diagram with a Ferrers-shaped slit open at the top.
struct GatedShape {
    FerrersShape base;
    int left;  // b1
    std::vector<GateRow> rows;  // bottom to top, at least one

    bool valid() const;
    int half_perimeter() const;  // boundary edges of the cell set / 2
};

// Ferrers diagram with a Ferrers-shaped hole strictly in the interior:
// a gated shape closed by a full row, then optional further full rows.
struct WicketedShape {
    GatedShape gated;
    std::vector<int> top_rows;  // closing row first; weakly increasing

    bool valid() const;
    int half_perimeter() const;
    // outer height + outer top width + hole height + hole top width.
    int half_perimeter_identity() const;
};

struct Census {
    std::string object;
    int max_hp = 0;
    // counts[h] for h = 0..max_hp
    std::vector<std::uint64_t> counts;

    std::string to_json() const;
    // "index value" lines; values start at first_hp, indices at offset.
    std::string to_bfile(int offset, int first_hp) const;
};

// Smallest structurally possible half-perimeter per object kind.
int first_half_perimeter(const std::string& object);

// Exhaustive generation with per-shape geometric verification.
Census count_ferrers(int max_hp);
Census count_gated(int max_hp);
Census count_wicketed(int max_hp);

// Independent dynamic programs over the operator index ranges; used for the
// determinism cross-check against the generators above.
Census count_ferrers_dp(int max_hp);
Census count_gated_dp(int max_hp);
Census count_wicketed_dp(int max_hp);

// Gated counts refined by the top gate row (b1, b2, b3) and half-perimeter.
std::map<std::tuple<int, int, int, int>, std::uint64_t> count_gated_refined(
    int max_hp);
// Wicketed counts refined by (top width, half-perimeter).
std::map<std::tuple<int, int>, std::uint64_t> count_wicketed_refined(int max_hp);

// Nibbled staircase polygons, census keyed by (contributing length, alpha, beta).
// The contributing length is the summed length of both boundary paths minus
// the two nibbles; the alpha=beta=0 slice at h=2k is the ordinary staircase
// polygon count C_{k-1}. Exploratory reading of the figure: the nibble on the
// first vertical (alpha) and last horizontal (beta) upper-path segment leaves
// at least one contributing unit on its segment.
std::map<std::tuple<int, int, int>, std::uint64_t> count_nibbled(int max_hp);
// Same census generated in a different iteration order (determinism check).
std::map<std::tuple<int, int, int>, std::uint64_t> count_nibbled_alt(int max_hp);

std::string render_ascii(const FerrersShape& s);
std::string render_ascii(const GatedShape& s);
std::string render_ascii(const WicketedShape& s);

}  // namespace ferrers
