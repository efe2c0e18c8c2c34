#pragma once

#include <optional>
#include <string>

#include "oracle.hpp"
#include "series.hpp"

namespace ferrers {

struct CrosscheckReport {
    bool pass = true;
    // One line per comparison family; on failure the first line names the
    // first discrepancy found.
    std::string detail;
};

// Compares census.counts[h] against the t^h coefficient of an arity-0 series
// for first_hp <= h <= min(census.max_hp, series order). Returns a message
// describing the first mismatch, or nullopt when everything agrees.
std::optional<std::string> compare_census(const Census& census,
                                          const Series& specialized,
                                          int first_hp);

// Full equivalence check between the brute-force enumerators and the umbral
// evolution coefficients:
//   - exhaustive generators vs. independent dynamic programs,
//   - counts per half-perimeter vs. specialized series coefficients,
//   - refined counts vs. catalytic coefficients (spot checks).
// Generator depth is capped internally; dynamic programs and series run to
// max_hp.
CrosscheckReport crosscheck(int max_hp);

}  // namespace ferrers
