#pragma once

#include <string>
#include <utility>

#include "hexid/code.hpp"
#include "hexid/rational.hpp"

namespace hexid {

// Codewords in one fundamental domain divided by its size px*py. This is
// the ground truth every closed form is measured against.
Rational density_exact(const CodeParams& p);

// The closed-form densities (d(C'), d(C'')) of the two families:
//   even r:  5/(6(r+1))            and  1/(2r(r+1))
//   odd r:   (5r-1)/((6r-2)(r+1))  and  1/(2(r+1)^2)
std::pair<Rational, Rational> density_components(const CodeParams& p);

// The published closed form for the total density:
//   even r:  (5r+3)/(6r(r+1))
//   odd r:   (5r^2+10r-3)/((6r-2)(r+1)^2)
// For odd r this does NOT match the construction; see audit().
Rational density_theorem(int r);

// |C n Q_m| / (2m+1)^2 over the centred square Q_m = [-m..m]^2. m >= 0.
Rational density_empirical(const CodeParams& p, int m);

// Reconciles the direct count with every closed form in circulation. For
// odd r three different numerators exist (5r^2+10r-3 stated with the
// result, 5r^2+7r-3 in the summary tables, 5r^2+7r-2 from summing the
// component densities); the notes record which of them the construction
// actually achieves instead of asserting any one of them.
struct DensityAudit {
    int r = 0;
    Rational exact;           // direct count over the fundamental domain
    Rational component_sum;   // d(C') + d(C'')
    Rational theorem_value;   // published closed form
    bool agrees_theorem = false;
    std::string notes;
};

DensityAudit audit(int r);  // r >= 2

// One TSV row: r, exact fraction, 4-place decimal, theorem match, note.
// with_literature appends two reference columns (prior published lower
// bound and previous best upper bound, where known).
std::string density_table_row(int r, bool with_literature = false);

// Newline-terminated rows for r_min..r_max.
std::string density_table(int r_min, int r_max, bool with_literature = false);

}  // namespace hexid
