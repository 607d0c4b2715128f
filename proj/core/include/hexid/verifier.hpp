#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "hexid/code.hpp"
#include "hexid/vertex.hpp"

namespace hexid {

// A periodic vertex set on the hex grid: a membership predicate together
// with its translation periods. px and py must be even so that the
// translations (px,0) and (0,py) are graph automorphisms.
struct PeriodicCode {
    int r = 0;
    int px = 0;
    int py = 0;
    std::function<bool(Vertex)> contains;
};

// The constructed code C = C' u C''.
PeriodicCode full_code(const CodeParams& p);

// Control variant with the C'' rows suppressed. Wraps the membership
// predicate; the params themselves are untouched.
PeriodicCode c_prime_only(const CodeParams& p);

// I_r(v): the codewords within graph distance r of v, row-major sorted.
std::vector<Vertex> identifying_set(Vertex v, const CodeParams& p);
std::vector<Vertex> identifying_set(Vertex v, const PeriodicCode& code);

inline constexpr std::size_t kMaxCounterexamples = 100;

// Outcome of the finite identifying-property check. The counterexample
// lists are capped at kMaxCounterexamples entries; the *_count fields are
// always exact.
struct VerificationReport {
    bool valid = false;
    std::vector<Vertex> coverage_failures;                    // I_r(v) empty
    std::vector<std::pair<Vertex, Vertex>> confusion_pairs;   // equal identifying sets
    std::uint64_t coverage_failure_count = 0;
    std::uint64_t confusion_pair_count = 0;
    std::uint64_t vertices_checked = 0;
    std::uint64_t pairs_checked = 0;
};

// Decides whether the code identifies every vertex of the infinite grid,
// by an exhaustive check over one fundamental domain
// D = [ax..ax+px-1] x [ay..ay+py-1]:
//
//   (a) coverage: I_r(u) is nonempty for every u in D;
//   (b) distinguishability: I_r(u) != I_r(v) for every u in D and every
//       v != u with d(u,v) <= 2r.
//
// This finite check is equivalent to the infinite one. Translations by
// (px,0) and (0,py) are graph automorphisms preserving the code (both
// periods are even, so the parity rule orienting vertical edges is kept),
// hence any violating vertex or pair can be translated so its first
// member lands in D. And two vertices with equal nonempty identifying
// sets share a codeword c, so d(u,v) <= d(u,c) + d(c,v) <= 2r: searching
// partners within distance 2r misses nothing, given that coverage is
// checked first.
//
// Work is distributed over worker threads (hardware concurrency when
// workers == 0); the report is identical regardless of worker count.
VerificationReport verify(const PeriodicCode& code, Vertex anchor = {0, 0},
                          unsigned workers = 0);
VerificationReport verify(const CodeParams& p);

struct Claim9Result {
    bool pass = false;
    std::uint64_t cases = 0;
};

// Codeword-spacing facts on a C' row, checked exhaustively over one
// horizontal period of row 0:
//   1. of two adjacent vertices, at least one is in C';
//   2. of two vertices at distance d with r <= d <= 2r+1, at least one
//      is in C';
//   3. for any x, the vertices {(x+2k, 0) : k=0..ceil((r+1)/2)} contain
//      a codeword.
Claim9Result check_claim9_detailed(const CodeParams& p);
bool check_claim9(const CodeParams& p);

// Every vertex of the fundamental domain has codewords of exactly one
// C' row in its identifying set.
bool check_nearby_uniqueness(const CodeParams& p);

}  // namespace hexid
