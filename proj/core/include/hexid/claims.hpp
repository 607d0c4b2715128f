#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "hexid/vertex.hpp"

namespace hexid {

struct ClaimResult {
    int claim = 0;
    bool pass = false;
    std::uint64_t cases = 0;
};

using DistanceFn = std::function<int(Vertex, Vertex)>;

// Executable versions of the nine distance and spacing facts the code's
// correctness rests on, numbered 1..9:
//   1 subgraph bound          d >= |dx| + |dy|
//   2 taxicab exactness       d == |dx| + |dy| when |dx| >= |dy|
//   3 vertex-to-line, below   parity formula for y < k
//   4 vertex-to-line, above   parity formula for y > k
//   5 even-length row targets reachable within 2k
//   6 odd-length row targets, x+y even, within 2k+1
//   7 odd-length row targets, x+y odd, within 2k+1
//   8 in-ball row segments
//   9 codeword spacing on a C' row (all three parts)
//
// max_k bounds the offsets and path-family lengths, max_r the radii of
// claims 8 and 9. Claims 1-8 evaluate distances through dist, which
// defaults to the closed form; tests inject broken functions here to
// prove the suites can fail.
std::vector<ClaimResult> run_claim_suites(int max_k, int max_r, DistanceFn dist = {});

}  // namespace hexid
