#include "hexid/claims.hpp"

#include <array>
#include <stdexcept>

#include "hexid/code.hpp"
#include "hexid/lattice.hpp"
#include "hexid/verifier.hpp"

namespace hexid {

namespace {

// One base vertex per parity/sign class.
constexpr std::array<Vertex, 4> kBases{Vertex{0, 0}, Vertex{1, 0}, Vertex{0, 1}, Vertex{1, 1}};

ClaimResult subgraph_bound(int max_k, const DistanceFn& dist) {
    ClaimResult res{1, true, 0};
    const int span = 2 * max_k;
    for (Vertex u : kBases)
        for (int dx = -span; dx <= span; ++dx)
            for (int dy = -span; dy <= span; ++dy) {
                const Vertex v{u.x + dx, u.y + dy};
                ++res.cases;
                if (dist(u, v) < l1_distance(u, v)) res.pass = false;
            }
    return res;
}

ClaimResult taxicab_exactness(int max_k, const DistanceFn& dist) {
    ClaimResult res{2, true, 0};
    const int span = 2 * max_k;
    for (Vertex u : kBases)
        for (int dx = -span; dx <= span; ++dx)
            for (int dy = -span; dy <= span; ++dy) {
                if (std::abs(dx) < std::abs(dy)) continue;
                const Vertex v{u.x + dx, u.y + dy};
                ++res.cases;
                if (dist(u, v) != l1_distance(u, v)) res.pass = false;
            }
    return res;
}

int min_over_line(Vertex v, Line L, const DistanceFn& dist) {
    // Candidates beyond |dx| = 2|dy|+2 are farther than the whole line.
    const int reach = 2 * std::abs(v.y - L.k) + 2;
    int best = dist(v, {v.x - reach, L.k});
    for (int x = v.x - reach + 1; x <= v.x + reach; ++x)
        best = std::min(best, dist(v, {x, L.k}));
    return best;
}

ClaimResult line_distance_one_side(int claim, bool below, int max_k, const DistanceFn& dist) {
    ClaimResult res{claim, true, 0};
    for (int x = -max_k; x <= max_k; ++x)
        for (int y = -max_k; y <= max_k; ++y)
            for (int step = 1; step <= max_k; ++step) {
                const Vertex v{x, y};
                const Line L{below ? y + step : y - step};
                ++res.cases;
                if (line_distance(v, L) != min_over_line(v, L, dist)) res.pass = false;
            }
    return res;
}

ClaimResult even_row_reach(int max_k, const DistanceFn& dist) {
    ClaimResult res{5, true, 0};
    for (Vertex v : kBases)
        for (int k = 1; k <= max_k; ++k)
            for (const auto& row : even_row_targets(v, k))
                for (Vertex w : row.targets) {
                    ++res.cases;
                    if (dist(v, w) > 2 * k) res.pass = false;
                }
    return res;
}

ClaimResult odd_row_reach(int claim, bool even_parity, int max_k, const DistanceFn& dist) {
    ClaimResult res{claim, true, 0};
    for (Vertex v : kBases) {
        if (parity_even(v.x + v.y) != even_parity) continue;
        for (int k = 1; k <= max_k; ++k)
            for (const auto& row : odd_row_targets(v, k))
                for (Vertex w : row.targets) {
                    ++res.cases;
                    if (dist(v, w) > 2 * k + 1) res.pass = false;
                }
    }
    return res;
}

ClaimResult row_segments(int max_r, const DistanceFn& dist) {
    ClaimResult res{8, true, 0};
    for (Vertex v : kBases)
        for (int r = 1; r <= max_r; ++r)
            for (int k = v.y - r; k <= v.y + r; ++k) {
                const Line L{k};
                if (line_distance(v, L) >= r) continue;
                for (Vertex w : ball_row_segment(v, L, r)) {
                    ++res.cases;
                    if (dist(v, w) > r) res.pass = false;
                }
            }
    return res;
}

ClaimResult codeword_spacing(int max_r) {
    ClaimResult res{9, true, 0};
    for (int r = 1; r <= max_r; ++r) {
        const Claim9Result part = check_claim9_detailed(make_params(r));
        res.cases += part.cases;
        if (!part.pass) res.pass = false;
    }
    return res;
}

}  // namespace

std::vector<ClaimResult> run_claim_suites(int max_k, int max_r, DistanceFn dist) {
    if (max_k < 1 || max_r < 1)
        throw std::invalid_argument("run_claim_suites: bounds must be >= 1");
    if (!dist) dist = [](Vertex u, Vertex v) { return distance(u, v); };

    std::vector<ClaimResult> out;
    out.push_back(subgraph_bound(max_k, dist));
    out.push_back(taxicab_exactness(max_k, dist));
    out.push_back(line_distance_one_side(3, true, max_k, dist));
    out.push_back(line_distance_one_side(4, false, max_k, dist));
    out.push_back(even_row_reach(max_k, dist));
    out.push_back(odd_row_reach(6, true, max_k, dist));
    out.push_back(odd_row_reach(7, false, max_k, dist));
    out.push_back(row_segments(max_r, dist));
    out.push_back(codeword_spacing(max_r));
    return out;
}

}  // namespace hexid
