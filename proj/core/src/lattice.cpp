#include "hexid/lattice.hpp"

#include <cstdlib>
#include <queue>
#include <stdexcept>
#include <unordered_map>

namespace hexid {

namespace {

constexpr bool vertex_even(Vertex v) { return parity_even(v.x + v.y); }

}  // namespace

std::array<Vertex, 3> neighbors(Vertex v) {
    const int dy = vertex_even(v) ? 1 : -1;
    return {Vertex{v.x - 1, v.y}, Vertex{v.x + 1, v.y}, Vertex{v.x, v.y + dy}};
}

int l1_distance(Vertex u, Vertex v) {
    return std::abs(u.x - v.x) + std::abs(u.y - v.y);
}

int bfs_distance(Vertex u, Vertex v) {
    if (u == v) return 0;

    // Box test in doubled coordinates so the midpoint stays integral.
    const int half_width = std::abs(u.x - v.x) + 2 * std::abs(u.y - v.y) + 2;
    const int cx2 = u.x + v.x;
    const int cy2 = u.y + v.y;
    const auto in_box = [&](Vertex w) {
        return std::abs(2 * w.x - cx2) <= 2 * half_width &&
               std::abs(2 * w.y - cy2) <= 2 * half_width;
    };

    const auto key = [](Vertex w) {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(w.x)) << 32) |
               static_cast<std::uint32_t>(w.y);
    };

    std::unordered_map<std::uint64_t, int> dist;
    std::queue<Vertex> frontier;
    dist.emplace(key(u), 0);
    frontier.push(u);
    while (!frontier.empty()) {
        const Vertex cur = frontier.front();
        frontier.pop();
        const int d = dist.at(key(cur));
        for (Vertex nb : neighbors(cur)) {
            if (!in_box(nb)) continue;
            if (!dist.emplace(key(nb), d + 1).second) continue;
            if (nb == v) return d + 1;
            frontier.push(nb);
        }
    }
    throw std::logic_error("bfs_distance: target not reached inside search box");
}

int distance(Vertex u, Vertex v) {
    const int dx = std::abs(u.x - v.x);
    const int dy = std::abs(u.y - v.y);
    if (dx >= dy) return dx + dy;

    // |dy| > |dx|: the path must climb |dy| rows, and every vertical step
    // starts from a vertex whose own vertical edge points the travel
    // direction. Travelling "with the grain" (upward from an even vertex,
    // downward from an odd one) needs one horizontal step between
    // consecutive vertical steps; against the grain needs one more at the
    // start. The parity of dx+dy decides whether the horizontal budget
    // can hit the target column exactly.
    const bool upward = v.y > u.y;
    const bool with_grain = (upward == vertex_even(u));
    const bool mismatch = !parity_even(dx + dy);
    if (with_grain) return mismatch ? 2 * dy - 1 : 2 * dy;
    return mismatch ? 2 * dy + 1 : 2 * dy;
}

int line_distance(Vertex v, Line L) {
    const int a = v.y;
    const int b = L.k;
    if (a == b) return 0;
    const bool even = vertex_even(v);
    if (a < b) return even ? 2 * (b - a) - 1 : 2 * (b - a);
    return even ? 2 * (a - b) : 2 * (a - b) - 1;
}

std::vector<Vertex> ball(Vertex v, int r) {
    if (r < 1) throw std::invalid_argument("ball: radius must be >= 1");
    std::vector<Vertex> out;
    // d >= 2|dy| - 1 and d >= |dx|, so the ball fits in this box.
    const int dy_max = (r + 1) / 2;
    for (int y = v.y - dy_max; y <= v.y + dy_max; ++y)
        for (int x = v.x - r; x <= v.x + r; ++x)
            if (distance(v, {x, y}) <= r) out.push_back({x, y});
    return out;
}

std::array<LineTargets, 2> even_row_targets(Vertex v, int k) {
    if (k < 1) throw std::invalid_argument("even_row_targets: k must be >= 1");
    LineTargets above{Line{v.y + k}, {}};
    LineTargets below{Line{v.y - k}, {}};
    for (int j = 0; j <= k; ++j) {
        const int x = v.x - k + 2 * j;
        above.targets.push_back({x, above.line.k});
        below.targets.push_back({x, below.line.k});
    }
    return {above, below};
}

std::array<LineTargets, 2> odd_row_targets(Vertex v, int k) {
    if (k < 1) throw std::invalid_argument("odd_row_targets: k must be >= 1");
    // The far row (|dy| = k+1) takes k+1 targets, the near row (|dy| = k)
    // takes k+2; which side is far flips with the parity of x+y.
    const int far_row = vertex_even(v) ? v.y + k + 1 : v.y - k - 1;
    const int near_row = vertex_even(v) ? v.y - k : v.y + k;
    LineTargets far{Line{far_row}, {}};
    LineTargets near{Line{near_row}, {}};
    for (int j = 0; j <= k; ++j) far.targets.push_back({v.x - k + 2 * j, far_row});
    for (int j = 0; j <= k + 1; ++j) near.targets.push_back({v.x - k - 1 + 2 * j, near_row});
    return {far, near};
}

std::vector<Vertex> ball_row_segment(Vertex v, Line L, int r) {
    if (line_distance(v, L) >= r)
        throw std::invalid_argument("ball_row_segment: line_distance(v, L) must be < r");
    const int reach = r - std::abs(v.y - L.k);
    std::vector<Vertex> out;
    out.reserve(2 * reach + 1);
    for (int j = 0; j <= 2 * reach; ++j) out.push_back({v.x - reach + j, L.k});
    return out;
}

}  // namespace hexid
