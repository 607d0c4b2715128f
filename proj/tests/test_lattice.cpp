#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "hexid/lattice.hpp"

using namespace hexid;

namespace {

const std::vector<Vertex> kParityBases{{0, 0}, {1, 0}, {0, 1}, {1, 1}};

// Independent ball oracle: plain layered BFS over neighbors(), no use of
// the closed-form distance.
std::vector<Vertex> bfs_ball(Vertex v, int r) {
    std::set<Vertex> seen{v};
    std::vector<Vertex> frontier{v};
    for (int depth = 0; depth < r; ++depth) {
        std::vector<Vertex> next;
        for (Vertex cur : frontier)
            for (Vertex nb : neighbors(cur))
                if (seen.insert(nb).second) next.push_back(nb);
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

}  // namespace

TEST_CASE("neighbors: fixed order, parity decides the vertical edge") {
    CHECK(neighbors({0, 0}) == std::array<Vertex, 3>{Vertex{-1, 0}, Vertex{1, 0}, Vertex{0, 1}});
    CHECK(neighbors({1, 0}) == std::array<Vertex, 3>{Vertex{0, 0}, Vertex{2, 0}, Vertex{1, -1}});
    CHECK(neighbors({-3, 5}) == std::array<Vertex, 3>{Vertex{-4, 5}, Vertex{-2, 5}, Vertex{-3, 6}});
}

TEST_CASE("l1_distance") {
    CHECK(l1_distance({0, 0}, {3, 2}) == 5);
    CHECK(l1_distance({0, 0}, {0, 0}) == 0);
    CHECK(l1_distance({-1, 4}, {2, -1}) == 8);
}

TEST_CASE("bfs_distance: reference values") {
    CHECK(bfs_distance({0, 0}, {1, 0}) == 1);
    CHECK(bfs_distance({0, 0}, {3, 2}) == 5);
    // (0,0)(0,1)(1,1)(1,2)(0,2)(0,3) is a shortest path.
    CHECK(bfs_distance({0, 0}, {0, 3}) == 5);
    CHECK(bfs_distance({0, 0}, {0, 0}) == 0);
}

TEST_CASE("distance: closed form on both regimes") {
    CHECK(distance({0, 0}, {5, -5}) == 10);
    CHECK(distance({0, 0}, {0, 3}) == 5);
    // Climbing against the grain from an odd vertex costs 2|dy|+1 when
    // dx+dy is odd; the line L_3 itself is closer (at (0,3) and (2,3)).
    CHECK(distance({1, 0}, {1, 3}) == 7);
    CHECK(distance({1, 0}, {1, 3}) == bfs_distance({1, 0}, {1, 3}));
    CHECK(distance({1, 0}, {0, 3}) == 6);
    CHECK(distance({1, 0}, {2, 3}) == 6);
}

TEST_CASE("distance equals bfs_distance on every parity/sign class") {
    for (Vertex u : kParityBases)
        for (int dx = -12; dx <= 12; ++dx)
            for (int dy = -12; dy <= 12; ++dy) {
                const Vertex v{u.x + dx, u.y + dy};
                CAPTURE(u.x);
                CAPTURE(u.y);
                CAPTURE(dx);
                CAPTURE(dy);
                REQUIRE(distance(u, v) == bfs_distance(u, v));
            }
}

TEST_CASE("distance: subgraph bound and taxicab exactness, all |coords| <= 20") {
    long bound_violations = 0;
    long taxicab_violations = 0;
    long pairs = 0;
    for (int ux = -20; ux <= 20; ++ux)
        for (int uy = -20; uy <= 20; ++uy)
            for (int vx = -20; vx <= 20; ++vx)
                for (int vy = -20; vy <= 20; ++vy) {
                    const Vertex u{ux, uy};
                    const Vertex v{vx, vy};
                    const int d = distance(u, v);
                    ++pairs;
                    if (d < l1_distance(u, v)) ++bound_violations;
                    if (std::abs(ux - vx) >= std::abs(uy - vy) && d != l1_distance(u, v))
                        ++taxicab_violations;
                }
    CHECK(pairs == 41L * 41 * 41 * 41);
    CHECK(bound_violations == 0);
    CHECK(taxicab_violations == 0);
}

TEST_CASE("distance: metric sanity") {
    std::vector<Vertex> sample;
    for (int x = -6; x <= 6; x += 3)
        for (int y = -6; y <= 6; y += 3) sample.push_back({x, y});
    for (Vertex a : sample)
        for (Vertex b : sample) {
            REQUIRE(distance(a, b) == distance(b, a));
            REQUIRE((distance(a, b) == 0) == (a == b));
            for (Vertex c : sample) REQUIRE(distance(a, c) <= distance(a, b) + distance(b, c));
        }
}

TEST_CASE("line_distance: parity formulas") {
    CHECK(line_distance({0, 0}, Line{3}) == 5);
    CHECK(line_distance({1, 0}, Line{3}) == 6);
    CHECK(line_distance({0, 4}, Line{1}) == 6);
    CHECK(line_distance({5, 2}, Line{2}) == 0);
}

TEST_CASE("line_distance equals the minimum over nearby line vertices") {
    for (int x = -12; x <= 12; ++x)
        for (int y = -12; y <= 12; ++y)
            for (int k = -12; k <= 12; ++k) {
                const Vertex v{x, y};
                const int reach = 2 * std::abs(y - k) + 1;
                int best = distance(v, {x - reach, k});
                for (int wx = x - reach + 1; wx <= x + reach; ++wx)
                    best = std::min(best, distance(v, {wx, k}));
                REQUIRE(line_distance(v, Line{k}) == best);
            }
}

TEST_CASE("ball: radius 1 and 2 around the origin") {
    CHECK(ball({0, 0}, 1) ==
          std::vector<Vertex>{{-1, 0}, {0, 0}, {1, 0}, {0, 1}});
    CHECK(ball({0, 0}, 2).size() == 10);
}

TEST_CASE("ball matches the BFS oracle") {
    for (Vertex v : kParityBases)
        for (int r = 1; r <= 5; ++r) {
            auto expect = bfs_ball(v, r);
            std::sort(expect.begin(), expect.end());
            REQUIRE(ball(v, r) == expect);
        }
}

TEST_CASE("ball never reaches the line r+1 rows away") {
    for (int r = 1; r <= 10; ++r)
        for (Vertex w : ball({0, 0}, r)) REQUIRE(w.y != r + 1);
}

TEST_CASE("ball rejects nonpositive radius") {
    CHECK_THROWS_AS(ball({0, 0}, 0), std::invalid_argument);
}

TEST_CASE("even_row_targets: rows +-k") {
    const auto t1 = even_row_targets({0, 0}, 1);
    CHECK(t1[0].line.k == 1);
    CHECK(t1[0].targets == std::vector<Vertex>{{-1, 1}, {1, 1}});
    CHECK(t1[1].line.k == -1);
    CHECK(t1[1].targets == std::vector<Vertex>{{-1, -1}, {1, -1}});

    const auto t2 = even_row_targets({2, 3}, 2);
    CHECK(t2[0].targets == std::vector<Vertex>{{0, 5}, {2, 5}, {4, 5}});
}

TEST_CASE("odd_row_targets: parity dispatch") {
    const auto even_base = odd_row_targets({0, 0}, 1);
    CHECK(even_base[0].targets == std::vector<Vertex>{{-1, 2}, {1, 2}});
    CHECK(even_base[1].targets == std::vector<Vertex>{{-2, -1}, {0, -1}, {2, -1}});

    const auto odd_base = odd_row_targets({1, 0}, 1);
    CHECK(odd_base[0].targets == std::vector<Vertex>{{0, -2}, {2, -2}});
    CHECK(odd_base[1].targets == std::vector<Vertex>{{-1, 1}, {1, 1}, {3, 1}});
}

TEST_CASE("row targets stay inside the stated balls (BFS-checked)") {
    for (Vertex v : kParityBases)
        for (int k = 1; k <= 6; ++k) {
            for (const auto& row : even_row_targets(v, k))
                for (Vertex w : row.targets) REQUIRE(bfs_distance(v, w) <= 2 * k);
            for (const auto& row : odd_row_targets(v, k))
                for (Vertex w : row.targets) REQUIRE(bfs_distance(v, w) <= 2 * k + 1);
        }
}

TEST_CASE("row targets stay inside the stated balls (closed form, k <= 10)") {
    for (Vertex v : kParityBases)
        for (int k = 1; k <= 10; ++k) {
            auto b_even = ball(v, 2 * k);
            auto b_odd = ball(v, 2 * k + 1);
            for (const auto& row : even_row_targets(v, k))
                for (Vertex w : row.targets)
                    REQUIRE(std::binary_search(b_even.begin(), b_even.end(), w));
            for (const auto& row : odd_row_targets(v, k))
                for (Vertex w : row.targets)
                    REQUIRE(std::binary_search(b_odd.begin(), b_odd.end(), w));
        }
}

TEST_CASE("ball_row_segment: shape and membership") {
    const auto seg0 = ball_row_segment({0, 0}, Line{0}, 3);
    REQUIRE(seg0.size() == 7);
    CHECK(seg0.front() == Vertex{-3, 0});
    CHECK(seg0.back() == Vertex{3, 0});

    const auto seg2 = ball_row_segment({0, 0}, Line{2}, 5);
    REQUIRE(seg2.size() == 7);
    CHECK(seg2.front() == Vertex{-3, 2});
    CHECK(seg2.back() == Vertex{3, 2});

    const auto b = ball({4, 1}, 4);
    for (Vertex w : ball_row_segment({4, 1}, Line{0}, 4))
        CHECK(std::binary_search(b.begin(), b.end(), w));
}

TEST_CASE("ball_row_segment: precondition and exhaustive containment") {
    CHECK_THROWS_AS(ball_row_segment({0, 0}, Line{3}, 5), std::invalid_argument);
    CHECK_THROWS_AS(ball_row_segment({0, 0}, Line{0}, 0), std::invalid_argument);

    long violations = 0;
    for (int vx = -10; vx <= 10; ++vx)
        for (int vy = -10; vy <= 10; ++vy)
            for (int r = 1; r <= 10; ++r) {
                const Vertex v{vx, vy};
                const auto b = ball(v, r);
                for (int k = vy - r; k <= vy + r; ++k) {
                    if (line_distance(v, Line{k}) >= r) continue;
                    for (Vertex w : ball_row_segment(v, Line{k}, r))
                        if (!std::binary_search(b.begin(), b.end(), w)) ++violations;
                }
            }
    CHECK(violations == 0);
}
