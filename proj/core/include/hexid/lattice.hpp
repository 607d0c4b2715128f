#pragma once

#include <array>
#include <vector>

#include "hexid/vertex.hpp"

namespace hexid {

// The three neighbours of v, in fixed order [left, right, vertical].
// The vertical neighbour is (x, y+1) when x+y is even, (x, y-1) otherwise.
std::array<Vertex, 3> neighbors(Vertex v);

// |dx| + |dy|; the distance the two vertices would have in the square grid,
// and a lower bound on their hex-grid distance.
int l1_distance(Vertex u, Vertex v);

// Reference oracle for the graph distance: breadth-first search restricted
// to the L-infinity box centred midway between u and v with half-width
// |dx| + 2|dy| + 2. The box is wide enough that some shortest path lies
// entirely inside it.
int bfs_distance(Vertex u, Vertex v);

// Closed-form graph distance. Equals l1_distance when |dx| >= |dy|;
// otherwise 2|dy| plus a correction in {-1,0,+1} decided by parity
// (see lattice.cpp). Agrees with bfs_distance everywhere.
int distance(Vertex u, Vertex v);

// Distance from v to the nearest vertex of the horizontal line L.
int line_distance(Vertex v, Line L);

// All vertices within graph distance r of v, in row-major order. r >= 1.
std::vector<Vertex> ball(Vertex v, int r);

// A row of target vertices on one horizontal line.
struct LineTargets {
    Line line;
    std::vector<Vertex> targets;
};

// Targets reachable from v by paths of length 2k: the vertices
// {(x-k+2j, y+-k) : j=0..k}, returned as [row y+k, row y-k]. k >= 1.
std::array<LineTargets, 2> even_row_targets(Vertex v, int k);

// Targets reachable from v by paths of length 2k+1. The two rows depend on
// the parity of x+y; the first list has k+1 targets, the second k+2. k >= 1.
std::array<LineTargets, 2> odd_row_targets(Vertex v, int k);

// The contiguous segment {(x-(r-|y-k|)+j, k) : j=0..2(r-|y-k|)} of L,
// all of which lie in ball(v, r). Requires line_distance(v, L) < r.
std::vector<Vertex> ball_row_segment(Vertex v, Line L, int r);

}  // namespace hexid
