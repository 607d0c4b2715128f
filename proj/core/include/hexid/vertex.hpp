#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hexid {

// The hex grid in its brick-wall embedding: every integer pair is a vertex.
// A vertex has both horizontal neighbours and exactly one vertical
// neighbour, upward when x+y is even and downward when x+y is odd.
struct Vertex {
    int x = 0;
    int y = 0;

    friend constexpr bool operator==(const Vertex&, const Vertex&) = default;

    // Row-major order (y first); this is the canonical order for every
    // sorted vertex list produced by the library.
    friend constexpr std::strong_ordering operator<=>(const Vertex& a, const Vertex& b) {
        if (auto c = a.y <=> b.y; c != 0) return c;
        return a.x <=> b.x;
    }
};

inline std::string to_string(Vertex v) {
    return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")";
}

// Horizontal line L_k = {(x,k) : x in Z}.
struct Line {
    int k = 0;
};

// Inclusive integer rectangle [x0..x1] x [y0..y1].
struct Window {
    int x0 = 0;
    int x1 = 0;
    int y0 = 0;
    int y1 = 0;

    constexpr bool well_formed() const { return x0 <= x1 && y0 <= y1; }

    constexpr std::int64_t width() const { return std::int64_t{x1} - x0 + 1; }
    constexpr std::int64_t height() const { return std::int64_t{y1} - y0 + 1; }
    constexpr std::int64_t area() const { return width() * height(); }

    void require_well_formed() const {
        if (!well_formed())
            throw std::invalid_argument("malformed window: need x0 <= x1 and y0 <= y1");
    }
};

// Nonnegative residue of a mod m, also for negative a. m > 0.
constexpr int mod_floor(int a, int m) {
    int r = a % m;
    return r < 0 ? r + m : r;
}

// Floor division, exact counterpart of mod_floor.
constexpr int div_floor(int a, int m) {
    return (a - mod_floor(a, m)) / m;
}

constexpr bool parity_even(int n) { return (n & 1) == 0; }

}  // namespace hexid
