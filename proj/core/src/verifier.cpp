#include "hexid/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <stdexcept>
#include <thread>

#include "hexid/lattice.hpp"

namespace hexid {

PeriodicCode full_code(const CodeParams& p) {
    return {p.r, p.px, p.py, [p](Vertex v) { return is_codeword(v, p); }};
}

PeriodicCode c_prime_only(const CodeParams& p) {
    return {p.r, p.px, p.py, [p](Vertex v) { return in_c_prime(v, p); }};
}

std::vector<Vertex> identifying_set(Vertex v, const PeriodicCode& code) {
    const int r = code.r;
    std::vector<Vertex> out;
    // Codewords at |dy| > (r+1)/2 are out of reach: d >= 2|dy| - 1 > r.
    const int dy_max = (r + 1) / 2;
    for (int y = v.y - dy_max; y <= v.y + dy_max; ++y)
        for (int x = v.x - r; x <= v.x + r; ++x)
            if (code.contains({x, y}) && distance(v, {x, y}) <= r) out.push_back({x, y});
    return out;
}

std::vector<Vertex> identifying_set(Vertex v, const CodeParams& p) {
    return identifying_set(v, full_code(p));
}

namespace {

// Offsets (dx,dy) of the ball of radius 2r around a vertex of the given
// parity, restricted to row-major-greater positions. Scanning only these
// halves the pair work; the skipped orientation of each pair is found
// when the other endpoint (or its translate into the domain) anchors.
std::vector<std::pair<int, int>> pair_offsets(bool even_parity, int r) {
    const Vertex base = even_parity ? Vertex{0, 0} : Vertex{1, 0};
    std::vector<std::pair<int, int>> offs;
    for (Vertex w : ball(base, 2 * r)) {
        const int dx = w.x - base.x;
        const int dy = w.y - base.y;
        if (dy > 0 || (dy == 0 && dx > 0)) offs.emplace_back(dx, dy);
    }
    return offs;
}

// Per-row partial result; merged in row order for a deterministic report.
struct RowResult {
    std::vector<Vertex> coverage;
    std::vector<std::pair<Vertex, Vertex>> confusion;
    std::uint64_t coverage_count = 0;
    std::uint64_t confusion_count = 0;
    std::uint64_t pairs = 0;
};

void run_chunked(unsigned workers, int chunks, const std::function<void(int)>& work) {
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, static_cast<unsigned>(chunks));
    if (workers <= 1) {
        for (int c = 0; c < chunks; ++c) work(c);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t)
        pool.emplace_back([&] {
            for (int c = next.fetch_add(1); c < chunks; c = next.fetch_add(1)) work(c);
        });
    for (auto& th : pool) th.join();
}

}  // namespace

VerificationReport verify(const PeriodicCode& code, Vertex anchor, unsigned workers) {
    if (code.r < 1) throw std::invalid_argument("verify: radius must be >= 1");
    if (code.px < 1 || code.py < 1 || !parity_even(code.px) || !parity_even(code.py))
        throw std::invalid_argument("verify: periods must be positive and even");

    const int r = code.r;
    const int px = code.px;
    const int py = code.py;

    // Identifying sets are needed for every possible partner of a domain
    // vertex: |dx| <= 2r and |dy| <= r around the domain.
    const int x_lo = anchor.x - 2 * r;
    const int x_hi = anchor.x + px - 1 + 2 * r;
    const int y_lo = anchor.y - r;
    const int y_hi = anchor.y + py - 1 + r;
    const int width = x_hi - x_lo + 1;
    const int height = y_hi - y_lo + 1;
    const auto slot = [&](int x, int y) {
        return static_cast<std::size_t>(y - y_lo) * width + static_cast<std::size_t>(x - x_lo);
    };

    std::vector<std::vector<Vertex>> sets(static_cast<std::size_t>(width) * height);
    run_chunked(workers, height, [&](int row) {
        const int y = y_lo + row;
        for (int x = x_lo; x <= x_hi; ++x) sets[slot(x, y)] = identifying_set({x, y}, code);
    });

    const auto offs_even = pair_offsets(true, r);
    const auto offs_odd = pair_offsets(false, r);

    std::vector<RowResult> rows(py);
    run_chunked(workers, py, [&](int row) {
        RowResult& res = rows[row];
        const int y = anchor.y + row;
        for (int x = anchor.x; x < anchor.x + px; ++x) {
            const Vertex u{x, y};
            const auto& iu = sets[slot(x, y)];
            if (iu.empty()) {
                ++res.coverage_count;
                if (res.coverage.size() < kMaxCounterexamples) res.coverage.push_back(u);
            }
            const auto& offs = parity_even(x + y) ? offs_even : offs_odd;
            for (const auto& [dx, dy] : offs) {
                ++res.pairs;
                if (iu == sets[slot(x + dx, y + dy)]) {
                    ++res.confusion_count;
                    if (res.confusion.size() < kMaxCounterexamples)
                        res.confusion.emplace_back(u, Vertex{x + dx, y + dy});
                }
            }
        }
    });

    VerificationReport report;
    report.vertices_checked = static_cast<std::uint64_t>(px) * py;
    for (const RowResult& res : rows) {
        report.coverage_failure_count += res.coverage_count;
        report.confusion_pair_count += res.confusion_count;
        report.pairs_checked += res.pairs;
        for (Vertex v : res.coverage)
            if (report.coverage_failures.size() < kMaxCounterexamples)
                report.coverage_failures.push_back(v);
        for (const auto& pr : res.confusion)
            if (report.confusion_pairs.size() < kMaxCounterexamples)
                report.confusion_pairs.push_back(pr);
    }
    report.valid = report.coverage_failure_count == 0 && report.confusion_pair_count == 0;
    return report;
}

VerificationReport verify(const CodeParams& p) {
    return verify(full_code(p));
}

Claim9Result check_claim9_detailed(const CodeParams& p) {
    const int r = p.r;
    Claim9Result res{true, 0};

    // Part 1: adjacent vertices on the row.
    for (int x = 0; x < p.m_prime; ++x) {
        ++res.cases;
        if (!in_c_prime({x, 0}, p) && !in_c_prime({x + 1, 0}, p)) res.pass = false;
    }
    // Part 2: vertices at same-row distance r..2r+1 (on a row this is |dx|).
    for (int x = 0; x < p.m_prime; ++x)
        for (int t = r; t <= 2 * r + 1; ++t) {
            ++res.cases;
            if (!in_c_prime({x, 0}, p) && !in_c_prime({x + t, 0}, p)) res.pass = false;
        }
    // Part 3: every stride-2 run of length ceil((r+1)/2)+1 holds a codeword.
    const int k_max = (r + 2) / 2;
    for (int x = 0; x < p.m_prime; ++x) {
        ++res.cases;
        bool found = false;
        for (int k = 0; k <= k_max && !found; ++k) found = is_codeword({x + 2 * k, 0}, p);
        if (!found) res.pass = false;
    }
    return res;
}

bool check_claim9(const CodeParams& p) {
    return check_claim9_detailed(p).pass;
}

bool check_nearby_uniqueness(const CodeParams& p) {
    const PeriodicCode code = full_code(p);
    for (int y = 0; y < p.py; ++y)
        for (int x = 0; x < p.px; ++x) {
            std::set<int> lines;
            for (Vertex c : identifying_set({x, y}, code))
                if (mod_floor(c.y, p.row_spacing) == 0) lines.insert(div_floor(c.y, p.row_spacing));
            if (lines.size() != 1) return false;
        }
    return true;
}

}  // namespace hexid
