#include "hexid/code.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hexid {

CodeParams make_params(int r) {
    if (r < 1) throw std::invalid_argument("make_params: radius must be >= 1");
    CodeParams p;
    p.r = r;
    const bool even = parity_even(r);
    p.m_prime = even ? 3 * r : 3 * r - 1;
    for (int e = 1; e < r; e += 2) p.excluded.push_back(e);
    p.m_dprime = even ? r : r + 1;
    p.row_spacing = r + 1;
    p.dprime_offset = (r + 1) / 2;
    p.dprime_row_period = 2 * (r + 1);
    p.px = std::lcm(p.m_prime, p.m_dprime);
    p.py = 2 * (r + 1);
    return p;
}

bool on_c_prime_row(int y, const CodeParams& p) {
    return mod_floor(y, p.row_spacing) == 0;
}

bool on_c_dprime_row(int y, const CodeParams& p) {
    return mod_floor(y, p.dprime_row_period) == p.dprime_offset;
}

bool in_c_prime(Vertex v, const CodeParams& p) {
    if (!on_c_prime_row(v.y, p)) return false;
    const int res = mod_floor(v.x, p.m_prime);
    return !std::binary_search(p.excluded.begin(), p.excluded.end(), res);
}

bool in_c_dprime(Vertex v, const CodeParams& p) {
    if (!on_c_dprime_row(v.y, p)) return false;
    if (parity_even(p.r)) {
        // delta is the parity of the row index itself.
        const int delta = mod_floor(v.y, 2);
        return mod_floor(v.x, p.m_dprime) == delta;
    }
    return mod_floor(v.x, p.m_dprime) == 0;
}

bool is_codeword(Vertex v, const CodeParams& p) {
    return in_c_prime(v, p) || in_c_dprime(v, p);
}

std::vector<Vertex> codewords_in_window(const Window& w, const CodeParams& p) {
    w.require_well_formed();
    std::vector<Vertex> out;
    for (int y = w.y0; y <= w.y1; ++y) {
        if (on_c_prime_row(y, p)) {
            for (int x = w.x0; x <= w.x1; ++x)
                if (in_c_prime({x, y}, p)) out.push_back({x, y});
        } else if (on_c_dprime_row(y, p)) {
            for (int x = w.x0; x <= w.x1; ++x)
                if (in_c_dprime({x, y}, p)) out.push_back({x, y});
        }
    }
    return out;
}

}  // namespace hexid
