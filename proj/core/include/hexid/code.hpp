#pragma once

#include <vector>

#include "hexid/vertex.hpp"

namespace hexid {

// All construction constants derived from the radius r. The code is the
// union of two disjoint periodic families:
//
//   C'  lives on every row y = n*(r+1) and keeps every column except a
//       block of odd residues mod m_prime;
//   C'' lives on rows y = dprime_offset + 2n*(r+1) and keeps one column
//       residue class mod m_dprime.
//
// px and py span one fundamental domain of the translation lattice. Both
// are even, so translating by (px,0) or (0,py) preserves the parity rule
// that orients vertical edges, i.e. both translations are graph
// automorphisms carrying the code onto itself.
struct CodeParams {
    int r = 0;
    int m_prime = 0;              // column modulus of C': 3r (r even), 3r-1 (r odd)
    std::vector<int> excluded;    // residues removed from C' rows: odd numbers below r
    int m_dprime = 0;             // column modulus of C'': r (r even), r+1 (r odd)
    int row_spacing = 0;          // r+1, vertical spacing of C' rows
    int dprime_offset = 0;        // floor((r+1)/2), first C'' row
    int dprime_row_period = 0;    // 2(r+1), vertical spacing of C'' rows
    int px = 0;                   // horizontal period, lcm(m_prime, m_dprime)
    int py = 0;                   // vertical period, 2(r+1)
};

// Derives every field from r. Rejects r < 1.
CodeParams make_params(int r);

// Row predicates shared by membership tests, window scans and rendering.
bool on_c_prime_row(int y, const CodeParams& p);
bool on_c_dprime_row(int y, const CodeParams& p);

bool in_c_prime(Vertex v, const CodeParams& p);
bool in_c_dprime(Vertex v, const CodeParams& p);

// Membership in C = C' u C''. The two families occupy disjoint rows, so
// at most one predicate holds.
bool is_codeword(Vertex v, const CodeParams& p);

// All codewords inside the window, row-major. Scans only the rows that
// can carry codewords.
std::vector<Vertex> codewords_in_window(const Window& w, const CodeParams& p);

}  // namespace hexid
