#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "grasscode/subspace.hpp"

namespace grasscode {

// Subspace text format: a header line "n k q", then k lines of n whitespace-
// separated integers giving a generator matrix (any basis, left to right).
struct SubspaceTextInput {
    int n = 0, k = 0, q = 0;
    MatrixGF mat;
};

inline SubspaceTextInput read_subspace_text(std::istream& in) {
    SubspaceTextInput s;
    if (!(in >> s.n >> s.k >> s.q)) throw std::invalid_argument("subspace text: missing \"n k q\" header");
    if (s.n < 0 || s.k < 0 || s.k > s.n) throw std::invalid_argument("subspace text: need 0 <= k <= n");
    if (s.q < 2 || s.q > 256) throw std::out_of_range("subspace text: q out of range");
    s.mat = MatrixGF(s.k, s.n);
    for (int r = 0; r < s.k; ++r)
        for (int c = 0; c < s.n; ++c) {
            int v;
            if (!(in >> v)) throw std::invalid_argument("subspace text: truncated matrix");
            if (v < 0 || v >= s.q) throw std::invalid_argument("subspace text: entry out of field range");
            s.mat.at(r, c) = Elem(v);
        }
    return s;
}

// Canonicalizes the parsed generators; the declared k must match the rank.
inline SubspaceRREF canonicalize_input(const SubspaceTextInput& s, const FieldTable& field) {
    SubspaceRREF x = canonical_subspace(s.mat, field);
    if (x.k != s.k) throw std::invalid_argument("subspace text: rows do not have the declared rank");
    return x;
}

inline void write_subspace_text(std::ostream& out, const SubspaceRREF& x) {
    out << x.n << ' ' << x.k << ' ' << x.q << '\n';
    for (int r = 0; r < x.k; ++r) {
        for (int c = 0; c < x.n; ++c) out << (c ? " " : "") << int(x.re.at(r, c));
        out << '\n';
    }
}

inline std::string format_subspace(const SubspaceRREF& x) {
    std::ostringstream out;
    write_subspace_text(out, x);
    return out.str();
}

}  // namespace grasscode
