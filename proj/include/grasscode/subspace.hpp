#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "grasscode/matrix.hpp"

namespace grasscode {

// Canonical representation of a k-dimensional subspace of F_q^n: the unique
// generator matrix in reduced row echelon form, plus the identifying vector
// (the weight-k binary vector marking the pivot columns, left to right).
struct SubspaceRREF {
    int n = 0;
    int k = 0;
    int q = 0;
    MatrixGF re;
    std::vector<std::uint8_t> idvec;

    bool operator==(const SubspaceRREF&) const = default;
};

inline std::vector<std::uint8_t> identifying_vector(const MatrixGF& rref_matrix) {
    std::vector<std::uint8_t> v(std::size_t(rref_matrix.cols), 0);
    for (int c : pivot_columns(rref_matrix)) v[std::size_t(c)] = 1;
    return v;
}

inline std::vector<std::uint8_t> identifying_vector(const SubspaceRREF& x) { return x.idvec; }

// Canonicalize any spanning set: rows may be dependent, k is the computed rank.
inline SubspaceRREF canonical_subspace(const MatrixGF& generators, const FieldTable& f) {
    auto [re, rank] = rref(generators, f);
    SubspaceRREF x;
    x.n = generators.cols;
    x.k = rank;
    x.q = f.q();
    x.idvec = identifying_vector(re);
    x.re = std::move(re);
    return x;
}

// Builds a SubspaceRREF from a matrix already known (and verified) to be in RREF.
inline SubspaceRREF subspace_from_rref(MatrixGF re, int n, int q) {
    if (re.cols != n || !is_rref(re))
        throw std::invalid_argument("subspace_from_rref: matrix is not a reduced row echelon form");
    SubspaceRREF x;
    x.n = n;
    x.k = re.rows;
    x.q = q;
    x.idvec = identifying_vector(re);
    x.re = std::move(re);
    return x;
}

// The (k+1) x n extended representation: identifying vector stacked on top of
// the RREF. The encodings read its columns right to left; column j (1-based,
// j=1 rightmost) is storage column n-j. Within a column the identifying bit
// is most significant, then RREF rows top to bottom.
struct ExtendedRep {
    const SubspaceRREF* x;

    explicit ExtendedRep(const SubspaceRREF& s) : x(&s) {}

    int height() const { return x->k + 1; }
    int width() const { return x->n; }

    // Entry r of column j, r = 0 is the identifying bit, r = 1..k the RREF rows.
    Elem entry(int j, int r) const {
        int c = x->n - j;
        return r == 0 ? Elem(x->idvec[std::size_t(c)]) : x->re.at(r - 1, c);
    }
};

// Subspace distance dim X + dim Y - 2 dim(X intersect Y), computed as
// 2 rank(stack) - dim X - dim Y.
inline int subspace_distance(const SubspaceRREF& x, const SubspaceRREF& y, const FieldTable& f) {
    if (x.n != y.n || x.q != y.q || x.q != f.q())
        throw std::invalid_argument("subspace_distance: ambient parameters differ");
    return 2 * rank_of(stack_rows(x.re, y.re), f) - x.k - y.k;
}

}  // namespace grasscode
