#pragma once

#include <utility>
#include <vector>

#include "grasscode/field.hpp"

namespace grasscode {

// Dense matrix over F_q, row-major, columns stored in natural left-to-right
// order. Indexing is 0-based here; the right-to-left column conventions of
// the encodings live in the views that need them, not in storage.
struct MatrixGF {
    int rows = 0;
    int cols = 0;
    std::vector<Elem> a;

    MatrixGF() = default;
    MatrixGF(int r, int c) : rows(r), cols(c), a(std::size_t(r) * std::size_t(c), 0) {}

    Elem& at(int r, int c) { return a[std::size_t(r) * cols + c]; }
    Elem at(int r, int c) const { return a[std::size_t(r) * cols + c]; }

    static MatrixGF identity(int n) {
        MatrixGF m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    bool operator==(const MatrixGF&) const = default;
};

// Gauss-Jordan reduction over F_q. Returns the reduced row echelon form with
// zero rows dropped, plus the rank. Row space is preserved.
inline std::pair<MatrixGF, int> rref(MatrixGF m, const FieldTable& f) {
    int pivot_row = 0;
    for (int c = 0; c < m.cols && pivot_row < m.rows; ++c) {
        int sel = -1;
        for (int r = pivot_row; r < m.rows; ++r) {
            if (m.at(r, c) != 0) {
                sel = r;
                break;
            }
        }
        if (sel < 0) continue;
        if (sel != pivot_row)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(pivot_row, j));
        Elem scale = f.inv(m.at(pivot_row, c));
        for (int j = 0; j < m.cols; ++j) m.at(pivot_row, j) = f.mul(m.at(pivot_row, j), scale);
        for (int r = 0; r < m.rows; ++r) {
            if (r == pivot_row || m.at(r, c) == 0) continue;
            Elem factor = m.at(r, c);
            for (int j = 0; j < m.cols; ++j)
                m.at(r, j) = f.sub(m.at(r, j), f.mul(factor, m.at(pivot_row, j)));
        }
        ++pivot_row;
    }
    MatrixGF out(pivot_row, m.cols);
    for (int r = 0; r < pivot_row; ++r)
        for (int c = 0; c < m.cols; ++c) out.at(r, c) = m.at(r, c);
    return {std::move(out), pivot_row};
}

// Pivot column (0-based) of each row; requires the matrix to be in RREF.
inline std::vector<int> pivot_columns(const MatrixGF& m) {
    std::vector<int> piv;
    piv.reserve(std::size_t(m.rows));
    for (int r = 0; r < m.rows; ++r) {
        int c = 0;
        while (c < m.cols && m.at(r, c) == 0) ++c;
        piv.push_back(c);
    }
    return piv;
}

inline bool is_rref(const MatrixGF& m) {
    int prev = -1;
    for (int r = 0; r < m.rows; ++r) {
        int c = 0;
        while (c < m.cols && m.at(r, c) == 0) ++c;
        if (c == m.cols) return false;   // zero rows are dropped by convention
        if (c <= prev) return false;     // pivots must move right
        if (m.at(r, c) != 1) return false;
        for (int r2 = 0; r2 < m.rows; ++r2)
            if (r2 != r && m.at(r2, c) != 0) return false;
        prev = c;
    }
    return true;
}

inline int rank_of(const MatrixGF& m, const FieldTable& f) { return rref(m, f).second; }

inline MatrixGF stack_rows(const MatrixGF& x, const MatrixGF& y) {
    MatrixGF s(x.rows + y.rows, x.cols);
    for (int r = 0; r < x.rows; ++r)
        for (int c = 0; c < x.cols; ++c) s.at(r, c) = x.at(r, c);
    for (int r = 0; r < y.rows; ++r)
        for (int c = 0; c < y.cols; ++c) s.at(x.rows + r, c) = y.at(r, c);
    return s;
}

}  // namespace grasscode
