#pragma once

#include <algorithm>
#include <span>
#include <stdexcept>
#include <vector>

#include "grasscode/subspace.hpp"

namespace grasscode {

// Ferrers diagram embedded in a box of box_rows x box_cols (k x (n-k) when it
// comes from a subspace). Columns are numbered right to left: col[j-1] is the
// number of dots in column j, so col[0] belongs to the rightmost column and
// the counts are non-increasing as the index grows (moving left). Zero
// columns and zero rows are legal; they are what keeps the correspondence
// with identifying vectors bijective.
struct FerrersDiagram {
    int box_rows = 0;
    int box_cols = 0;
    std::vector<int> col;  // col[j-1] = dots in column j (right to left)

    FerrersDiagram() = default;
    FerrersDiagram(int rows, int cols_, std::vector<int> counts)
        : box_rows(rows), box_cols(cols_), col(std::move(counts)) {
        if (rows < 0 || cols_ < 0 || int(col.size()) != cols_)
            throw std::invalid_argument("FerrersDiagram: bad box");
        for (int j = 0; j < cols_; ++j) {
            if (col[std::size_t(j)] < 0 || col[std::size_t(j)] > rows)
                throw std::invalid_argument("FerrersDiagram: column count outside the box");
            if (j > 0 && col[std::size_t(j)] > col[std::size_t(j) - 1])
                throw std::invalid_argument("FerrersDiagram: column counts must not increase leftwards");
        }
    }

    int size() const {
        int s = 0;
        for (int c : col) s += c;
        return s;
    }

    // F_j with the convention F_0 = box height.
    int column(int j) const { return j == 0 ? box_rows : col[std::size_t(j) - 1]; }

    // Conjugate view: dots per row, top to bottom, zero rows included.
    std::vector<int> row_counts() const {
        std::vector<int> rows(std::size_t(box_rows), 0);
        for (int i = 0; i < box_rows; ++i)
            for (int j = 0; j < box_cols; ++j)
                if (col[std::size_t(j)] >= i + 1) ++rows[std::size_t(i)];
        return rows;
    }

    // Column counts in display order (F_{n-k}, ..., F_1), leftmost first.
    std::vector<int> cols_display() const { return {col.rbegin(), col.rend()}; }

    bool operator==(const FerrersDiagram&) const = default;
};

// Diagram of the echelon Ferrers form EF(v). Row i of EF(v) (1-based, top to
// bottom) has n - p_i - (k - i) dots, p_i being the position of the i-th one
// of v; the column counts are the conjugate of those row counts.
inline FerrersDiagram vector_to_diagram(std::span<const std::uint8_t> v, int n, int k) {
    if (int(v.size()) != n) throw std::invalid_argument("vector_to_diagram: length mismatch");
    std::vector<int> pivots;
    for (int c = 0; c < n; ++c)
        if (v[std::size_t(c)]) pivots.push_back(c + 1);
    if (int(pivots.size()) != k) throw std::invalid_argument("vector_to_diagram: weight must be k");

    std::vector<int> rows(static_cast<std::size_t>(k));
    for (int i = 1; i <= k; ++i) rows[std::size_t(i) - 1] = n - pivots[std::size_t(i) - 1] - (k - i);

    std::vector<int> cols(std::size_t(n - k), 0);
    for (int j = 1; j <= n - k; ++j)
        for (int i = 0; i < k; ++i)
            if (rows[std::size_t(i)] >= j) ++cols[std::size_t(j) - 1];
    return FerrersDiagram(k, n - k, std::move(cols));
}

// Inverse of vector_to_diagram: p_i = n - (k - i) - rho_i.
inline std::vector<std::uint8_t> diagram_to_vector(const FerrersDiagram& f, int n, int k) {
    if (f.box_rows != k || f.box_cols != n - k)
        throw std::invalid_argument("diagram_to_vector: box does not match (n, k)");
    auto rows = f.row_counts();
    std::vector<std::uint8_t> v(std::size_t(n), 0);
    for (int i = 1; i <= k; ++i) {
        int p = n - (k - i) - rows[std::size_t(i) - 1];
        v[std::size_t(p) - 1] = 1;
    }
    return v;
}

// Ferrers tableaux form: the RREF values at the dots of EF(v). Entries are
// numbered column by column, columns right to left, top to bottom inside a
// column; entries[0] is x_1. That ordering is what the tableaux-based
// subspace order compares lexicographically.
struct FerrersTableaux {
    FerrersDiagram diagram;
    std::vector<Elem> entries;

    bool operator==(const FerrersTableaux&) const = default;
};

namespace detail {

// Non-pivot storage columns of a length-n identifying vector, right to left;
// element j-1 is the storage column holding diagram column j.
inline std::vector<int> free_columns_rtl(std::span<const std::uint8_t> v) {
    std::vector<int> cols;
    for (int c = int(v.size()) - 1; c >= 0; --c)
        if (!v[std::size_t(c)]) cols.push_back(c);
    return cols;
}

}  // namespace detail

inline FerrersTableaux tableaux_of_subspace(const SubspaceRREF& x) {
    FerrersTableaux t;
    t.diagram = vector_to_diagram(x.idvec, x.n, x.k);
    auto free_cols = detail::free_columns_rtl(x.idvec);
    t.entries.reserve(std::size_t(t.diagram.size()));
    for (int j = 1; j <= t.diagram.box_cols; ++j) {
        int c = free_cols[std::size_t(j) - 1];
        for (int r = 1; r <= t.diagram.column(j); ++r) t.entries.push_back(x.re.at(r - 1, c));
    }
    return t;
}

inline SubspaceRREF subspace_of_tableaux(const FerrersTableaux& t, int n, int k, const FieldTable& field) {
    if (int(t.entries.size()) != t.diagram.size())
        throw std::invalid_argument("subspace_of_tableaux: entry count does not match the diagram");
    for (Elem e : t.entries)
        if (e >= field.q()) throw std::invalid_argument("subspace_of_tableaux: entry out of field range");

    auto v = diagram_to_vector(t.diagram, n, k);
    MatrixGF re(k, n);
    int row = 0;
    for (int c = 0; c < n; ++c)
        if (v[std::size_t(c)]) re.at(row++, c) = 1;

    auto free_cols = detail::free_columns_rtl(v);
    std::size_t pos = 0;
    for (int j = 1; j <= t.diagram.box_cols; ++j) {
        int c = free_cols[std::size_t(j) - 1];
        for (int r = 1; r <= t.diagram.column(j); ++r) re.at(r - 1, c) = t.entries[pos++];
    }
    return subspace_from_rref(std::move(re), n, field.q());
}

// Rows of the tableaux as displayed, left to right, top to bottom. Row i has
// rho_i entries; empty rows come out empty.
inline std::vector<std::vector<Elem>> tableaux_rows(const FerrersTableaux& t) {
    std::vector<std::vector<Elem>> rows(static_cast<std::size_t>(t.diagram.box_rows));
    std::vector<std::size_t> offset(std::size_t(t.diagram.box_cols) + 1, 0);
    for (int j = 1; j <= t.diagram.box_cols; ++j)
        offset[std::size_t(j)] = offset[std::size_t(j) - 1] + std::size_t(t.diagram.column(j));
    auto rho = t.diagram.row_counts();
    for (int i = 1; i <= t.diagram.box_rows; ++i)
        for (int j = rho[std::size_t(i) - 1]; j >= 1; --j)
            rows[std::size_t(i) - 1].push_back(t.entries[offset[std::size_t(j) - 1] + std::size_t(i) - 1]);
    return rows;
}

}  // namespace grasscode
