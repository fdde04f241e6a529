#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

#include "grasscode/grassmann.hpp"

namespace grasscode {

namespace detail {

inline void require_member(const SubspaceRREF& x, const GrassmannParams& params, const char* who) {
    if (x.n != params.n() || x.k != params.k() || x.q != params.q())
        throw std::invalid_argument(std::string(who) + ": subspace does not match the parameters");
}

// Integer value of the top `rows` entries of RREF column `col`, top row most
// significant. With rows = k this is the column value used by the extended
// representation; with rows = k - w it is that value divided by q^w.
inline BigCount column_value(const MatrixGF& re, int col, int rows, const GrassmannParams& params) {
    BigCount v = 0;
    for (int r = 0; r < rows; ++r) v = v * params.q() + re.at(r, col);
    return v;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Tableaux order (diagram first, then entry sequence).
// ---------------------------------------------------------------------------

inline std::strong_ordering compare_tableaux_order(const SubspaceRREF& x, const SubspaceRREF& y,
                                                   const GrassmannParams& params) {
    detail::require_member(x, params, "compare_tableaux_order");
    detail::require_member(y, params, "compare_tableaux_order");
    auto tx = tableaux_of_subspace(x), ty = tableaux_of_subspace(y);
    auto diagram_order = compare_ferrers(tx.diagram, ty.diagram);
    if (diagram_order != std::strong_ordering::equal) return diagram_order;
    return tx.entries <=> ty.entries;
}

// Index of X in the tableaux order: all larger diagram classes first, then
// the diagram's rank within its size class, then the entry sequence read as a
// base-q integer with x_1 most significant.
inline BigIndex encode_ferrers(const SubspaceRREF& x, const GrassmannParams& params) {
    detail::require_member(x, params, "encode_ferrers");
    auto t = tableaux_of_subspace(x);
    long m = t.diagram.size();
    BigIndex ind = params.alpha_suffix(m + 1);
    ind += ferrers_rank(t.diagram) * params.qpow(m);
    BigCount value = 0;
    for (Elem e : t.entries) value = value * params.q() + e;
    return ind + value;
}

namespace detail {

// Shared by the pure and the hybrid decoders; min_size restricts the scan to
// diagram sizes >= min_size.
inline SubspaceRREF decode_ferrers_impl(BigIndex i, const GrassmannParams& params, long min_size) {
    const auto& alphas = params.alphas();
    for (long s = params.cells(); s >= min_size; --s) {
        BigCount block = alphas[std::size_t(s)] * params.qpow(s);
        if (i < block) {
            BigIndex diagram_rank = i / params.qpow(s);
            BigCount value = i % params.qpow(s);
            FerrersTableaux t;
            t.diagram = ferrers_unrank(s, diagram_rank, params.k(), params.n() - params.k());
            t.entries.assign(std::size_t(s), 0);
            for (long pos = s - 1; pos >= 0; --pos) {
                t.entries[std::size_t(pos)] = Elem(BigCount(value % params.q()).convert_to<int>());
                value /= params.q();
            }
            return subspace_of_tableaux(t, params.n(), params.k(), params.field());
        }
        i -= block;
    }
    throw std::out_of_range("decode_ferrers: index out of range");
}

}  // namespace detail

inline SubspaceRREF decode_ferrers(const BigIndex& i, const GrassmannParams& params) {
    if (i < 0 || i >= params.total()) throw std::out_of_range("decode_ferrers: index out of range");
    return detail::decode_ferrers_impl(i, params, 0);
}

// ---------------------------------------------------------------------------
// Extended-representation order.
// ---------------------------------------------------------------------------

// Columns of the extended representation compared right to left; inside a
// column the identifying bit is most significant, then the RREF rows top to
// bottom.
inline std::strong_ordering compare_extended(const SubspaceRREF& x, const SubspaceRREF& y) {
    if (x.n != y.n || x.k != y.k || x.q != y.q)
        throw std::invalid_argument("compare_extended: parameter mismatch");
    ExtendedRep ex(x), ey(y);
    for (int j = 1; j <= x.n; ++j) {
        for (int r = 0; r <= x.k; ++r) {
            Elem a = ex.entry(j, r), b = ey.entry(j, r);
            if (a != b) return a <=> b;
        }
    }
    return std::strong_ordering::equal;
}

// Index of X in the extended-representation order. Processing columns right
// to left with w = number of pivots already passed: a pivot column contributes
// q^(k-w) * [n-j, k-w]_q, a non-pivot column contributes its value (divided by
// q^w, exact because the bottom w rows are forced zeros) times the same
// Gaussian coefficient.
inline BigIndex encode_extended(const SubspaceRREF& x, const GrassmannParams& params) {
    detail::require_member(x, params, "encode_extended");
    int k = x.k;
    BigIndex ind = 0;
    int w = 0;
    for (int j = 1; j <= x.n; ++j) {
        int col = x.n - j;
        const BigCount& g = params.gauss(x.n - j, k - w);
        if (x.idvec[std::size_t(col)]) {
            ind += params.qpow(k - w) * g;
            ++w;
        } else {
            for (int r = k - w; r < k; ++r)
                if (x.re.at(r, col) != 0)
                    throw std::logic_error("encode_extended: nonzero entry below a passed pivot");
            BigCount value = detail::column_value(x.re, col, k - w, params);
            if (value != 0) ind += value * g;
        }
    }
    return ind;
}

inline SubspaceRREF decode_extended(const BigIndex& i, const GrassmannParams& params) {
    if (i < 0 || i >= params.total()) throw std::out_of_range("decode_extended: index out of range");
    int n = params.n(), k = params.k();
    MatrixGF re(k, n);
    std::vector<std::uint8_t> idvec(std::size_t(n), 0);
    BigIndex rem = i;
    int w = 0;
    for (int j = 1; j <= n; ++j) {
        int col = n - j;
        if (w >= k) break;  // all pivots placed, remaining columns stay zero
        const BigCount& g = params.gauss(n - j, k - w);
        BigCount nonpivot_block = params.qpow(k - w) * g;
        if (rem >= nonpivot_block) {
            rem -= nonpivot_block;
            idvec[std::size_t(col)] = 1;
            re.at(k - w - 1, col) = 1;
            ++w;
        } else {
            BigCount value = rem / g;
            rem -= value * g;
            for (int r = k - w - 1; r >= 0; --r) {
                re.at(r, col) = Elem(BigCount(value % params.q()).convert_to<int>());
                value /= params.q();
            }
        }
    }
    if (rem != 0 || w != k) throw std::logic_error("decode_extended: leftover index, counting is inconsistent");

    SubspaceRREF x;
    x.n = n;
    x.k = k;
    x.q = params.q();
    x.re = std::move(re);
    x.idvec = std::move(idvec);
    return x;
}

// ---------------------------------------------------------------------------
// Hybrid scheme: tableaux order for large diagrams, extended order shifted
// past them for the rest.
// ---------------------------------------------------------------------------

// The privileged diagram family S_F = { F : |F| >= threshold }, realized by
// its identifying vectors. block is the number of subspaces covered by the
// tableaux side; dot_suffix[j] counts the free positions of EF(v) strictly
// left of column j (columns numbered right to left, 1-based).
struct HybridConfig {
    int threshold = 0;
    BigCount block = 0;

    struct SfVector {
        std::vector<std::uint8_t> v;   // left-to-right storage order
        std::vector<long> dot_suffix;  // indexed by column j = 0..n
        long diagram_size = 0;
    };
    std::vector<SfVector> members;

    static HybridConfig make(const GrassmannParams& params, int threshold) {
        if (threshold < 0 || threshold > params.cells() + 1)
            throw std::out_of_range("HybridConfig: threshold out of range");
        HybridConfig cfg;
        cfg.threshold = threshold;
        cfg.block = params.alpha_suffix(threshold);

        int n = params.n(), k = params.k();
        auto consider = [&](const std::vector<std::uint8_t>& vec) {
            FerrersDiagram d = vector_to_diagram(vec, n, k);
            if (d.size() < threshold) return;
            SfVector sv;
            sv.v = vec;
            sv.diagram_size = d.size();
            sv.dot_suffix.assign(std::size_t(n) + 1, 0);
            int w = 0;
            std::vector<long> dots(std::size_t(n) + 1, 0);
            for (int j = 1; j <= n; ++j) {
                int col = n - j;
                if (vec[std::size_t(col)])
                    ++w;
                else
                    dots[std::size_t(j)] = k - w;
            }
            for (int j = n - 1; j >= 0; --j)
                sv.dot_suffix[std::size_t(j)] = sv.dot_suffix[std::size_t(j) + 1] + dots[std::size_t(j) + 1];
            cfg.members.push_back(std::move(sv));
        };

        if (k == 0) {
            consider(std::vector<std::uint8_t>(std::size_t(n), 0));
            return cfg;
        }
        std::vector<int> pivots(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) pivots[std::size_t(i)] = i;
        while (true) {
            std::vector<std::uint8_t> vec(std::size_t(n), 0);
            for (int p : pivots) vec[std::size_t(p)] = 1;
            consider(vec);
            int i = k - 1;
            while (i >= 0 && pivots[std::size_t(i)] == n - k + i) --i;
            if (i < 0) break;
            ++pivots[std::size_t(i)];
            for (int t = i + 1; t < k; ++t) pivots[std::size_t(t)] = pivots[std::size_t(t) - 1] + 1;
        }
        return cfg;
    }

    // Largest threshold whose tableaux side still covers at least nine tenths
    // of the Grassmannian; the extended side then handles only a small tail.
    static int default_threshold(const GrassmannParams& params) {
        for (int t = params.cells() + 1; t >= 0; --t)
            if (10 * params.alpha_suffix(t) >= 9 * params.total()) return t;
        return 0;
    }
};

// Number of subspaces Y with diagram in S_F that follow X in the extended
// order. Walks each member vector v column by column while a Y built on v
// could still match X's columns; matching columns force equal pivot prefixes,
// so one shared weight w suffices. At each column the contribution is
// (admissible values under v strictly greater than X's column) * q^(free dots
// of v strictly to the left).
inline BigCount delta_count(const SubspaceRREF& x, const GrassmannParams& params, const HybridConfig& cfg) {
    detail::require_member(x, params, "delta_count");
    if (vector_to_diagram(x.idvec, x.n, x.k).size() >= cfg.threshold)
        throw std::invalid_argument("delta_count: subspace diagram already lies in S_F");

    int n = x.n, k = x.k;
    BigCount delta = 0;
    for (const auto& member : cfg.members) {
        int w = 0;
        for (int j = 1; j <= n; ++j) {
            int col = n - j;
            bool vx = x.idvec[std::size_t(col)] != 0;
            bool vv = member.v[std::size_t(col)] != 0;
            const BigCount& tail = params.qpow(member.dot_suffix[std::size_t(j)]);

            if (vv) {
                // v's only admissible column here is its pivot, which exceeds
                // every non-pivot column and equals X's column iff X also has
                // a pivot (same w on both sides while matching).
                if (!vx) {
                    delta += tail;
                    break;
                }
                ++w;
            } else {
                if (vx) break;  // all of v's values here are non-pivot, hence smaller
                BigCount x_shifted = detail::column_value(x.re, col, k - w, params);
                delta += (params.qpow(k - w) - 1 - x_shifted) * tail;
                bool x_admissible = true;
                for (int r = k - w; r < k && x_admissible; ++r)
                    if (x.re.at(r, col) != 0) x_admissible = false;
                if (!x_admissible) break;  // X's column cannot appear in EF(v)
            }
        }
    }
    return delta;
}

inline BigIndex encode_hybrid(const SubspaceRREF& x, const GrassmannParams& params, const HybridConfig& cfg) {
    detail::require_member(x, params, "encode_hybrid");
    if (vector_to_diagram(x.idvec, x.n, x.k).size() >= cfg.threshold) return encode_ferrers(x, params);
    return encode_extended(x, params) + delta_count(x, params, cfg);
}

inline SubspaceRREF decode_hybrid(const BigIndex& i, const GrassmannParams& params, const HybridConfig& cfg) {
    if (i < 0 || i >= params.total()) throw std::out_of_range("decode_hybrid: index out of range");
    if (i < cfg.block) return detail::decode_ferrers_impl(i, params, cfg.threshold);

    // Unrank i - block among the subspaces outside S_F, in extended order:
    // the usual column walk, with every completion count reduced by the
    // completions whose identifying vector lands in S_F.
    int n = params.n(), k = params.k();
    MatrixGF re(k, n);
    std::vector<std::uint8_t> idvec(std::size_t(n), 0);
    BigIndex rem = i - cfg.block;
    int w = 0;
    std::vector<const HybridConfig::SfVector*> alive;
    alive.reserve(cfg.members.size());
    for (const auto& m : cfg.members) alive.push_back(&m);

    for (int j = 1; j <= n; ++j) {
        int col = n - j;
        std::vector<const HybridConfig::SfVector*> alive0, alive1;
        BigCount s0 = 0, s1 = 0;
        for (const auto* m : alive) {
            if (m->v[std::size_t(col)]) {
                alive1.push_back(m);
                s1 += params.qpow(m->dot_suffix[std::size_t(j)]);
            } else {
                alive0.push_back(m);
                s0 += params.qpow(m->dot_suffix[std::size_t(j)]);
            }
        }
        if (w >= k) {  // remaining columns are forced zero
            alive = std::move(alive0);
            continue;
        }
        BigCount n0 = params.gauss(n - j, k - w) - s0;
        BigCount nonpivot_block = params.qpow(k - w) * n0;
        if (rem >= nonpivot_block) {
            rem -= nonpivot_block;
            idvec[std::size_t(col)] = 1;
            re.at(k - w - 1, col) = 1;
            ++w;
            alive = std::move(alive1);
        } else {
            BigCount value = rem / n0;
            rem -= value * n0;
            for (int r = k - w - 1; r >= 0; --r) {
                re.at(r, col) = Elem(BigCount(value % params.q()).convert_to<int>());
                value /= params.q();
            }
            alive = std::move(alive0);
        }
    }
    if (rem != 0 || w != k) throw std::logic_error("decode_hybrid: leftover index, counting is inconsistent");

    SubspaceRREF x;
    x.n = n;
    x.k = k;
    x.q = params.q();
    x.re = std::move(re);
    x.idvec = std::move(idvec);
    return x;
}

}  // namespace grasscode
