#pragma once

#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "grasscode/partitions.hpp"
#include "grasscode/subspace.hpp"

namespace grasscode {

// Shared, immutable-once-built context for one G_q(n,k): the field, powers of
// q, the table of Gaussian coefficients [a b]_q for a <= n, b <= k, and the
// partition-count data behind the tableaux encoding. The alpha table is built
// on first use; extended-representation work never needs it.
class GrassmannParams {
public:
    GrassmannParams(int n, int k, int q) : n_(n), k_(k), q_(q), field_(FieldTable::make(q)) {
        if (n < 0 || k < 0 || k > n) throw std::out_of_range("GrassmannParams: need 0 <= k <= n");

        long cells = long(k) * (n - k);
        qpow_.reserve(std::size_t(cells + k + 2));
        qpow_.push_back(1);
        for (long e = 1; e <= cells + k + 1; ++e) qpow_.push_back(qpow_.back() * q);

        // q-Pascal recurrence; rows indexed by a, columns by b.
        gauss_.assign(std::size_t(n + 1), std::vector<BigCount>(std::size_t(k + 1), 0));
        for (int a = 0; a <= n; ++a) {
            gauss_[std::size_t(a)][0] = 1;
            for (int b = 1; b <= k && b <= a; ++b)
                gauss_[std::size_t(a)][std::size_t(b)] =
                    gauss_[std::size_t(a) - 1][std::size_t(b) - 1] +
                    qpow(b) * gauss_[std::size_t(a) - 1][std::size_t(b)];
        }
        total_ = gauss_[std::size_t(n)][std::size_t(k)];
    }

    int n() const { return n_; }
    int k() const { return k_; }
    int q() const { return q_; }
    int cells() const { return k_ * (n_ - k_); }
    const FieldTable& field() const { return field_; }
    const BigCount& total() const { return total_; }

    const BigCount& qpow(long e) const { return qpow_[std::size_t(e)]; }

    // [a b]_q; zero outside 0 <= b <= a.
    const BigCount& gauss(int a, int b) const {
        static const BigCount zero = 0;
        if (b < 0 || b > a || a < 0) return zero;
        if (a > n_ || b > k_) throw std::out_of_range("GrassmannParams::gauss: outside the cached table");
        return gauss_[std::size_t(a)][std::size_t(b)];
    }

    // alpha_i = number of size-i diagrams in the k x (n-k) box.
    const std::vector<BigCount>& alphas() const {
        std::call_once(alpha_once_, [this] {
            alphas_ = alpha_vector(k_, n_ - k_);
            BigCount check = 0;
            for (long i = 0; i <= cells(); ++i) check += alphas_[std::size_t(i)] * qpow(i);
            if (check != total_)
                throw std::logic_error("GrassmannParams: alpha table does not sum to the Gaussian total");
            alpha_suffix_.assign(std::size_t(cells()) + 2, 0);
            for (long i = cells(); i >= 0; --i)
                alpha_suffix_[std::size_t(i)] = alpha_suffix_[std::size_t(i) + 1] + alphas_[std::size_t(i)] * qpow(i);
        });
        return alphas_;
    }

    // Number of subspaces whose diagram has size >= s (the head of the
    // tableaux order). alpha_suffix(0) == total.
    const BigCount& alpha_suffix(long s) const {
        alphas();
        if (s < 0 || s > cells() + 1) throw std::out_of_range("GrassmannParams::alpha_suffix");
        return alpha_suffix_[std::size_t(s)];
    }

private:
    int n_, k_, q_;
    FieldTable field_;
    BigCount total_;
    std::vector<BigCount> qpow_;
    std::vector<std::vector<BigCount>> gauss_;

    mutable std::once_flag alpha_once_;
    mutable std::vector<BigCount> alphas_;
    mutable std::vector<BigCount> alpha_suffix_;
};

// Every subspace of G_q(n,k), materialized by running an odometer over the
// free positions of each pivot pattern. Order is unspecified; desk scale only.
inline std::vector<SubspaceRREF> all_subspaces(const GrassmannParams& params) {
    int n = params.n(), k = params.k(), q = params.q();
    std::vector<SubspaceRREF> out;

    std::vector<int> pivots(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pivots[std::size_t(i)] = i;

    auto emit_pattern = [&](const std::vector<int>& piv) {
        std::vector<std::pair<int, int>> free_cells;  // (row, col) of each free entry
        for (int r = 0; r < k; ++r)
            for (int c = piv[std::size_t(r)] + 1; c < n; ++c) {
                bool is_pivot_col = false;
                for (int r2 = 0; r2 < k; ++r2)
                    if (piv[std::size_t(r2)] == c) is_pivot_col = true;
                if (!is_pivot_col) free_cells.emplace_back(r, c);
            }

        std::vector<Elem> fill(free_cells.size(), 0);
        while (true) {
            MatrixGF re(k, n);
            for (int r = 0; r < k; ++r) re.at(r, piv[std::size_t(r)]) = 1;
            for (std::size_t i = 0; i < free_cells.size(); ++i)
                re.at(free_cells[i].first, free_cells[i].second) = fill[i];
            out.push_back(subspace_from_rref(std::move(re), n, q));

            std::size_t pos = 0;
            while (pos < fill.size() && fill[pos] == q - 1) fill[pos++] = 0;
            if (pos == fill.size()) break;
            ++fill[pos];
        }
    };

    if (k == 0) {
        out.push_back(subspace_from_rref(MatrixGF(0, n), n, q));
        return out;
    }
    while (true) {
        emit_pattern(pivots);
        int i = k - 1;
        while (i >= 0 && pivots[std::size_t(i)] == n - k + i) --i;
        if (i < 0) break;
        ++pivots[std::size_t(i)];
        for (int j = i + 1; j < k; ++j) pivots[std::size_t(j)] = pivots[std::size_t(j) - 1] + 1;
    }
    return out;
}

}  // namespace grasscode
