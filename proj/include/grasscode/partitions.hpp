#pragma once

#include <compare>
#include <cstdint>
#include <mutex>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "grasscode/bigint.hpp"
#include "grasscode/enumcode.hpp"
#include "grasscode/ferrers.hpp"

namespace grasscode {

// p(m, k, eta): the number of Ferrers diagrams of size m inside a k x eta
// box, i.e. partitions of m into at most eta parts each at most k. Memoized;
// the recurrence revisits states heavily. Thread-safe behind one lock.
class PartitionCache {
public:
    BigCount p_box(long m, int k, int eta) {
        if (k < 0 || eta < 0) throw std::invalid_argument("p_box: negative box");
        std::lock_guard<std::mutex> lock(mu_);
        return rec(m, k, eta);
    }

private:
    BigCount rec(long m, int k, int eta) {
        long cells = long(k) * eta;
        if (m < 0 || m > cells) return 0;
        if (m == 0 || m == cells) return 1;
        if (2 * m > cells) m = cells - m;  // complement symmetry, results unchanged
        if (k == 1 || eta == 1) return 1;  // 0 <= m <= cells holds here

        std::uint64_t key = (std::uint64_t(m) << 32) | (std::uint64_t(k) << 16) | std::uint64_t(eta);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;

        // Split on whether some part equals k.
        BigCount value = rec(m - k, k, eta - 1) + rec(m, k - 1, eta);
        memo_.emplace(key, value);
        return value;
    }

    std::unordered_map<std::uint64_t, BigCount> memo_;
    std::mutex mu_;
};

inline PartitionCache& global_partition_cache() {
    static PartitionCache cache;
    return cache;
}

inline BigCount p_box(long m, int k, int eta, PartitionCache& cache) { return cache.p_box(m, k, eta); }
inline BigCount p_box(long m, int k, int eta) { return global_partition_cache().p_box(m, k, eta); }

// alpha_l = p(l, k, eta) for l = 0..k*eta.
inline std::vector<BigCount> alpha_vector(int k, int eta, PartitionCache& cache = global_partition_cache()) {
    std::vector<BigCount> alphas;
    alphas.reserve(std::size_t(k) * eta + 1);
    for (long m = 0; m <= long(k) * eta; ++m) alphas.push_back(cache.p_box(m, k, eta));
    return alphas;
}

// Gaussian coefficient by the product formula; every intermediate value is
// itself a Gaussian coefficient, so the divisions are exact.
inline BigCount gaussian_product(int n, int k, int q) {
    if (k < 0 || k > n) return 0;
    BigCount r = 1;
    for (int i = 0; i < k; ++i) {
        r *= big_pow(unsigned(q), unsigned(n - i)) - 1;
        r /= big_pow(unsigned(q), unsigned(i + 1)) - 1;
    }
    return r;
}

// Gaussian coefficient as the partition-weighted sum over the box, checked
// against the product formula on every call. The two routes are independent;
// a mismatch would mean a counting bug, so it is a hard error.
inline BigCount gaussian(int n, int k, int q, PartitionCache& cache = global_partition_cache()) {
    if (k < 0 || k > n) return 0;
    BigCount sum = 0;
    BigCount qpow = 1;
    for (long l = 0; l <= long(k) * (n - k); ++l) {
        sum += cache.p_box(l, k, n - k) * qpow;
        qpow *= q;
    }
    if (sum != gaussian_product(n, k, q))
        throw std::logic_error("gaussian: partition sum and product formula disagree");
    return sum;
}

// Number of size-m diagrams in a k x eta box whose rightmost j columns are
// the given prefix; cols_rtl[0] is the rightmost column F_1. Equals
// p(m - sum(prefix), F_j, eta - j) with F_0 = k.
inline BigCount completions_with_prefix(std::span<const int> cols_rtl, long m, int k, int eta,
                                        PartitionCache& cache = global_partition_cache()) {
    int j = int(cols_rtl.size());
    if (j > eta) throw std::invalid_argument("completions_with_prefix: prefix longer than the box");
    long used = 0;
    int prev = k;
    for (int i = 0; i < j; ++i) {
        int fi = cols_rtl[std::size_t(i)];
        if (fi < 0 || fi > prev)
            throw std::invalid_argument("completions_with_prefix: prefix is not a valid diagram start");
        used += fi;
        prev = fi;
    }
    return cache.p_box(m - used, prev, eta - j);
}

namespace detail {

// Oracle over column counts for diagrams of a fixed size m in a k x eta box.
// Engine symbol s at column j encodes F_j = F_{j-1} - s, so the natural
// symbol order matches the diagram order (more dots first).
struct FerrersColumnOracle {
    long m;
    int k;
    int eta;
    PartitionCache* cache;

    int alphabet_size(int) const { return k + 1; }

    BigCount count(std::span<const int> prefix, int s) const {
        int prev = k;
        long used = 0;
        for (int sym : prefix) {
            prev -= sym;
            used += prev;
        }
        int fj = prev - s;
        if (fj < 0) return 0;
        int j = int(prefix.size()) + 1;
        return cache->p_box(m - used - fj, fj, eta - j);
    }
};

}  // namespace detail

// Lexicographic index of a diagram among all diagrams of the same size in the
// same box: at the least column where two diagrams differ, the one with more
// dots comes first.
inline BigIndex ferrers_rank(const FerrersDiagram& f, PartitionCache& cache = global_partition_cache()) {
    long m = f.size();
    BigIndex ind = 0;
    long used = 0;
    for (int j = 1; j <= f.box_cols; ++j) {
        for (int a = f.column(j) + 1; a <= f.column(j - 1); ++a)
            ind += cache.p_box(m - used - a, a, f.box_cols - j);
        used += f.column(j);
    }
    return ind;
}

// Inverse of ferrers_rank, realized as the generic unrank over the column
// alphabet.
inline FerrersDiagram ferrers_unrank(long m, const BigIndex& i, int k, int eta,
                                     PartitionCache& cache = global_partition_cache()) {
    if (i < 0 || i >= cache.p_box(m, k, eta)) throw std::out_of_range("ferrers_unrank: index out of range");
    detail::FerrersColumnOracle oracle{m, k, eta, &cache};
    auto symbols = unrank_sequence(i, eta, oracle);
    std::vector<int> cols(static_cast<std::size_t>(eta));
    int prev = k;
    for (int j = 0; j < eta; ++j) {
        prev -= symbols[std::size_t(j)];
        cols[std::size_t(j)] = prev;
    }
    return FerrersDiagram(k, eta, std::move(cols));
}

// Total order on the diagrams of one box: larger size first, then the
// fixed-size lexicographic index.
inline std::strong_ordering compare_ferrers(const FerrersDiagram& f, const FerrersDiagram& g,
                                            PartitionCache& cache = global_partition_cache()) {
    if (f.box_rows != g.box_rows || f.box_cols != g.box_cols)
        throw std::invalid_argument("compare_ferrers: diagrams from different boxes");
    if (f.size() != g.size()) return g.size() <=> f.size();
    BigIndex rf = ferrers_rank(f, cache), rg = ferrers_rank(g, cache);
    if (rf < rg) return std::strong_ordering::less;
    if (rf > rg) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

}  // namespace grasscode
