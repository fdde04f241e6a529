#pragma once

#include <concepts>
#include <span>
#include <stdexcept>
#include <vector>

#include "grasscode/bigint.hpp"

namespace grasscode {

// Generic enumerative rank/unrank over a lexicographically ordered set of
// fixed-length sequences, driven by a prefix-counting oracle. Symbols at each
// position are the integers 0..alphabet_size(pos)-1 in their natural order;
// o.count(prefix, s) is the number of set elements that extend prefix*s.
// Symbols that cannot occur simply count zero.
template <class O>
concept PrefixOracle = requires(const O& o, std::span<const int> prefix, int pos, int s) {
    { o.alphabet_size(pos) } -> std::convertible_to<int>;
    { o.count(prefix, s) } -> std::convertible_to<BigCount>;
};

// Lexicographic index of x: sum over positions of the counts of all smaller
// branches. Throws if x is not in the oracle's set.
template <PrefixOracle O>
BigIndex rank_sequence(std::span<const int> x, const O& o) {
    BigIndex ind = 0;
    std::vector<int> prefix;
    prefix.reserve(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) {
        std::span<const int> p(prefix);
        for (int m = 0; m < x[j]; ++m) ind += o.count(p, m);
        if (o.count(p, x[j]) == 0)
            throw std::invalid_argument("rank_sequence: sequence is not in the enumerated set");
        prefix.push_back(x[j]);
    }
    return ind;
}

// Inverse of rank_sequence: at each position take the largest symbol whose
// preceding branches do not exceed the remaining index, subtract, continue.
template <PrefixOracle O>
std::vector<int> unrank_sequence(BigIndex i, int len, const O& o) {
    if (i < 0) throw std::out_of_range("unrank_sequence: negative index");
    std::vector<int> x;
    x.reserve(std::size_t(len));
    for (int j = 0; j < len; ++j) {
        std::span<const int> p(x);
        int chosen = -1;
        for (int s = 0; s < o.alphabet_size(j); ++s) {
            BigCount c = o.count(p, s);
            if (i < c) {
                chosen = s;
                break;
            }
            i -= c;
        }
        if (chosen < 0) throw std::out_of_range("unrank_sequence: index out of range");
        x.push_back(chosen);
    }
    if (i != 0) throw std::out_of_range("unrank_sequence: index out of range");
    return x;
}

}  // namespace grasscode
