#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace grasscode {

// Exact arbitrary-precision integers. Counts of subspaces and lexicographic
// indices exceed 64 bits early (e.g. the Gaussian coefficient for n=30, k=15,
// q=2), so everything countable in this library goes through these.
using BigCount = boost::multiprecision::cpp_int;
using BigIndex = boost::multiprecision::cpp_int;

inline BigCount big_pow(unsigned base, unsigned exp) {
    return boost::multiprecision::pow(BigCount(base), exp);
}

}  // namespace grasscode
