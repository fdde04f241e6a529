#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <set>

#include "grasscode/partitions.hpp"

using namespace grasscode;

namespace {

// Every diagram in a k x eta box as a right-to-left column vector, by direct
// enumeration of monotone sequences.
std::vector<std::vector<int>> all_diagrams(int k, int eta) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int col, int bound) -> void {
        if (col == eta) {
            out.push_back(cur);
            return;
        }
        for (int v = bound; v >= 0; --v) {
            cur.push_back(v);
            self(self, col + 1, v);
            cur.pop_back();
        }
    };
    rec(rec, 0, k);
    return out;
}

long count_diagrams_of_size(int m, int k, int eta) {
    long c = 0;
    for (const auto& d : all_diagrams(k, eta)) {
        int s = 0;
        for (int v : d) s += v;
        if (s == m) ++c;
    }
    return c;
}

}  // namespace

TEST_CASE("p_box matches direct enumeration on small boxes") {
    for (int k = 0; k <= 6; ++k)
        for (int eta = 0; eta <= 6; ++eta)
            for (int m = -1; m <= k * eta + 1; ++m) {
                CAPTURE(m, k, eta);
                CHECK(p_box(m, k, eta) == count_diagrams_of_size(m, k, eta));
            }
}

TEST_CASE("p_box worked values") {
    CHECK(p_box(21, 21, 21) == 792);  // unrestricted partitions of 21
    CHECK(p_box(0, 3, 4) == 1);
    CHECK(p_box(0, 0, 0) == 1);
    CHECK(p_box(7, 3, 3) == 2);  // (3,3,1) and (3,2,2)
    CHECK(p_box(-1, 3, 3) == 0);
    CHECK(p_box(10, 3, 3) == 0);
    CHECK_THROWS_AS(p_box(1, -1, 3), std::invalid_argument);
    CHECK_THROWS_AS(p_box(1, 3, -2), std::invalid_argument);
}

TEST_CASE("p_box symmetries") {
    for (int k = 0; k <= 6; ++k)
        for (int eta = 0; eta <= 6; ++eta)
            for (int m = 0; m <= k * eta; ++m) {
                CHECK(p_box(m, k, eta) == p_box(k * eta - m, k, eta));
                CHECK(p_box(m, k, eta) == p_box(m, eta, k));
            }
}

TEST_CASE("gaussian coefficients") {
    CHECK(gaussian(2, 1, 2) == 3);
    CHECK(gaussian(6, 3, 2) == 1395);
    CHECK(gaussian(5, 3, 2) == 155);
    CHECK(gaussian(4, 3, 2) == 15);
    CHECK(gaussian(3, 2, 2) == 7);
    CHECK(gaussian(8, 4, 2) == 200787);
    CHECK(gaussian(3, 5, 2) == 0);
    CHECK(gaussian(3, -1, 2) == 0);
}

TEST_CASE("partition sum equals the product formula for all n <= 12") {
    // gaussian() itself cross-checks; this also pins the identity explicitly.
    for (int q : {2, 3, 4})
        for (int n = 0; n <= 12; ++n)
            for (int k = 0; k <= n; ++k) {
                CAPTURE(n, k, q);
                CHECK(gaussian(n, k, q) == gaussian_product(n, k, q));
                CHECK(gaussian(n, k, q) == gaussian(n, n - k, q));
            }
}

TEST_CASE("prefix completion counts") {
    CHECK(completions_with_prefix(std::vector<int>{}, 7, 3, 3) == p_box(7, 3, 3));
    CHECK(completions_with_prefix(std::vector<int>{3}, 7, 3, 3) == 2);
    CHECK(completions_with_prefix(std::vector<int>{3, 3}, 7, 3, 3) == 1);
    CHECK_THROWS_AS(completions_with_prefix(std::vector<int>{2, 3}, 7, 3, 3), std::invalid_argument);
    CHECK_THROWS_AS(completions_with_prefix(std::vector<int>{4}, 7, 3, 3), std::invalid_argument);

    SECTION("summing the first column recovers the box count") {
        for (int m = 0; m <= 9; ++m) {
            BigCount sum = 0;
            for (int a = 0; a <= 3; ++a) sum += completions_with_prefix(std::vector<int>{a}, m, 3, 3);
            CHECK(sum == p_box(m, 3, 3));
        }
    }
}

TEST_CASE("ferrers_rank ranks fixed-size diagrams, more dots first") {
    FerrersDiagram tilde(3, 3, {3, 3, 1});  // display (1,3,3)
    FerrersDiagram plain(3, 3, {3, 2, 2});  // display (2,2,3)
    CHECK(ferrers_rank(tilde) == 0);
    CHECK(ferrers_rank(plain) == 1);

    FerrersDiagram full(4, 3, {4, 4, 4});
    CHECK(ferrers_rank(full) == 0);
}

TEST_CASE("ferrers_rank is a bijection on every size class of the 4x4 box") {
    std::map<int, std::set<BigIndex>> ranks;
    std::map<int, long> class_size;
    for (const auto& cols : all_diagrams(4, 4)) {
        FerrersDiagram d(4, 4, cols);
        int m = d.size();
        BigIndex r = ferrers_rank(d);
        CHECK(r >= 0);
        CHECK(r < p_box(m, 4, 4));
        ranks[m].insert(r);
        ++class_size[m];
    }
    for (auto& [m, set] : ranks) CHECK(BigCount(set.size()) == p_box(m, 4, 4));
    for (auto& [m, c] : class_size) CHECK(BigCount(c) == p_box(m, 4, 4));
}

TEST_CASE("ferrers_unrank inverts ferrers_rank") {
    CHECK(ferrers_unrank(7, 0, 3, 3).col == std::vector<int>{3, 3, 1});
    CHECK(ferrers_unrank(7, 1, 3, 3).col == std::vector<int>{3, 2, 2});
    CHECK(ferrers_unrank(9, 0, 3, 3).col == std::vector<int>{3, 3, 3});
    CHECK_THROWS_AS(ferrers_unrank(7, 2, 3, 3), std::out_of_range);
    CHECK_THROWS_AS(ferrers_unrank(7, -1, 3, 3), std::out_of_range);

    SECTION("round trip over the whole 3x4 box") {
        for (int m = 0; m <= 12; ++m) {
            BigCount total = p_box(m, 3, 4);
            for (BigIndex i = 0; i < total; ++i) {
                auto d = ferrers_unrank(m, i, 3, 4);
                CHECK(d.size() == m);
                CHECK(ferrers_rank(d) == i);
            }
        }
    }
}

TEST_CASE("compare_ferrers: bigger first, then fixed-size rank") {
    FerrersDiagram tilde(3, 3, {3, 3, 1});
    FerrersDiagram plain(3, 3, {3, 2, 2});
    FerrersDiagram hat(3, 3, {3, 2, 1});
    CHECK(compare_ferrers(tilde, plain) == std::strong_ordering::less);
    CHECK(compare_ferrers(plain, hat) == std::strong_ordering::less);
    CHECK(compare_ferrers(tilde, hat) == std::strong_ordering::less);
    CHECK(compare_ferrers(plain, plain) == std::strong_ordering::equal);

    FerrersDiagram full(3, 3, {3, 3, 3});
    for (const auto& cols : all_diagrams(3, 3))
        CHECK(compare_ferrers(full, FerrersDiagram(3, 3, cols)) <= 0);

    CHECK_THROWS_AS(compare_ferrers(full, FerrersDiagram(2, 2, {1, 0})), std::invalid_argument);

    SECTION("comparator order equals (-size, rank) order") {
        auto cols = all_diagrams(3, 3);
        std::vector<FerrersDiagram> ds;
        for (const auto& c : cols) ds.emplace_back(3, 3, c);
        auto by_cmp = ds;
        std::sort(by_cmp.begin(), by_cmp.end(),
                  [](const auto& a, const auto& b) { return compare_ferrers(a, b) < 0; });
        auto by_key = ds;
        std::sort(by_key.begin(), by_key.end(), [](const auto& a, const auto& b) {
            if (a.size() != b.size()) return a.size() > b.size();
            return ferrers_rank(a) < ferrers_rank(b);
        });
        CHECK(by_cmp == by_key);
    }
}
