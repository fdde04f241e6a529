#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "grasscode/encoders.hpp"
#include "grasscode/enumcode.hpp"
#include "oracle.hpp"

using namespace grasscode;

namespace {

SubspaceRREF from_rref_rows(const std::vector<std::vector<int>>& rows, int n, int q) {
    MatrixGF m(int(rows.size()), n);
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < n; ++c) m.at(r, c) = Elem(rows[std::size_t(r)][std::size_t(c)]);
    return subspace_from_rref(std::move(m), n, q);
}

SubspaceRREF identity_subspace(int n, int k, int q) {
    MatrixGF m(k, n);
    for (int i = 0; i < k; ++i) m.at(i, i) = 1;
    return subspace_from_rref(std::move(m), n, q);
}

// The worked index-928 subspace of G_2(6,3).
SubspaceRREF worked_928() {
    return from_rref_rows({{0, 1, 1, 0, 0, 1}, {0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 1}}, 6, 2);
}

}  // namespace

TEST_CASE("tableaux-order ranking of the four worked subspaces") {
    GrassmannParams params(6, 3, 2);
    auto X = from_rref_rows({{1, 0, 1, 1, 0, 1}, {0, 1, 1, 1, 0, 1}, {0, 0, 0, 0, 1, 1}}, 6, 2);
    auto Y = from_rref_rows({{1, 1, 0, 0, 0, 1}, {0, 0, 1, 0, 0, 0}, {0, 0, 0, 1, 1, 1}}, 6, 2);
    auto Z = from_rref_rows({{1, 1, 0, 1, 0, 1}, {0, 0, 1, 1, 0, 1}, {0, 0, 0, 0, 1, 0}}, 6, 2);
    auto W = from_rref_rows({{1, 1, 0, 1, 0, 1}, {0, 0, 1, 1, 0, 1}, {0, 0, 0, 0, 1, 1}}, 6, 2);

    CHECK(compare_tableaux_order(Y, X, params) == std::strong_ordering::less);
    CHECK(compare_tableaux_order(X, Z, params) == std::strong_ordering::less);
    CHECK(compare_tableaux_order(Z, W, params) == std::strong_ordering::less);

    auto iY = encode_ferrers(Y, params), iX = encode_ferrers(X, params);
    auto iZ = encode_ferrers(Z, params), iW = encode_ferrers(W, params);
    CHECK(iY < iX);
    CHECK(iX < iZ);
    CHECK(iZ < iW);
    // same diagram, entry sequences (1,1,0,1,1,1) vs (1,1,1,1,1,1): x_3 is
    // worth q^(6-3)
    CHECK(iW == iZ + 8);
}

TEST_CASE("tableaux encoding sends [I_k | 0] to zero") {
    GrassmannParams params(6, 3, 2);
    CHECK(encode_ferrers(identity_subspace(6, 3, 2), params) == 0);
    CHECK(decode_ferrers(0, params) == identity_subspace(6, 3, 2));
}

TEST_CASE("tableaux round trip on the running example in G_2(7,3)") {
    GrassmannParams params(7, 3, 2);
    auto x = from_rref_rows({{1, 0, 0, 0, 1, 1, 0}, {0, 0, 1, 0, 1, 0, 1}, {0, 0, 0, 1, 0, 1, 1}}, 7, 2);
    auto i = encode_ferrers(x, params);
    CHECK(i >= 0);
    CHECK(i < params.total());
    CHECK(decode_ferrers(i, params) == x);
}

TEST_CASE("tableaux decode round trip over all of G_3(4,2)") {
    GrassmannParams params(4, 2, 3);
    REQUIRE(params.total() == 130);
    for (BigIndex i = 0; i < 130; ++i) {
        auto x = decode_ferrers(i, params);
        CHECK(encode_ferrers(x, params) == i);
    }
}

TEST_CASE("extended-order comparison of the worked pair") {
    auto X = from_rref_rows({{1, 0, 0, 0, 1, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 1, 1, 0, 0}}, 6, 2);
    auto Y = from_rref_rows({{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 0}}, 6, 2);
    CHECK(compare_extended(X, Y) == std::strong_ordering::less);
    CHECK(compare_extended(Y, X) == std::strong_ordering::greater);
    CHECK(compare_extended(X, X) == std::strong_ordering::equal);
}

TEST_CASE("extended encoding of the worked subspace is 928") {
    GrassmannParams params(6, 3, 2);
    auto x = worked_928();
    CHECK(encode_extended(x, params) == 928);
    CHECK(decode_extended(928, params) == x);
}

TEST_CASE("extended encoding sends [I_k | 0] to zero") {
    GrassmannParams params(6, 3, 2);
    CHECK(encode_extended(identity_subspace(6, 3, 2), params) == 0);
    CHECK(decode_extended(0, params) == identity_subspace(6, 3, 2));
}

TEST_CASE("extended encoding agrees with the generic enumerative engine") {
    // Column vectors of the extended representation as a (k+1)-digit alphabet,
    // counted by brute force; Eq.-style ranking must match the closed form.
    GrassmannParams params(4, 2, 2);
    auto f = build_field(2);
    auto all = oracle::all_subspaces_bruteforce(4, 2, f);

    auto column_symbol = [&](const SubspaceRREF& x, int j) {
        ExtendedRep e(x);
        int v = 0;
        for (int r = 0; r <= x.k; ++r) v = v * x.q + e.entry(j, r);
        return v;
    };
    struct ExtOracle {
        const std::vector<SubspaceRREF>* all;
        int n, k, q;
        std::function<int(const SubspaceRREF&, int)> sym;
        int alphabet_size(int) const { return q * q * q; }
        BigCount count(std::span<const int> prefix, int s) const {
            long c = 0;
            for (const auto& x : *all) {
                bool match = true;
                for (std::size_t j = 0; j < prefix.size() && match; ++j)
                    if (sym(x, int(j) + 1) != prefix[j]) match = false;
                if (match && sym(x, int(prefix.size()) + 1) == s) ++c;
            }
            return c;
        }
    };
    ExtOracle o{&all, 4, 2, 2, column_symbol};

    for (const auto& x : all) {
        std::vector<int> word;
        for (int j = 1; j <= 4; ++j) word.push_back(column_symbol(x, j));
        CHECK(rank_sequence(word, o) == encode_extended(x, params));
    }
}

TEST_CASE("index range errors") {
    GrassmannParams params(4, 2, 2);
    CHECK_THROWS_AS(decode_ferrers(params.total(), params), std::out_of_range);
    CHECK_THROWS_AS(decode_extended(params.total(), params), std::out_of_range);
    CHECK_THROWS_AS(decode_extended(-1, params), std::out_of_range);

    GrassmannParams other(5, 2, 2);
    auto x = identity_subspace(4, 2, 2);
    CHECK_THROWS_AS(encode_ferrers(x, other), std::invalid_argument);
    CHECK_THROWS_AS(encode_extended(x, other), std::invalid_argument);
}

TEST_CASE("both pure schemes are order-embedding bijections at desk scale") {
    struct Case {
        int n, k, q;
    };
    for (auto [n, k, q] : {Case{4, 2, 2}, Case{5, 2, 2}, Case{5, 3, 2}, Case{6, 3, 2}, Case{4, 2, 3}}) {
        CAPTURE(n, k, q);
        GrassmannParams params(n, k, q);
        auto f = build_field(q);
        auto all = oracle::all_subspaces_bruteforce(n, k, f);
        REQUIRE(BigCount(all.size()) == params.total());

        SECTION("tableaux order, n=" + std::to_string(n) + " k=" + std::to_string(k) + " q=" +
                std::to_string(q)) {
            auto sorted = all;
            std::sort(sorted.begin(), sorted.end(), [&](const auto& a, const auto& b) {
                return compare_tableaux_order(a, b, params) == std::strong_ordering::less;
            });
            for (std::size_t i = 0; i < sorted.size(); ++i) {
                CHECK(encode_ferrers(sorted[i], params) == BigIndex(long(i)));
                CHECK(decode_ferrers(BigIndex(long(i)), params) == sorted[i]);
            }
        }
        SECTION("extended order, n=" + std::to_string(n) + " k=" + std::to_string(k) + " q=" +
                std::to_string(q)) {
            auto sorted = all;
            std::sort(sorted.begin(), sorted.end(), [&](const auto& a, const auto& b) {
                return compare_extended(a, b) == std::strong_ordering::less;
            });
            for (std::size_t i = 0; i < sorted.size(); ++i) {
                CHECK(encode_extended(sorted[i], params) == BigIndex(long(i)));
                CHECK(decode_extended(BigIndex(long(i)), params) == sorted[i]);
            }
        }
    }
}

TEST_CASE("degenerate dimensions encode to index zero") {
    for (auto [n, k] : {std::pair{4, 0}, std::pair{4, 4}, std::pair{0, 0}}) {
        CAPTURE(n, k);
        GrassmannParams params(n, k, 2);
        CHECK(params.total() == 1);
        auto x = identity_subspace(n, k, 2);
        CHECK(encode_ferrers(x, params) == 0);
        CHECK(encode_extended(x, params) == 0);
        CHECK(decode_ferrers(0, params) == x);
        CHECK(decode_extended(0, params) == x);
        auto cfg = HybridConfig::make(params, HybridConfig::default_threshold(params));
        CHECK(encode_hybrid(x, params, cfg) == 0);
        CHECK(decode_hybrid(0, params, cfg) == x);
    }
}

TEST_CASE("hybrid extremes collapse to the pure schemes") {
    GrassmannParams params(5, 2, 2);
    auto f = build_field(2);
    auto all = oracle::all_subspaces_bruteforce(5, 2, f);

    auto empty_sf = HybridConfig::make(params, params.cells() + 1);
    CHECK(empty_sf.block == 0);
    CHECK(empty_sf.members.empty());
    auto full_sf = HybridConfig::make(params, 0);
    CHECK(full_sf.block == params.total());

    for (const auto& x : all) {
        CHECK(encode_hybrid(x, params, empty_sf) == encode_extended(x, params));
        CHECK(encode_hybrid(x, params, full_sf) == encode_ferrers(x, params));
    }
}

TEST_CASE("hybrid delta matches the brute-force succeeding count") {
    GrassmannParams params(5, 2, 2);
    auto f = build_field(2);
    auto all = oracle::all_subspaces_bruteforce(5, 2, f);

    for (int t = 0; t <= params.cells() + 1; ++t) {
        CAPTURE(t);
        auto cfg = HybridConfig::make(params, t);
        for (const auto& x : all) {
            long size = vector_to_diagram(x.idvec, x.n, x.k).size();
            if (size >= t) {
                CHECK_THROWS_AS(delta_count(x, params, cfg), std::invalid_argument);
                continue;
            }
            BigCount expect = 0;
            for (const auto& y : all) {
                if (vector_to_diagram(y.idvec, y.n, y.k).size() < t) continue;
                if (compare_extended(x, y) == std::strong_ordering::less) ++expect;
            }
            CHECK(delta_count(x, params, cfg) == expect);
        }
    }
}

TEST_CASE("hybrid scheme is a bijection for every threshold on G_2(5,2)") {
    GrassmannParams params(5, 2, 2);
    auto f = build_field(2);
    auto all = oracle::all_subspaces_bruteforce(5, 2, f);

    for (int t = 0; t <= params.cells() + 1; ++t) {
        CAPTURE(t);
        auto cfg = HybridConfig::make(params, t);
        std::set<BigIndex> seen;
        for (const auto& x : all) {
            BigIndex i = encode_hybrid(x, params, cfg);
            CHECK(i >= 0);
            CHECK(i < params.total());
            CHECK(decode_hybrid(i, params, cfg) == x);
            seen.insert(i);
        }
        CHECK(seen.size() == all.size());
    }
}

TEST_CASE("default hybrid threshold covers at least nine tenths by the tableaux side") {
    GrassmannParams params(5, 2, 2);
    int t = HybridConfig::default_threshold(params);
    CHECK(t == 3);  // suffix sums: 144 of 155 at t=3, 128 at t=4
    auto cfg = HybridConfig::make(params, t);
    CHECK(10 * cfg.block >= 9 * params.total());
    auto tighter = HybridConfig::make(params, t + 1);
    CHECK(10 * tighter.block < 9 * params.total());
}

TEST_CASE("hybrid threshold range errors") {
    GrassmannParams params(4, 2, 2);
    CHECK_THROWS_AS(HybridConfig::make(params, -1), std::out_of_range);
    CHECK_THROWS_AS(HybridConfig::make(params, params.cells() + 2), std::out_of_range);
    auto cfg = HybridConfig::make(params, 2);
    CHECK_THROWS_AS(decode_hybrid(params.total(), params, cfg), std::out_of_range);
}
