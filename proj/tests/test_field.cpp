#include <catch2/catch_amalgamated.hpp>

#include "grasscode/field.hpp"

using namespace grasscode;

TEST_CASE("binary field is xor/and") {
    auto f = build_field(2);
    CHECK(f.p() == 2);
    CHECK(f.e() == 1);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            CHECK(f.add(Elem(a), Elem(b)) == (a ^ b));
            CHECK(f.mul(Elem(a), Elem(b)) == (a & b));
        }
    CHECK(f.add(1, 1) == 0);
}

TEST_CASE("prime field arithmetic is mod p") {
    auto f = build_field(3);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            CHECK(f.add(Elem(a), Elem(b)) == (a + b) % 3);
            CHECK(f.mul(Elem(a), Elem(b)) == (a * b) % 3);
        }
    CHECK(f.inv(2) == 2);
}

TEST_CASE("GF(4) uses x^2 + x + 1") {
    auto f = build_field(4);
    CHECK(f.p() == 2);
    CHECK(f.e() == 2);
    CHECK(f.modulus() == std::vector<int>{1, 1, 1});
    CHECK(f.mul(2, 2) == 3);
    CHECK(f.inv(2) == 3);  // by exhaustive search, 2 * 3 = x(x+1) = x^2 + x = 1
    CHECK(f.mul(2, 3) == 1);
}

TEST_CASE("rejects non prime powers and out-of-range orders") {
    CHECK_THROWS_AS(build_field(1), std::out_of_range);
    CHECK_THROWS_AS(build_field(257), std::out_of_range);
    CHECK_THROWS_AS(build_field(6), std::invalid_argument);
    CHECK_THROWS_AS(build_field(12), std::invalid_argument);
    CHECK_NOTHROW(build_field(256));
    CHECK_NOTHROW(build_field(243));
}

TEST_CASE("inverse of zero and out-of-range elements are errors") {
    auto f = build_field(5);
    CHECK_THROWS_AS(f.inv(0), std::invalid_argument);
    CHECK_THROWS_AS(f.add(5, 0), std::invalid_argument);
    CHECK_THROWS_AS(f.mul(0, 7), std::invalid_argument);
}

TEST_CASE("field axioms hold exhaustively for every q <= 16") {
    for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
        CAPTURE(q);
        auto f = build_field(q);

        for (int a = 0; a < q; ++a) {
            CHECK(f.add(Elem(a), 0) == a);
            CHECK(f.mul(Elem(a), 1) == a);
            CHECK(f.mul(Elem(a), 0) == 0);
            CHECK(f.add(Elem(a), f.neg(Elem(a))) == 0);
            if (a != 0) CHECK(f.mul(Elem(a), f.inv(Elem(a))) == 1);
        }
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b) {
                CHECK(f.add(Elem(a), Elem(b)) == f.add(Elem(b), Elem(a)));
                CHECK(f.mul(Elem(a), Elem(b)) == f.mul(Elem(b), Elem(a)));
            }
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b)
                for (int c = 0; c < q; ++c) {
                    CHECK(f.add(f.add(Elem(a), Elem(b)), Elem(c)) == f.add(Elem(a), f.add(Elem(b), Elem(c))));
                    CHECK(f.mul(f.mul(Elem(a), Elem(b)), Elem(c)) == f.mul(Elem(a), f.mul(Elem(b), Elem(c))));
                    CHECK(f.mul(Elem(a), f.add(Elem(b), Elem(c))) ==
                          f.add(f.mul(Elem(a), Elem(b)), f.mul(Elem(a), Elem(c))));
                }
    }
}

TEST_CASE("Frobenius: a^q = a for every q <= 16") {
    for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
        CAPTURE(q);
        auto f = build_field(q);
        for (int a = 0; a < q; ++a) {
            Elem pow = 1;
            for (int i = 0; i < q; ++i) pow = f.mul(pow, Elem(a));
            CHECK(pow == a);
        }
    }
}

TEST_CASE("subtraction inverts addition") {
    for (int q : {4, 9, 8}) {
        auto f = build_field(q);
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b)
                CHECK(f.sub(f.add(Elem(a), Elem(b)), Elem(b)) == a);
    }
}
