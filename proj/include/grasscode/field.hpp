#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace grasscode {

using Elem = std::uint8_t;

namespace detail {

// Polynomial helpers over F_p, coefficient vectors indexed by degree.
// Used only while building extension-field tables.

inline std::vector<int> poly_mod(std::vector<int> r, const std::vector<int>& g, int p) {
    // g monic; reduce r modulo g.
    while (r.size() >= g.size()) {
        int lead = r.back();
        if (lead != 0) {
            std::size_t shift = r.size() - g.size();
            for (std::size_t i = 0; i < g.size(); ++i) {
                int v = (r[shift + i] - lead * g[i]) % p;
                r[shift + i] = v < 0 ? v + p : v;
            }
        }
        r.pop_back();
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

inline bool poly_divides(const std::vector<int>& g, const std::vector<int>& f, int p) {
    return poly_mod(f, g, p).empty();
}

}  // namespace detail

// Arithmetic tables for F_q, q = p^e a prime power, 2 <= q <= 256. Elements
// are the integers 0..q-1; for e > 1 the integer's base-p digits are the
// coefficients of a polynomial over F_p, reduced modulo a fixed irreducible
// polynomial (the one of least integer encoding, so the representation is
// reproducible across runs). Immutable after construction.
class FieldTable {
public:
    static FieldTable make(int q);

    int q() const { return q_; }
    int p() const { return p_; }
    int e() const { return e_; }

    Elem add(Elem a, Elem b) const {
        check(a);
        check(b);
        return add_[std::size_t(a) * q_ + b];
    }
    Elem mul(Elem a, Elem b) const {
        check(a);
        check(b);
        return mul_[std::size_t(a) * q_ + b];
    }
    Elem neg(Elem a) const {
        check(a);
        return neg_[a];
    }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem inv(Elem a) const {
        check(a);
        if (a == 0) throw std::invalid_argument("FieldTable::inv: zero has no inverse");
        return inv_[a];
    }

    // Coefficients of the modulus polynomial, degree-ascending, including the
    // leading 1. For prime fields this is empty.
    const std::vector<int>& modulus() const { return modulus_; }

private:
    FieldTable() = default;

    void check(Elem a) const {
        if (a >= q_) throw std::invalid_argument("FieldTable: element out of range");
    }

    int q_ = 0, p_ = 0, e_ = 0;
    std::vector<Elem> add_, mul_, neg_, inv_;
    std::vector<int> modulus_;
};

inline FieldTable FieldTable::make(int q) {
    if (q < 2 || q > 256) throw std::out_of_range("FieldTable: q must be in [2, 256]");

    int p = 0;
    for (int d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) p = q;
    int e = 0, t = q;
    while (t % p == 0) {
        t /= p;
        ++e;
    }
    if (t != 1) throw std::invalid_argument("FieldTable: q is not a prime power");

    FieldTable f;
    f.q_ = q;
    f.p_ = p;
    f.e_ = e;

    if (e > 1) {
        // Lexicographically least monic irreducible of degree e over F_p:
        // scan candidates by the integer encoding of their low coefficients.
        for (int c = 0;; ++c) {
            if (c >= q) throw std::logic_error("FieldTable: no irreducible polynomial found");
            std::vector<int> cand(e + 1, 0);
            cand[e] = 1;
            for (int i = 0, v = c; i < e; ++i, v /= p) cand[i] = v % p;
            bool irreducible = true;
            // Trial division by every monic polynomial of degree 1..e/2.
            for (int d = 1; d <= e / 2 && irreducible; ++d) {
                int count = 1;
                for (int i = 0; i < d; ++i) count *= p;
                for (int g = 0; g < count && irreducible; ++g) {
                    std::vector<int> div(d + 1, 0);
                    div[d] = 1;
                    for (int i = 0, v = g; i < d; ++i, v /= p) div[i] = v % p;
                    if (detail::poly_divides(div, cand, p)) irreducible = false;
                }
            }
            if (irreducible) {
                f.modulus_ = cand;
                break;
            }
        }
    }

    auto digits = [&](int a) {
        std::vector<int> d(e, 0);
        for (int i = 0; i < e; ++i, a /= p) d[i] = a % p;
        return d;
    };
    auto undigits = [&](const std::vector<int>& d) {
        int a = 0;
        for (int i = int(d.size()) - 1; i >= 0; --i) a = a * p + d[std::size_t(i)];
        return a;
    };

    f.add_.resize(std::size_t(q) * q);
    f.mul_.resize(std::size_t(q) * q);
    f.neg_.resize(q);
    f.inv_.assign(q, 0);

    for (int a = 0; a < q; ++a) {
        auto da = digits(a);
        std::vector<int> dn(e);
        for (int i = 0; i < e; ++i) dn[i] = (p - da[std::size_t(i)]) % p;
        f.neg_[a] = Elem(undigits(dn));
        for (int b = 0; b < q; ++b) {
            auto db = digits(b);
            std::vector<int> ds(e);
            for (int i = 0; i < e; ++i) ds[i] = (da[std::size_t(i)] + db[std::size_t(i)]) % p;
            f.add_[std::size_t(a) * q + b] = Elem(undigits(ds));

            std::vector<int> prod(std::size_t(2 * e - 1), 0);
            for (int i = 0; i < e; ++i)
                for (int j = 0; j < e; ++j)
                    prod[std::size_t(i + j)] = (prod[std::size_t(i + j)] + da[std::size_t(i)] * db[std::size_t(j)]) % p;
            if (e > 1) prod = detail::poly_mod(std::move(prod), f.modulus_, p);
            prod.resize(e, 0);
            f.mul_[std::size_t(a) * q + b] = Elem(undigits(prod));
        }
    }

    for (int a = 1; a < q; ++a) {
        for (int b = 1; b < q; ++b) {
            if (f.mul_[std::size_t(a) * q + b] == 1) {
                f.inv_[a] = Elem(b);
                break;
            }
        }
        if (f.inv_[a] == 0) throw std::logic_error("FieldTable: missing inverse, table is not a field");
    }

    return f;
}

inline FieldTable build_field(int q) { return FieldTable::make(q); }

}  // namespace grasscode
