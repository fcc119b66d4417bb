#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "invar/gf2.hpp"

using namespace invar;

namespace {

const Ring wt({"w", "t"});
const Ring xyz({"x", "y", "z"});

Polynomial P(const std::string& s, const Ring& r = wt) { return parse_polynomial(s, r); }

// Term-by-term oracle: exponent vectors with integer counts, reduced mod 2.
std::map<std::vector<int>, int> expand_oracle(const Polynomial& a, const Polynomial& b, int n) {
    std::map<std::vector<int>, int> acc;
    for (Monomial x : a.terms())
        for (Monomial y : b.terms()) {
            std::vector<int> e(n);
            for (int i = 0; i < n; ++i) e[i] = x.exp(i) + y.exp(i);
            acc[e] += 1;
        }
    std::map<std::vector<int>, int> out;
    for (auto& [e, c] : acc)
        if (c % 2) out[e] = 1;
    return out;
}

std::map<std::vector<int>, int> as_map(const Polynomial& p, int n) {
    std::map<std::vector<int>, int> out;
    for (Monomial m : p.terms()) out[m.exponents(n)] = 1;
    return out;
}

Polynomial random_poly(std::mt19937_64& rng, int n, int maxdeg, int terms) {
    std::vector<Monomial> t;
    for (int i = 0; i < terms; ++i) {
        std::vector<int> e(n);
        int budget = int(rng() % (maxdeg + 1));
        for (int j = 0; j < n && budget; ++j) {
            int x = int(rng() % (budget + 1));
            e[j] = x;
            budget -= x;
        }
        t.push_back(Monomial::from_exponents(e));
    }
    return Polynomial::from_terms(t);
}

BitVec random_vec(std::mt19937_64& rng, size_t n) {
    BitVec v(n);
    for (size_t i = 0; i < n; ++i)
        if (rng() & 1) v.set(i);
    return v;
}

Subspace random_space(std::mt19937_64& rng, size_t n) {
    std::vector<BitVec> g;
    size_t k = rng() % (n + 1);
    for (size_t i = 0; i < k; ++i) g.push_back(random_vec(rng, n));
    return Subspace::span(n, g);
}

// All vectors of the span, by enumerating every subset of the basis.
std::set<std::string> enumerate(const Subspace& s) {
    std::set<std::string> out;
    for (uint64_t mask = 0; mask < (uint64_t(1) << s.dim()); ++mask) {
        BitVec v(s.ambient());
        for (size_t i = 0; i < s.dim(); ++i)
            if (mask >> i & 1) v ^= s.basis_vec(i);
        out.insert(v.to_string());
    }
    return out;
}

size_t log2_exact(size_t x) {
    size_t k = 0;
    while ((size_t(1) << k) < x) ++k;
    REQUIRE((size_t(1) << k) == x);
    return k;
}

}  // namespace

TEST_CASE("polynomial addition is symmetric difference") {
    Polynomial p = P("w^2+t*w+t^2");
    CHECK((p + p).is_zero());
    CHECK(p + Polynomial() == p);
    CHECK(to_string(p + P("t*w"), wt) == "w^2+t^2");
}

TEST_CASE("polynomial multiplication") {
    CHECK(to_string(P("(w+t)^2"), wt) == "w^2+t^2");
    Polynomial d2 = P("w^2+t*w+t^2"), d3 = P("w^2*t+w*t^2");
    CHECK(to_string(d2 * d3, wt) == "w^4*t+w*t^4");
    CHECK(as_map(d2 * d3, 2) == expand_oracle(d2, d3, 2));
    CHECK(Polynomial::one() * d2 == d2);
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 200; ++it) {
        Polynomial p = random_poly(rng, 3, 6, 8), q = random_poly(rng, 3, 6, 8), r = random_poly(rng, 3, 6, 8);
        CHECK((p + p).is_zero());
        CHECK(p * (q + r) == p * q + p * r);
        CHECK((p + q).pow(2) == p.square() + q.square());
        CHECK(as_map(p * q, 3) == expand_oracle(p, q, 3));
    }
}

TEST_CASE("dense homogeneous product path agrees with the oracle") {
    std::mt19937_64 rng(11);
    Slice s(4, 12);
    for (int it = 0; it < 5; ++it) {
        BitVec a = random_vec(rng, s.size()), b = random_vec(rng, s.size());
        Polynomial p = s.to_poly(a), q = s.to_poly(b);
        REQUIRE(p.size() * q.size() > 4096);
        CHECK(as_map(p * q, 4) == expand_oracle(p, q, 4));
    }
}

TEST_CASE("exact division") {
    Polynomial d2 = P("w^2+t*w+t^2"), d3 = P("w^2*t+w*t^2");
    CHECK(exact_divide(d2 * d3, d3) == d2);
    CHECK_THROWS(exact_divide(d2, d3));
}

TEST_CASE("canonical text") {
    CHECK(to_string(Polynomial(), wt) == "0");
    CHECK(to_string(Polynomial::one(), wt) == "1");
    Polynomial p = P("t*w + w^2*t + 1");
    CHECK(to_string(p, wt) == "w^2*t+w*t+1");
    CHECK(parse_polynomial(to_string(p, wt), wt) == p);
    CHECK_THROWS_AS(P("w+q"), ParseError);
    CHECK_THROWS_AS(P("w+"), ParseError);
    SymbolTable sym{{"d2", P("w^2+w*t+t^2")}};
    CHECK(parse_polynomial("t*(t+w)", wt, &sym) == parse_polynomial("d2+w^2", wt, &sym));
}

TEST_CASE("monomial basis sizes and order") {
    CHECK(monomial_basis(4, 8).size() == 165);
    CHECK(monomial_basis(3, 2).size() == 6);
    auto one = monomial_basis(1, 5);
    REQUIRE(one.size() == 1);
    CHECK(to_string(one[0], Ring({"x"})) == "x^5");
    for (int n = 1; n <= 6; ++n)
        for (int d = 0; d <= 20; ++d) {
            auto b = monomial_basis(n, d);
            CHECK(b.size() == binomial(d + n - 1, n - 1));
            for (size_t i = 1; i < b.size(); ++i) CHECK(b[i] < b[i - 1]);
            for (Monomial m : b) CHECK(m.degree() == d);
        }
}

TEST_CASE("slice index round trip") {
    for (int n = 1; n <= 5; ++n)
        for (int d = 0; d <= 12; ++d) {
            Slice s(n, d);
            for (size_t i = 0; i < s.size(); ++i) CHECK(s.index(s.at(i)) == i);
        }
    CHECK(Slice(4, 45).size() == 17296);
}

TEST_CASE("kernel, intersection and membership") {
    CHECK(kernel(BitMatrix::identity(9)).dim() == 0);
    Subspace u = Subspace::full(5);
    CHECK(intersect(u, u) == u);
    CHECK_THROWS_AS(intersect(Subspace(4), Subspace(5)), DimensionMismatch);
    CHECK_THROWS_AS(kernel(BitMatrix(3, 4)).contains(BitVec(5)), DimensionMismatch);
    CHECK_THROWS_AS(u.contains(BitVec(6)), DimensionMismatch);
}

TEST_CASE("intersection and sum dimensions match exhaustive enumeration") {
    std::mt19937_64 rng(2024);
    for (int it = 0; it < 300; ++it) {
        size_t n = 1 + rng() % 12;
        Subspace u = random_space(rng, n), v = random_space(rng, n), w = random_space(rng, n);
        auto eu = enumerate(u), ev = enumerate(v);
        std::set<std::string> common;
        for (const auto& x : eu)
            if (ev.count(x)) common.insert(x);
        Subspace i = intersect(u, v);
        CHECK(i.dim() == log2_exact(common.size()));
        CHECK(enumerate(i) == common);
        CHECK(i.dim() + sum(u, v).dim() == u.dim() + v.dim());
        CHECK(intersect(v, u) == i);
        CHECK(intersect(intersect(u, v), w) == intersect(u, intersect(v, w)));
        CHECK(intersect(u, u) == u);
    }
}

TEST_CASE("kernel matches brute force") {
    std::mt19937_64 rng(5);
    for (int it = 0; it < 100; ++it) {
        size_t r = 1 + rng() % 8, c = 1 + rng() % 10;
        BitMatrix m(r, c);
        for (size_t i = 0; i < r; ++i) m.set_row(i, random_vec(rng, c));
        Subspace k = kernel(m);
        size_t count = 0;
        for (uint64_t x = 0; x < (uint64_t(1) << c); ++x) {
            BitVec v(c);
            for (size_t j = 0; j < c; ++j)
                if (x >> j & 1) v.set(j);
            bool zero = m.apply(v).is_zero();
            count += zero;
            CHECK(k.contains(v) == zero);
        }
        CHECK((size_t(1) << k.dim()) == count);
        Subspace lk = left_kernel(m);
        for (size_t i = 0; i < lk.dim(); ++i) CHECK(m.transpose().apply(lk.basis_vec(i)).is_zero());
    }
}

TEST_CASE("transpose agrees with element-wise definition") {
    std::mt19937_64 rng(9);
    for (size_t r : {1, 63, 64, 65, 130})
        for (size_t c : {1, 64, 70, 129}) {
            BitMatrix m(r, c);
            for (size_t i = 0; i < r; ++i) m.set_row(i, random_vec(rng, c));
            BitMatrix t = m.transpose();
            REQUIRE(t.rows() == c);
            for (size_t i = 0; i < r; ++i)
                for (size_t j = 0; j < c; ++j) CHECK(m.get(i, j) == t.get(j, i));
        }
}

TEST_CASE("echelon builder certificates") {
    std::mt19937_64 rng(3);
    EchelonBuilder eb(40);
    std::vector<BitVec> accepted;
    for (int i = 0; i < 30; ++i) {
        BitVec v = random_vec(rng, 40);
        if (eb.insert(v)) accepted.push_back(v);
    }
    for (int i = 0; i < 50; ++i) {
        BitVec v = random_vec(rng, 40);
        auto e = eb.express(v);
        CHECK(e.has_value() == eb.contains(v));
        if (e) {
            BitVec s(40);
            for (size_t j : *e) s ^= accepted[j];
            CHECK(s == v);
        }
    }
    CHECK(eb.subspace().dim() == eb.rank());
}
