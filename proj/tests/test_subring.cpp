#include <doctest.h>

#include <random>

#include "invar/catalog.hpp"
#include "invar/rings.hpp"
#include "invar/subring.hpp"

using namespace invar;

namespace {

Polynomial sym(const std::string& text) { return parse_polynomial(text, wtz_symbols().ring); }

Polynomial val(const std::string& text) { return wtz_symbols().evaluate(sym(text)); }

Subalgebra ring(const std::string& name) { return *named_subring(name); }

std::vector<std::string> expressed_text(ModulePresentation& m, const std::vector<Polynomial>& symbolic) {
    std::vector<std::string> out;
    for (const auto& s : symbolic) {
        auto e = m.express(m.symbols().evaluate(s));
        REQUIRE(e);
        out.push_back(m.format(*e));
    }
    return out;
}

void check_equal_through(Subalgebra& a, Subalgebra& b, int bound) {
    for (int d = 0; d <= bound; ++d) {
        CAPTURE(d);
        CHECK(a.slice(d) == b.slice(d));
    }
}

}  // namespace

TEST_CASE("subalgebra slices by exponent enumeration") {
    Subalgebra d = ring("dickson_gl3");
    CHECK(d.dim(0) == 1);
    CHECK(d.dim(7) == 1);
    CHECK(d.dim(12) == 2);
    auto fc = free_counts({4, 6, 7}, 30);
    for (int k = 0; k <= 30; ++k) CHECK(d.dim(k) == fc[k]);
    CHECK(subalgebra_dims(3, d.generators(), 30) == d.dims(30));
    CHECK(d.describe() == "F2[d4, d6, d7]");
    CHECK(ring("gl3_intersection").describe() == "F2[d4^2, d6^2, d7](1, d4*d7, d6*d7, d4*d6*d7)");
}

TEST_CASE("subalgebra caches agree with a fresh computation and grow with generators") {
    Subalgebra a = ring("d4_d6");
    for (int d = 30; d >= 0; --d) a.slice(d);
    Subalgebra b = ring("d4_d6");
    Subalgebra big = ring("dickson_gl3");
    for (int d = 0; d <= 30; ++d) {
        CHECK(a.slice(d) == b.slice(d));
        CHECK(intersect(a.slice(d), big.slice(d)) == a.slice(d));
    }
}

TEST_CASE("membership with certificates") {
    Subalgebra r = ring("appendix_intersection");
    Polynomial d2d3 = val("d2*d3");
    auto cert = r.certificate(d2d3);
    REQUIRE(cert);
    Polynomial sum;
    for (const auto& p : *cert) sum += r.evaluate(p);
    CHECK(sum == d2d3);
    CHECK(r.contains(Polynomial()));
    CHECK(r.contains(val("d2*d3*d4")));
    CHECK_FALSE(r.contains(val("d2")));
    CHECK_FALSE(ring("gl3_intersection").contains(val("d4")));
    CHECK(ring("gl3_intersection").contains(val("d4*d7")));
    CHECK_THROWS(r.certificate(val("d2") + val("d3")));
}

TEST_CASE("wtz relations") {
    for (const auto& c : wtz_relations()) {
        CAPTURE(c.description);
        CHECK(c.holds);
    }
    // The unparenthesized reading of the second relation is false.
    CHECK_FALSE(check_identity("w^2 + t*(t+w)*d3*d4", "d2*d3*d4", wtz_symbols()).holds);
}

TEST_CASE("w tower: free over F2[d2, d3] and the power expressions") {
    ModulePresentation m = w_tower();
    CHECK(m.verify_free(30));
    auto e = expressed_text(m, w_powers(5));
    CHECK(e[0] == "[1]");
    CHECK(e[1] == "[w]");
    CHECK(e[3] == "d3*[1] + d2*[w]");
    CHECK(e[4] == "d3*[w] + d2*[w^2]");
    // w^5 carries a d3*w^2 term; w^5 + d2^2*w + d2*d3 = 0 alone does not hold.
    CHECK(e[5] == "d2*d3*[1] + d2^2*[w] + d3*[w^2]");
    CHECK_FALSE(check_identity("w^5 + d2^2*w", "d2*d3", wtz_symbols()).holds);
    CHECK(m.express(val("t")) == std::nullopt);
}

TEST_CASE("twelve tower is free and re-expansion is the identity") {
    ModulePresentation m = twelve_tower();
    CHECK(m.rank() == 12);
    CHECK(m.verify_free(24));
    std::mt19937_64 rng(7);
    std::vector<Polynomial> base{sym("d2^2"), sym("d3"), sym("d4^2")};
    std::vector<int> bdeg{4, 3, 8};
    for (ModulePresentation* tower : {&m}) {
        for (int trial = 0; trial < 200; ++trial) {
            int d = 1 + int(rng() % 20);
            std::vector<Polynomial> coeffs(tower->rank());
            for (size_t i = 0; i < tower->rank(); ++i) {
                int left = d - val(tower->basis_names()[i]).degree();
                if (left < 0 || rng() % 2) continue;
                for (int a = 0; 4 * a <= left; ++a)
                    for (int b = 0; 4 * a + 3 * b <= left; ++b) {
                        int rest = left - 4 * a - 3 * b;
                        if (rest % 8 || rng() % 2) continue;
                        coeffs[i] += base[0].pow(a) * base[1].pow(b) * base[2].pow(rest / 8);
                    }
            }
            Polynomial p = tower->expand(coeffs);
            auto e = tower->express(p);
            REQUIRE(e);
            CHECK(*e == coeffs);
            CHECK(tower->expand(*e) == p);
        }
    }
}

TEST_CASE("w tower re-expansion on random elements") {
    ModulePresentation m = w_tower();
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        int d = int(rng() % 21);
        std::vector<Polynomial> coeffs(3);
        for (int i = 0; i < 3; ++i)
            for (int b = 0; 3 * b <= d - i; ++b)
                if ((d - i - 3 * b) % 2 == 0 && rng() % 2)
                    coeffs[i] += sym("d2").pow((d - i - 3 * b) / 2) * sym("d3").pow(b);
        Polynomial p = m.expand(coeffs);
        auto e = m.express(p);
        REQUIRE(e);
        CHECK(*e == coeffs);
    }
}

TEST_CASE("reduce_generators on powers of w") {
    ModulePresentation m = twelve_tower();
    std::vector<Polynomial> gens;
    for (const auto& s : w_powers(5)) gens.push_back(m.symbols().evaluate(s));
    auto r = reduce_generators(gens, m);
    CHECK(r.expressed_text[3] == "d3*[1] + [w*d2]");
    CHECK(r.retained_text == std::vector<std::string>{"[1]", "[w]", "[w^2]", "[w*d2]", "[w^2*d2]", "d3*[d2]"});
    CHECK(expressed_text(m, reduced_w_generators()) == r.retained_text);

    auto one = reduce_generators({Polynomial::one()}, m);
    CHECK(one.retained_text == std::vector<std::string>{"[1]"});
    CHECK_THROWS_AS(reduce_generators({val("t")}, m), std::invalid_argument);
}

TEST_CASE("the 24 triple products in the twelve basis") {
    ModulePresentation m = twelve_tower();
    auto products = triple_products(reduced_w_generators());
    REQUIRE(products.size() == 24);
    std::vector<std::string> want = {
        "[1]", "[w]", "[w^2]", "[w*d2]", "[w^2*d2]", "d3*[d2]",
        "d3*[d4]", "d3*[w*d4]", "d3*[w^2*d4]", "d3*[w*d2*d4]", "d3*[w^2*d2*d4]", "d3^2*[d2*d4]",
        "d3*[d2*d4]", "d3*[w*d2*d4]", "d3*[w^2*d2*d4]", "d2^2*d3*[w*d4]", "d2^2*d3*[w^2*d4]", "d2^2*d3^2*[d4]",
        "d3^2*d4^2*[d2]", "d3^2*d4^2*[w*d2]", "d3^2*d4^2*[w^2*d2]", "d2^2*d3^2*d4^2*[w]", "d2^2*d3^2*d4^2*[w^2]",
        "d2^2*d3^3*d4^2*[1]",
    };
    std::vector<Polynomial> ambient;
    for (const auto& p : products) ambient.push_back(m.symbols().evaluate(p));
    auto r = reduce_generators(ambient, m);
    CHECK(r.expressed_text == want);
    // Entries that are R-multiples of earlier single-term entries drop out.
    CHECK(r.retained.size() < 24);
    for (const auto& t : r.retained) {
        size_t terms = 0;
        for (const auto& c : t) terms += c.size();
        CHECK(terms == 1);
    }
}

TEST_CASE("the 24 products generate the image ring as a module over R") {
    auto products = triple_products(reduced_w_generators());
    std::vector<Polynomial> mods;
    for (const auto& p : products) mods.push_back(wtz_symbols().evaluate(p));
    Subalgebra span(3, {val("d2^2"), val("d3"), val("d4^2")}, mods);
    Subalgebra u = ring("image_ring");
    Subalgebra u2 = ring("image_ring_d2");
    check_equal_through(span, u, 30);
    check_equal_through(u, u2, 30);
}

TEST_CASE("ideal intersection agrees with per-degree intersection") {
    ModulePresentation m = twelve_tower();
    std::vector<Polynomial> u;
    for (const auto& p : triple_products(reduced_w_generators())) u.push_back(m.symbols().evaluate(p));
    auto r = intersect_by_ideals(m, u, 4);
    REQUIRE(r.hypothesis_ok);
    CHECK(r.ideal_text == std::vector<std::string>{"(1)", "(d3)", "(d3)", "(d3)"});
    REQUIRE(r.generators.size() == 4);
    CHECK(r.generators[0] == Polynomial::one());
    CHECK(r.generators[1] == val("d2*d3"));
    CHECK(r.generators[2] == val("d3*d4"));
    CHECK(r.generators[3] == val("d2*d3*d4"));

    Subalgebra from_ideals(3, {val("d2^2"), val("d3"), val("d4^2")}, r.generators);
    Subalgebra a = ring("image_ring"), b = ring("dickson_d2_d3_d4"), c = ring("appendix_intersection");
    auto rep = intersect_subalgebras(a, b, 40, &from_ideals);
    CHECK(rep.equal);
    CHECK(rep.first_mismatch == -1);
    check_equal_through(from_ideals, c, 40);
    // The generated module is a ring: products of generators stay inside.
    for (const auto& x : r.generators)
        for (const auto& y : r.generators) CHECK(c.contains(x * y));
}

TEST_CASE("ideal intersection edge cases") {
    ModulePresentation m = w_tower();
    auto full = intersect_by_ideals(m, {val("1"), val("w"), val("w^2")}, 3);
    REQUIRE(full.hypothesis_ok);
    CHECK(full.ideal_text == std::vector<std::string>{"(1)", "(1)", "(1)"});
    auto mixed = intersect_by_ideals(m, {val("w^3")}, 2);
    CHECK_FALSE(mixed.hypothesis_ok);
    CHECK(mixed.witness == "d3*[1] + d2*[w]");
    CHECK_THROWS(intersect_by_ideals(m, {}, 4));
}

TEST_CASE("intersections of the named rings") {
    Subalgebra a = ring("appendix_intersection"), g = ring("dickson_gl3"), cand = ring("gl3_intersection");
    auto rep = intersect_subalgebras(a, g, 40, &cand);
    CHECK(rep.equal);
    CHECK(rep.candidate_dims == rep.dims);

    Subalgebra d46 = ring("d4_d6"), fs = ring("first_summand"), sq = ring("d4sq_d6sq");
    CHECK(intersect_subalgebras(d46, fs, 40, &sq).equal);

    // The first summand rewritten over F2[d3, d2^2, d4^2].
    Subalgebra fs2 = wtz_subalgebra({"d3", "d2^2", "d4^2"}, {"1", "d2*d3"});
    check_equal_through(fs, fs2, 40);

    Subalgebra a2 = ring("appendix_intersection");
    auto self = intersect_subalgebras(a, a2, 20, &a2);
    CHECK(self.equal);

    // A wrong candidate is caught at its first differing degree.
    Subalgebra wrong = ring("d4_d6");
    auto bad = intersect_subalgebras(a, g, 40, &wrong);
    CHECK_FALSE(bad.equal);
    CHECK(bad.first_mismatch == 4);

    Subalgebra other(4, {Polynomial::var(3)});
    CHECK_THROWS(intersect_subalgebras(a, other, 4));
}

TEST_CASE("integral equations over R") {
    Subalgebra r(3, {val("d2^2"), val("d3"), val("d4^2")});
    SymbolRing s = wtz_symbols();
    auto table = s.table();
    Ring withx({"w", "t", "z", "X"});
    auto eq = [&](const std::string& t) { return parse_polynomial(t, withx, &table); };

    auto w = integral_equation_check(val("w"), r, eq("X^6 + d2^2*X^2 + d3^2"), 3);
    CHECK(w.holds);
    CHECK(w.monic);
    CHECK(integral_equation_check(val("d3*d4"), r, eq("X^2 + d3^2*d4^2"), 3).holds);
    CHECK(integral_equation_check(val("d2*d3*d4"), r, eq("X^2 + d2^2*d3^2*d4^2"), 3).holds);

    auto wrong = integral_equation_check(val("w"), r, eq("X^6 + d2^2*X^2"), 3);
    CHECK_FALSE(wrong.holds);
    CHECK(wrong.remainder == val("d3^2"));
    // X + w vanishes at w but w is not in R.
    auto outside = integral_equation_check(val("w"), r, eq("X + w"), 3);
    CHECK(outside.remainder.is_zero());
    CHECK_FALSE(outside.coefficients_in_ring);
    CHECK_FALSE(integral_equation_check(val("w"), r, eq("d3*X + d3*w"), 3).monic);
}
