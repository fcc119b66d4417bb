#include <doctest.h>

#include <algorithm>
#include <random>

#include "invar/catalog.hpp"
#include "invar/invariant.hpp"

using namespace invar;

namespace {

// Substitution by plain polynomial arithmetic, independent of act_on_poly.
Polynomial substitute_naive(const MatF2& g, Monomial m) {
    Polynomial out = Polynomial::one();
    for (int i = 0; i < g.n(); ++i) {
        Polynomial lin;
        for (int j = 0; j < g.n(); ++j)
            if (g.get(j, i)) lin += Polynomial::var(j);
        for (int e = 0; e < m.exp(i); ++e) out = out * lin;
    }
    return out;
}

// Fixed space as the common kernel of (g - 1) over all generators, built densely.
Subspace naive_fixed(int n, const std::vector<MatF2>& gens, int d) {
    Slice s(n, d);
    const size_t N = s.size();
    BitMatrix m(gens.size() * N, N);
    for (size_t k = 0; k < gens.size(); ++k)
        for (size_t c = 0; c < N; ++c) {
            BitVec img = s.to_vec(substitute_naive(gens[k], s.at(c)));
            img.flip(c);
            for (size_t r : img.ones()) m.set(k * N + r, c);
        }
    return kernel(m);
}

std::vector<Polynomial> l3_primaries() {
    auto d3 = dickson(3), d4 = dickson(4);
    return {d3[2].poly, d3[1].poly, d3[0].poly, d4[3].poly};  // d4, d6, d7, d8
}

std::vector<size_t> to_sizes(const std::vector<uint64_t>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("slice action matrix agrees with substitution") {
    std::mt19937_64 rng(7);
    auto gl4 = general_linear_group(4);
    for (int trial = 0; trial < 40; ++trial) {
        const MatF2& g = gl4[rng() % gl4.size()];
        int d = int(rng() % 7);
        Slice s(4, d);
        BitMatrix r = slice_action_matrix(g, d);
        for (size_t i = 0; i < s.size(); ++i) {
            BitVec v(s.size());
            v.set(i);
            REQUIRE(s.to_poly(row_times(v, r)) == substitute_naive(g, s.at(i)));
        }
    }
}

TEST_CASE("slice action matrix reverses products") {
    auto gl3 = general_linear_group(3);
    const MatF2 &g = gl3[17], &h = gl3[101];
    for (int d : {2, 5}) CHECK(slice_action_matrix(g * h, d) == slice_action_matrix(h, d) * slice_action_matrix(g, d));
}

TEST_CASE("trivial group fixes every monomial") {
    auto dims = invariant_dims(3, {MatF2::identity(3)}, 12);
    for (int d = 0; d <= 12; ++d) CHECK(dims[d] == binomial(d + 2, 2));
}

TEST_CASE("fixed spaces match a dense kernel oracle") {
    auto l3 = l3_2_on_2_4();
    FixedSpaceEngine e(4, l3.gens);
    CHECK(e.group_order() == 168);
    for (int d = 0; d <= 10; ++d) CHECK(e.fixed(d) == naive_fixed(4, l3.gens, d));

    std::mt19937_64 rng(11);
    auto gl4 = general_linear_group(4);
    for (int trial = 0; trial < 12; ++trial) {
        std::vector<MatF2> gens{gl4[rng() % gl4.size()], gl4[rng() % gl4.size()]};
        FixedSpaceEngine f(4, gens);
        for (int d : {3, 6}) CHECK(f.fixed(d) == naive_fixed(4, gens, d));
    }
}

TEST_CASE("fixed basis polynomials are invariant") {
    auto l3 = l3_2_on_2_4();
    FixedSpaceEngine e(4, l3.gens);
    for (int d : {8, 12, 21})
        for (const auto& p : e.basis(d)) CHECK(is_invariant(l3.gens, p));
}

TEST_CASE("L3(2) invariant dimensions through degree 13") {
    auto l3 = l3_2_on_2_4();
    std::vector<size_t> want{1, 0, 0, 0, 1, 0, 1, 1, 3, 1, 2, 2, 5, 3};
    CHECK(invariant_dims(4, l3.gens, 13) == want);
}

TEST_CASE("GL3 invariants are the Dickson algebra in degrees 4, 6, 7") {
    auto gl3 = general_linear_group(3);
    FixedSpaceEngine e(3, gl3);
    CHECK(e.group_order() == 168);
    CHECK(invariant_dims(e, 20) == to_sizes(free_counts({4, 6, 7}, 20)));
}

TEST_CASE("Dickson invariants") {
    for (int n = 1; n <= 4; ++n) {
        auto d = dickson(n);
        REQUIRE(int(d.size()) == n);
        auto gl = general_linear_group(n);
        for (int i = 0; i < n; ++i) {
            CHECK(d[i].degree == (1 << n) - (1 << i));
            CHECK(d[i].poly.degree() == d[i].degree);
            for (size_t k = 0; k < gl.size(); k += (n == 4 ? 997 : 1)) CHECK(act_on_poly(gl[k], d[i].poly) == d[i].poly);
        }
        // The lowest coefficient is the product of all nonzero linear forms.
        Polynomial prod = Polynomial::one();
        for (int l = 1; l < (1 << n); ++l) {
            Polynomial f;
            for (int j = 0; j < n; ++j)
                if (l >> j & 1) f += Polynomial::var(j);
            prod *= f;
        }
        CHECK(d[0].poly == prod);
    }
    Ring r({"w", "t"});
    auto d2 = dickson(2);
    CHECK(to_string(d2[1].poly, r) == "w^2+w*t+t^2");
    CHECK(d2[0].poly == parse_polynomial("w*t*(w+t)", r));
    CHECK(dickson(3)[2].poly == wtz_classes().d4);
}

TEST_CASE("relative Dickson identities") {
    for (int n = 1; n <= 4; ++n) {
        auto id = relative_dickson_top(n);
        CHECK_MESSAGE(id.holds, id.description);
    }
    CHECK(relative_dickson_top(4).description == "d8 = x3^8 + x3^4*d4 + x3^2*d6 + x3*d7 + d4^2");
    CHECK(relative_dickson_top(3).description == "d4 = x2^4 + x2^2*d2 + x2*d3 + d2^2");
    CHECK(relative_dickson_top(2).description == "d2 = x1^2 + x1*d1 + d1^2");
}

TEST_CASE("free counts") {
    CHECK(free_counts({1, 1}, 4) == std::vector<uint64_t>{1, 2, 3, 4, 5});
    std::vector<uint64_t> want{1, 0, 0, 0, 1, 0, 1, 1, 2, 0, 1, 1, 3, 1};
    CHECK(free_counts({4, 6, 7, 8}, 13) == want);
}

TEST_CASE("primary invariants form an algebraically independent set") {
    auto prim = l3_primaries();
    auto l3 = l3_2_on_2_4();
    for (const auto& p : prim) CHECK(is_invariant(l3.gens, p));
    auto h = validate_hsop(4, prim, 30);
    CHECK(h.ok);
    std::vector<size_t> want{1, 0, 0, 0, 1, 0, 1, 1, 2, 0, 1, 1, 3, 1};
    CHECK(std::vector<size_t>(h.dims.begin(), h.dims.begin() + 14) == want);

    auto bad = validate_hsop(4, {prim[0], prim[0].square(), prim[1], prim[2]}, 12);
    CHECK_FALSE(bad.ok);
    CHECK(bad.failure_degree == 8);
}

TEST_CASE("secondary invariants of L3(2)") {
    auto l3 = l3_2_on_2_4();
    FixedSpaceEngine e(4, l3.gens);
    auto prim = l3_primaries();
    auto dec = secondary_invariants(e, prim, 30);
    CHECK(dec.complete);
    CHECK(dec.expected_count == 8);
    CHECK(dec.secondary_degrees == std::vector<int>{0, 8, 9, 10, 11, 12, 13, 21});
    for (const auto& s : dec.secondaries) CHECK(is_invariant(l3.gens, s));

    const auto& s = dec.secondaries;
    auto with_a8 = module_dims(4, prim, {s[0], s[1]}, 13);
    CHECK(with_a8 == std::vector<size_t>{1, 0, 0, 0, 1, 0, 1, 1, 3, 0, 1, 1, 4, 1});
    auto with_a9 = module_dims(4, prim, {s[0], s[1], s[2]}, 13);
    CHECK(with_a9 == std::vector<size_t>{1, 0, 0, 0, 1, 0, 1, 1, 3, 1, 1, 1, 4, 2});

    SUBCASE("freeness through degree 30") {
        auto fr = freeness_check(dec, e, 30);
        CHECK(fr.free);
        CHECK(fr.relation_degree == -1);
        CHECK(fr.module_dims == fr.invariant_dims);
    }
    SUBCASE("a repeated secondary produces a relation") {
        auto dup = dec;
        dup.secondaries.push_back(dup.secondaries[1]);
        dup.secondary_degrees.push_back(8);
        auto fr = freeness_check(dup, e, 16);
        CHECK_FALSE(fr.free);
        CHECK(fr.relation_degree == 8);
    }
    SUBCASE("both degree-21 products complete the decomposition") {
        std::vector<Polynomial> seven(s.begin(), s.begin() + 7);
        CHECK(outside_module_span(4, prim, seven, s[3] * s[4]));  // a10 a11
        CHECK(outside_module_span(4, prim, seven, s[1] * s[6]));  // a8 a13
        CHECK_FALSE(outside_module_span(4, prim, seven, s[1] * s[2]));  // a8 a9, degree 17
    }
    SUBCASE("text report") {
        auto text = to_text(dec, l3.ring);
        CHECK(text.find("secondary_count 8 of 8 complete") != std::string::npos);
        CHECK(text == to_text(secondary_invariants(e, prim, 30), l3.ring));
    }
}

TEST_CASE("secondary loop rejects non-invariant primaries") {
    auto l3 = l3_2_on_2_4();
    FixedSpaceEngine e(4, l3.gens);
    auto prim = l3_primaries();
    prim[3] = Polynomial::var(3).pow(8);
    CHECK_THROWS_AS(secondary_invariants(e, prim, 30), std::invalid_argument);
    CHECK_THROWS_AS(secondary_invariants(e, l3_primaries(), 12), BudgetExceeded);
}

TEST_CASE("D8 on w, t, z has polynomial invariants w, t(t+w), d4") {
    auto d8 = d8_wtz();
    FixedSpaceEngine e(3, d8.gens);
    CHECK(e.group_order() == 8);
    auto c = wtz_classes();
    std::vector<Polynomial> prim{c.w, c.t * (c.t + c.w), c.d4};
    for (const auto& p : prim) CHECK(is_invariant(d8.gens, p));
    CHECK(invariant_dims(e, 24) == to_sizes(free_counts({1, 2, 4}, 24)));
    CHECK(subalgebra_dims(3, prim, 24) == invariant_dims(e, 24));
    auto dec = secondary_invariants(e, prim, 10);
    CHECK(dec.expected_count == 1);
    CHECK(dec.secondary_degrees == std::vector<int>{0});
}

TEST_CASE("S4 over D8 has invariants d2, d3, d4") {
    auto s4 = find_s4_over_d8();
    FixedSpaceEngine e(3, s4.gens);
    CHECK(e.group_order() == 24);
    auto c = wtz_classes();
    for (const auto& p : {c.d2, c.d3, c.d4}) CHECK(is_invariant(s4.gens, p));
    CHECK(invariant_dims(e, 24) == to_sizes(free_counts({2, 3, 4}, 24)));
    CHECK(validate_hsop(3, {c.d2, c.d3, c.d4}, 24).ok);
}

TEST_CASE("module invariants of the S3 action") {
    auto m = s3_radical_module();
    const Polynomial v = Polynomial::var(0), w = Polynomial::var(1);
    std::vector<Polynomial> cp{v + w, v * w};
    auto mi = module_invariants(m, cp, 30);
    CHECK(mi.generator_degrees == std::vector<int>{3, 5, 7});

    auto elem = [](std::vector<Polynomial> c) {
        c.resize(5);
        return ModuleElement{c};
    };
    const Polynomial one = Polynomial::one(), zero;
    std::vector<ModuleElement> expected{elem({zero, zero, one, one}), elem({zero, zero, zero, zero, one}),
                                        elem({zero, zero, v, w})};
    CHECK(to_string(expected[2], m) == "v4*gamma3+w4*beta3");
    auto fixed = module_fixed_dims(m, 30);
    CHECK(mi.fixed_dims == fixed);
    CHECK(module_span_dims(m, cp, expected, 30) == fixed);
    CHECK(module_span_dims(m, cp, mi.generators, 30) == fixed);
    // Same span in every degree: adding one set to the other changes nothing.
    auto both = expected;
    both.insert(both.end(), mi.generators.begin(), mi.generators.end());
    CHECK(module_span_dims(m, cp, both, 30) == fixed);

    // Free over the coefficient ring with generators in degrees 3, 5, 7.
    auto series = free_module_series({4, 8}, {3, 5, 7}, 30);
    CHECK(fixed == to_sizes(series));
}

TEST_CASE("the order-3 element alone fixes nothing in the degree-2 generators") {
    auto m = s3_radical_module(true);
    auto dims = module_fixed_dims(m, 20);
    // Only gamma3, beta3, alpha5 contribute: two classes in degree 3+4k, one in 5+4k.
    for (int d = 0; d <= 20; ++d) {
        size_t want = 0;
        if (d >= 3 && (d - 3) % 4 == 0) want = 2 * ((d - 3) / 4 + 1);
        if (d >= 5 && (d - 5) % 4 == 0) want = (d - 5) / 4 + 1;
        CHECK(dims[d] == want);
    }
}

TEST_CASE("module actions are validated") {
    auto m = s3_radical_module();
    m.actions[0].var_images[0] = Polynomial::var(0).square();
    CHECK_THROWS_AS(module_fixed_dims(m, 4), std::invalid_argument);
}

TEST_CASE("A7 search and series through degree 24") {
    auto a7 = find_a7_in_gl4();
    FixedSpaceEngine e(4, a7.gens);
    CHECK(e.group_order() == 2520);
    CHECK(invariant_dims(e, 24) == to_sizes(a7_series(24)));
    // A7 holds no transvections, so no conjugate contains S4 as permutation matrices.
    CHECK(e.permutation_subgroup_order() < 24);
}
