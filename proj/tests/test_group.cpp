#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "invar/group.hpp"
#include "invar/perm.hpp"
#include "invar/table_group.hpp"

using namespace invar;

namespace {

MatF2 mat_a() { return MatF2::from_rows({{1, 1, 1, 0}, {1, 0, 1, 0}, {1, 1, 0, 0}, {1, 1, 0, 1}}); }
MatF2 mat_b() { return MatF2::from_rows({{0, 0, 1, 0}, {0, 1, 0, 0}, {1, 1, 1, 0}, {1, 1, 0, 1}}); }

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

using KeySet = std::vector<uint64_t>;

KeySet keys_of(const std::vector<Perm>& elems) {
    KeySet k;
    for (const auto& e : elems) k.push_back(e.key());
    std::sort(k.begin(), k.end());
    return k;
}

// Brute-force oracle: every elementary abelian 2-subgroup of G grown from involutions,
// maximal ones kept, classes counted as orbits under conjugation by the generators of G.
struct BruteEA2 {
    std::map<KeySet, std::vector<Perm>> maximal;  // key set -> elements
    int classes = 0;
    std::multiset<int> ranks;
};

BruteEA2 brute_maximal_ea2(const PermGroup& g) {
    std::vector<Perm> invol;
    for (const auto& x : g.elements())
        if (!x.is_identity() && (x * x).is_identity()) invol.push_back(x);
    std::map<KeySet, std::vector<Perm>> level{{keys_of({Perm(g.degree())}), {Perm(g.degree())}}};
    BruteEA2 out;
    int rank = 0;
    while (!level.empty()) {
        std::map<KeySet, std::vector<Perm>> next;
        for (const auto& [k, elems] : level) {
            bool extended = false;
            for (const auto& x : invol) {
                if (std::binary_search(k.begin(), k.end(), x.key())) continue;
                bool comm = true;
                for (const auto& y : elems)
                    if (x * y != y * x) comm = false;
                if (!comm) continue;
                extended = true;
                auto e2 = elems;
                for (const auto& y : elems) e2.push_back(x * y);
                next.emplace(keys_of(e2), e2);
            }
            if (!extended) out.maximal.emplace(k, elems);
        }
        level.swap(next);
        ++rank;
    }
    std::set<KeySet> seen;
    for (const auto& [k, elems] : out.maximal) {
        if (seen.count(k)) continue;
        ++out.classes;
        out.ranks.insert(int(std::log2(double(elems.size())) + 0.5));
        std::vector<std::vector<Perm>> stack{elems};
        seen.insert(k);
        while (!stack.empty()) {
            auto cur = stack.back();
            stack.pop_back();
            for (const auto& s : g.generators()) {
                std::vector<Perm> c;
                for (const auto& y : cur) c.push_back(y.conj(s));
                auto ck = keys_of(c);
                if (seen.insert(ck).second) stack.push_back(c);
            }
        }
    }
    return out;
}

std::vector<std::string> labels(const std::vector<EA2Class>& cs) {
    std::vector<std::string> out;
    for (const auto& c : cs) out.push_back(c.label);
    return out;
}

void check_against_brute(int n, bool alt) {
    PermGroup g = alt ? PermGroup::alternating(n) : PermGroup::symmetric(n);
    auto brute = brute_maximal_ea2(g);
    auto cls = maximal_ea2_subgroups(n, alt);
    CHECK(int(cls.size()) == brute.classes);
    std::multiset<int> ranks;
    for (const auto& c : cls) {
        ranks.insert(c.rank);
        auto k = keys_of(span_elements(n, c.rep.generators()));
        CHECK(brute.maximal.count(k) == 1);
    }
    CHECK(ranks == brute.ranks);
    for (size_t i = 0; i < cls.size(); ++i)
        for (size_t j = i + 1; j < cls.size(); ++j) CHECK_FALSE(are_conjugate(g, cls[i].rep, cls[j].rep));
}

}  // namespace

TEST_CASE("matrix basics") {
    MatF2 a = mat_a();
    CHECK(a * a.inverse() == MatF2::identity(4));
    CHECK(a.transpose().transpose() == a);
    CHECK(MatF2::from_images(4, {a.image(0), a.image(1), a.image(2), a.image(3)}) == a);
    CHECK_THROWS(MatF2::from_rows({{1, 1}, {1, 1}}).inverse());
    CHECK_THROWS(MatF2::from_rows({{1, 0}, {0}}));
    CHECK(general_linear_group(3).size() == 168);
    CHECK(general_linear_group(4).size() == gl_order(4));
    CHECK(gl_order(4) == 20160);
}

TEST_CASE("the transposed generators give a group of order 168") {
    MatrixGroup g(4, {mat_a().transpose(), mat_b().transpose()});
    CHECK(g.order() == 168);
    CHECK(g.contains(MatF2::identity(4)));
    CHECK_THROWS_AS(MatrixGroup(4, {mat_a().transpose(), mat_b().transpose()}).order(10), BudgetExceeded);
}

TEST_CASE("act_on_poly is a left action by ring automorphisms") {
    std::mt19937_64 rng(17);
    std::vector<MatF2> gens{mat_a(), mat_b(), mat_a().transpose()};
    Polynomial x = Polynomial::var(0);
    // x_0 goes to column 0 of A: x + y + z + w.
    Ring r({"x", "y", "z", "w"});
    CHECK(to_string(act_on_poly(mat_a(), x), r) == "x+y+z+w");
    for (int it = 0; it < 30; ++it) {
        Polynomial p = random_poly(rng, 4, 10, 6), q = random_poly(rng, 4, 10, 6);
        for (const auto& g : gens)
            for (const auto& h : gens) CHECK(act_on_poly(g * h, p) == act_on_poly(g, act_on_poly(h, p)));
        CHECK(act_on_poly(mat_a(), p * q) == act_on_poly(mat_a(), p) * act_on_poly(mat_a(), q));
        CHECK(act_on_poly(mat_b(), p + q) == act_on_poly(mat_b(), p) + act_on_poly(mat_b(), q));
    }
}

TEST_CASE("permutation parsing and products") {
    Perm p = Perm::parse("(1,2)(3,4)", 6), q = Perm::parse("(2,3)", 6);
    CHECK(p.to_string() == "(1,2)(3,4)");
    CHECK(Perm::parse(p.to_string(), 6) == p);
    CHECK((p * q)(1) == p(q(1)));
    CHECK((p * q).to_string() == "(1,2,4,3)");
    CHECK(Perm(5).to_string() == "()");
    CHECK(p.conj(q) == q * p * q.inverse());
    CHECK(cycle_type_string(p.cycle_type()) == "2^2");
    CHECK(parse_cycle_type("2^4") == std::vector<int>{2, 2, 2, 2});
    CHECK_THROWS(Perm::parse("(1,1)", 3));
    CHECK_THROWS(Perm::parse("(1,7)", 3));
}

TEST_CASE("closure orders of symmetric and alternating groups") {
    CHECK(PermGroup::symmetric(6).order() == 720);
    CHECK(PermGroup::alternating(6).order() == 360);
    CHECK(PermGroup::alternating(7).order() == 2520);
    CHECK(PermGroup::symmetric(2).order() == 2);
    CHECK_THROWS_AS(PermGroup::symmetric(8).order(1000), BudgetExceeded);
    auto s5 = PermGroup::symmetric(5);
    CHECK(normalizer(s5, s5).order() == 120);
}

TEST_CASE("maximal elementary abelian 2-subgroups: labels") {
    CHECK(labels(maximal_ea2_subgroups(8, false)) == std::vector<std::string>{"V3", "V2^2", "V2xV1^2", "V1^4"});
    CHECK(labels(maximal_ea2_subgroups(10, true)) == std::vector<std::string>{"V3", "V2^2", "V2xE3", "E5"});
    CHECK(labels(maximal_ea2_subgroups(2, false)) == std::vector<std::string>{"V1"});
}

TEST_CASE("maximal elementary abelian 2-subgroups: letter counts") {
    for (int n = 2; n <= 12; ++n)
        for (bool alt : {false, true}) {
            if (alt && n < 4) continue;
            for (const auto& c : maximal_ea2_subgroups(n, alt)) {
                int gap = n - c.letters;
                CHECK(gap >= 0);
                CHECK(gap <= (alt ? 3 : 1));
                CHECK(span_elements(n, c.rep.generators()).size() == (size_t(1) << c.rank));
            }
        }
}

TEST_CASE("maximal elementary abelian 2-subgroups match brute force") {
    check_against_brute(6, false);
    check_against_brute(6, true);
    check_against_brute(7, true);
    check_against_brute(8, false);
    check_against_brute(8, true);
}

TEST_CASE("the regular V3 class splits in A8 and A9 but not in A10") {
    auto count = [](int n) {
        int k = 0;
        for (const auto& c : maximal_ea2_subgroups(n, true))
            if (c.orbit_sizes == std::vector<int>{8}) ++k;
        return k;
    };
    CHECK(count(8) == 2);
    CHECK(count(9) == 2);
    CHECK(count(10) == 1);
}

TEST_CASE("normalizer of the regular V3 in S8 has quotient of order 168") {
    PermGroup v3(8, {Perm::parse("(1,2)(3,4)(5,6)(7,8)", 8), Perm::parse("(1,3)(2,4)(5,7)(6,8)", 8),
                     Perm::parse("(1,5)(2,6)(3,7)(4,8)", 8)});
    auto n = normalizer(PermGroup::symmetric(8), v3);
    CHECK(n.order() / v3.order() == 168);
    CHECK(n.order() % v3.order() == 0);
    for (const auto& x : v3.elements())
        if (!x.is_identity()) CHECK(cycle_type_string(x.cycle_type()) == "2^4");
    CHECK_THROWS(normalizer(PermGroup::alternating(8), PermGroup(8, {Perm::parse("(1,2)", 8)})));
}

TEST_CASE("the listed elements normalize the rank-2 group with a fixed (9,10) factor") {
    const int n = 10;
    PermGroup m3(n, {Perm::parse("(1,3)(2,4)(5,6)(9,10)", n), Perm::parse("(1,4)(2,3)(7,8)(9,10)", n)});
    std::vector<Perm> norm{Perm::parse("(1,3)(2,4)", n), Perm::parse("(1,4)(2,3)", n),
                           Perm::parse("(1,2)(5,7)(6,8)", n)};
    for (const auto& x : norm)
        for (const auto& h : m3.generators()) CHECK(m3.contains(h.conj(x)));
    CHECK(PermGroup(n, norm).order() == 8);
    // An order-3 even element rotating (5,6),(7,8),(9,10) and sending (1,3)(2,4) to (1,2)(3,4).
    Perm r = Perm::parse("(2,4,3)(5,7,9)(6,8,10)", n);
    CHECK(r.is_even());
    CHECK(Perm::parse("(1,3)(2,4)", n).conj(r) == Perm::parse("(1,2)(3,4)", n));
    for (const auto& h : m3.generators()) CHECK(m3.contains(h.conj(r)));
}

TEST_CASE("elementary abelian subgroups of A10 with all elements of type 2^4") {
    const int n = 10;
    auto typed = filter_by_cycle_type(n, true, parse_cycle_type("2^4"));
    REQUIRE(typed.size() == 2);
    PermGroup v3(n, {Perm::parse("(1,2)(3,4)(5,6)(7,8)", n), Perm::parse("(1,3)(2,4)(5,7)(6,8)", n),
                     Perm::parse("(1,5)(2,6)(3,7)(4,8)", n)});
    PermGroup m3(n, {Perm::parse("(1,3)(2,4)(5,6)(9,10)", n), Perm::parse("(1,4)(2,3)(7,8)(9,10)", n)});
    auto a10 = PermGroup::alternating(n);
    int hit_v = 0, hit_m = 0;
    for (const auto& t : typed) {
        for (const auto& x : span_elements(n, t.rep.generators()))
            if (!x.is_identity()) CHECK(cycle_type_string(x.cycle_type()) == "2^4");
        hit_v += are_conjugate(a10, t.rep, v3).has_value();
        hit_m += are_conjugate(a10, t.rep, m3).has_value();
    }
    CHECK(hit_v == 1);
    CHECK(hit_m == 1);
    CHECK(filter_by_cycle_type(3, false, parse_cycle_type("2^4")).empty());
}

TEST_CASE("upper unitriangular product matches 3x3 matrix multiplication over F4") {
    auto m = sylow2_ly_model();
    auto matmul = [](const std::array<int, 9>& x, const std::array<int, 9>& y) {
        std::array<int, 9> z{};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 3; ++k) z[3 * i + j] ^= f4::mul(x[3 * i + k], y[3 * k + j]);
        return z;
    };
    auto mat = [](int x) {
        return std::array<int, 9>{1, x & 3, x >> 2 & 3, 0, 1, x >> 4 & 3, 0, 0, 1};
    };
    for (int x : m.ut)
        for (int y : m.ut) CHECK(mat(m.group.mul(x, y)) == matmul(mat(x), mat(y)));
    // Field sanity: w^2 = w + 1 and w^3 = 1.
    CHECK(f4::mul(2, 2) == 3);
    CHECK(f4::mul(2, f4::mul(2, 2)) == 1);
}

TEST_CASE("Sylow model structure") {
    auto m = sylow2_ly_model();
    const auto& G = m.group;
    CHECK(G.order() == 256);
    CHECK(G.element_order(m.g) == 2);
    CHECK(G.element_order(m.A) == 2);
    CHECK(G.mul(m.g, m.A) == G.mul(m.A, m.g));
    CHECK(G.is_subgroup(m.ut));
    CHECK(m.ut.size() == 64);
    CHECK(G.centralizer(m.ut, m.ut) == G.closure({m.T, m.Z}));
    CHECK(G.closure({m.T, m.Z}).size() == 4);
    CHECK(G.center() == G.closure({m.Z}));
    CHECK(G.center().size() == 2);

    auto fours_g = G.elementary_abelian_subgroups(m.ut_g, 4);
    REQUIRE(fours_g.size() == 2);
    std::set<TableGroup::Subset> expect{m.four_I, m.four_II};
    CHECK(std::set<TableGroup::Subset>(fours_g.begin(), fours_g.end()) == expect);
    for (const auto& f : fours_g) CHECK(G.is_normal(f, m.ut_g));
    CHECK(G.conjugating_element(m.ut_gA, m.four_I, m.four_II).has_value());
    auto fours = G.elementary_abelian_subgroups(G.all(), 4);
    CHECK(fours.size() == 2);
    CHECK(G.conjugating_element(G.all(), m.four_I, m.four_II).has_value());
    CHECK(G.elementary_abelian_subgroups(G.all(), 5).empty());

    auto atz = G.closure({m.A, m.T, m.Z});
    auto gaz = G.closure({m.g, m.A, m.Z});
    CHECK(atz.size() == 8);
    CHECK(G.is_elementary_abelian(atz));
    CHECK(gaz.size() == 8);
    CHECK(G.is_elementary_abelian(gaz));
}
