#include "invar/catalog.hpp"

#include <stdexcept>

#include "invar/invariant.hpp"

namespace invar {

MatF2 l3_2_matrix_a() { return MatF2::from_rows({{1, 1, 1, 0}, {1, 0, 1, 0}, {1, 1, 0, 0}, {1, 1, 0, 1}}); }

MatF2 l3_2_matrix_b() { return MatF2::from_rows({{0, 0, 1, 0}, {0, 1, 0, 0}, {1, 1, 1, 0}, {1, 1, 0, 1}}); }

NamedMatrixGroup l3_2_on_2_4() {
    return {"L3_2_on_2^4", Ring({"x", "y", "z", "w"}),
            {l3_2_matrix_a().transpose(), l3_2_matrix_b().transpose()}};
}

NamedMatrixGroup d8_wtz() {
    // Variables w, t, z are bits 0, 1, 2.
    return {"D8_lemma5_3", Ring({"w", "t", "z"}),
            {MatF2::from_images(3, {1, 2, 4 | 2}), MatF2::from_images(3, {1, 2, 4 | 1}),
             MatF2::from_images(3, {1, 2 | 1, 4})}};
}

WtzClasses wtz_classes() {
    WtzClasses c;
    c.w = Polynomial::var(0);
    c.t = Polynomial::var(1);
    c.z = Polynomial::var(2);
    c.d2 = c.w.square() + c.w * c.t + c.t.square();
    c.d3 = c.w * c.t * (c.w + c.t);
    c.d4 = c.z.pow(4) + c.z.square() * c.d2 + c.z * c.d3 + c.d2.square();
    return c;
}

std::vector<uint64_t> free_module_series(const std::vector<int>& gen_degrees,
                                         const std::vector<int>& numerator_degrees, int bound) {
    auto fc = free_counts(gen_degrees, bound);
    std::vector<uint64_t> out(bound + 1, 0);
    for (int s : numerator_degrees)
        for (int d = s; d <= bound; ++d) out[d] += fc[d - s];
    return out;
}

std::vector<uint64_t> a7_series(int bound) {
    return free_module_series({8, 12, 14, 15}, {0, 18, 20, 21, 24, 25, 27, 45}, bound);
}

namespace {

bool dims_match(FixedSpaceEngine& e, const std::vector<uint64_t>& want) {
    for (size_t d = 0; d < want.size(); ++d)
        if (e.dim(int(d)) != want[d]) return false;
    return true;
}

}  // namespace

NamedMatrixGroup find_s4_over_d8(int check_bound) {
    NamedMatrixGroup base = d8_wtz();
    WtzClasses c = wtz_classes();
    auto want = free_counts({2, 3, 4}, check_bound);
    for (const auto& g : general_linear_group(3)) {
        if (g.order() != 3) continue;
        auto gens = base.gens;
        gens.push_back(g);
        if (bounded_closure(3, gens, 25).size() != 24) continue;
        if (!is_invariant(gens, c.d2) || !is_invariant(gens, c.d3) || !is_invariant(gens, c.d4)) continue;
        FixedSpaceEngine e(3, gens);
        if (!dims_match(e, want)) continue;
        return {"S4_over_D8", base.ring, gens};
    }
    throw std::runtime_error("find_s4_over_d8: no order-3 extension has the expected invariants");
}

NamedMatrixGroup find_a7_in_gl4(int check_bound) {
    NamedMatrixGroup base = l3_2_on_2_4();
    auto want = a7_series(check_bound);
    for (const auto& g : general_linear_group(4)) {
        auto gens = base.gens;
        gens.push_back(g);
        if (bounded_closure(4, gens, 2521).size() != 2520) continue;
        FixedSpaceEngine e(4, gens);
        if (!dims_match(e, want)) continue;
        return {"A7_in_GL4", base.ring, gens};
    }
    throw std::runtime_error("find_a7_in_gl4: no extension of order 2520 matches the series");
}

GradedModule s3_radical_module(bool only_t) {
    GradedModule m;
    m.ring = Ring({"v4", "w4"}, {4, 4});
    m.gen_names = {"gamma2", "beta2", "gamma3", "beta3", "alpha5"};
    m.gen_degrees = {2, 2, 3, 3, 5};
    const Polynomial v = Polynomial::var(0), w = Polynomial::var(1), one = Polynomial::one();
    auto unit = [&](std::vector<int> js) {
        ModuleElement e{std::vector<Polynomial>(5)};
        for (int j : js) e.coeff[j] = one;
        return e;
    };
    GradedModule::Action t{{v, w}, {unit({1}), unit({0, 1}), unit({2}), unit({3}), unit({4})}};
    GradedModule::Action u{{w, v}, {unit({1}), unit({0}), unit({3}), unit({2}), unit({4})}};
    m.actions = {t};
    if (!only_t) m.actions.push_back(u);
    return m;
}

NamedMatrixGroup trivial_1var() { return {"trivial_1var", Ring({"x"}), {MatF2::identity(1)}}; }

std::optional<NamedMatrixGroup> named_matrix_group(const std::string& name) {
    if (name == "trivial_1var") return trivial_1var();
    if (name == "L3_2_on_2^4") return l3_2_on_2_4();
    if (name == "D8_lemma5_3") return d8_wtz();
    if (name == "S4_over_D8") return find_s4_over_d8();
    if (name == "A7_in_GL4") return find_a7_in_gl4();
    return std::nullopt;
}

std::vector<std::string> matrix_group_names() {
    return {"L3_2_on_2^4", "D8_lemma5_3", "S4_over_D8", "A7_in_GL4", "trivial_1var"};
}

std::optional<std::vector<Polynomial>> default_primaries(const std::string& name) {
    auto polys = [](const std::vector<DicksonClass>& d) {
        std::vector<Polynomial> out;
        for (auto it = d.rbegin(); it != d.rend(); ++it) out.push_back(it->poly);
        return out;
    };
    WtzClasses c = wtz_classes();
    if (name == "L3_2_on_2^4") {
        auto out = polys(dickson(3));
        out.push_back(dickson(4)[3].poly);
        return out;
    }
    if (name == "D8_lemma5_3") return std::vector<Polynomial>{c.w, c.t * (c.t + c.w), c.d4};
    if (name == "S4_over_D8") return std::vector<Polynomial>{c.d2, c.d3, c.d4};
    if (name == "A7_in_GL4") return polys(dickson(4));
    if (name == "trivial_1var") return std::vector<Polynomial>{Polynomial::var(0)};
    return std::nullopt;
}

}  // namespace invar
