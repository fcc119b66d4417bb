#include "invar/rings.hpp"

#include "invar/catalog.hpp"

namespace invar {

namespace {

const Ring& wtz_ring() {
    static const Ring r({"w", "t", "z"});
    return r;
}

Polynomial sym(const std::string& text) { return parse_polynomial(text, wtz_symbols().ring); }

std::vector<Polynomial> syms(const std::vector<std::string>& texts) {
    std::vector<Polynomial> out;
    for (const auto& t : texts) out.push_back(sym(t));
    return out;
}

}  // namespace

SymbolRing wtz_symbols() {
    WtzClasses c = wtz_classes();
    auto d = dickson(3);
    return {Ring({"w", "t", "z", "d2", "d3", "d4", "d6", "d7"}, {1, 1, 1, 2, 3, 4, 6, 7}),
            {c.w, c.t, c.z, c.d2, c.d3, d[2].poly, d[1].poly, d[0].poly}};
}

Subalgebra wtz_subalgebra(const std::vector<std::string>& gens, const std::vector<std::string>& module_gens) {
    SymbolRing s = wtz_symbols();
    auto table = s.table();
    std::vector<Polynomial> g, m;
    for (const auto& t : gens) g.push_back(parse_polynomial(t, wtz_ring(), &table));
    for (const auto& t : module_gens) m.push_back(parse_polynomial(t, wtz_ring(), &table));
    return Subalgebra(3, g, m, gens, module_gens);
}

ModulePresentation w_tower() {
    return ModulePresentation(3, wtz_symbols(), syms({"d2", "d3"}), {"1", "w", "w^2"}, syms({"1", "w", "w^2"}));
}

ModulePresentation twelve_tower() {
    std::vector<std::string> names;
    for (std::string a : {"", "w", "w^2"})
        for (std::string b : {"", "d2", "d4", "d2*d4"}) {
            std::string n = a.empty() ? b : b.empty() ? a : a + "*" + b;
            names.push_back(n.empty() ? "1" : n);
        }
    return ModulePresentation(3, wtz_symbols(), syms({"d2^2", "d3", "d4^2"}), names, syms(names));
}

std::vector<Polynomial> w_powers(int top) {
    std::vector<Polynomial> out{Polynomial::one()};
    Polynomial w = sym("w");
    for (int i = 1; i <= top; ++i) out.push_back(out.back() * w);
    return out;
}

std::vector<Polynomial> reduced_w_generators() { return syms({"1", "w", "w^2", "w*d2", "w^2*d2", "d2*d3"}); }

std::vector<Polynomial> triple_products(const std::vector<Polynomial>& set) {
    std::vector<Polynomial> out;
    for (const Polynomial& f : {Polynomial::one(), sym("d3*d4"), sym("d2*d3*d4"), sym("d2*d3^2*d4^2")})
        for (const auto& s : set) out.push_back(s * f);
    return out;
}

std::vector<NamedSubring> named_subrings() {
    return {
        {"image_ring", {"w", "d2^2", "d4^2"}, {"1", "d3", "d3*d4", "t*(t+w)*d3*d4"}},
        {"image_ring_d2", {"w", "d2^2", "d4^2"}, {"1", "d3", "d3*d4", "d2*d3*d4"}},
        {"dickson_d2_d3_d4", {"d2", "d3", "d4"}, {}},
        {"appendix_intersection", {"d2^2", "d3", "d4^2"}, {"1", "d2*d3", "d3*d4", "d2*d3*d4"}},
        {"dickson_gl3", {"d4", "d6", "d7"}, {}},
        {"gl3_intersection", {"d4^2", "d6^2", "d7"}, {"1", "d4*d7", "d6*d7", "d4*d6*d7"}},
        {"d4_d6", {"d4", "d6"}, {}},
        {"d4sq_d6sq", {"d4^2", "d6^2"}, {}},
        {"first_summand", {"d2^2", "d3^2", "d4^2"}, {"1", "d3", "d2*d3", "d2*d3^2"}},
    };
}

std::optional<Subalgebra> named_subring(const std::string& name) {
    for (const auto& r : named_subrings())
        if (r.name == name) return wtz_subalgebra(r.gens, r.module_gens);
    return std::nullopt;
}

IdentityCheck check_identity(const std::string& lhs, const std::string& rhs, const SymbolRing& s) {
    auto table = s.table();
    Ring amb({"w", "t", "z"});
    IdentityCheck c;
    c.lhs = parse_polynomial(lhs, amb, &table);
    c.rhs = parse_polynomial(rhs, amb, &table);
    c.holds = c.lhs == c.rhs;
    c.description = lhs + " = " + rhs;
    return c;
}

std::vector<IdentityCheck> wtz_relations() {
    SymbolRing s = wtz_symbols();
    return {
        check_identity("w^2*d3 + w*d2^2 + w^5", "d2*d3", s),
        check_identity("(w^2 + t*(t+w))*d3*d4", "d2*d3*d4", s),
        check_identity("d6", "d2*d4 + d2^3 + d3^2", s),
        check_identity("d7", "d3*d4 + d2^2*d3", s),
        check_identity("d2", "w^2 + t*(t+w)", s),
    };
}

}  // namespace invar
