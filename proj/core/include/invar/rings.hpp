#pragma once

#include <optional>
#include <string>
#include <vector>

#include "invar/invariant.hpp"
#include "invar/subring.hpp"

namespace invar {

// Symbols over F2[w, t, z]: w, t, z, d2, d3 (GL2 Dickson in w, t) and d4, d6, d7 (GL3 Dickson).
SymbolRing wtz_symbols();

// Subalgebra of F2[w, t, z] from generator and module generator texts over wtz_symbols().
// "t(t+w)" style input is accepted since the grammar expands products.
Subalgebra wtz_subalgebra(const std::vector<std::string>& gens, const std::vector<std::string>& module_gens = {});

// F2[d2, d3]{1, w, w^2}.
ModulePresentation w_tower();
// F2[d2^2, d3, d4^2] with basis {1, w, w^2} * {1, d2, d4, d2d4}.
ModulePresentation twelve_tower();

// Symbolic sets over wtz_symbols().
std::vector<Polynomial> w_powers(int top);          // 1, w, ..., w^top
std::vector<Polynomial> reduced_w_generators();     // 1, w, w^2, w*d2, w^2*d2, d2*d3
// set x {1, d3*d4} x {1, d2*d3*d4}, ordered set, set*d3d4, set*d2d3d4, set*d3d4*d2d3d4.
std::vector<Polynomial> triple_products(const std::vector<Polynomial>& set);

// Named rings of F2[w, t, z] used by the intersection checks.
struct NamedSubring {
    std::string name;
    std::vector<std::string> gens, module_gens;
};
std::vector<NamedSubring> named_subrings();
std::optional<Subalgebra> named_subring(const std::string& name);

// Polynomial identities among the wtz classes, each "lhs = rhs".
std::vector<IdentityCheck> wtz_relations();
IdentityCheck check_identity(const std::string& lhs, const std::string& rhs, const SymbolRing& s);

}  // namespace invar
