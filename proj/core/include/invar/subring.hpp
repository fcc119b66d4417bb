#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "invar/bitlinalg.hpp"
#include "invar/gf2.hpp"

namespace invar {

// R(m_1, ..., m_k) = R*m_1 + ... + R*m_k with R = F2[g_1, ..., g_r] inside F2[x_0..x_{n-1}].
// With no module generators this is the subalgebra F2[g_1, ..., g_r].
class Subalgebra {
public:
    struct Product {
        std::vector<int> exps;  // exponent of each ring generator
        size_t module_index = 0;
    };

    Subalgebra(int nvars, std::vector<Polynomial> gens, std::vector<Polynomial> module_gens = {},
               std::vector<std::string> gen_labels = {}, std::vector<std::string> module_labels = {});

    int nvars() const { return n_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    const std::vector<Polynomial>& module_generators() const { return mods_; }

    const Subspace& slice(int d);
    size_t dim(int d) { return slice(d).dim(); }
    std::vector<size_t> dims(int bound);

    // Products summing to p, or nullopt if p is not in the degree slice. p must be homogeneous.
    std::optional<std::vector<Product>> certificate(const Polynomial& p);
    bool contains(const Polynomial& p) { return certificate(p).has_value(); }
    Polynomial evaluate(const Product& pr);
    std::string describe(const Product& pr) const;
    std::string describe() const;  // e.g. "F2[d4, d6, d7](1, d7)"

private:
    struct Level {
        std::vector<Product> accepted;
        std::unique_ptr<EchelonBuilder> builder;
        Subspace space;
    };
    Level& level(int d);
    const Polynomial& power(size_t g, int e);

    int n_;
    std::vector<Polynomial> gens_, mods_;
    std::vector<int> gdeg_, mdeg_;
    std::vector<std::string> glab_, mlab_;
    std::vector<std::vector<Polynomial>> powers_;
    std::map<int, Level> cache_;
};

struct IntersectionReport {
    int bound = 0;
    std::vector<size_t> dims;            // dim of the intersection per degree
    std::vector<size_t> candidate_dims;  // empty without a candidate
    bool equal = false;                  // candidate slices equal the intersection through bound
    int first_mismatch = -1;
};

IntersectionReport intersect_subalgebras(Subalgebra& a, Subalgebra& b, int bound, Subalgebra* candidate = nullptr);

// Per-degree intersection slices through bound.
std::vector<Subspace> intersection_slices(Subalgebra& a, Subalgebra& b, int bound);

// Named classes living in an ambient ring; symbol weights are their degrees.
struct SymbolRing {
    Ring ring;
    std::vector<Polynomial> values;
    Polynomial evaluate(const Polynomial& symbolic) const;
    SymbolTable table() const;
};

// Free module over R = F2[base] with a named basis, all given symbolically.
class ModulePresentation {
public:
    ModulePresentation(int nvars, SymbolRing symbols, std::vector<Polynomial> base,
                       std::vector<std::string> basis_names, std::vector<Polynomial> basis);

    const SymbolRing& symbols() const { return sym_; }
    const std::vector<std::string>& basis_names() const { return names_; }
    size_t rank() const { return basis_.size(); }
    Subalgebra& base_ring() { return base_ring_; }

    // Symbolic coefficient of each basis element, or nullopt if p lies outside the module.
    std::optional<std::vector<Polynomial>> express(const Polynomial& p);
    Polynomial expand(const std::vector<Polynomial>& coeffs) const;
    std::string format(const std::vector<Polynomial>& coeffs) const;  // "d3*[d2] + [w*d2]"
    // The products r * basis_i are linearly independent in every degree through bound.
    bool verify_free(int bound);
    // Whether the symbolic c lies in R.
    bool in_base(const Polynomial& c);

private:
    struct Term {
        size_t basis;
        Polynomial coeff;
    };
    struct Level {
        std::vector<Term> accepted;
        std::unique_ptr<EchelonBuilder> builder;
        size_t products = 0;
    };
    Level& level(int d);

    int n_;
    SymbolRing sym_;
    std::vector<Polynomial> base_, basis_;
    std::vector<Polynomial> base_val_, basis_val_;
    std::vector<int> base_deg_, basis_deg_;
    std::vector<std::string> names_;
    Subalgebra base_ring_;
    std::map<int, Level> cache_;
};

struct ReducedGenerators {
    std::vector<std::vector<Polynomial>> expressed;  // every input in the basis
    std::vector<std::string> expressed_text;
    std::vector<std::vector<Polynomial>> retained;   // after dropping R-multiples of earlier terms
    std::vector<std::string> retained_text;
};

// Expresses each generator in the basis, then walks them in order dropping every term that is an
// R-multiple of a retained single-term generator; what remains of a generator is retained.
ReducedGenerators reduce_generators(const std::vector<Polynomial>& gens, ModulePresentation& m);

struct IdealIntersection {
    bool hypothesis_ok = false;
    std::string witness;                     // first generator mixing basis elements
    std::vector<std::vector<Polynomial>> ideals;  // symbolic generators per prefix basis element
    std::vector<std::string> ideal_text;     // "(1)", "(d3)", ...
    std::vector<Polynomial> generators;      // ideal generators times basis elements, ambient
};

// U generated by single-term elements r * e_i, V spanned by the first k basis elements:
// U ∩ V is the sum over t < k of J_t e_t with J_t generated by the coefficients on e_t.
IdealIntersection intersect_by_ideals(ModulePresentation& m, const std::vector<Polynomial>& u_gens, size_t k);

struct IntegralCheck {
    bool holds = false;
    bool monic = false;
    bool coefficients_in_ring = false;
    Polynomial remainder;
};

// equation is a polynomial in the ambient variables plus x_{xvar}; substitutes element for it.
IntegralCheck integral_equation_check(const Polynomial& element, Subalgebra& r, const Polynomial& equation,
                                      int xvar);

}  // namespace invar
