#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "invar/bitlinalg.hpp"
#include "invar/gf2.hpp"
#include "invar/group.hpp"

namespace invar {

// Matrix of g on the degree-d slice in row convention: act(g, v) = v * R.
// Built as a product of sparse elementary factors.
BitMatrix slice_action_matrix(const MatF2& g, int d);

// v * M for a row vector v.
BitVec row_times(const BitVec& v, const BitMatrix& m);

// Per-degree fixed spaces of a matrix group acting on F2[x_0..x_{n-1}].
// Works in a conjugate frame hGh^-1 chosen to maximize the subgroup of permutation
// matrices; fixed vectors of that subgroup are spanned by monomial orbit sums, so only
// the remaining generators need dense slice matrices.
class FixedSpaceEngine {
public:
    FixedSpaceEngine(int nvars, std::vector<MatF2> gens, size_t budget = 1u << 20);

    int nvars() const { return n_; }
    const std::vector<MatF2>& generators() const { return gens_; }
    size_t group_order() const { return order_; }
    const MatF2& frame() const { return h_; }
    size_t permutation_subgroup_order() const { return perm_order_; }

    const Subspace& fixed(int d);           // canonical basis in the original coordinates
    const Subspace& fixed_in_frame(int d);  // fixed space of hGh^-1
    size_t dim(int d) { return fixed_in_frame(d).dim(); }
    std::vector<Polynomial> basis(int d);

private:
    int n_;
    std::vector<MatF2> gens_;
    size_t order_ = 0;
    MatF2 h_, h_inv_;
    std::vector<std::vector<int>> perm_gens_;  // variable permutations generating P
    size_t perm_order_ = 1;
    std::vector<MatF2> extra_;  // frame generators outside P
    std::map<int, Subspace> frame_cache_, orig_cache_;
};

std::vector<size_t> invariant_dims(FixedSpaceEngine& e, int bound);
std::vector<size_t> invariant_dims(int nvars, const std::vector<MatF2>& gens, int bound);
std::vector<Polynomial> invariant_basis(int nvars, const std::vector<MatF2>& gens, int d);

bool is_invariant(const std::vector<MatF2>& gens, const Polynomial& p);

// Dickson invariants of GL_n(2) in x_0..x_{n-1}, by expanding prod (X + l) over all linear forms l.
// Entry i is d_{2^n - 2^i}; i = n-1 is the lowest degree.
struct DicksonClass {
    int degree;
    Polynomial poly;
};
std::vector<DicksonClass> dickson(int n);

// top_n = f_{n-1}(x_{n-1}) + top_{n-1}^2 with f_{n-1}(X) = prod over forms in n-1 variables.
struct IdentityCheck {
    bool holds = false;
    std::string description;
    Polynomial lhs, rhs;
};
IdentityCheck relative_dickson_top(int n);

// Number of monomials of each degree 0..bound in free generators of the given degrees.
std::vector<uint64_t> free_counts(const std::vector<int>& degrees, int bound);

// Graded dimensions of the subalgebra generated by polys; degrees by total degree.
std::vector<size_t> subalgebra_dims(int nvars, const std::vector<Polynomial>& polys, int bound);

struct HsopResult {
    bool ok = false;
    int failure_degree = -1;
    std::vector<size_t> dims;
    std::vector<uint64_t> expected;
};
HsopResult validate_hsop(int nvars, const std::vector<Polynomial>& polys, int bound);

struct HironakaDecomposition {
    int nvars = 0;
    std::vector<Polynomial> primaries;
    std::vector<int> primary_degrees;
    std::vector<Polynomial> secondaries;
    std::vector<int> secondary_degrees;
    size_t group_order = 0;
    uint64_t expected_count = 0;
    bool complete = false;
    std::vector<size_t> invariant_dims;  // up to the degree the loop reached
};

// Dimensions of R*s_0 + ... + R*s_k per degree, R generated by the primaries.
std::vector<size_t> module_dims(int nvars, const std::vector<Polynomial>& primaries,
                                const std::vector<Polynomial>& secondaries, int bound);

// Shortfall loop: adjoins canonical residues of the invariant space modulo the current
// module at each degree where it falls short. Throws BudgetExceeded if bound is hit first.
HironakaDecomposition secondary_invariants(FixedSpaceEngine& e, const std::vector<Polynomial>& primaries,
                                           int bound);

struct FreenessResult {
    bool free = false;
    int relation_degree = -1;
    std::vector<size_t> module_dims;
    std::vector<uint64_t> expected;
    std::vector<size_t> invariant_dims;
};
FreenessResult freeness_check(const HironakaDecomposition& dec, FixedSpaceEngine& e, int bound);

// Whether cand lies outside the span of R*secondaries in its degree.
bool outside_module_span(int nvars, const std::vector<Polynomial>& primaries,
                         const std::vector<Polynomial>& secondaries, const Polynomial& cand);

std::string to_text(const HironakaDecomposition& dec, const Ring& ring);

// Graded free module over a weighted polynomial ring with a group acting on both.
struct ModuleElement {
    std::vector<Polynomial> coeff;  // one coefficient per basis generator
};

struct GradedModule {
    Ring ring;  // variable weights are their degrees
    std::vector<std::string> gen_names;
    std::vector<int> gen_degrees;
    struct Action {
        std::vector<Polynomial> var_images;       // image of each ring variable
        std::vector<ModuleElement> gen_images;   // image of each basis generator
    };
    std::vector<Action> actions;
};

std::string to_string(const ModuleElement& m, const GradedModule& mod);

struct ModuleInvariants {
    std::vector<size_t> fixed_dims;
    std::vector<ModuleElement> generators;
    std::vector<int> generator_degrees;
};

// Fixed submodule and a minimal generating set over the subring generated by coeff_primaries.
ModuleInvariants module_invariants(const GradedModule& m, const std::vector<Polynomial>& coeff_primaries, int bound);

// Dimensions of the span of R*gens per degree.
std::vector<size_t> module_span_dims(const GradedModule& m, const std::vector<Polynomial>& coeff_primaries,
                                     const std::vector<ModuleElement>& gens, int bound);

// Fixed dimension of each module degree 0..bound.
std::vector<size_t> module_fixed_dims(const GradedModule& m, int bound);

}  // namespace invar
