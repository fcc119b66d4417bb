#pragma once

#include <optional>
#include <string>
#include <vector>

#include "invar/gf2.hpp"
#include "invar/group.hpp"
#include "invar/invariant.hpp"

namespace invar {

// A matrix group acting on a named polynomial ring.
struct NamedMatrixGroup {
    std::string name;
    Ring ring;
    std::vector<MatF2> gens;
};

// The two 4x4 matrices whose transposes generate L3(2) acting on F2[x, y, z, w].
MatF2 l3_2_matrix_a();
MatF2 l3_2_matrix_b();
NamedMatrixGroup l3_2_on_2_4();

// D8 on F2[w, t, z]: z -> z+t, z -> z+w, t -> t+w.
NamedMatrixGroup d8_wtz();

// Dickson-type classes in F2[w, t, z]: d2 = w^2+wt+t^2, d3 = wt(w+t), d4 = z^4+z^2 d2+z d3+d2^2.
struct WtzClasses {
    Polynomial w, t, z, d2, d3, d4;
};
WtzClasses wtz_classes();

// Extends the D8 above by one element of order 3 from GL3(2) so that the
// invariant ring is F2[d2, d3, d4] through the given degree.
NamedMatrixGroup find_s4_over_d8(int check_bound = 24);

// Extends <A^T, B^T> by a single element of GL4(2) to a group of order 2520
// whose invariant dimensions match the given series through check_bound.
NamedMatrixGroup find_a7_in_gl4(int check_bound = 24);

// Expected A7 invariant dimensions: (1+t^18+t^20+t^21+t^24+t^25+t^27+t^45) / prod (1-t^d), d in 8,12,14,15.
std::vector<uint64_t> a7_series(int bound);

// Coefficients of sum t^s / prod (1 - t^d).
std::vector<uint64_t> free_module_series(const std::vector<int>& gen_degrees,
                                         const std::vector<int>& numerator_degrees, int bound);

// F2[v4, w4](gamma2, beta2, gamma3, beta3, alpha5) with the S3 = <T, u> action:
// T cycles gamma2 -> beta2 -> gamma2+beta2 and fixes everything else, u swaps v4/w4,
// gamma2/beta2 and gamma3/beta3. With only_t, the u action is left out.
GradedModule s3_radical_module(bool only_t = false);

// The identity group on F2[x].
NamedMatrixGroup trivial_1var();

// Named shorthands: "L3_2_on_2^4", "D8_lemma5_3", "S4_over_D8", "A7_in_GL4", "trivial_1var".
std::optional<NamedMatrixGroup> named_matrix_group(const std::string& name);
std::vector<std::string> matrix_group_names();

// Primary invariants used for each named group: d4, d6, d7, d8 for L3(2); w, t(t+w), d4 for D8;
// d2, d3, d4 for S4; the GL4 Dickson invariants for A7; x for the trivial group.
std::optional<std::vector<Polynomial>> default_primaries(const std::string& name);

}  // namespace invar
