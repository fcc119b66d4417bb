#pragma once

#include <string>
#include <vector>

#include "invar/gf2.hpp"
#include "invar/invariant.hpp"

namespace invar {

// Ring endomorphism x -> x + x^2 on every degree-1 variable.
Polynomial total_square(const Polynomial& p);

// Degree-(d+k) part of the total square of a homogeneous p of degree d.
Polynomial sq(int k, const Polynomial& p);

// Composite Sq^{k_1} Sq^{k_2} ... applied right to left.
Polynomial sq_sequence(const std::vector<int>& ks, const Polynomial& p);

struct ChainLink {
    std::string label;       // e.g. "Sq^1 a8"
    int degree = 0;
    Polynomial value;
    bool invariant = false;
    bool completes = false;  // outside the R-span of the earlier secondaries
    bool literal = false;    // equals the secondary the shortfall loop chose in that degree
};

struct SecondaryChainReport {
    std::vector<ChainLink> links;
    bool all_complete = false;
};

// Checks a9 = Sq^1 a8, a11 = Sq^2 Sq^1 a8, a12 = Sq^2 a10, a13 = Sq^1 Sq^2 a10 against a
// decomposition with secondary degrees 0, 8, ..., 13, 21, plus the two degree-21 products.
SecondaryChainReport verify_secondary_chain(const HironakaDecomposition& dec, const std::vector<MatF2>& gens);

}  // namespace invar
