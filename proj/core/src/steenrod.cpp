#include "invar/steenrod.hpp"

#include <algorithm>
#include <stdexcept>

namespace invar {

namespace {

// Adds sum over k_i with sum k_i = k of prod C(e_i, k_i) x_i^(e_i + k_i); C(e, j) is odd iff j is a submask of e.
void cartan(Monomial m, int nv, int i, int k, Monomial acc, std::vector<Monomial>& out) {
    if (i == nv) {
        if (k == 0) out.push_back(acc);
        return;
    }
    const int e = m.exp(i);
    for (int j = 0; j <= std::min(e, k); ++j)
        if ((j & e) == j) cartan(m, nv, i + 1, k - j, acc * Monomial::var(i, e + j), out);
}

int vars_in(const Polynomial& p) {
    int n = 0;
    for (Monomial m : p.terms())
        for (int i = 0; i < kMaxVars; ++i)
            if (m.exp(i)) n = std::max(n, i + 1);
    return n;
}

}  // namespace

Polynomial sq(int k, const Polynomial& p) {
    if (k < 0) throw std::invalid_argument("sq: negative index");
    if (!p.is_homogeneous()) throw std::invalid_argument("sq: polynomial is not homogeneous");
    if (p.is_zero() || k > p.degree()) return {};
    if (p.degree() + k > 255) throw std::invalid_argument("sq: result degree exceeds 255");
    const int nv = vars_in(p);
    std::vector<Monomial> out;
    for (Monomial m : p.terms()) cartan(m, nv, 0, k, Monomial{}, out);
    return Polynomial::from_terms(std::move(out));
}

Polynomial total_square(const Polynomial& p) {
    Polynomial out;
    for (int d = 0; d <= p.degree(); ++d) {
        Polynomial h = p.homogeneous_part(d);
        for (int k = 0; k <= d; ++k) out += sq(k, h);
    }
    return out;
}

Polynomial sq_sequence(const std::vector<int>& ks, const Polynomial& p) {
    Polynomial out = p;
    for (auto it = ks.rbegin(); it != ks.rend(); ++it) out = sq(*it, out);
    return out;
}

SecondaryChainReport verify_secondary_chain(const HironakaDecomposition& dec, const std::vector<MatF2>& gens) {
    const std::vector<int> want{0, 8, 9, 10, 11, 12, 13, 21};
    if (dec.secondary_degrees != want)
        throw std::invalid_argument("verify_secondary_chain: expected secondary degrees 0, 8, ..., 13, 21");
    const auto& s = dec.secondaries;
    const Polynomial &a8 = s[1], &a10 = s[3];
    struct Spec {
        std::string label;
        Polynomial value;
        int slot;  // index of the secondary it stands in for
    };
    std::vector<Spec> specs{
        {"Sq^1 a8", sq(1, a8), 2},
        {"Sq^2 Sq^1 a8", sq_sequence({2, 1}, a8), 4},
        {"Sq^2 a10", sq(2, a10), 5},
        {"Sq^1 Sq^2 a10", sq_sequence({1, 2}, a10), 6},
        {"a10*a11", s[3] * s[4], 7},
        {"a8*a13", s[1] * s[6], 7},
    };
    SecondaryChainReport r;
    r.all_complete = true;
    for (const auto& sp : specs) {
        ChainLink l;
        l.label = sp.label;
        l.degree = dec.secondary_degrees[sp.slot];
        l.value = sp.value;
        l.invariant = is_invariant(gens, sp.value);
        std::vector<Polynomial> prior(s.begin(), s.begin() + sp.slot);
        l.completes = !sp.value.is_zero() && sp.value.degree() == l.degree &&
                      outside_module_span(dec.nvars, dec.primaries, prior, sp.value);
        l.literal = sp.value == s[sp.slot];
        r.all_complete = r.all_complete && l.invariant && l.completes;
        r.links.push_back(std::move(l));
    }
    return r;
}

}  // namespace invar
