#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "invar/group.hpp"

namespace invar {

constexpr int kMaxPoints = 16;

// Permutation of {0..n-1}; text form uses 1-based cycles such as "(1,2)(3,4)".
// Product is composition: (p*q)(x) = p(q(x)).
class Perm {
public:
    Perm() = default;
    explicit Perm(int n);  // identity
    static Perm from_images(const std::vector<int>& images);
    static Perm parse(const std::string& cycles, int n);

    int n() const { return n_; }
    int operator()(int x) const { return p_[x]; }
    Perm operator*(const Perm& o) const;
    Perm inverse() const;
    Perm conj(const Perm& g) const;  // g * this * g^-1
    bool is_identity() const;
    bool is_even() const;
    int order() const;
    // Cycle lengths > 1, descending.
    std::vector<int> cycle_type() const;
    uint64_t key() const;
    std::string to_string() const;

    friend bool operator==(const Perm& a, const Perm& b) { return a.n_ == b.n_ && a.p_ == b.p_; }
    friend bool operator!=(const Perm& a, const Perm& b) { return !(a == b); }
    friend bool operator<(const Perm& a, const Perm& b) { return a.key() < b.key(); }

private:
    int n_ = 0;
    std::array<uint8_t, kMaxPoints> p_{};
};

// Parses "2^4" or "2,2,2,2" into a descending cycle type.
std::vector<int> parse_cycle_type(const std::string& s);
std::string cycle_type_string(const std::vector<int>& t);

class PermGroup {
public:
    PermGroup() = default;
    PermGroup(int n, std::vector<Perm> gens);
    static PermGroup symmetric(int n);
    static PermGroup alternating(int n);
    // Small generating set for a subgroup given by its element list.
    static PermGroup from_elements(int n, const std::vector<Perm>& elems);

    int degree() const { return n_; }
    const std::vector<Perm>& generators() const { return gens_; }
    const std::vector<Perm>& elements(size_t budget = 2'000'000) const;
    size_t order(size_t budget = 2'000'000) const { return elements(budget).size(); }
    bool contains(const Perm& g, size_t budget = 2'000'000) const;
    std::vector<std::vector<int>> orbits() const;
    std::string to_string() const;

private:
    void index(size_t budget) const;

    int n_ = 0;
    std::vector<Perm> gens_;
    mutable std::vector<Perm> elems_;
    mutable std::vector<uint64_t> sorted_keys_;
};

// N_G(H) computed by filtering the closure of G. Requires H <= G.
PermGroup normalizer(const PermGroup& g, const PermGroup& h, size_t budget = 2'000'000);

// Some x in G with x H1 x^-1 = H2, or nullopt.
std::optional<Perm> are_conjugate(const PermGroup& g, const PermGroup& h1, const PermGroup& h2,
                                  size_t budget = 2'000'000);

// Conjugacy-invariant summary: order, orbit sizes and cycle type counts.
std::string subgroup_signature(const PermGroup& h);

// One representative per conjugacy class of maximal elementary abelian 2-subgroups of S_n or A_n.
struct EA2Class {
    std::string label;  // e.g. "V3", "V2^2", "V2xV1^2", "V2xE3"; split A_n classes get "a"/"b"
    PermGroup rep;
    int rank = 0;
    std::vector<int> orbit_sizes;  // nontrivial orbits, descending
    int letters = 0;               // points moved
};

std::vector<EA2Class> maximal_ea2_subgroups(int n, bool alternating);

// Among elementary abelian 2-subgroups whose nonidentity elements all have the given cycle type,
// the maximal ones up to conjugacy in G (S_n or A_n). Uses the closure of G for conjugacy tests.
struct TypedEA2Class {
    PermGroup rep;
    int rank = 0;
    std::string from_class;  // label of the maximal class it was found in
    std::vector<int> orbit_sizes;
};

std::vector<TypedEA2Class> filter_by_cycle_type(int n, bool alternating, const std::vector<int>& type,
                                                size_t budget = 2'000'000);

// Parses "S8", "A10" etc.
struct NamedSymmetric {
    int n = 0;
    bool alternating = false;
};
std::optional<NamedSymmetric> parse_symmetric_name(const std::string& s);

// Involutions of S_n (or A_n), every product of k >= 1 disjoint transpositions.
std::vector<Perm> involutions(int n, bool alternating);

// Elements of an elementary abelian 2-group given by independent generators.
std::vector<Perm> span_elements(int n, const std::vector<Perm>& basis);

}  // namespace invar
