#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "invar/bitlinalg.hpp"

namespace invar {

constexpr int kMaxVars = 8;

// Exponents are packed one byte per variable with variable 0 in the top
// byte, so comparing (degree, word) is graded-lex. Total degree stays
// below 256, which keeps the byte lanes from carrying.
struct Monomial {
    uint64_t w = 0;

    static Monomial var(int i, int e = 1) {
        return Monomial{uint64_t(e) << (8 * (7 - i))};
    }
    static Monomial from_exponents(const std::vector<int>& e);

    int exp(int i) const { return int((w >> (8 * (7 - i))) & 0xff); }
    int degree() const { return int((w * 0x0101010101010101ULL) >> 56); }
    std::vector<int> exponents(int nvars) const;

    bool divides(Monomial o) const;
    Monomial operator*(Monomial o) const;
    Monomial operator/(Monomial o) const { return Monomial{w - o.w}; }

    friend bool operator==(Monomial a, Monomial b) { return a.w == b.w; }
    friend bool operator!=(Monomial a, Monomial b) { return a.w != b.w; }
    friend bool operator<(Monomial a, Monomial b) {
        int da = a.degree(), db = b.degree();
        return da != db ? da < db : a.w < b.w;
    }
    friend bool operator>(Monomial a, Monomial b) { return b < a; }
};

// Sparse polynomial over F2: a strictly descending list of monomials.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(Monomial m) : t_{m} {}
    static Polynomial one() { return Polynomial(Monomial{}); }
    static Polynomial var(int i) { return Polynomial(Monomial::var(i)); }
    // Any order, duplicates cancel in pairs.
    static Polynomial from_terms(std::vector<Monomial> terms);

    const std::vector<Monomial>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    size_t size() const { return t_.size(); }
    Monomial lead() const { return t_.front(); }
    int degree() const { return t_.empty() ? -1 : t_.front().degree(); }
    bool is_homogeneous() const;
    bool contains(Monomial m) const;
    Polynomial homogeneous_part(int d) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial operator*(Monomial m) const;
    Polynomial square() const;
    Polynomial pow(unsigned e) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.t_ == b.t_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

private:
    std::vector<Monomial> t_;
};

// Exact quotient; throws if q does not divide p.
Polynomial exact_divide(const Polynomial& p, const Polynomial& q);

// Named variables with positive weights (1 unless stated). Weights only
// matter for graded bookkeeping of symbol rings.
struct Ring {
    std::vector<std::string> names;
    std::vector<int> weights;

    Ring() = default;
    explicit Ring(std::vector<std::string> n, std::vector<int> w = {});
    int nvars() const { return int(names.size()); }
    int index(const std::string& name) const;  // -1 if absent
    int weight(int i) const { return weights[i]; }
    int weighted_degree(Monomial m) const;
    bool unit_weights() const;
    friend bool operator==(const Ring& a, const Ring& b) {
        return a.names == b.names && a.weights == b.weights;
    }
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Named polynomial values usable inside expressions.
using SymbolTable = std::map<std::string, Polynomial>;

// Canonical text: "+"-joined terms, "*"-joined factors, "name^e" with e
// omitted when 1, leading term first, "0" for zero.
std::string to_string(const Polynomial& p, const Ring& r);
std::string to_string(Monomial m, const Ring& r);

// Accepts the canonical grammar plus parentheses, integer literals 0/1,
// powers of parenthesised groups and names from `symbols`.
Polynomial parse_polynomial(const std::string& text, const Ring& r,
                            const SymbolTable* symbols = nullptr);

uint64_t binomial(int n, int k);

std::vector<Monomial> monomial_basis(int nvars, int d);

// Degree-d monomials of an n-variable ring indexed in descending
// graded-lex order. Index 0 is x_0^d.
class Slice {
public:
    Slice(int nvars, int d);
    int nvars() const { return n_; }
    int degree() const { return d_; }
    size_t size() const { return size_; }
    size_t index(Monomial m) const;
    Monomial at(size_t i) const;
    BitVec to_vec(const Polynomial& p) const;
    Polynomial to_poly(const BitVec& v) const;

private:
    int n_, d_;
    size_t size_;
};

}  // namespace invar
