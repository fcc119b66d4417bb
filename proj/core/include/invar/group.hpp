#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "invar/gf2.hpp"

namespace invar {

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// n x n matrix over F2, n <= 8. Row i is a bitmask: bit j set iff M[i][j] = 1.
class MatF2 {
public:
    MatF2() = default;
    static MatF2 identity(int n);
    static MatF2 from_rows(const std::vector<std::vector<int>>& rows);
    // images[i] is the linear form x_i maps to, as a bitmask over variables.
    static MatF2 from_images(int n, const std::vector<uint8_t>& images);
    static MatF2 from_key(int n, uint64_t key);

    int n() const { return n_; }
    bool get(int i, int j) const { return (r_[i] >> j) & 1; }
    void set(int i, int j, bool v);
    uint8_t row(int i) const { return r_[i]; }
    // Column i, i.e. the image of x_i under act_on_poly.
    uint8_t image(int i) const;

    MatF2 operator*(const MatF2& o) const;
    MatF2 transpose() const;
    MatF2 inverse() const;  // throws if singular
    bool invertible() const;
    bool is_identity() const;
    bool is_permutation() const;
    int order() const;
    uint64_t key() const;
    std::vector<std::vector<int>> rows() const;

    friend bool operator==(const MatF2& a, const MatF2& b) { return a.n_ == b.n_ && a.r_ == b.r_; }
    friend bool operator!=(const MatF2& a, const MatF2& b) { return !(a == b); }

private:
    int n_ = 0;
    std::array<uint8_t, 8> r_{};
};

// Substitutes x_i -> sum_j M[j][i] x_j. act(MN, p) = act(M, act(N, p)).
Polynomial act_on_poly(const MatF2& m, const Polynomial& p);

class MatrixGroup {
public:
    MatrixGroup() = default;
    MatrixGroup(int n, std::vector<MatF2> gens);

    int dim() const { return n_; }
    const std::vector<MatF2>& generators() const { return gens_; }
    // Breadth-first closure in a deterministic order; identity first.
    const std::vector<MatF2>& elements(size_t budget = 1u << 22) const;
    size_t order(size_t budget = 1u << 22) const { return elements(budget).size(); }
    bool contains(const MatF2& g, size_t budget = 1u << 22) const;

private:
    int n_ = 0;
    std::vector<MatF2> gens_;
    mutable std::vector<MatF2> elems_;
};

// Closure of gens with a hard size cap; returns empty when the cap is hit.
std::vector<MatF2> bounded_closure(int n, const std::vector<MatF2>& gens, size_t cap);

// Every invertible n x n matrix, ordered by key.
std::vector<MatF2> general_linear_group(int n);

uint64_t gl_order(int n);

}  // namespace invar
