#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace invar {

class BitVec {
public:
    BitVec() = default;
    explicit BitVec(size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    size_t size() const { return n_; }
    size_t words() const { return w_.size(); }
    uint64_t* data() { return w_.data(); }
    const uint64_t* data() const { return w_.data(); }

    bool get(size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(size_t i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
    void reset(size_t i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
    void flip(size_t i) { w_[i >> 6] ^= uint64_t(1) << (i & 63); }
    void resize(size_t n);

    BitVec& operator^=(const BitVec& o);
    bool is_zero() const;
    // Lowest set index, or -1.
    long first() const;
    size_t count() const;
    std::vector<size_t> ones() const;
    std::string to_string() const;

    friend bool operator==(const BitVec& a, const BitVec& b) { return a.n_ == b.n_ && a.w_ == b.w_; }
    friend bool operator!=(const BitVec& a, const BitVec& b) { return !(a == b); }

private:
    size_t n_ = 0;
    std::vector<uint64_t> w_;
};

// Dense row-major bit matrix with word-aligned rows.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), stride_((cols + 63) / 64), d_(rows * stride_, 0) {}
    static BitMatrix identity(size_t n);
    static BitMatrix from_rows(size_t cols, const std::vector<BitVec>& rows);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    size_t stride() const { return stride_; }
    uint64_t* row(size_t r) { return d_.data() + r * stride_; }
    const uint64_t* row(size_t r) const { return d_.data() + r * stride_; }

    bool get(size_t r, size_t c) const { return (row(r)[c >> 6] >> (c & 63)) & 1; }
    void set(size_t r, size_t c) { row(r)[c >> 6] |= uint64_t(1) << (c & 63); }
    void flip(size_t r, size_t c) { row(r)[c >> 6] ^= uint64_t(1) << (c & 63); }
    BitVec row_vec(size_t r) const;
    void set_row(size_t r, const BitVec& v);
    void xor_row(size_t dst, const BitVec& v);
    void truncate_rows(size_t n);
    void append_row(const BitVec& v);

    BitMatrix transpose() const;
    BitMatrix operator*(const BitMatrix& o) const;
    BitVec apply(const BitVec& x) const;  // M x
    friend bool operator==(const BitMatrix& a, const BitMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.d_ == b.d_;
    }

private:
    size_t rows_ = 0, cols_ = 0, stride_ = 0;
    std::vector<uint64_t> d_;
};

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// In-place reduced row echelon form; zero rows are dropped. Returns the
// pivot column of each remaining row (increasing).
std::vector<size_t> rref(BitMatrix& m);

// Subspace of F2^n held as its reduced echelon basis, which is canonical.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(size_t ambient) : m_(0, ambient) {}
    static Subspace span(size_t ambient, const std::vector<BitVec>& vs);
    static Subspace from_matrix(BitMatrix m);
    static Subspace full(size_t n);

    size_t ambient() const { return m_.cols(); }
    size_t dim() const { return m_.rows(); }
    const BitMatrix& basis() const { return m_; }
    BitVec basis_vec(size_t i) const { return m_.row_vec(i); }
    const std::vector<size_t>& pivots() const { return piv_; }

    BitVec reduce(BitVec v) const;
    bool contains(const BitVec& v) const;
    // Coordinates with respect to the basis rows, if v lies in the span.
    std::optional<BitVec> coordinates(const BitVec& v) const;
    bool is_subspace_of(const Subspace& o) const;

    friend bool operator==(const Subspace& a, const Subspace& b) { return a.m_ == b.m_; }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    BitMatrix m_;
    std::vector<size_t> piv_;
};

Subspace kernel(const BitMatrix& m);       // {x : M x = 0}
Subspace left_kernel(const BitMatrix& m);  // {y : y M = 0}
Subspace intersect(const Subspace& u, const Subspace& v);
Subspace sum(const Subspace& u, const Subspace& v);
bool contains(const Subspace& u, const BitVec& v);

// Incremental echelon basis that remembers which accepted inputs combine
// to each stored row, so membership comes with a certificate.
class EchelonBuilder {
public:
    explicit EchelonBuilder(size_t ambient) : n_(ambient) {}
    size_t ambient() const { return n_; }
    size_t rank() const { return rows_.size(); }

    // Accepts v if independent; accepted inputs are numbered 0,1,2,...
    bool insert(const BitVec& v);
    bool contains(const BitVec& v) const;
    // Indices of accepted inputs summing to v.
    std::optional<std::vector<size_t>> express(const BitVec& v) const;
    BitVec reduce(BitVec v) const;
    Subspace subspace() const;

private:
    struct Row {
        size_t pivot;
        BitVec v;
        BitVec combo;
    };
    size_t n_;
    std::vector<Row> rows_;  // sorted by pivot
};

}  // namespace invar
