#include "invar/bitlinalg.hpp"

#include <algorithm>
#include <bit>

namespace invar {

void BitVec::resize(size_t n) {
    n_ = n;
    w_.resize((n + 63) / 64, 0);
    if (n & 63) w_.back() &= (uint64_t(1) << (n & 63)) - 1;
}

BitVec& BitVec::operator^=(const BitVec& o) {
    if (o.n_ != n_) throw DimensionMismatch("BitVec xor: length mismatch");
    for (size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
}

bool BitVec::is_zero() const {
    for (uint64_t x : w_)
        if (x) return false;
    return true;
}

long BitVec::first() const {
    for (size_t i = 0; i < w_.size(); ++i)
        if (w_[i]) return long(i * 64 + std::countr_zero(w_[i]));
    return -1;
}

size_t BitVec::count() const {
    size_t c = 0;
    for (uint64_t x : w_) c += std::popcount(x);
    return c;
}

std::vector<size_t> BitVec::ones() const {
    std::vector<size_t> out;
    for (size_t i = 0; i < w_.size(); ++i) {
        uint64_t x = w_[i];
        while (x) {
            out.push_back(i * 64 + std::countr_zero(x));
            x &= x - 1;
        }
    }
    return out;
}

std::string BitVec::to_string() const {
    std::string s(n_, '0');
    for (size_t i = 0; i < n_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

BitMatrix BitMatrix::identity(size_t n) {
    BitMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

BitMatrix BitMatrix::from_rows(size_t cols, const std::vector<BitVec>& rows) {
    BitMatrix m(rows.size(), cols);
    for (size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
    return m;
}

BitVec BitMatrix::row_vec(size_t r) const {
    BitVec v(cols_);
    std::copy(row(r), row(r) + stride_, v.data());
    return v;
}

void BitMatrix::set_row(size_t r, const BitVec& v) {
    if (v.size() != cols_) throw DimensionMismatch("set_row: length mismatch");
    std::copy(v.data(), v.data() + stride_, row(r));
}

void BitMatrix::xor_row(size_t dst, const BitVec& v) {
    if (v.size() != cols_) throw DimensionMismatch("xor_row: length mismatch");
    uint64_t* d = row(dst);
    for (size_t k = 0; k < stride_; ++k) d[k] ^= v.data()[k];
}

void BitMatrix::truncate_rows(size_t n) {
    rows_ = std::min(rows_, n);
    d_.resize(rows_ * stride_);
}

void BitMatrix::append_row(const BitVec& v) {
    if (v.size() != cols_) throw DimensionMismatch("append_row: length mismatch");
    d_.insert(d_.end(), v.data(), v.data() + stride_);
    ++rows_;
}

namespace {

// In-place transpose of a 64x64 bit block (bit j of a[i] <-> bit i of a[j]).
void transpose64(uint64_t a[64]) {
    uint64_t m = 0x00000000FFFFFFFFULL;
    for (int j = 32; j != 0; j >>= 1, m ^= m << j) {
        for (int k = 0; k < 64; k = (k + j + 1) & ~j) {
            uint64_t t = ((a[k] >> j) ^ a[k + j]) & m;
            a[k] ^= t << j;
            a[k + j] ^= t;
        }
    }
}

}  // namespace

BitMatrix BitMatrix::transpose() const {
    BitMatrix t(cols_, rows_);
    uint64_t blk[64];
    for (size_t rb = 0; rb < rows_; rb += 64) {
        for (size_t cw = 0; cw < stride_; ++cw) {
            for (int i = 0; i < 64; ++i) blk[i] = (rb + i < rows_) ? row(rb + i)[cw] : 0;
            transpose64(blk);
            for (int i = 0; i < 64; ++i) {
                size_t c = cw * 64 + i;
                if (c >= cols_) break;
                t.row(c)[rb >> 6] = blk[i];
            }
        }
    }
    return t;
}

BitMatrix BitMatrix::operator*(const BitMatrix& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("matrix product: inner dimension mismatch");
    BitMatrix r(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i) {
        uint64_t* dst = r.row(i);
        for (size_t k = 0; k < cols_; ++k) {
            if (!get(i, k)) continue;
            const uint64_t* src = o.row(k);
            for (size_t w = 0; w < r.stride_; ++w) dst[w] ^= src[w];
        }
    }
    return r;
}

BitVec BitMatrix::apply(const BitVec& x) const {
    if (x.size() != cols_) throw DimensionMismatch("apply: length mismatch");
    BitVec y(rows_);
    for (size_t i = 0; i < rows_; ++i) {
        uint64_t acc = 0;
        for (size_t w = 0; w < stride_; ++w) acc ^= row(i)[w] & x.data()[w];
        if (std::popcount(acc) & 1) y.set(i);
    }
    return y;
}

std::vector<size_t> rref(BitMatrix& m) {
    const size_t R = m.rows(), C = m.cols(), S = m.stride();
    std::vector<size_t> piv;
    size_t r = 0;
    for (size_t c = 0; c < C && r < R; ++c) {
        const size_t wi = c >> 6;
        const uint64_t bit = uint64_t(1) << (c & 63);
        size_t p = r;
        while (p < R && !(m.row(p)[wi] & bit)) ++p;
        if (p == R) continue;
        if (p != r) std::swap_ranges(m.row(p) + wi, m.row(p) + S, m.row(r) + wi);
        const uint64_t* pr = m.row(r);
        for (size_t i = 0; i < R; ++i) {
            uint64_t* ri = m.row(i);
            if (i == r || !(ri[wi] & bit)) continue;
            for (size_t k = wi; k < S; ++k) ri[k] ^= pr[k];
        }
        piv.push_back(c);
        ++r;
    }
    m.truncate_rows(r);
    return piv;
}

Subspace Subspace::span(size_t ambient, const std::vector<BitVec>& vs) {
    return from_matrix(BitMatrix::from_rows(ambient, vs));
}

Subspace Subspace::from_matrix(BitMatrix m) {
    Subspace s;
    s.piv_ = rref(m);
    s.m_ = std::move(m);
    return s;
}

Subspace Subspace::full(size_t n) {
    Subspace s;
    s.m_ = BitMatrix::identity(n);
    s.piv_.resize(n);
    for (size_t i = 0; i < n; ++i) s.piv_[i] = i;
    return s;
}

BitVec Subspace::reduce(BitVec v) const {
    if (v.size() != ambient()) throw DimensionMismatch("reduce: ambient dimension mismatch");
    const size_t S = m_.stride();
    uint64_t* d = v.data();
    for (size_t i = 0; i < piv_.size(); ++i) {
        if (!v.get(piv_[i])) continue;
        const uint64_t* r = m_.row(i);
        for (size_t k = piv_[i] >> 6; k < S; ++k) d[k] ^= r[k];
    }
    return v;
}

bool Subspace::contains(const BitVec& v) const { return reduce(v).is_zero(); }

std::optional<BitVec> Subspace::coordinates(const BitVec& v) const {
    if (v.size() != ambient()) throw DimensionMismatch("coordinates: ambient dimension mismatch");
    BitVec c(dim());
    BitVec r = v;
    for (size_t i = 0; i < piv_.size(); ++i)
        if (r.get(piv_[i])) {
            c.set(i);
            r ^= m_.row_vec(i);
        }
    if (!r.is_zero()) return std::nullopt;
    return c;
}

bool Subspace::is_subspace_of(const Subspace& o) const {
    if (ambient() != o.ambient()) throw DimensionMismatch("is_subspace_of: ambient mismatch");
    for (size_t i = 0; i < dim(); ++i)
        if (!o.contains(m_.row_vec(i))) return false;
    return true;
}

Subspace kernel(const BitMatrix& m) {
    BitMatrix r = m;
    std::vector<size_t> piv = rref(r);
    const size_t n = m.cols();
    std::vector<bool> is_piv(n, false);
    for (size_t p : piv) is_piv[p] = true;
    std::vector<BitVec> basis;
    for (size_t f = 0; f < n; ++f) {
        if (is_piv[f]) continue;
        BitVec x(n);
        x.set(f);
        for (size_t i = 0; i < piv.size(); ++i)
            if (r.get(i, f)) x.set(piv[i]);
        basis.push_back(std::move(x));
    }
    return Subspace::span(n, basis);
}

Subspace left_kernel(const BitMatrix& m) { return kernel(m.transpose()); }

// Zassenhaus: rows (u|u) and (v|0); rows of the echelon form whose left
// half vanishes carry the intersection in the right half.
Subspace intersect(const Subspace& u, const Subspace& v) {
    const size_t n = u.ambient();
    if (v.ambient() != n) throw DimensionMismatch("intersect: ambient dimension mismatch");
    BitMatrix z(u.dim() + v.dim(), 2 * n);
    for (size_t i = 0; i < u.dim(); ++i)
        for (size_t c : u.basis_vec(i).ones()) {
            z.set(i, c);
            z.set(i, n + c);
        }
    for (size_t i = 0; i < v.dim(); ++i)
        for (size_t c : v.basis_vec(i).ones()) z.set(u.dim() + i, c);
    std::vector<size_t> piv = rref(z);
    std::vector<BitVec> out;
    for (size_t i = 0; i < piv.size(); ++i) {
        if (piv[i] < n) continue;
        BitVec x(n);
        for (size_t c = 0; c < n; ++c)
            if (z.get(i, n + c)) x.set(c);
        out.push_back(std::move(x));
    }
    return Subspace::span(n, out);
}

Subspace sum(const Subspace& u, const Subspace& v) {
    if (u.ambient() != v.ambient()) throw DimensionMismatch("sum: ambient dimension mismatch");
    std::vector<BitVec> rows;
    for (size_t i = 0; i < u.dim(); ++i) rows.push_back(u.basis_vec(i));
    for (size_t i = 0; i < v.dim(); ++i) rows.push_back(v.basis_vec(i));
    return Subspace::span(u.ambient(), rows);
}

bool contains(const Subspace& u, const BitVec& v) { return u.contains(v); }

BitVec EchelonBuilder::reduce(BitVec v) const {
    if (v.size() != n_) throw DimensionMismatch("EchelonBuilder: length mismatch");
    for (const Row& r : rows_)
        if (v.get(r.pivot)) v ^= r.v;
    return v;
}

bool EchelonBuilder::contains(const BitVec& v) const { return reduce(v).is_zero(); }

namespace {

// dst ^= src where src may be shorter than dst.
void xor_prefix(BitVec& dst, const BitVec& src) {
    for (size_t k = 0; k < src.words(); ++k) dst.data()[k] ^= src.data()[k];
}

}  // namespace

bool EchelonBuilder::insert(const BitVec& v) {
    if (v.size() != n_) throw DimensionMismatch("EchelonBuilder: length mismatch");
    const size_t item = rows_.size();
    BitVec x = v;
    BitVec combo(item + 1);
    for (const Row& r : rows_) {
        if (!x.get(r.pivot)) continue;
        x ^= r.v;
        xor_prefix(combo, r.combo);
    }
    long p = x.first();
    if (p < 0) return false;
    combo.set(item);
    Row nr{size_t(p), std::move(x), std::move(combo)};
    auto it = std::lower_bound(rows_.begin(), rows_.end(), nr.pivot,
                               [](const Row& r, size_t piv) { return r.pivot < piv; });
    rows_.insert(it, std::move(nr));
    return true;
}

std::optional<std::vector<size_t>> EchelonBuilder::express(const BitVec& v) const {
    if (v.size() != n_) throw DimensionMismatch("EchelonBuilder: length mismatch");
    BitVec x = v;
    BitVec combo(rows_.size());
    for (const Row& r : rows_) {
        if (!x.get(r.pivot)) continue;
        x ^= r.v;
        xor_prefix(combo, r.combo);
    }
    if (!x.is_zero()) return std::nullopt;
    return combo.ones();
}

Subspace EchelonBuilder::subspace() const {
    std::vector<BitVec> vs;
    vs.reserve(rows_.size());
    for (const Row& r : rows_) vs.push_back(r.v);
    return Subspace::span(n_, vs);
}

}  // namespace invar
