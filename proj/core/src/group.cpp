#include "invar/group.hpp"

#include <bit>
#include <map>

#include "flat_set.hpp"

namespace invar {

MatF2 MatF2::identity(int n) {
    if (n < 1 || n > 8) throw std::invalid_argument("MatF2: size must be in 1..8");
    MatF2 m;
    m.n_ = n;
    for (int i = 0; i < n; ++i) m.r_[i] = uint8_t(1u << i);
    return m;
}

MatF2 MatF2::from_rows(const std::vector<std::vector<int>>& rows) {
    int n = int(rows.size());
    MatF2 m = identity(n);
    for (int i = 0; i < n; ++i) {
        if (int(rows[i].size()) != n) throw std::invalid_argument("MatF2: matrix is not square");
        m.r_[i] = 0;
        for (int j = 0; j < n; ++j) {
            if (rows[i][j] != 0 && rows[i][j] != 1) throw std::invalid_argument("MatF2: entries must be 0 or 1");
            if (rows[i][j]) m.r_[i] |= uint8_t(1u << j);
        }
    }
    return m;
}

MatF2 MatF2::from_images(int n, const std::vector<uint8_t>& images) {
    if (int(images.size()) != n) throw std::invalid_argument("MatF2: wrong number of images");
    MatF2 m = identity(n);
    m.r_.fill(0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (images[i] >> j & 1) m.r_[j] |= uint8_t(1u << i);
    return m;
}

MatF2 MatF2::from_key(int n, uint64_t key) {
    MatF2 m = identity(n);
    for (int i = 0; i < 8; ++i) m.r_[i] = uint8_t(key >> (8 * i));
    return m;
}

void MatF2::set(int i, int j, bool v) {
    if (v)
        r_[i] |= uint8_t(1u << j);
    else
        r_[i] &= uint8_t(~(1u << j));
}

uint8_t MatF2::image(int i) const {
    uint8_t c = 0;
    for (int j = 0; j < n_; ++j)
        if (get(j, i)) c |= uint8_t(1u << j);
    return c;
}

MatF2 MatF2::operator*(const MatF2& o) const {
    if (n_ != o.n_) throw std::invalid_argument("MatF2: size mismatch");
    MatF2 m;
    m.n_ = n_;
    for (int i = 0; i < n_; ++i) {
        uint8_t acc = 0;
        for (int j = 0; j < n_; ++j)
            if (get(i, j)) acc ^= o.r_[j];
        m.r_[i] = acc;
    }
    return m;
}

MatF2 MatF2::transpose() const {
    MatF2 m;
    m.n_ = n_;
    for (int i = 0; i < n_; ++i) m.r_[i] = image(i);
    return m;
}

MatF2 MatF2::inverse() const {
    std::array<uint8_t, 8> a = r_, b = identity(n_).r_;
    for (int c = 0; c < n_; ++c) {
        int p = c;
        while (p < n_ && !(a[p] >> c & 1)) ++p;
        if (p == n_) throw std::domain_error("MatF2: matrix is singular");
        std::swap(a[c], a[p]);
        std::swap(b[c], b[p]);
        for (int r = 0; r < n_; ++r)
            if (r != c && (a[r] >> c & 1)) {
                a[r] ^= a[c];
                b[r] ^= b[c];
            }
    }
    MatF2 m;
    m.n_ = n_;
    m.r_ = b;
    return m;
}

bool MatF2::invertible() const {
    std::array<uint8_t, 8> a = r_;
    for (int c = 0; c < n_; ++c) {
        int p = c;
        while (p < n_ && !(a[p] >> c & 1)) ++p;
        if (p == n_) return false;
        std::swap(a[c], a[p]);
        for (int r = c + 1; r < n_; ++r)
            if (a[r] >> c & 1) a[r] ^= a[c];
    }
    return true;
}

bool MatF2::is_identity() const { return *this == identity(n_); }

bool MatF2::is_permutation() const {
    uint8_t seen = 0;
    for (int i = 0; i < n_; ++i) {
        if (std::popcount(unsigned(r_[i])) != 1) return false;
        seen |= r_[i];
    }
    return std::popcount(unsigned(seen)) == n_;
}

int MatF2::order() const {
    if (!invertible()) throw std::domain_error("MatF2: singular matrix has no order");
    MatF2 p = *this;
    int k = 1;
    while (!p.is_identity()) {
        p = p * *this;
        ++k;
    }
    return k;
}

uint64_t MatF2::key() const {
    uint64_t k = 0;
    for (int i = 0; i < 8; ++i) k |= uint64_t(r_[i]) << (8 * i);
    return k;
}

std::vector<std::vector<int>> MatF2::rows() const {
    std::vector<std::vector<int>> out(n_, std::vector<int>(n_));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) out[i][j] = get(i, j);
    return out;
}

Polynomial act_on_poly(const MatF2& m, const Polynomial& p) {
    const int n = m.n();
    if (p.is_zero()) return p;
    // frob[i][k] = image of x_i^(2^k), which is the Frobenius power of a linear form.
    std::vector<std::vector<Polynomial>> frob(n);
    for (int i = 0; i < n; ++i) {
        std::vector<Monomial> t;
        for (int j = 0; j < n; ++j)
            if (m.image(i) >> j & 1) t.push_back(Monomial::var(j));
        frob[i].push_back(Polynomial::from_terms(t));
        for (int k = 1; k < 8; ++k) frob[i].push_back(frob[i].back().square());
    }
    std::map<int, BitVec> acc;
    std::map<int, Slice> slices;
    for (Monomial t : p.terms()) {
        Polynomial img = Polynomial::one();
        for (int i = 0; i < kMaxVars; ++i) {
            int e = t.exp(i);
            if (!e) continue;
            if (i >= n) throw std::invalid_argument("act_on_poly: polynomial uses more variables than the matrix size");
            for (int k = 0; e; ++k, e >>= 1)
                if (e & 1) img *= frob[i][k];
        }
        int d = t.degree();
        auto it = slices.find(d);
        if (it == slices.end()) {
            it = slices.emplace(d, Slice(n, d)).first;
            acc.emplace(d, BitVec(it->second.size()));
        }
        BitVec& v = acc.at(d);
        for (Monomial x : img.terms()) v.flip(it->second.index(x));
    }
    Polynomial out;
    for (auto& [d, v] : acc) out += slices.at(d).to_poly(v);
    return out;
}

std::vector<MatF2> bounded_closure(int n, const std::vector<MatF2>& gens, size_t cap) {
    for (const auto& g : gens) {
        if (g.n() != n) throw std::invalid_argument("MatrixGroup: generator size mismatch");
        if (!g.invertible()) throw std::invalid_argument("MatrixGroup: generator is singular");
    }
    std::vector<MatF2> out{MatF2::identity(n)};
    detail::FlatSet64 seen;
    seen.insert(out[0].key());
    for (size_t i = 0; i < out.size(); ++i)
        for (const auto& g : gens) {
            MatF2 y = out[i] * g;
            if (seen.insert(y.key())) {
                if (out.size() >= cap) return {};
                out.push_back(y);
            }
        }
    return out;
}

MatrixGroup::MatrixGroup(int n, std::vector<MatF2> gens) : n_(n), gens_(std::move(gens)) {
    for (const auto& g : gens_) {
        if (g.n() != n) throw std::invalid_argument("MatrixGroup: generator size mismatch");
        if (!g.invertible()) throw std::invalid_argument("MatrixGroup: generator is singular");
    }
}

const std::vector<MatF2>& MatrixGroup::elements(size_t budget) const {
    if (elems_.empty()) {
        elems_ = bounded_closure(n_, gens_, budget);
        if (elems_.empty()) throw BudgetExceeded("matrix group closure exceeds budget of " + std::to_string(budget));
    }
    return elems_;
}

bool MatrixGroup::contains(const MatF2& g, size_t budget) const {
    for (const auto& e : elements(budget))
        if (e == g) return true;
    return false;
}

uint64_t gl_order(int n) {
    uint64_t r = 1;
    for (int i = 0; i < n; ++i) r *= (uint64_t(1) << n) - (uint64_t(1) << i);
    return r;
}

std::vector<MatF2> general_linear_group(int n) {
    if (n < 1 || n > 4) throw std::invalid_argument("general_linear_group: n must be in 1..4");
    std::vector<MatF2> out;
    uint64_t total = uint64_t(1) << (n * n);
    for (uint64_t k = 0; k < total; ++k) {
        uint64_t key = 0;
        for (int i = 0; i < n; ++i) key |= ((k >> (n * i)) & ((1u << n) - 1)) << (8 * i);
        MatF2 m = MatF2::from_key(n, key);
        if (m.invertible()) out.push_back(m);
    }
    return out;
}

}  // namespace invar
