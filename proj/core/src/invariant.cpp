#include "invar/invariant.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace invar {

namespace {

// Elementary substitution: a swap x_a <-> x_b, or a transvection x_a -> x_a + x_b.
struct Elementary {
    bool swap;
    int a, b;
};

// g = F_k ... F_1 where g F_1 ... F_k = I by column operations.
std::vector<Elementary> column_factors(MatF2 g) {
    const int n = g.n();
    std::vector<Elementary> out;
    auto swap_cols = [&](int c, int j) {
        for (int r = 0; r < n; ++r) {
            bool x = g.get(r, c), y = g.get(r, j);
            g.set(r, c, y);
            g.set(r, j, x);
        }
    };
    for (int c = 0; c < n; ++c) {
        int j = c;
        while (j < n && !g.get(c, j)) ++j;
        if (j == n) throw std::invalid_argument("slice_action_matrix: singular matrix");
        if (j != c) {
            swap_cols(c, j);
            out.push_back({true, c, j});
        }
        for (int i = 0; i < n; ++i)
            if (i != c && g.get(c, i)) {
                for (int r = 0; r < n; ++r)
                    if (g.get(r, c)) g.set(r, i, !g.get(r, i));
                out.push_back({false, i, c});
            }
    }
    return out;
}

Monomial set_exp(Monomial m, int i, int e) {
    const int sh = 8 * (7 - i);
    return Monomial{(m.w & ~(uint64_t(0xff) << sh)) | (uint64_t(e) << sh)};
}

void xor_words(uint64_t* dst, const uint64_t* src, size_t n) {
    for (size_t i = 0; i < n; ++i) dst[i] ^= src[i];
}

Monomial permute(Monomial m, const std::vector<int>& sigma) {
    Monomial out;
    for (size_t i = 0; i < sigma.size(); ++i) out = set_exp(out, sigma[i], m.exp(int(i)));
    return out;
}

std::vector<int> variable_permutation(const MatF2& p) {
    std::vector<int> s(p.n());
    for (int i = 0; i < p.n(); ++i) s[i] = std::countr_zero(unsigned(p.image(i)));
    return s;
}

int homogeneous_degree(const Polynomial& p, const char* who) {
    if (p.is_zero() || !p.is_homogeneous())
        throw std::invalid_argument(std::string(who) + ": polynomials must be nonzero and homogeneous");
    return p.degree();
}

std::vector<Polynomial> basis_polys(const Slice& s, const Subspace& v) {
    std::vector<Polynomial> out;
    for (size_t i = 0; i < v.dim(); ++i) out.push_back(s.to_poly(v.basis_vec(i)));
    return out;
}

// Bases of the degree slices of the subalgebra generated by polys.
std::vector<std::vector<Polynomial>> subalgebra_bases(int nvars, const std::vector<Polynomial>& polys,
                                                      int bound) {
    std::vector<int> deg;
    for (const auto& p : polys) deg.push_back(homogeneous_degree(p, "subalgebra"));
    std::vector<std::vector<Polynomial>> b(bound + 1);
    b[0] = {Polynomial::one()};
    for (int d = 1; d <= bound; ++d) {
        Slice s(nvars, d);
        std::vector<BitVec> vs;
        for (size_t i = 0; i < polys.size(); ++i)
            if (deg[i] > 0 && deg[i] <= d)
                for (const auto& q : b[d - deg[i]]) vs.push_back(s.to_vec(polys[i] * q));
        b[d] = basis_polys(s, Subspace::span(s.size(), vs));
    }
    return b;
}

Subspace module_span(int nvars, const std::vector<std::vector<Polynomial>>& rb,
                     const std::vector<Polynomial>& secondaries, int d) {
    Slice s(nvars, d);
    std::vector<BitVec> vs;
    for (const auto& q : secondaries) {
        int e = d - q.degree();
        if (e < 0 || e >= int(rb.size())) continue;
        for (const auto& b : rb[e]) vs.push_back(s.to_vec(b * q));
    }
    return Subspace::span(s.size(), vs);
}

}  // namespace

BitMatrix slice_action_matrix(const MatF2& g, int d) {
    const int n = g.n();
    Slice s(n, d);
    const size_t N = s.size();
    auto ops = column_factors(g);
    BitMatrix x = BitMatrix::identity(N), y(N, N);
    const size_t words = x.stride();
    // act(g) = act(F_k) ... act(F_1), so R(g) = R(F_1) ... R(F_k): multiply on the left from F_k down.
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        for (size_t r = 0; r < N; ++r) {
            Monomial m = s.at(r);
            uint64_t* dst = y.row(r);
            if (it->swap) {
                Monomial t = set_exp(set_exp(m, it->a, m.exp(it->b)), it->b, m.exp(it->a));
                std::memcpy(dst, x.row(s.index(t)), words * 8);
                continue;
            }
            std::memset(dst, 0, words * 8);
            const int a = m.exp(it->a), c = m.exp(it->b);
            Monomial rest = set_exp(m, it->a, 0);
            // (x_a + x_b)^a = sum over bitwise submasks k of a of x_a^(a-k) x_b^k.
            for (int k = a;; k = (k - 1) & a) {
                Monomial t = set_exp(set_exp(rest, it->a, a - k), it->b, c + k);
                xor_words(dst, x.row(s.index(t)), words);
                if (k == 0) break;
            }
        }
        std::swap(x, y);
    }
    return x;
}

BitVec row_times(const BitVec& v, const BitMatrix& m) {
    if (v.size() != m.rows()) throw DimensionMismatch("row_times: size mismatch");
    BitVec out(m.cols());
    for (size_t r : v.ones()) xor_words(out.data(), m.row(r), m.stride());
    return out;
}

FixedSpaceEngine::FixedSpaceEngine(int nvars, std::vector<MatF2> gens, size_t budget)
    : n_(nvars), gens_(std::move(gens)) {
    if (n_ < 1 || n_ > kMaxVars) throw std::invalid_argument("FixedSpaceEngine: bad variable count");
    for (const auto& g : gens_)
        if (g.n() != n_ || !g.invertible())
            throw std::invalid_argument("FixedSpaceEngine: generators must be invertible " + std::to_string(n_) +
                                        "x" + std::to_string(n_) + " matrices");
    MatrixGroup grp(n_, gens_);
    const auto& elems = grp.elements(budget);
    order_ = elems.size();

    std::unordered_set<uint64_t> keys;
    for (const auto& g : elems) keys.insert(g.key());
    std::vector<MatF2> perms;
    {
        std::vector<int> s(n_);
        std::iota(s.begin(), s.end(), 0);
        do {
            std::vector<uint8_t> im(n_);
            for (int i = 0; i < n_; ++i) im[i] = uint8_t(1u << s[i]);
            perms.push_back(MatF2::from_images(n_, im));
        } while (std::next_permutation(s.begin(), s.end()));
    }
    // Frame h maximizing |hGh^-1 ∩ permutation matrices|; the identity wins ties.
    auto count_for = [&](const MatF2& h, const MatF2& hi) {
        size_t c = 0;
        for (const auto& p : perms)
            if (keys.count((hi * p * h).key())) ++c;
        return c;
    };
    h_ = h_inv_ = MatF2::identity(n_);
    size_t best = count_for(h_, h_inv_);
    if (n_ <= 4 && best < perms.size()) {
        for (const auto& h : general_linear_group(n_)) {
            MatF2 hi = h.inverse();
            size_t c = count_for(h, hi);
            if (c > best) {
                best = c;
                h_ = h;
                h_inv_ = hi;
            }
        }
    }
    perm_order_ = best;

    std::vector<MatF2> pgens;
    std::unordered_set<uint64_t> covered{MatF2::identity(n_).key()};
    for (const auto& p : perms) {
        if (!keys.count((h_inv_ * p * h_).key()) || covered.count(p.key())) continue;
        pgens.push_back(p);
        perm_gens_.push_back(variable_permutation(p));
        covered.clear();
        for (const auto& q : bounded_closure(n_, pgens, perms.size() + 1)) covered.insert(q.key());
    }
    std::vector<MatF2> cur = pgens;
    for (const auto& g : gens_) {
        MatF2 f = h_ * g * h_inv_;
        if (covered.count(f.key())) continue;
        extra_.push_back(f);
        cur.push_back(f);
        covered.clear();
        for (const auto& q : bounded_closure(n_, cur, order_ + 1)) covered.insert(q.key());
    }
}

const Subspace& FixedSpaceEngine::fixed_in_frame(int d) {
    if (d < 0) throw std::invalid_argument("fixed_in_frame: negative degree");
    auto it = frame_cache_.find(d);
    if (it != frame_cache_.end()) return it->second;
    Slice s(n_, d);
    const size_t N = s.size();

    std::vector<size_t> parent(N);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](size_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (const auto& sigma : perm_gens_)
        for (size_t i = 0; i < N; ++i) {
            size_t a = find(i), b = find(s.index(permute(s.at(i), sigma)));
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    std::vector<std::vector<size_t>> orbits;
    std::vector<long> slot(N, -1);
    for (size_t i = 0; i < N; ++i) {
        size_t r = find(i);
        if (slot[r] < 0) {
            slot[r] = long(orbits.size());
            orbits.emplace_back();
        }
        orbits[slot[r]].push_back(i);
    }
    std::vector<BitVec> sums;
    for (const auto& o : orbits) {
        BitVec v(N);
        for (size_t i : o) v.set(i);
        sums.push_back(std::move(v));
    }

    Subspace result;
    if (extra_.empty()) {
        result = Subspace::span(N, sums);
    } else {
        // Row k: (act(g, sum_k) + sum_k) for each extra generator g, side by side.
        const size_t words = (N + 63) / 64;
        BitMatrix dm(orbits.size(), extra_.size() * words * 64);
        for (size_t j = 0; j < extra_.size(); ++j) {
            BitMatrix r = slice_action_matrix(extra_[j], d);
            for (size_t k = 0; k < orbits.size(); ++k) {
                uint64_t* dst = dm.row(k) + j * words;
                for (size_t i : orbits[k]) xor_words(dst, r.row(i), words);
                xor_words(dst, sums[k].data(), words);
            }
        }
        Subspace combos = left_kernel(dm);
        std::vector<BitVec> vs;
        for (size_t c = 0; c < combos.dim(); ++c) {
            BitVec v(N);
            for (size_t k : combos.basis_vec(c).ones()) v ^= sums[k];
            vs.push_back(std::move(v));
        }
        result = Subspace::span(N, vs);
    }
    return frame_cache_.emplace(d, std::move(result)).first->second;
}

const Subspace& FixedSpaceEngine::fixed(int d) {
    if (h_.is_identity()) return fixed_in_frame(d);
    auto it = orig_cache_.find(d);
    if (it != orig_cache_.end()) return it->second;
    const Subspace& f = fixed_in_frame(d);
    std::vector<BitVec> vs;
    if (f.dim() > 0) {
        BitMatrix r = slice_action_matrix(h_inv_, d);
        for (size_t i = 0; i < f.dim(); ++i) vs.push_back(row_times(f.basis_vec(i), r));
    }
    return orig_cache_.emplace(d, Subspace::span(f.ambient(), vs)).first->second;
}

std::vector<Polynomial> FixedSpaceEngine::basis(int d) { return basis_polys(Slice(n_, d), fixed(d)); }

std::vector<size_t> invariant_dims(FixedSpaceEngine& e, int bound) {
    std::vector<size_t> out;
    for (int d = 0; d <= bound; ++d) out.push_back(e.dim(d));
    return out;
}

std::vector<size_t> invariant_dims(int nvars, const std::vector<MatF2>& gens, int bound) {
    FixedSpaceEngine e(nvars, gens);
    return invariant_dims(e, bound);
}

std::vector<Polynomial> invariant_basis(int nvars, const std::vector<MatF2>& gens, int d) {
    FixedSpaceEngine e(nvars, gens);
    return e.basis(d);
}

bool is_invariant(const std::vector<MatF2>& gens, const Polynomial& p) {
    for (const auto& g : gens)
        if (act_on_poly(g, p) != p) return false;
    return true;
}

std::vector<DicksonClass> dickson(int n) {
    if (n < 1 || n >= kMaxVars) throw std::invalid_argument("dickson: need 1 <= n < 8");
    Polynomial prod = Polynomial::one();
    for (int l = 0; l < (1 << n); ++l) {
        Polynomial f = Polynomial::var(n);
        for (int j = 0; j < n; ++j)
            if (l >> j & 1) f += Polynomial::var(j);
        prod *= f;
    }
    std::vector<DicksonClass> out;
    for (int i = n - 1; i >= 0; --i) {
        const int e = 1 << i;
        std::vector<Monomial> t;
        for (Monomial m : prod.terms())
            if (m.exp(n) == e) t.push_back(set_exp(m, n, 0));
        out.push_back({(1 << n) - e, Polynomial::from_terms(std::move(t))});
    }
    // Listed by entry index i, so d_{2^n - 2^i} sits at position i.
    std::reverse(out.begin(), out.end());
    return out;
}

IdentityCheck relative_dickson_top(int n) {
    if (n < 1 || n > 4) throw std::invalid_argument("relative_dickson_top: need 1 <= n <= 4");
    IdentityCheck r;
    const std::string x = "x" + std::to_string(n - 1);
    Polynomial xv = Polynomial::var(n - 1);
    r.lhs = dickson(n)[n - 1].poly;
    auto dname = [](int deg) { return "d" + std::to_string(deg); };
    r.rhs = xv.pow(1u << (n - 1));
    r.description = dname(1 << (n - 1)) + " = " + x + (n > 1 ? "^" + std::to_string(1 << (n - 1)) : "");
    if (n > 1) {
        auto lower = dickson(n - 1);
        for (int i = n - 2; i >= 0; --i) {
            r.rhs += xv.pow(1u << i) * lower[i].poly;
            r.description += " + " + x + (i > 0 ? "^" + std::to_string(1 << i) : "") + "*" + dname(lower[i].degree);
        }
        r.rhs += lower[n - 2].poly.square();
        r.description += " + " + dname(lower[n - 2].degree) + "^2";
    }
    r.holds = r.lhs == r.rhs;
    return r;
}

std::vector<uint64_t> free_counts(const std::vector<int>& degrees, int bound) {
    std::vector<uint64_t> c(bound + 1, 0);
    c[0] = 1;
    for (int g : degrees) {
        if (g <= 0) throw std::invalid_argument("free_counts: degrees must be positive");
        for (int d = g; d <= bound; ++d) c[d] += c[d - g];
    }
    return c;
}

std::vector<size_t> subalgebra_dims(int nvars, const std::vector<Polynomial>& polys, int bound) {
    std::vector<size_t> out;
    for (const auto& b : subalgebra_bases(nvars, polys, bound)) out.push_back(b.size());
    return out;
}

HsopResult validate_hsop(int nvars, const std::vector<Polynomial>& polys, int bound) {
    HsopResult r;
    std::vector<int> deg;
    for (const auto& p : polys) deg.push_back(homogeneous_degree(p, "validate_hsop"));
    r.dims = subalgebra_dims(nvars, polys, bound);
    r.expected = free_counts(deg, bound);
    r.ok = true;
    for (int d = 0; d <= bound; ++d)
        if (r.dims[d] != r.expected[d]) {
            r.ok = false;
            r.failure_degree = d;
            break;
        }
    return r;
}

std::vector<size_t> module_dims(int nvars, const std::vector<Polynomial>& primaries,
                                const std::vector<Polynomial>& secondaries, int bound) {
    for (const auto& q : secondaries) homogeneous_degree(q, "module_dims");
    auto rb = subalgebra_bases(nvars, primaries, bound);
    std::vector<size_t> out;
    for (int d = 0; d <= bound; ++d) out.push_back(module_span(nvars, rb, secondaries, d).dim());
    return out;
}

HironakaDecomposition secondary_invariants(FixedSpaceEngine& e, const std::vector<Polynomial>& primaries,
                                           int bound) {
    HironakaDecomposition dec;
    dec.nvars = e.nvars();
    dec.primaries = primaries;
    dec.group_order = e.group_order();
    uint64_t prod = 1;
    for (const auto& p : primaries) {
        int d = homogeneous_degree(p, "secondary_invariants");
        if (!is_invariant(e.generators(), p))
            throw std::invalid_argument("secondary_invariants: primary is not invariant");
        dec.primary_degrees.push_back(d);
        prod *= uint64_t(d);
    }
    if (int(primaries.size()) != e.nvars() || prod % dec.group_order != 0)
        throw std::invalid_argument("secondary_invariants: primaries cannot form a system of parameters");
    dec.expected_count = prod / dec.group_order;

    auto rb = subalgebra_bases(e.nvars(), primaries, bound);
    for (int d = 0; d <= bound; ++d) {
        const Subspace& v = e.fixed(d);
        dec.invariant_dims.push_back(v.dim());
        Subspace m = module_span(e.nvars(), rb, dec.secondaries, d);
        if (m.dim() < v.dim()) {
            std::vector<BitVec> res;
            for (size_t i = 0; i < v.dim(); ++i) res.push_back(m.reduce(v.basis_vec(i)));
            Slice s(e.nvars(), d);
            for (const auto& q : basis_polys(s, Subspace::span(s.size(), res))) {
                dec.secondaries.push_back(q);
                dec.secondary_degrees.push_back(d);
            }
        }
        if (dec.secondaries.size() > dec.expected_count)
            throw std::runtime_error("secondary_invariants: more secondaries than the degree product allows");
        if (dec.secondaries.size() == dec.expected_count) {
            dec.complete = true;
            return dec;
        }
    }
    throw BudgetExceeded("secondary_invariants: degree bound " + std::to_string(bound) + " reached with " +
                         std::to_string(dec.secondaries.size()) + " of " + std::to_string(dec.expected_count) +
                         " secondaries");
}

FreenessResult freeness_check(const HironakaDecomposition& dec, FixedSpaceEngine& e, int bound) {
    FreenessResult r;
    r.module_dims = module_dims(dec.nvars, dec.primaries, dec.secondaries, bound);
    r.expected.assign(bound + 1, 0);
    auto fc = free_counts(dec.primary_degrees, bound);
    for (int sd : dec.secondary_degrees)
        for (int d = sd; d <= bound; ++d) r.expected[d] += fc[d - sd];
    r.invariant_dims = invariant_dims(e, bound);
    r.free = true;
    for (int d = 0; d <= bound; ++d) {
        if (r.module_dims[d] < r.expected[d] && r.relation_degree < 0) r.relation_degree = d;
        if (r.module_dims[d] != r.expected[d] || r.module_dims[d] != r.invariant_dims[d]) r.free = false;
    }
    return r;
}

bool outside_module_span(int nvars, const std::vector<Polynomial>& primaries,
                         const std::vector<Polynomial>& secondaries, const Polynomial& cand) {
    int d = homogeneous_degree(cand, "outside_module_span");
    auto rb = subalgebra_bases(nvars, primaries, d);
    return !module_span(nvars, rb, secondaries, d).contains(Slice(nvars, d).to_vec(cand));
}

std::string to_text(const HironakaDecomposition& dec, const Ring& ring) {
    std::ostringstream os;
    os << "group_order " << dec.group_order << "\n";
    os << "secondary_count " << dec.secondaries.size() << " of " << dec.expected_count
       << (dec.complete ? " complete" : " incomplete") << "\n";
    os << "primaries\n";
    for (size_t i = 0; i < dec.primaries.size(); ++i)
        os << "  " << dec.primary_degrees[i] << " " << to_string(dec.primaries[i], ring) << "\n";
    os << "secondaries\n";
    for (size_t i = 0; i < dec.secondaries.size(); ++i)
        os << "  " << dec.secondary_degrees[i] << " " << to_string(dec.secondaries[i], ring) << "\n";
    os << "invariant_dims";
    for (size_t v : dec.invariant_dims) os << " " << v;
    os << "\n";
    return os.str();
}

// ---- graded modules over weighted rings ----

namespace {

// Monomials of one weighted degree, in descending order.
class WeightedSlice {
public:
    WeightedSlice(const Ring& r, int d) {
        if (d >= 0) fill(r, d, 0, Monomial{});
        std::sort(mons_.begin(), mons_.end(), std::greater<>());
        for (size_t i = 0; i < mons_.size(); ++i) idx_[mons_[i].w] = i;
    }
    size_t size() const { return mons_.size(); }
    Monomial at(size_t i) const { return mons_[i]; }
    size_t index(Monomial m) const {
        auto it = idx_.find(m.w);
        if (it == idx_.end()) throw std::invalid_argument("weighted slice: monomial of the wrong degree");
        return it->second;
    }

private:
    void fill(const Ring& r, int d, int i, Monomial m) {
        if (i == r.nvars()) {
            if (d == 0) mons_.push_back(m);
            return;
        }
        for (int e = 0; e * r.weight(i) <= d; ++e) fill(r, d - e * r.weight(i), i + 1, set_exp(m, i, e));
    }
    std::vector<Monomial> mons_;
    std::unordered_map<uint64_t, size_t> idx_;
};

int weighted_degree(const Ring& r, const Polynomial& p, const char* who) {
    if (p.is_zero()) return -1;
    int d = r.weighted_degree(p.lead());
    for (Monomial m : p.terms())
        if (r.weighted_degree(m) != d)
            throw std::invalid_argument(std::string(who) + ": polynomial is not weighted homogeneous");
    return d;
}

// Coordinates of module degree D: generator j paired with monomials of degree D - deg_j.
class ModuleSlice {
public:
    ModuleSlice(const GradedModule& m, int d) {
        for (size_t j = 0; j < m.gen_degrees.size(); ++j) {
            offset_.push_back(size_);
            parts_.emplace_back(m.ring, d - m.gen_degrees[j]);
            size_ += parts_.back().size();
        }
    }
    size_t size() const { return size_; }
    BitVec to_vec(const ModuleElement& e) const {
        BitVec v(size_);
        for (size_t j = 0; j < e.coeff.size() && j < parts_.size(); ++j)
            for (Monomial m : e.coeff[j].terms()) v.flip(offset_[j] + parts_[j].index(m));
        return v;
    }
    ModuleElement to_element(const BitVec& v) const {
        ModuleElement e;
        for (size_t j = 0; j < parts_.size(); ++j) {
            std::vector<Monomial> t;
            for (size_t i = 0; i < parts_[j].size(); ++i)
                if (v.get(offset_[j] + i)) t.push_back(parts_[j].at(i));
            e.coeff.push_back(Polynomial::from_terms(std::move(t)));
        }
        return e;
    }
    // Basis element i as (generator, monomial).
    std::pair<size_t, Monomial> at(size_t i) const {
        size_t j = std::upper_bound(offset_.begin(), offset_.end(), i) - offset_.begin() - 1;
        return {j, parts_[j].at(i - offset_[j])};
    }

private:
    std::vector<WeightedSlice> parts_;
    std::vector<size_t> offset_;
    size_t size_ = 0;
};

Polynomial substitute(Monomial m, const std::vector<Polynomial>& images) {
    Polynomial out = Polynomial::one();
    for (size_t i = 0; i < images.size(); ++i)
        if (int e = m.exp(int(i))) out *= images[i].pow(unsigned(e));
    return out;
}

void check_module(const GradedModule& m) {
    const size_t k = m.gen_degrees.size();
    if (m.gen_names.size() != k) throw std::invalid_argument("module: generator names and degrees differ in length");
    for (const auto& a : m.actions) {
        if (int(a.var_images.size()) != m.ring.nvars() || a.gen_images.size() != k)
            throw std::invalid_argument("module: action has the wrong number of images");
        for (int i = 0; i < m.ring.nvars(); ++i) {
            int d = weighted_degree(m.ring, a.var_images[i], "module action");
            if (d >= 0 && d != m.ring.weight(i))
                throw std::invalid_argument("module: variable image has the wrong degree");
        }
        for (size_t j = 0; j < k; ++j)
            for (size_t l = 0; l < a.gen_images[j].coeff.size(); ++l) {
                int d = weighted_degree(m.ring, a.gen_images[j].coeff[l], "module action");
                if (d >= 0 && d + m.gen_degrees[l] != m.gen_degrees[j])
                    throw std::invalid_argument("module: generator image has the wrong degree");
            }
    }
}

// Matrix of one action on module degree d in row convention.
BitMatrix module_action_matrix(const GradedModule& m, const GradedModule::Action& a, const ModuleSlice& s) {
    BitMatrix r(s.size(), s.size());
    for (size_t i = 0; i < s.size(); ++i) {
        auto [j, mon] = s.at(i);
        Polynomial p = substitute(mon, a.var_images);
        ModuleElement img;
        for (const auto& c : a.gen_images[j].coeff) img.coeff.push_back(p * c);
        img.coeff.resize(m.gen_degrees.size());
        r.set_row(i, s.to_vec(img));
    }
    return r;
}

Subspace module_fixed(const GradedModule& m, int d) {
    ModuleSlice s(m, d);
    const size_t N = s.size();
    if (N == 0) return Subspace(0);
    if (m.actions.empty()) return Subspace::full(N);
    const size_t words = (N + 63) / 64;
    BitMatrix dm(N, m.actions.size() * words * 64);
    for (size_t k = 0; k < m.actions.size(); ++k) {
        BitMatrix r = module_action_matrix(m, m.actions[k], s);
        BitMatrix t = r;
        if (rref(t).size() != N) throw std::invalid_argument("module: action is not invertible");
        for (size_t i = 0; i < N; ++i) {
            uint64_t* dst = dm.row(i) + k * words;
            xor_words(dst, r.row(i), words);
            dst[i >> 6] ^= uint64_t(1) << (i & 63);
        }
    }
    return left_kernel(dm);
}

std::vector<std::vector<Polynomial>> weighted_subalgebra_bases(const Ring& r, const std::vector<Polynomial>& polys,
                                                               int bound) {
    std::vector<int> deg;
    for (const auto& p : polys) {
        int d = weighted_degree(r, p, "coefficient ring");
        if (d <= 0) throw std::invalid_argument("coefficient ring: generators need positive degree");
        deg.push_back(d);
    }
    std::vector<std::vector<Polynomial>> b(bound + 1);
    b[0] = {Polynomial::one()};
    for (int d = 1; d <= bound; ++d) {
        WeightedSlice s(r, d);
        std::vector<BitVec> vs;
        for (size_t i = 0; i < polys.size(); ++i)
            if (deg[i] <= d)
                for (const auto& q : b[d - deg[i]]) {
                    BitVec v(s.size());
                    Polynomial prod = polys[i] * q;
                    for (Monomial m : prod.terms()) v.flip(s.index(m));
                    vs.push_back(std::move(v));
                }
        Subspace sp = Subspace::span(s.size(), vs);
        for (size_t k = 0; k < sp.dim(); ++k) {
            std::vector<Monomial> t;
            for (size_t i : sp.basis_vec(k).ones()) t.push_back(s.at(i));
            b[d].push_back(Polynomial::from_terms(std::move(t)));
        }
    }
    return b;
}

int element_degree(const GradedModule& m, const ModuleElement& e) {
    int deg = -1;
    for (size_t j = 0; j < e.coeff.size(); ++j) {
        int d = weighted_degree(m.ring, e.coeff[j], "module element");
        if (d < 0) continue;
        if (deg >= 0 && d + m.gen_degrees[j] != deg)
            throw std::invalid_argument("module element is not homogeneous");
        deg = d + m.gen_degrees[j];
    }
    return deg;
}

Subspace module_span_at(const GradedModule& m, const std::vector<std::vector<Polynomial>>& rb,
                        const std::vector<ModuleElement>& gens, const std::vector<int>& gdeg, int d) {
    ModuleSlice s(m, d);
    std::vector<BitVec> vs;
    for (size_t g = 0; g < gens.size(); ++g) {
        int e = d - gdeg[g];
        if (gdeg[g] < 0 || e < 0 || e >= int(rb.size())) continue;
        for (const auto& b : rb[e]) {
            ModuleElement x;
            for (const auto& c : gens[g].coeff) x.coeff.push_back(b * c);
            vs.push_back(s.to_vec(x));
        }
    }
    return Subspace::span(s.size(), vs);
}

}  // namespace

std::string to_string(const ModuleElement& m, const GradedModule& mod) {
    std::vector<std::string> parts;
    for (size_t j = 0; j < m.coeff.size(); ++j) {
        const Polynomial& c = m.coeff[j];
        if (c.is_zero()) continue;
        if (c == Polynomial::one())
            parts.push_back(mod.gen_names[j]);
        else if (c.size() == 1)
            parts.push_back(to_string(c, mod.ring) + "*" + mod.gen_names[j]);
        else
            parts.push_back("(" + to_string(c, mod.ring) + ")*" + mod.gen_names[j]);
    }
    if (parts.empty()) return "0";
    std::string out = parts[0];
    for (size_t i = 1; i < parts.size(); ++i) out += "+" + parts[i];
    return out;
}

std::vector<size_t> module_fixed_dims(const GradedModule& m, int bound) {
    check_module(m);
    std::vector<size_t> out;
    for (int d = 0; d <= bound; ++d) out.push_back(module_fixed(m, d).dim());
    return out;
}

ModuleInvariants module_invariants(const GradedModule& m, const std::vector<Polynomial>& coeff_primaries, int bound) {
    check_module(m);
    for (const auto& p : coeff_primaries)
        for (const auto& a : m.actions) {
            Polynomial img;
            for (Monomial t : p.terms()) img += substitute(t, a.var_images);
            if (img != p) throw std::invalid_argument("module_invariants: coefficient generator is not invariant");
        }
    auto rb = weighted_subalgebra_bases(m.ring, coeff_primaries, bound);
    ModuleInvariants out;
    for (int d = 0; d <= bound; ++d) {
        Subspace v = module_fixed(m, d);
        out.fixed_dims.push_back(v.dim());
        Subspace sp = module_span_at(m, rb, out.generators, out.generator_degrees, d);
        if (sp.dim() == v.dim()) continue;
        std::vector<BitVec> res;
        for (size_t i = 0; i < v.dim(); ++i) res.push_back(sp.reduce(v.basis_vec(i)));
        Subspace r = Subspace::span(v.ambient(), res);
        ModuleSlice s(m, d);
        for (size_t i = 0; i < r.dim(); ++i) {
            out.generators.push_back(s.to_element(r.basis_vec(i)));
            out.generator_degrees.push_back(d);
        }
    }
    return out;
}

std::vector<size_t> module_span_dims(const GradedModule& m, const std::vector<Polynomial>& coeff_primaries,
                                     const std::vector<ModuleElement>& gens, int bound) {
    check_module(m);
    auto rb = weighted_subalgebra_bases(m.ring, coeff_primaries, bound);
    std::vector<int> gdeg;
    for (const auto& g : gens) gdeg.push_back(element_degree(m, g));
    std::vector<size_t> out;
    for (int d = 0; d <= bound; ++d) out.push_back(module_span_at(m, rb, gens, gdeg, d).dim());
    return out;
}

}  // namespace invar
