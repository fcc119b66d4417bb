#include "invar/perm.hpp"

#include <algorithm>
#include <bitset>
#include <cctype>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

#include "flat_set.hpp"

namespace invar {

Perm::Perm(int n) : n_(n) {
    if (n < 1 || n > kMaxPoints) throw std::invalid_argument("Perm: degree must be in 1..16");
    for (int i = 0; i < n; ++i) p_[i] = uint8_t(i);
}

Perm Perm::from_images(const std::vector<int>& images) {
    Perm p(int(images.size()));
    std::vector<bool> seen(images.size());
    for (size_t i = 0; i < images.size(); ++i) {
        int x = images[i];
        if (x < 0 || x >= p.n_ || seen[x]) throw std::invalid_argument("Perm: images are not a permutation");
        seen[x] = true;
        p.p_[i] = uint8_t(x);
    }
    return p;
}

Perm Perm::parse(const std::string& s, int n) {
    Perm p(n);
    std::vector<bool> used(n);
    size_t i = 0;
    auto skip = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    skip();
    while (i < s.size()) {
        if (s[i] != '(') throw std::invalid_argument("Perm: expected '(' in \"" + s + "\"");
        ++i;
        std::vector<int> cyc;
        for (;;) {
            skip();
            if (i < s.size() && s[i] == ')') {
                ++i;
                break;
            }
            if (i < s.size() && s[i] == ',') {
                ++i;
                continue;
            }
            size_t start = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            if (start == i) throw std::invalid_argument("Perm: bad cycle in \"" + s + "\"");
            int x = std::stoi(s.substr(start, i - start)) - 1;
            if (x < 0 || x >= n) throw std::invalid_argument("Perm: point out of range in \"" + s + "\"");
            if (used[x]) throw std::invalid_argument("Perm: repeated point in \"" + s + "\"");
            used[x] = true;
            cyc.push_back(x);
        }
        for (size_t k = 0; k < cyc.size(); ++k) p.p_[cyc[k]] = uint8_t(cyc[(k + 1) % cyc.size()]);
        skip();
    }
    return p;
}

Perm Perm::operator*(const Perm& o) const {
    if (n_ != o.n_) throw std::invalid_argument("Perm: degree mismatch");
    Perm r;
    r.n_ = n_;
    for (int i = 0; i < n_; ++i) r.p_[i] = p_[o.p_[i]];
    return r;
}

Perm Perm::inverse() const {
    Perm r;
    r.n_ = n_;
    for (int i = 0; i < n_; ++i) r.p_[p_[i]] = uint8_t(i);
    return r;
}

Perm Perm::conj(const Perm& g) const {
    // g h g^-1 sends g(x) to g(h(x)).
    Perm r;
    r.n_ = n_;
    for (int i = 0; i < n_; ++i) r.p_[g.p_[i]] = g.p_[p_[i]];
    return r;
}

bool Perm::is_identity() const {
    for (int i = 0; i < n_; ++i)
        if (p_[i] != i) return false;
    return true;
}

std::vector<int> Perm::cycle_type() const {
    std::vector<int> t;
    std::vector<bool> seen(n_);
    for (int i = 0; i < n_; ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int x = i; !seen[x]; x = p_[x]) {
            seen[x] = true;
            ++len;
        }
        if (len > 1) t.push_back(len);
    }
    std::sort(t.rbegin(), t.rend());
    return t;
}

bool Perm::is_even() const {
    int s = 0;
    for (int c : cycle_type()) s += c - 1;
    return s % 2 == 0;
}

int Perm::order() const {
    int o = 1;
    for (int c : cycle_type()) o = std::lcm(o, c);
    return o;
}

uint64_t Perm::key() const {
    uint64_t k = 0;
    for (int i = 0; i < n_; ++i) k |= uint64_t(p_[i]) << (4 * i);
    return k;
}

std::string Perm::to_string() const {
    std::string s;
    std::vector<bool> seen(n_);
    for (int i = 0; i < n_; ++i) {
        if (seen[i] || p_[i] == i) continue;
        s += '(';
        for (int x = i; !seen[x]; x = p_[x]) {
            seen[x] = true;
            if (x != i) s += ',';
            s += std::to_string(x + 1);
        }
        s += ')';
    }
    return s.empty() ? "()" : s;
}

std::vector<int> parse_cycle_type(const std::string& s) {
    std::vector<int> t;
    auto caret = s.find('^');
    if (caret != std::string::npos) {
        int len = std::stoi(s.substr(0, caret)), cnt = std::stoi(s.substr(caret + 1));
        if (len < 2 || cnt < 1) throw std::invalid_argument("bad cycle type \"" + s + "\"");
        t.assign(cnt, len);
        return t;
    }
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        int v = std::stoi(tok);
        if (v < 2) throw std::invalid_argument("bad cycle type \"" + s + "\"");
        t.push_back(v);
    }
    if (t.empty()) throw std::invalid_argument("empty cycle type");
    std::sort(t.rbegin(), t.rend());
    return t;
}

std::string cycle_type_string(const std::vector<int>& t) {
    if (t.empty()) return "1";
    std::string s;
    for (size_t i = 0; i < t.size();) {
        size_t j = i;
        while (j < t.size() && t[j] == t[i]) ++j;
        if (!s.empty()) s += ',';
        s += std::to_string(t[i]);
        if (j - i > 1) s += '^' + std::to_string(j - i);
        i = j;
    }
    return s;
}

PermGroup::PermGroup(int n, std::vector<Perm> gens) : n_(n), gens_(std::move(gens)) {
    for (const auto& g : gens_)
        if (g.n() != n) throw std::invalid_argument("PermGroup: generator degree mismatch");
}

PermGroup PermGroup::symmetric(int n) {
    std::vector<Perm> g;
    if (n >= 2) {
        std::vector<int> t(n), c(n);
        std::iota(t.begin(), t.end(), 0);
        std::swap(t[0], t[1]);
        for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
        g.push_back(Perm::from_images(t));
        if (n > 2) g.push_back(Perm::from_images(c));
    }
    return PermGroup(n, g);
}

PermGroup PermGroup::alternating(int n) {
    std::vector<Perm> g;
    for (int i = 2; i < n; ++i) {
        std::vector<int> t(n);
        std::iota(t.begin(), t.end(), 0);
        t[0] = 1;
        t[1] = i;
        t[i] = 0;
        g.push_back(Perm::from_images(t));
    }
    return PermGroup(n, g);
}

PermGroup PermGroup::from_elements(int n, const std::vector<Perm>& elems) {
    std::vector<Perm> gens;
    PermGroup cur(n, {});
    for (const auto& e : elems) {
        if (cur.contains(e, elems.size() + 1)) continue;
        gens.push_back(e);
        cur = PermGroup(n, gens);
    }
    return cur;
}

void PermGroup::index(size_t budget) const {
    if (!elems_.empty()) return;
    std::vector<Perm> out{Perm(n_)};
    detail::FlatSet64 seen;
    seen.insert(out[0].key());
    for (size_t i = 0; i < out.size(); ++i)
        for (const auto& g : gens_) {
            Perm y = out[i] * g;
            if (seen.insert(y.key())) {
                if (out.size() >= budget)
                    throw BudgetExceeded("permutation group closure exceeds budget of " + std::to_string(budget));
                out.push_back(y);
            }
        }
    sorted_keys_.resize(out.size());
    for (size_t i = 0; i < out.size(); ++i) sorted_keys_[i] = out[i].key();
    std::sort(sorted_keys_.begin(), sorted_keys_.end());
    elems_ = std::move(out);
}

const std::vector<Perm>& PermGroup::elements(size_t budget) const {
    index(budget);
    return elems_;
}

bool PermGroup::contains(const Perm& g, size_t budget) const {
    if (g.n() != n_) return false;
    index(budget);
    return std::binary_search(sorted_keys_.begin(), sorted_keys_.end(), g.key());
}

std::vector<std::vector<int>> PermGroup::orbits() const {
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& g : gens_)
        for (int i = 0; i < n_; ++i) parent[find(i)] = find(g(i));
    std::map<int, std::vector<int>> by_root;
    for (int i = 0; i < n_; ++i) by_root[find(i)].push_back(i);
    std::vector<std::vector<int>> out;
    for (auto& [r, o] : by_root) out.push_back(o);
    return out;
}

std::string PermGroup::to_string() const {
    std::string s = "<";
    for (size_t i = 0; i < gens_.size(); ++i) {
        if (i) s += ", ";
        s += gens_[i].to_string();
    }
    return s + ">";
}

namespace {

bool all_in(const PermGroup& h, const std::vector<Perm>& xs) {
    for (const auto& x : xs)
        if (!h.contains(x)) return false;
    return true;
}

std::vector<int> orbit_sizes(const PermGroup& h) {
    std::vector<int> s;
    for (const auto& o : h.orbits())
        if (o.size() > 1) s.push_back(int(o.size()));
    std::sort(s.rbegin(), s.rend());
    return s;
}

}  // namespace

PermGroup normalizer(const PermGroup& g, const PermGroup& h, size_t budget) {
    if (!all_in(g, h.generators())) throw std::invalid_argument("normalizer: H is not a subgroup of G");
    std::vector<Perm> keep;
    for (const auto& x : g.elements(budget)) {
        bool ok = true;
        for (const auto& y : h.generators())
            if (!h.contains(y.conj(x), budget)) {
                ok = false;
                break;
            }
        if (ok) keep.push_back(x);
    }
    return PermGroup::from_elements(g.degree(), keep);
}

std::string subgroup_signature(const PermGroup& h) {
    std::map<std::string, int> types;
    for (const auto& x : h.elements()) types[cycle_type_string(x.cycle_type())]++;
    std::string s = "order=" + std::to_string(h.order()) + ";orbits=";
    for (int o : orbit_sizes(h)) s += std::to_string(o) + ",";
    s += ";types=";
    for (auto& [t, c] : types) s += t + ":" + std::to_string(c) + ";";
    return s;
}

std::optional<Perm> are_conjugate(const PermGroup& g, const PermGroup& h1, const PermGroup& h2, size_t budget) {
    if (subgroup_signature(h1) != subgroup_signature(h2)) return std::nullopt;
    for (const auto& x : g.elements(budget)) {
        bool ok = true;
        for (const auto& y : h1.generators())
            if (!h2.contains(y.conj(x))) {
                ok = false;
                break;
            }
        if (ok) return x;
    }
    return std::nullopt;
}

std::optional<NamedSymmetric> parse_symmetric_name(const std::string& s) {
    if (s.size() < 2 || (s[0] != 'S' && s[0] != 'A')) return std::nullopt;
    for (size_t i = 1; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
    int n = std::stoi(s.substr(1));
    if (n < 1 || n > kMaxPoints) return std::nullopt;
    return NamedSymmetric{n, s[0] == 'A'};
}

std::vector<Perm> involutions(int n, bool alternating) {
    std::vector<Perm> out;
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::vector<bool> used(n);
    int pairs = 0;
    auto rec = [&](auto&& self, int i) -> void {
        while (i < n && used[i]) ++i;
        if (i == n) {
            if (pairs > 0 && (!alternating || pairs % 2 == 0)) out.push_back(Perm::from_images(img));
            return;
        }
        used[i] = true;
        self(self, i + 1);
        for (int j = i + 1; j < n; ++j) {
            if (used[j]) continue;
            used[j] = true;
            img[i] = j;
            img[j] = i;
            ++pairs;
            self(self, i + 1);
            --pairs;
            img[i] = i;
            img[j] = j;
            used[j] = false;
        }
        used[i] = false;
    };
    rec(rec, 0);
    return out;
}

std::vector<Perm> span_elements(int n, const std::vector<Perm>& basis) {
    std::vector<Perm> out{Perm(n)};
    for (const auto& b : basis) {
        size_t k = out.size();
        for (size_t i = 0; i < k; ++i) out.push_back(out[i] * b);
    }
    return out;
}

namespace {

// Independent generators for the even elements of an elementary abelian group.
std::vector<Perm> even_basis(const std::vector<Perm>& basis) {
    std::vector<Perm> out;
    std::optional<Perm> odd;
    for (const auto& b : basis) {
        if (b.is_even())
            out.push_back(b);
        else if (!odd)
            odd = b;
        else
            out.push_back(b * *odd);
    }
    return out;
}

bool commutes_with_all(const Perm& x, const std::vector<Perm>& gens) {
    for (const auto& g : gens)
        if (x * g != g * x) return false;
    return true;
}


// Partitions of at most n points into blocks of size 2^j, j >= 1. counts[j] = number of blocks.
void block_partitions(int n, int j, std::vector<int>& counts, std::vector<std::vector<int>>& out) {
    if (j == 0) {
        out.push_back(counts);
        return;
    }
    for (int c = n >> j; c >= 0; --c) {
        counts[j] = c;
        block_partitions(n - c * (1 << j), j - 1, counts, out);
    }
    counts[j] = 0;
}

// Permutation acting on the block [offset, offset + 2^j) as v -> f(v), identity elsewhere.
template <class F>
Perm block_map(int n, int offset, int j, F f) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    for (int v = 0; v < (1 << j); ++v) img[offset + v] = offset + f(v);
    return Perm::from_images(img);
}

Perm transposition(int n, int a, int b) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::swap(img[a], img[b]);
    return Perm::from_images(img);
}

struct Candidate {
    std::vector<int> counts;
    std::vector<std::pair<int, int>> blocks;  // (offset, j), largest blocks first
    std::vector<Perm> basis;
    int used = 0;
};

Candidate standard_product(int n, const std::vector<int>& counts, bool alternating) {
    Candidate c;
    c.counts = counts;
    int off = 0;
    for (int j = int(counts.size()) - 1; j >= 1; --j)
        for (int k = 0; k < counts[j]; ++k) {
            c.blocks.push_back({off, j});
            for (int b = 0; b < j; ++b) c.basis.push_back(block_map(n, off, j, [b](int v) { return v ^ (1 << b); }));
            off += 1 << j;
        }
    c.used = off;
    if (alternating) c.basis = even_basis(c.basis);
    return c;
}

// Generators of the normalizer in S_n of a standard product: block-local affine maps,
// swaps of equal blocks and transpositions of fixed points.
std::vector<Perm> normalizer_generators(int n, const Candidate& c) {
    std::vector<Perm> out;
    for (auto [off, j] : c.blocks) {
        for (int a = 0; a < j; ++a)
            for (int b = 0; b < j; ++b)
                if (a != b)
                    out.push_back(block_map(n, off, j, [a, b](int v) { return (v >> a & 1) ? v ^ (1 << b) : v; }));
        if (j == 1) out.push_back(transposition(n, off, off + 1));
    }
    for (size_t i = 0; i + 1 < c.blocks.size(); ++i) {
        auto [o1, j1] = c.blocks[i];
        auto [o2, j2] = c.blocks[i + 1];
        if (j1 != j2) continue;
        std::vector<int> img(n);
        std::iota(img.begin(), img.end(), 0);
        for (int v = 0; v < (1 << j1); ++v) {
            img[o1 + v] = o2 + v;
            img[o2 + v] = o1 + v;
        }
        out.push_back(Perm::from_images(img));
    }
    for (int a = c.used; a + 1 < n; ++a) out.push_back(transposition(n, a, a + 1));
    return out;
}

std::string ea2_label(const std::vector<int>& counts, bool alternating) {
    std::string s;
    auto add = [&](const std::string& f) { s += (s.empty() ? "" : "x") + f; };
    for (int j = int(counts.size()) - 1; j >= 2; --j)
        if (counts[j]) add("V" + std::to_string(j) + (counts[j] > 1 ? "^" + std::to_string(counts[j]) : ""));
    if (counts[1]) {
        if (alternating)
            add("E" + std::to_string(counts[1]));
        else
            add(std::string("V1") + (counts[1] > 1 ? "^" + std::to_string(counts[1]) : ""));
    }
    return s;
}

}  // namespace

std::vector<EA2Class> maximal_ea2_subgroups(int n, bool alternating) {
    if (n < 2 || n > kMaxPoints) throw std::invalid_argument("maximal_ea2_subgroups: degree out of range");
    int jmax = 0;
    while ((2 << jmax) <= n) ++jmax;
    std::vector<int> counts(jmax + 1, 0);
    std::vector<std::vector<int>> parts;
    block_partitions(n, jmax, counts, parts);
    const auto invol = involutions(n, alternating);

    std::vector<EA2Class> out;
    std::set<std::vector<int>> seen_orbits;
    for (const auto& cnt : parts) {
        // A lone 2-block loses its transposition in A_n; the same group arises with two fixed points.
        if (alternating && cnt[1] == 1) continue;
        Candidate c = standard_product(n, cnt, alternating);
        if (c.basis.empty()) continue;
        bool maximal = true;
        auto elems = span_elements(n, c.basis);
        std::unordered_set<uint64_t> keys;
        for (const auto& e : elems) keys.insert(e.key());
        for (const auto& x : invol)
            if (!keys.count(x.key()) && commutes_with_all(x, c.basis)) {
                maximal = false;
                break;
            }
        if (!maximal) continue;
        PermGroup rep(n, c.basis);
        std::vector<int> orb = orbit_sizes(rep);
        if (!seen_orbits.insert(orb).second) continue;

        EA2Class cls;
        cls.label = ea2_label(cnt, alternating);
        cls.rep = rep;
        cls.rank = int(c.basis.size());
        cls.orbit_sizes = orb;
        cls.letters = std::accumulate(orb.begin(), orb.end(), 0);
        bool split = false;
        if (alternating) {
            split = true;
            for (const auto& g : normalizer_generators(n, c)) {
                for (const auto& b : c.basis)
                    if (!keys.count(b.conj(g).key()))
                        throw std::logic_error("maximal_ea2_subgroups: normalizer generator does not normalize");
                if (!g.is_even()) split = false;
            }
        }
        if (!split) {
            out.push_back(cls);
            continue;
        }
        EA2Class other = cls;
        Perm t = transposition(n, 0, 1);
        std::vector<Perm> conj;
        for (const auto& b : c.basis) conj.push_back(b.conj(t));
        other.rep = PermGroup(n, conj);
        cls.label += "a";
        other.label += "b";
        out.push_back(cls);
        out.push_back(other);
    }
    return out;
}

std::vector<TypedEA2Class> filter_by_cycle_type(int n, bool alternating, const std::vector<int>& type,
                                                size_t budget) {
    for (int c : type)
        if (c != 2) throw std::invalid_argument("filter_by_cycle_type: type must consist of 2-cycles");
    const auto classes = maximal_ea2_subgroups(n, alternating);

    struct Found {
        std::vector<Perm> basis;
        std::string from;
    };
    std::vector<Found> cands;
    for (const auto& cls : classes) {
        auto elems = span_elements(n, cls.rep.generators());
        if (elems.size() > 256) throw BudgetExceeded("filter_by_cycle_type: class too large");
        std::vector<bool> good(elems.size());
        for (size_t i = 0; i < elems.size(); ++i) good[i] = i == 0 || elems[i].cycle_type() == type;
        std::map<uint64_t, size_t> idx;
        for (size_t i = 0; i < elems.size(); ++i) idx[elems[i].key()] = i;
        // Subgroups as bitsets over elems, grown one element at a time.
        using Bits = std::bitset<256>;
        std::map<std::string, std::pair<Bits, std::vector<size_t>>> level, all;
        Bits triv;
        triv.set(0);
        level[triv.to_string()] = {triv, {}};
        std::vector<std::pair<Bits, std::vector<size_t>>> maximal;
        size_t visited = 0;
        while (!level.empty()) {
            std::map<std::string, std::pair<Bits, std::vector<size_t>>> next;
            for (auto& [k, hb] : level) {
                auto& [h, gens] = hb;
                bool extended = false;
                for (size_t x = 1; x < elems.size(); ++x) {
                    if (!good[x] || h[x]) continue;
                    Bits h2 = h;
                    bool ok = true;
                    for (size_t y = 0; y < elems.size() && ok; ++y)
                        if (h[y]) {
                            size_t z = idx.at((elems[x] * elems[y]).key());
                            if (!good[z]) ok = false;
                            h2.set(z);
                        }
                    if (!ok) continue;
                    extended = true;
                    auto key = h2.to_string();
                    if (!next.count(key)) {
                        auto g2 = gens;
                        g2.push_back(x);
                        next[key] = {h2, g2};
                        if (++visited > 200000) throw BudgetExceeded("filter_by_cycle_type: too many subgroups");
                    }
                }
                if (!extended && !gens.empty()) maximal.push_back(hb);
            }
            level.swap(next);
        }
        for (auto& [h, gens] : maximal) {
            Found f;
            for (size_t g : gens) f.basis.push_back(elems[g]);
            f.from = cls.label;
            cands.push_back(f);
        }
    }

    std::vector<Perm> typed;
    for (const auto& x : involutions(n, alternating))
        if (x.cycle_type() == type) typed.push_back(x);

    std::vector<TypedEA2Class> out;
    std::unique_ptr<PermGroup> g;
    for (const auto& f : cands) {
        PermGroup h(n, f.basis);
        auto helems = span_elements(n, f.basis);
        std::unordered_set<uint64_t> hk;
        for (const auto& e : helems) hk.insert(e.key());
        bool maximal = true;
        for (const auto& x : typed) {
            if (hk.count(x.key()) || !commutes_with_all(x, f.basis)) continue;
            bool ok = true;
            for (size_t i = 1; i < helems.size() && ok; ++i) ok = (x * helems[i]).cycle_type() == type;
            if (ok) {
                maximal = false;
                break;
            }
        }
        if (!maximal) continue;
        bool dup = false;
        for (const auto& o : out) {
            if (subgroup_signature(o.rep) != subgroup_signature(h)) continue;
            if (!g)
                g = std::make_unique<PermGroup>(alternating ? PermGroup::alternating(n) : PermGroup::symmetric(n));
            if (are_conjugate(*g, o.rep, h, budget)) {
                dup = true;
                break;
            }
        }
        if (dup) continue;
        TypedEA2Class t;
        t.rep = h;
        t.rank = int(f.basis.size());
        t.from_class = f.from;
        t.orbit_sizes = orbit_sizes(h);
        out.push_back(t);
    }
    return out;
}

}  // namespace invar
