#include "invar/table_group.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace invar {

TableGroup::TableGroup(int n, const std::function<int(int, int)>& mul, std::vector<std::string> labels)
    : n_(n), labels_(std::move(labels)) {
    if (n < 1 || n > 65535) throw std::invalid_argument("TableGroup: order out of range");
    if (labels_.empty())
        for (int i = 0; i < n; ++i) labels_.push_back(std::to_string(i));
    table_.resize(size_t(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int c = mul(a, b);
            if (c < 0 || c >= n) throw std::invalid_argument("TableGroup: product out of range");
            table_[size_t(a) * n + b] = uint16_t(c);
        }
    e_ = -1;
    for (int a = 0; a < n && e_ < 0; ++a) {
        bool ok = true;
        for (int b = 0; b < n && ok; ++b) ok = this->mul(a, b) == b && this->mul(b, a) == b;
        if (ok) e_ = a;
    }
    if (e_ < 0) throw std::invalid_argument("TableGroup: no identity");
    inv_.assign(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (this->mul(a, b) == e_) {
                inv_[a] = b;
                break;
            }
    for (int a = 0; a < n; ++a)
        if (inv_[a] < 0) throw std::invalid_argument("TableGroup: element without inverse");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (this->mul(this->mul(a, b), c) != this->mul(a, this->mul(b, c)))
                    throw std::invalid_argument("TableGroup: product is not associative");
}

int TableGroup::element_order(int a) const {
    int k = 1;
    for (int x = a; x != e_; x = mul(x, a)) ++k;
    return k;
}

TableGroup::Subset TableGroup::all() const {
    Subset s(n_);
    for (int i = 0; i < n_; ++i) s[i] = i;
    return s;
}

TableGroup::Subset TableGroup::closure(const Subset& gens) const {
    std::vector<bool> in(n_);
    Subset out{e_};
    in[e_] = true;
    for (size_t i = 0; i < out.size(); ++i)
        for (int g : gens) {
            int y = mul(out[i], g);
            if (!in[y]) {
                in[y] = true;
                out.push_back(y);
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

TableGroup::Subset TableGroup::centralizer(const Subset& k, const Subset& s) const {
    Subset out;
    for (int x : k) {
        bool ok = true;
        for (int y : s)
            if (mul(x, y) != mul(y, x)) {
                ok = false;
                break;
            }
        if (ok) out.push_back(x);
    }
    return out;
}

bool TableGroup::is_subgroup(const Subset& s) const {
    if (!std::binary_search(s.begin(), s.end(), e_)) return false;
    for (int a : s)
        for (int b : s)
            if (!std::binary_search(s.begin(), s.end(), mul(a, inv(b)))) return false;
    return true;
}

bool TableGroup::is_normal(const Subset& h, const Subset& k) const {
    for (int x : k)
        if (conjugate(h, x) != h) return false;
    return true;
}

bool TableGroup::is_elementary_abelian(const Subset& h) const {
    if (!is_subgroup(h)) return false;
    for (int a : h) {
        if (mul(a, a) != e_) return false;
        for (int b : h)
            if (mul(a, b) != mul(b, a)) return false;
    }
    return true;
}

TableGroup::Subset TableGroup::conjugate(const Subset& h, int x) const {
    Subset out;
    out.reserve(h.size());
    for (int y : h) out.push_back(conj(y, x));
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<int> TableGroup::conjugating_element(const Subset& k, const Subset& h1, const Subset& h2) const {
    if (h1.size() != h2.size()) return std::nullopt;
    for (int x : k)
        if (conjugate(h1, x) == h2) return x;
    return std::nullopt;
}

std::vector<TableGroup::Subset> TableGroup::elementary_abelian_subgroups(const Subset& k, int rank) const {
    Subset invol;
    for (int x : k)
        if (x != e_ && mul(x, x) == e_) invol.push_back(x);
    std::set<Subset> level{{e_}};
    for (int r = 0; r < rank; ++r) {
        std::set<Subset> next;
        for (const auto& h : level)
            for (int x : invol) {
                if (std::binary_search(h.begin(), h.end(), x)) continue;
                bool ok = true;
                for (int y : h)
                    if (mul(x, y) != mul(y, x)) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
                Subset h2 = h;
                for (int y : h) h2.push_back(mul(x, y));
                std::sort(h2.begin(), h2.end());
                next.insert(h2);
            }
        level.swap(next);
    }
    return {level.begin(), level.end()};
}

namespace f4 {
int mul(int a, int b) {
    static const int t[4][4] = {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
    return t[a][b];
}
}  // namespace f4

int SylowModel::encode(int a, int b, int c, int eg, int eA) { return a | b << 2 | c << 4 | eg << 6 | eA << 7; }

namespace {

struct Elem {
    int a, b, c, eg, eA;
};

Elem decode(int x) { return {x & 3, x >> 2 & 3, x >> 4 & 3, x >> 6 & 1, x >> 7 & 1}; }

// Upper unitriangular product: (a,b,c)(a',b',c') = (a+a', b+b'+a c', c+c').
Elem ut_mul(Elem u, Elem v) {
    return {u.a ^ v.a, u.b ^ v.b ^ f4::mul(u.a, v.c), u.c ^ v.c, 0, 0};
}

Elem apply_g(Elem u) { return {f4::frob(u.a), f4::frob(u.b), f4::frob(u.c), 0, 0}; }

// Transpose-inverse twisted by the antidiagonal: (a,b,c) -> (c, b+ac, a).
Elem apply_A(Elem u) { return {u.c, u.b ^ f4::mul(u.a, u.c), u.a, 0, 0}; }

const char* f4_name(int x) {
    static const char* n[] = {"0", "1", "w", "w+1"};
    return n[x];
}

}  // namespace

SylowModel sylow2_ly_model() {
    auto mul = [](int x, int y) {
        Elem u = decode(x), v = decode(y);
        Elem w = v;
        if (u.eg) w = apply_g(w);
        if (u.eA) w = apply_A(w);
        Elem p = ut_mul(u, w);
        return SylowModel::encode(p.a, p.b, p.c, u.eg ^ v.eg, u.eA ^ v.eA);
    };
    std::vector<std::string> labels;
    for (int x = 0; x < 256; ++x) {
        Elem u = decode(x);
        std::string s = std::string("(") + f4_name(u.a) + "," + f4_name(u.b) + "," + f4_name(u.c) + ")";
        if (u.eg) s += "g";
        if (u.eA) s += "A";
        labels.push_back(s);
    }
    SylowModel m;
    m.group = TableGroup(256, mul, labels);
    m.g = SylowModel::encode(0, 0, 0, 1, 0);
    m.A = SylowModel::encode(0, 0, 0, 0, 1);
    m.T = SylowModel::encode(0, 2, 0, 0, 0);
    m.Z = SylowModel::encode(0, 1, 0, 0, 0);
    for (int x = 0; x < 256; ++x) {
        Elem u = decode(x);
        if (!u.eg && !u.eA) m.ut.push_back(x);
        if (!u.eA) m.ut_g.push_back(x);
        if (u.eg == u.eA) m.ut_gA.push_back(x);
        if (!u.eg && !u.eA && u.c == 0) m.four_I.push_back(x);
        if (!u.eg && !u.eA && u.a == 0) m.four_II.push_back(x);
    }
    return m;
}

}  // namespace invar
