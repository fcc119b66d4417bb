#include "invar/gf2.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace invar {

Monomial Monomial::from_exponents(const std::vector<int>& e) {
    if (e.size() > size_t(kMaxVars)) throw std::invalid_argument("too many variables");
    Monomial m;
    int deg = 0;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] < 0) throw std::invalid_argument("negative exponent");
        deg += e[i];
        m.w |= uint64_t(e[i]) << (8 * (7 - i));
    }
    if (deg > 255) throw std::overflow_error("monomial degree exceeds 255");
    return m;
}

std::vector<int> Monomial::exponents(int nvars) const {
    std::vector<int> e(nvars);
    for (int i = 0; i < nvars; ++i) e[i] = exp(i);
    return e;
}

bool Monomial::divides(Monomial o) const {
    for (int i = 0; i < kMaxVars; ++i)
        if (exp(i) > o.exp(i)) return false;
    return true;
}

Monomial Monomial::operator*(Monomial o) const {
    if (degree() + o.degree() > 255) throw std::overflow_error("monomial degree exceeds 255");
    return Monomial{w + o.w};
}

namespace {

void sort_desc_cancel(std::vector<Monomial>& t) {
    std::sort(t.begin(), t.end(), [](Monomial a, Monomial b) { return b < a; });
    size_t out = 0;
    for (size_t i = 0; i < t.size();) {
        size_t j = i;
        while (j < t.size() && t[j] == t[i]) ++j;
        if ((j - i) & 1) t[out++] = t[i];
        i = j;
    }
    t.resize(out);
}

int vars_used(const Polynomial& p) {
    uint64_t acc = 0;
    for (Monomial m : p.terms()) acc |= m.w;
    int n = 0;
    for (int i = 0; i < kMaxVars; ++i)
        if ((acc >> (8 * (7 - i))) & 0xff) n = i + 1;
    return n;
}

}  // namespace

Polynomial Polynomial::from_terms(std::vector<Monomial> terms) {
    sort_desc_cancel(terms);
    Polynomial p;
    p.t_ = std::move(terms);
    return p;
}

bool Polynomial::is_homogeneous() const {
    if (t_.empty()) return true;
    int d = t_.front().degree();
    for (Monomial m : t_)
        if (m.degree() != d) return false;
    return true;
}

bool Polynomial::contains(Monomial m) const {
    return std::binary_search(t_.begin(), t_.end(), m, [](Monomial a, Monomial b) { return b < a; });
}

Polynomial Polynomial::homogeneous_part(int d) const {
    Polynomial p;
    for (Monomial m : t_)
        if (m.degree() == d) p.t_.push_back(m);
    return p;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r;
    r.t_.reserve(t_.size() + o.t_.size());
    size_t i = 0, j = 0;
    while (i < t_.size() && j < o.t_.size()) {
        if (t_[i] == o.t_[j]) {
            ++i;
            ++j;
        } else if (o.t_[j] < t_[i]) {
            r.t_.push_back(t_[i++]);
        } else {
            r.t_.push_back(o.t_[j++]);
        }
    }
    r.t_.insert(r.t_.end(), t_.begin() + i, t_.end());
    r.t_.insert(r.t_.end(), o.t_.begin() + j, o.t_.end());
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) { return *this = *this + o; }

Polynomial Polynomial::operator*(Monomial m) const {
    Polynomial r;
    r.t_.reserve(t_.size());
    for (Monomial a : t_) r.t_.push_back(a * m);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (t_.empty() || o.t_.empty()) return {};
    if (t_.size() == 1) return o * t_.front();
    if (o.t_.size() == 1) return *this * o.t_.front();
    if (t_.size() * o.t_.size() > 4096 && is_homogeneous() && o.is_homogeneous()) {
        int n = std::max(std::max(vars_used(*this), vars_used(o)), 1);
        Slice s(n, degree() + o.degree());
        BitVec acc(s.size());
        for (Monomial a : t_)
            for (Monomial b : o.t_) acc.flip(s.index(a * b));
        return s.to_poly(acc);
    }
    std::vector<Monomial> prod;
    prod.reserve(t_.size() * o.t_.size());
    for (Monomial a : t_)
        for (Monomial b : o.t_) prod.push_back(a * b);
    return from_terms(std::move(prod));
}

Polynomial Polynomial::square() const {
    Polynomial r;
    r.t_.reserve(t_.size());
    for (Monomial a : t_) r.t_.push_back(a * a);
    return r;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial result = one(), base = *this;
    while (e) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base = base.square();
    }
    return result;
}

Polynomial exact_divide(const Polynomial& p, const Polynomial& q) {
    if (q.is_zero()) throw std::domain_error("division by zero polynomial");
    Polynomial r = p, quot;
    const Monomial lq = q.lead();
    while (!r.is_zero()) {
        Monomial lr = r.lead();
        if (!lq.divides(lr)) throw std::domain_error("polynomial is not divisible");
        Monomial m = lr / lq;
        quot += Polynomial(m);
        r += q * m;
    }
    return quot;
}

Ring::Ring(std::vector<std::string> n, std::vector<int> w) : names(std::move(n)), weights(std::move(w)) {
    if (names.size() > size_t(kMaxVars)) throw std::invalid_argument("at most 8 variables supported");
    if (weights.empty()) weights.assign(names.size(), 1);
    if (weights.size() != names.size()) throw std::invalid_argument("weight count mismatch");
}

int Ring::index(const std::string& name) const {
    for (size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return int(i);
    return -1;
}

int Ring::weighted_degree(Monomial m) const {
    int d = 0;
    for (int i = 0; i < nvars(); ++i) d += weights[i] * m.exp(i);
    return d;
}

bool Ring::unit_weights() const {
    return std::all_of(weights.begin(), weights.end(), [](int w) { return w == 1; });
}

std::string to_string(Monomial m, const Ring& r) {
    std::string s;
    for (int i = 0; i < kMaxVars; ++i) {
        int e = m.exp(i);
        if (!e) continue;
        if (i >= r.nvars()) throw std::invalid_argument("monomial uses a variable outside the ring");
        if (!s.empty()) s += '*';
        s += r.names[i];
        if (e > 1) s += '^' + std::to_string(e);
    }
    return s.empty() ? "1" : s;
}

std::string to_string(const Polynomial& p, const Ring& r) {
    if (p.is_zero()) return "0";
    std::string s;
    for (Monomial m : p.terms()) {
        if (!s.empty()) s += '+';
        s += to_string(m, r);
    }
    return s;
}

namespace {

class Parser {
public:
    Parser(const std::string& s, const Ring& r, const SymbolTable* sym) : s_(s), r_(r), sym_(sym) {}

    Polynomial run() {
        Polynomial p = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& why) {
        throw ParseError(why + " at offset " + std::to_string(pos_) + " in \"" + s_ + "\"");
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    Polynomial expr() {
        Polynomial p = term();
        while (eat('+') || eat('-')) p += term();
        return p;
    }
    Polynomial term() {
        Polynomial p = factor();
        while (eat('*')) p *= factor();
        return p;
    }
    Polynomial factor() {
        Polynomial p = primary();
        while (eat('^')) {
            skip();
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            p = p.pow(unsigned(std::stoul(s_.substr(start, pos_ - start))));
        }
        return p;
    }
    Polynomial primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            int v = s_[pos_ - 1] - '0';
            (void)start;
            return (v & 1) ? Polynomial::one() : Polynomial();
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            int i = r_.index(name);
            if (i >= 0) return Polynomial::var(i);
            if (sym_) {
                auto it = sym_->find(name);
                if (it != sym_->end()) return it->second;
            }
            pos_ = start;
            fail("unknown name '" + name + "'");
        }
        fail("unexpected character");
    }

    const std::string& s_;
    const Ring& r_;
    const SymbolTable* sym_;
    size_t pos_ = 0;
};

constexpr int kBinomRows = 320;
constexpr int kBinomCols = kMaxVars + 1;

const std::array<std::array<uint64_t, kBinomCols>, kBinomRows>& binom_table() {
    static const auto table = [] {
        std::array<std::array<uint64_t, kBinomCols>, kBinomRows> t{};
        for (int n = 0; n < kBinomRows; ++n) {
            t[n][0] = 1;
            for (int k = 1; k < kBinomCols; ++k) t[n][k] = n == 0 ? 0 : t[n - 1][k - 1] + t[n - 1][k];
        }
        return t;
    }();
    return table;
}

inline uint64_t small_binom(int n, int k) { return n < 0 ? 0 : binom_table()[n][k]; }

}  // namespace

Polynomial parse_polynomial(const std::string& text, const Ring& r, const SymbolTable* symbols) {
    return Parser(text, r, symbols).run();
}

uint64_t binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (n < kBinomRows && k < kBinomCols) return binom_table()[n][k];
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (int i = 1; i <= k; ++i) r = r * unsigned(n - k + i) / unsigned(i);
    return uint64_t(r);
}

std::vector<Monomial> monomial_basis(int nvars, int d) {
    Slice s(nvars, d);
    std::vector<Monomial> out(s.size());
    for (size_t i = 0; i < s.size(); ++i) out[i] = s.at(i);
    return out;
}

Slice::Slice(int nvars, int d) : n_(nvars), d_(d) {
    if (nvars < 1 || nvars > kMaxVars) throw std::invalid_argument("Slice: variable count out of range");
    if (d < 0 || d + nvars >= kBinomRows) throw std::invalid_argument("Slice: degree out of range");
    size_ = size_t(small_binom(d + n_ - 1, n_ - 1));
}

size_t Slice::index(Monomial m) const {
    size_t idx = 0;
    int r = d_;
    for (int i = 0; i + 1 < n_; ++i) {
        int e = m.exp(i);
        int k = n_ - i;
        if (r - e - 1 >= 0) idx += size_t(small_binom(r - e - 1 + k - 1, k - 1));
        r -= e;
    }
    return idx;
}

Monomial Slice::at(size_t idx) const {
    Monomial m;
    int r = d_;
    for (int i = 0; i + 1 < n_; ++i) {
        int k = n_ - i;
        int e = r;
        for (; e >= 0; --e) {
            size_t block = size_t(small_binom(r - e + k - 2, k - 2));
            if (idx < block) break;
            idx -= block;
        }
        m.w |= uint64_t(e) << (8 * (7 - i));
        r -= e;
    }
    m.w |= uint64_t(r) << (8 * (7 - (n_ - 1)));
    return m;
}

BitVec Slice::to_vec(const Polynomial& p) const {
    BitVec v(size_);
    for (Monomial m : p.terms()) {
        if (m.degree() != d_) throw std::invalid_argument("Slice::to_vec: polynomial not homogeneous of the slice degree");
        v.set(index(m));
    }
    return v;
}

Polynomial Slice::to_poly(const BitVec& v) const {
    if (v.size() != size_) throw DimensionMismatch("Slice::to_poly: length mismatch");
    std::vector<Monomial> t;
    for (size_t i : v.ones()) t.push_back(at(i));
    return Polynomial::from_terms(std::move(t));
}

}  // namespace invar
