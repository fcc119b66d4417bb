#include "invar/subring.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace invar {

namespace {

int checked_degree(const Polynomial& p, const char* who) {
    if (p.is_zero() || !p.is_homogeneous())
        throw std::invalid_argument(std::string(who) + ": polynomials must be nonzero and homogeneous");
    return p.degree();
}

// Every exponent vector with sum a_i * deg_i = d.
void exponent_vectors(const std::vector<int>& deg, int d, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> e(deg.size(), 0);
    std::function<void(size_t, int)> rec = [&](size_t i, int left) {
        if (i == deg.size()) {
            if (left == 0) f(e);
            return;
        }
        for (int a = 0; a * deg[i] <= left; ++a) {
            e[i] = a;
            rec(i + 1, left - a * deg[i]);
        }
        e[i] = 0;
    };
    rec(0, d);
}

std::string join(const std::vector<std::string>& v, const char* sep) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
    return out;
}

}  // namespace

Subalgebra::Subalgebra(int nvars, std::vector<Polynomial> gens, std::vector<Polynomial> module_gens,
                       std::vector<std::string> gen_labels, std::vector<std::string> module_labels)
    : n_(nvars), gens_(std::move(gens)), mods_(std::move(module_gens)), glab_(std::move(gen_labels)),
      mlab_(std::move(module_labels)) {
    if (mods_.empty()) {
        mods_ = {Polynomial::one()};
        if (mlab_.empty()) mlab_ = {"1"};
    }
    Ring r = Ring([&] {
        std::vector<std::string> v;
        for (int i = 0; i < n_; ++i) v.push_back("x" + std::to_string(i));
        return v;
    }());
    for (const auto& g : gens_) {
        int d = checked_degree(g, "Subalgebra");
        if (d == 0) throw std::invalid_argument("Subalgebra: generators need positive degree");
        gdeg_.push_back(d);
    }
    for (const auto& m : mods_) mdeg_.push_back(checked_degree(m, "Subalgebra"));
    if (glab_.empty())
        for (const auto& g : gens_) glab_.push_back(to_string(g, r));
    if (mlab_.empty())
        for (const auto& m : mods_) mlab_.push_back(to_string(m, r));
    if (glab_.size() != gens_.size() || mlab_.size() != mods_.size())
        throw std::invalid_argument("Subalgebra: label count mismatch");
    powers_.resize(gens_.size(), {Polynomial::one()});
}

const Polynomial& Subalgebra::power(size_t g, int e) {
    auto& p = powers_[g];
    while (int(p.size()) <= e) p.push_back(p.back() * gens_[g]);
    return p[e];
}

Polynomial Subalgebra::evaluate(const Product& pr) {
    Polynomial out = mods_[pr.module_index];
    for (size_t g = 0; g < gens_.size(); ++g)
        if (pr.exps[g]) out = out * power(g, pr.exps[g]);
    return out;
}

Subalgebra::Level& Subalgebra::level(int d) {
    auto it = cache_.find(d);
    if (it != cache_.end()) return it->second;
    Slice s(n_, d);
    Level lv;
    lv.builder = std::make_unique<EchelonBuilder>(s.size());
    for (size_t m = 0; m < mods_.size(); ++m) {
        if (mdeg_[m] > d) continue;
        exponent_vectors(gdeg_, d - mdeg_[m], [&](const std::vector<int>& e) {
            Product pr{e, m};
            if (lv.builder->insert(s.to_vec(evaluate(pr)))) lv.accepted.push_back(pr);
        });
    }
    lv.space = lv.builder->subspace();
    return cache_.emplace(d, std::move(lv)).first->second;
}

const Subspace& Subalgebra::slice(int d) {
    if (d < 0) throw std::invalid_argument("Subalgebra: negative degree");
    return level(d).space;
}

std::vector<size_t> Subalgebra::dims(int bound) {
    std::vector<size_t> out;
    for (int d = 0; d <= bound; ++d) out.push_back(dim(d));
    return out;
}

std::optional<std::vector<Subalgebra::Product>> Subalgebra::certificate(const Polynomial& p) {
    if (p.is_zero()) return std::vector<Product>{};
    if (!p.is_homogeneous()) throw std::invalid_argument("certificate: polynomial is not homogeneous");
    Level& lv = level(p.degree());
    auto idx = lv.builder->express(Slice(n_, p.degree()).to_vec(p));
    if (!idx) return std::nullopt;
    std::vector<Product> out;
    for (size_t i : *idx) out.push_back(lv.accepted[i]);
    return out;
}

std::string Subalgebra::describe(const Product& pr) const {
    std::vector<std::string> f;
    for (size_t g = 0; g < gens_.size(); ++g)
        if (pr.exps[g]) f.push_back("(" + glab_[g] + ")" + (pr.exps[g] > 1 ? "^" + std::to_string(pr.exps[g]) : ""));
    if (mlab_[pr.module_index] != "1" || f.empty()) f.push_back("(" + mlab_[pr.module_index] + ")");
    return join(f, "*");
}

std::string Subalgebra::describe() const {
    std::string out = "F2[" + join(glab_, ", ") + "]";
    if (!(mods_.size() == 1 && mods_[0] == Polynomial::one())) out += "(" + join(mlab_, ", ") + ")";
    return out;
}

std::vector<Subspace> intersection_slices(Subalgebra& a, Subalgebra& b, int bound) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("intersect_subalgebras: ambient rings differ");
    std::vector<Subspace> out;
    for (int d = 0; d <= bound; ++d) out.push_back(intersect(a.slice(d), b.slice(d)));
    return out;
}

IntersectionReport intersect_subalgebras(Subalgebra& a, Subalgebra& b, int bound, Subalgebra* candidate) {
    if (candidate && candidate->nvars() != a.nvars())
        throw std::invalid_argument("intersect_subalgebras: ambient rings differ");
    IntersectionReport r;
    r.bound = bound;
    auto sl = intersection_slices(a, b, bound);
    r.equal = candidate != nullptr;
    for (int d = 0; d <= bound; ++d) {
        r.dims.push_back(sl[d].dim());
        if (!candidate) continue;
        const Subspace& c = candidate->slice(d);
        r.candidate_dims.push_back(c.dim());
        if (c != sl[d] && r.first_mismatch < 0) {
            r.first_mismatch = d;
            r.equal = false;
        }
    }
    return r;
}

Polynomial SymbolRing::evaluate(const Polynomial& symbolic) const {
    Polynomial out;
    for (Monomial m : symbolic.terms()) {
        Polynomial t = Polynomial::one();
        for (int i = 0; i < ring.nvars(); ++i)
            if (int e = m.exp(i)) t = t * values[i].pow(unsigned(e));
        out += t;
    }
    return out;
}

SymbolTable SymbolRing::table() const {
    SymbolTable t;
    for (int i = 0; i < ring.nvars(); ++i) t[ring.names[i]] = values[i];
    return t;
}

ModulePresentation::ModulePresentation(int nvars, SymbolRing symbols, std::vector<Polynomial> base,
                                       std::vector<std::string> basis_names, std::vector<Polynomial> basis)
    : n_(nvars), sym_(std::move(symbols)), base_(std::move(base)), basis_(std::move(basis)),
      names_(std::move(basis_names)), base_ring_(nvars, [&] {
          std::vector<Polynomial> v;
          for (const auto& b : base_) v.push_back(sym_.evaluate(b));
          return v;
      }()) {
    if (int(sym_.values.size()) != sym_.ring.nvars()) throw std::invalid_argument("SymbolRing: value count mismatch");
    if (names_.size() != basis_.size()) throw std::invalid_argument("ModulePresentation: basis name count mismatch");
    for (const auto& b : base_) {
        base_val_.push_back(sym_.evaluate(b));
        base_deg_.push_back(checked_degree(base_val_.back(), "ModulePresentation"));
    }
    for (const auto& b : basis_) {
        basis_val_.push_back(sym_.evaluate(b));
        basis_deg_.push_back(checked_degree(basis_val_.back(), "ModulePresentation"));
    }
}

ModulePresentation::Level& ModulePresentation::level(int d) {
    auto it = cache_.find(d);
    if (it != cache_.end()) return it->second;
    Slice s(n_, d);
    Level lv;
    lv.builder = std::make_unique<EchelonBuilder>(s.size());
    for (size_t i = 0; i < basis_.size(); ++i) {
        if (basis_deg_[i] > d) continue;
        exponent_vectors(base_deg_, d - basis_deg_[i], [&](const std::vector<int>& e) {
            Polynomial coeff = Polynomial::one(), val = basis_val_[i];
            for (size_t j = 0; j < e.size(); ++j)
                if (e[j]) {
                    coeff = coeff * base_[j].pow(unsigned(e[j]));
                    val = val * base_val_[j].pow(unsigned(e[j]));
                }
            ++lv.products;
            if (lv.builder->insert(s.to_vec(val))) lv.accepted.push_back({i, coeff});
        });
    }
    return cache_.emplace(d, std::move(lv)).first->second;
}

std::optional<std::vector<Polynomial>> ModulePresentation::express(const Polynomial& p) {
    std::vector<Polynomial> out(basis_.size());
    if (p.is_zero()) return out;
    if (!p.is_homogeneous()) throw std::invalid_argument("express_in_basis: polynomial is not homogeneous");
    Level& lv = level(p.degree());
    auto idx = lv.builder->express(Slice(n_, p.degree()).to_vec(p));
    if (!idx) return std::nullopt;
    for (size_t i : *idx) out[lv.accepted[i].basis] += lv.accepted[i].coeff;
    return out;
}

Polynomial ModulePresentation::expand(const std::vector<Polynomial>& coeffs) const {
    Polynomial out;
    for (size_t i = 0; i < coeffs.size() && i < basis_.size(); ++i) out += sym_.evaluate(coeffs[i]) * basis_val_[i];
    return out;
}

std::string ModulePresentation::format(const std::vector<Polynomial>& coeffs) const {
    std::vector<std::string> parts;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].is_zero()) continue;
        std::string b = "[" + names_[i] + "]";
        if (coeffs[i] == Polynomial::one())
            parts.push_back(b);
        else if (coeffs[i].size() == 1)
            parts.push_back(to_string(coeffs[i], sym_.ring) + "*" + b);
        else
            parts.push_back("(" + to_string(coeffs[i], sym_.ring) + ")*" + b);
    }
    return parts.empty() ? "0" : join(parts, " + ");
}

bool ModulePresentation::verify_free(int bound) {
    for (int d = 0; d <= bound; ++d) {
        Level& lv = level(d);
        if (lv.accepted.size() != lv.products) return false;
    }
    return true;
}

bool ModulePresentation::in_base(const Polynomial& c) {
    Polynomial v = sym_.evaluate(c);
    if (v.is_zero()) return true;
    if (!v.is_homogeneous()) return false;
    return base_ring_.contains(v);
}

namespace {

// Whether c = q * c' with q in R, for symbolic monomials c, c'.
bool r_multiple(ModulePresentation& m, Monomial c, Monomial cp) {
    if (!cp.divides(c)) return false;
    return m.in_base(Polynomial(c / cp));
}

}  // namespace

ReducedGenerators reduce_generators(const std::vector<Polynomial>& gens, ModulePresentation& m) {
    ReducedGenerators out;
    struct Single {
        size_t basis;
        Monomial coeff;
    };
    std::vector<Single> singles;
    for (const auto& g : gens) {
        auto e = m.express(g);
        if (!e) throw std::invalid_argument("reduce_generators: generator lies outside the module");
        out.expressed.push_back(*e);
        out.expressed_text.push_back(m.format(*e));
        std::vector<Polynomial> rest(e->size());
        for (size_t i = 0; i < e->size(); ++i)
            for (Monomial c : (*e)[i].terms()) {
                bool drop = std::any_of(singles.begin(), singles.end(), [&](const Single& s) {
                    return s.basis == i && r_multiple(m, c, s.coeff);
                });
                if (!drop) rest[i] += Polynomial(c);
            }
        size_t terms = 0, where = 0;
        for (size_t i = 0; i < rest.size(); ++i)
            if (!rest[i].is_zero()) {
                terms += rest[i].size();
                where = i;
            }
        if (terms == 0) continue;
        if (terms == 1) singles.push_back({where, rest[where].lead()});
        out.retained_text.push_back(m.format(rest));
        out.retained.push_back(std::move(rest));
    }
    return out;
}

IdealIntersection intersect_by_ideals(ModulePresentation& m, const std::vector<Polynomial>& u_gens, size_t k) {
    if (k > m.rank()) throw std::invalid_argument("intersect_by_ideals: prefix longer than the basis");
    IdealIntersection r;
    r.ideals.resize(k);
    std::vector<std::vector<Polynomial>> raw(k);
    for (const auto& g : u_gens) {
        auto e = m.express(g);
        if (!e) throw std::invalid_argument("intersect_by_ideals: generator lies outside the module");
        size_t nz = 0, where = 0;
        for (size_t i = 0; i < e->size(); ++i)
            if (!(*e)[i].is_zero()) {
                ++nz;
                where = i;
            }
        if (nz > 1) {
            r.hypothesis_ok = false;
            r.witness = m.format(*e);
            return r;
        }
        if (nz == 1 && where < k) raw[where].push_back((*e)[where]);
    }
    r.hypothesis_ok = true;
    for (size_t t = 0; t < k; ++t) {
        auto& gs = raw[t];
        std::stable_sort(gs.begin(), gs.end(), [&](const Polynomial& a, const Polynomial& b) {
            return m.symbols().ring.weighted_degree(a.lead()) < m.symbols().ring.weighted_degree(b.lead());
        });
        for (const auto& c : gs) {
            bool redundant = std::any_of(r.ideals[t].begin(), r.ideals[t].end(), [&](const Polynomial& j) {
                return c == j || (c.size() == 1 && j.size() == 1 && r_multiple(m, c.lead(), j.lead()));
            });
            if (!redundant) r.ideals[t].push_back(c);
        }
        std::vector<std::string> txt;
        for (const auto& c : r.ideals[t]) {
            txt.push_back(to_string(c, m.symbols().ring));
            std::vector<Polynomial> coeffs(m.rank());
            coeffs[t] = c;
            r.generators.push_back(m.expand(coeffs));
        }
        r.ideal_text.push_back("(" + join(txt, ", ") + ")");
    }
    return r;
}

IntegralCheck integral_equation_check(const Polynomial& element, Subalgebra& r, const Polynomial& equation, int xvar) {
    IntegralCheck out;
    std::map<int, std::vector<Monomial>> by_power;
    for (Monomial m : equation.terms()) {
        int e = m.exp(xvar);
        Monomial rest = m / Monomial::var(xvar, e);
        by_power[e].push_back(rest);
    }
    if (by_power.empty()) return out;
    out.monic = by_power.rbegin()->second.size() == 1 && by_power.rbegin()->second[0] == Monomial{};
    out.coefficients_in_ring = true;
    for (auto& [e, terms] : by_power) {
        Polynomial c = Polynomial::from_terms(terms);
        if (e == by_power.rbegin()->first) continue;
        for (int d = 0; d <= c.degree(); ++d) {
            Polynomial h = c.homogeneous_part(d);
            if (!h.is_zero() && !r.contains(h)) out.coefficients_in_ring = false;
        }
        out.remainder += c * element.pow(unsigned(e));
    }
    out.remainder += Polynomial::from_terms(by_power.rbegin()->second) * element.pow(unsigned(by_power.rbegin()->first));
    out.holds = out.remainder.is_zero() && out.monic && out.coefficients_in_ring;
    return out;
}

}  // namespace invar
