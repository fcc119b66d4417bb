#include "invar/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "invar/rings.hpp"

namespace invar {

PoincareSeries::PoincareSeries(std::vector<int64_t> numerator, std::vector<int> denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    for (int d : den_)
        if (d <= 0) throw std::invalid_argument("PoincareSeries: denominator degrees must be positive");
    std::sort(den_.begin(), den_.end());
    trim();
}

PoincareSeries PoincareSeries::free_module(const std::vector<int>& gen_degrees,
                                           const std::vector<int>& numerator_degrees) {
    std::vector<int64_t> num;
    for (int s : numerator_degrees) {
        if (s < 0) throw std::invalid_argument("PoincareSeries: negative module degree");
        if (int(num.size()) <= s) num.resize(s + 1, 0);
        ++num[s];
    }
    return PoincareSeries(num, gen_degrees);
}

void PoincareSeries::trim() {
    while (!num_.empty() && num_.back() == 0) num_.pop_back();
}

std::vector<int64_t> PoincareSeries::numerator_over(const std::vector<int>& den) const {
    std::vector<int> extra;
    std::set_difference(den.begin(), den.end(), den_.begin(), den_.end(), std::back_inserter(extra));
    std::vector<int64_t> n = num_;
    for (int d : extra) {
        std::vector<int64_t> m(n.size() + d, 0);
        for (size_t i = 0; i < n.size(); ++i) {
            m[i] += n[i];
            m[i + d] -= n[i];
        }
        n = std::move(m);
    }
    while (!n.empty() && n.back() == 0) n.pop_back();
    return n;
}

namespace {

std::vector<int> common_denominator(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

std::vector<int64_t> PoincareSeries::expand(int bound) const {
    std::vector<int64_t> c(bound + 1, 0);
    for (size_t i = 0; i < num_.size() && int(i) <= bound; ++i) c[i] = num_[i];
    for (int d : den_)
        for (int i = d; i <= bound; ++i) c[i] += c[i - d];
    return c;
}

PoincareSeries PoincareSeries::operator+(const PoincareSeries& o) const {
    auto den = common_denominator(den_, o.den_);
    auto a = numerator_over(den), b = o.numerator_over(den);
    a.resize(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    return PoincareSeries(a, den);
}

PoincareSeries PoincareSeries::operator-(const PoincareSeries& o) const { return *this + o * -1; }

PoincareSeries PoincareSeries::operator*(int64_t k) const {
    auto n = num_;
    for (auto& c : n) c *= k;
    return PoincareSeries(n, den_);
}

PoincareSeries PoincareSeries::shifted(int k) const {
    if (k < 0) throw std::invalid_argument("PoincareSeries: negative shift");
    auto n = num_;
    if (!n.empty()) n.insert(n.begin(), size_t(k), 0);
    return PoincareSeries(n, den_);
}

bool operator==(const PoincareSeries& a, const PoincareSeries& b) {
    auto den = common_denominator(a.den_, b.den_);
    return a.numerator_over(den) == b.numerator_over(den);
}

std::string to_string(const PoincareSeries& s) {
    std::vector<std::string> terms;
    for (size_t i = 0; i < s.numerator().size(); ++i) {
        int64_t c = s.numerator()[i];
        if (!c) continue;
        std::string mono = i == 0 ? "" : i == 1 ? "t" : "t^" + std::to_string(i);
        int64_t a = c < 0 ? -c : c;
        std::string body = mono.empty() ? std::to_string(a) : (a == 1 ? mono : std::to_string(a) + "*" + mono);
        if (terms.empty())
            terms.push_back(c < 0 ? "-" + body : body);
        else
            terms.push_back((c < 0 ? "- " : "+ ") + body);
    }
    std::string num = terms.empty() ? "0" : terms[0];
    for (size_t i = 1; i < terms.size(); ++i) num += " " + terms[i];
    if (s.denominator().empty() || terms.empty()) return num;
    if (terms.size() > 1) num = "(" + num + ")";
    std::string den;
    for (int d : s.denominator()) den += "(1 - t" + (d == 1 ? std::string() : "^" + std::to_string(d)) + ")";
    if (s.denominator().size() > 1) den = "(" + den + ")";
    return num + " / " + den;
}

RingDescriptor free_descriptor(std::string name, std::string text, std::vector<int> gen_degrees,
                               std::vector<int> module_degrees) {
    RingDescriptor r;
    r.name = std::move(name);
    r.text = std::move(text);
    r.gen_degrees = std::move(gen_degrees);
    r.module_degrees = std::move(module_degrees);
    return r;
}

RingDescriptor descriptor_of(const HironakaDecomposition& dec, std::string name) {
    return free_descriptor(std::move(name), "", dec.primary_degrees, dec.secondary_degrees);
}

PoincareSeries series_of(const RingDescriptor& r) {
    if (r.annotation) return *r.annotation;
    if (r.kind == RingDescriptor::Kind::Presented)
        throw std::invalid_argument("series_of: presented ring '" + r.name + "' has no series annotation");
    return PoincareSeries::free_module(r.gen_degrees, r.module_degrees);
}

namespace {

PresentedRing s8_presentation() {
    return {{"sigma1", "sigma2", "sigma3", "sigma4", "c3", "d6", "d7", "x5"}, {1, 2, 3, 4, 3, 6, 7, 5},
            {
                "d6*sigma1 = d6*sigma3 = 0",
                "d7*sigma1 = d7*sigma2 = d7*sigma3 = d7*c3 = d7*x5 = 0",
                "x5*sigma3 + c3*sigma4*sigma1 = 0",
                "c3*(sigma3 + sigma1*sigma2) + sigma1*x5 = 0",
                "x5^2 + x5*sigma2*c3 + d6*sigma2^2 + sigma4*c3^2 = 0",
            }};
}

PresentedRing a8_presentation() {
    return {{"sigma2", "sigma3", "c3", "sigma4", "d6", "e6", "d7", "e7", "x5"}, {2, 3, 3, 4, 6, 6, 7, 7, 5},
            {
                "d6*sigma3 = e6*sigma3 = sigma3*(sigma2^3 + sigma2*sigma4)",
                "d6*e7 = d7*e6 = d7*e7 = 0",
                "d7*sigma2 = d7*sigma3 = d7*c3 = d7*x5 = 0",
                "e7*sigma2 = e7*sigma3 = e7*c3 = e7*x5 = 0",
                "x5*sigma3 = c3*sigma3 = 0",
                "d6*e6 = sigma2*(sigma2*c3*x5 + c3^2*sigma4 + sigma2*sigma4^2 + sigma2^5) + x5*c3*sigma4",
                "x5^2 + x5*sigma2*c3 + (d6 + e6)*sigma2^2 + sigma4*c3^2 = 0",
            }};
}

RingDescriptor presented(std::string name, std::string text, PresentedRing p) {
    RingDescriptor r;
    r.name = std::move(name);
    r.text = std::move(text);
    r.kind = RingDescriptor::Kind::Presented;
    r.presented = std::move(p);
    return r;
}

std::vector<RingDescriptor> all_descriptors() {
    return {
        free_descriptor("L3_2_invariants", "F2[d4, d6, d7, d8](1, a8, a9, a10, a11, a12, a13, a21)", {4, 6, 7, 8},
                        {0, 8, 9, 10, 11, 12, 13, 21}),
        free_descriptor("radical_2A8", "F2[d4, d8](u3, u7, u9)", {4, 8}, {3, 7, 9}),
        free_descriptor("double_image_2A8", "F2[d4, d8]", {4, 8}, {0}),
        free_descriptor("M_H", "F2[d4, d8](1, w3, n7)", {4, 8}, {0, 3, 7}),
        free_descriptor("F2[h4,h8]", "F2[h4, h8]", {4, 8}, {0}),
        free_descriptor("F2[h8,h12]", "F2[h8, h12]", {8, 12}, {0}),
        free_descriptor("image_2S8", "F2[w, d2^2, d4^2](1, d3, d3d4, t(t+w)d3d4)", {1, 4, 8}, {0, 3, 7, 9}),
        free_descriptor("E2_extra_2S8", "F2[d4, d8, w](w, u3, u7, u9)", {4, 8, 1}, {1, 3, 7, 9}),
        free_descriptor("detector_2A10", "F2[d3, d2^2, d4^2](1, d2d3, d3d4, d2d3d4)", {3, 4, 8}, {0, 5, 7, 9}),
        free_descriptor("A7_invariants", "F2[d8, d12, d14, d15](1, a18, a20, a21, a24, a25, a27, a45)",
                        {8, 12, 14, 15}, {0, 18, 20, 21, 24, 25, 27, 45}),
        free_descriptor("detector_Ly", "F2[d4^2, d6^2, d7](1, d4d7, d6d7, d4d6d7)", {8, 12, 7}, {0, 11, 13, 17}),
        free_descriptor("d4sq_d6sq", "F2[d4^2, d6^2]", {8, 12}, {0}),
        free_descriptor("dickson_gl3_d7", "F2[d4, d6, d7]d7", {4, 6, 7}, {7}),
        presented("H_S8", "F2[sigma1, sigma2, sigma3, sigma4, c3, d6, d7](x5)/R", s8_presentation()),
        presented("H_A8", "F2[sigma2, sigma3, c3, sigma4, d6, e6, d7, e7](1, x5)/R", a8_presentation()),
    };
}

RingDescriptor need(const std::string& name) {
    auto r = named_descriptor(name);
    if (!r) throw std::logic_error("unknown descriptor " + name);
    return *r;
}

}  // namespace

std::optional<RingDescriptor> named_descriptor(const std::string& name) {
    for (auto& r : all_descriptors())
        if (r.name == name) return r;
    return std::nullopt;
}

std::vector<std::string> descriptor_names() {
    std::vector<std::string> out;
    for (const auto& r : all_descriptors()) out.push_back(r.name);
    return out;
}

DetectionReport verify_detection(const DetectionSequence& seq, int bound) {
    DetectionReport r;
    r.name = seq.name;
    r.bound = bound;
    PoincareSeries rhs = seq.radical ? series_of(*seq.radical) : PoincareSeries::zero();
    for (const auto& d : seq.detectors) rhs = rhs + series_of(d);
    rhs = rhs - series_of(seq.quotient);
    r.middle_known = !seq.middle.empty();
    if (r.middle_known) {
        PoincareSeries mid;
        for (const auto& m : seq.middle) mid = mid + series_of(m);
        r.identity_holds = mid == rhs;
        if (!r.identity_holds) {
            auto a = mid.expand(bound), b = rhs.expand(bound);
            for (int d = 0; d <= bound && r.first_mismatch < 0; ++d)
                if (a[d] != b[d]) r.first_mismatch = d;
        }
        r.middle = mid;
    } else {
        r.middle = rhs;
    }
    r.expansion = r.middle.expand(bound);
    for (int d = 0; d <= bound; ++d)
        if (r.expansion[d] < 0) {
            r.nonnegative = false;
            r.first_negative = d;
            break;
        }
    return r;
}

std::optional<DetectionSequence> named_sequence(const std::string& name) {
    auto inv = need("L3_2_invariants");
    if (name == "2A8") return DetectionSequence{name, need("radical_2A8"), {}, {inv, inv}, need("double_image_2A8")};
    if (name == "2S8")
        return DetectionSequence{name, std::nullopt, {inv, need("E2_extra_2S8")}, {inv, need("image_2S8")},
                                 need("F2[h4,h8]")};
    if (name == "2A10")
        return DetectionSequence{name, std::nullopt, {}, {inv, need("detector_2A10")}, need("F2[h4,h8]")};
    if (name == "Ly")
        return DetectionSequence{name, std::nullopt, {}, {need("A7_invariants"), need("detector_Ly")},
                                 need("F2[h8,h12]")};
    return std::nullopt;
}

std::vector<std::string> sequence_names() { return {"2A8", "2S8", "2A10", "Ly"}; }

PoincareSeries einfty_series(EinftyReading reading) {
    // Tensor factor F2[sigma4, e^8] and the (1, e^4) factor.
    std::vector<int> base{4, 8};
    auto f = [&](std::vector<int> gens, std::vector<int> mods) {
        gens.insert(gens.end(), base.begin(), base.end());
        return PoincareSeries::free_module(gens, mods);
    };
    PoincareSeries s = f({}, {3, 7, 9});  // c3, e^4 c3, e^4 x5
    PoincareSeries inner = PoincareSeries::free_module({6}, {0}) + PoincareSeries::free_module({6}, {6}) +
                           PoincareSeries::free_module({6, 7}, {7, 8, 9, 17});
    if (reading != EinftyReading::Literal)
        inner = inner + PoincareSeries::free_module({6, 7}, {7, 8, 9, 17});
    else
        inner = inner + PoincareSeries::free_module({6, 7}, {6, 7, 8, 15});
    PoincareSeries with_e4 = inner + inner.shifted(4);
    auto den = with_e4.denominator();
    den.insert(den.end(), base.begin(), base.end());
    PoincareSeries out = s + PoincareSeries(with_e4.numerator(), den);
    if (reading == EinftyReading::E4Removed) out = out - f({}, {4});
    return out;
}

std::string to_string(EinftyReading r) {
    switch (r) {
        case EinftyReading::Symmetric: return "symmetric";
        case EinftyReading::Literal: return "literal";
        case EinftyReading::E4Removed: return "e4_removed";
    }
    return "";
}

EinftyReport einfty_series_check(EinftyReading reading, int bound) {
    EinftyReport r;
    r.bound = bound;
    r.einfty = einfty_series(reading).expand(bound);
    r.detected = verify_detection(*named_sequence("2A8"), bound).expansion;
    for (int d = 0; d <= bound; ++d)
        if (r.einfty[d] != r.detected[d]) r.mismatches.push_back(d);
    for (auto [deg, stated] : std::vector<std::pair<int, int64_t>>{{1, 0}, {2, 0}, {3, 1}, {4, 1}, {5, 0}, {7, 3}, {9, 3}})
        if (deg <= bound) r.claims.push_back({deg, stated, r.detected[deg]});
    return r;
}

bool RingMapReport::all_hold() const {
    return std::all_of(relations.begin(), relations.end(), [](const RelationVerdict& v) { return v.holds; });
}

namespace {

std::vector<std::string> split_chain(const std::string& rel) {
    std::vector<std::string> parts;
    size_t start = 0;
    for (size_t i = 0; i <= rel.size(); ++i)
        if (i == rel.size() || rel[i] == '=') {
            parts.push_back(rel.substr(start, i - start));
            start = i + 1;
        }
    if (parts.size() == 1) parts.push_back("0");
    return parts;
}

SymbolRing image_symbols(const PresentedRing& source, const std::map<std::string, Polynomial>& images) {
    SymbolRing s{source.ring(), {}};
    for (const auto& n : source.names) {
        auto it = images.find(n);
        if (it == images.end()) throw std::invalid_argument("verify_ring_map: no image for generator " + n);
        s.values.push_back(it->second);
    }
    return s;
}

RelationVerdict check_relation(const PresentedRing& source, const SymbolRing& s, const std::string& rel) {
    RelationVerdict v;
    v.relation = rel;
    v.holds = true;
    auto parts = split_chain(rel);
    std::vector<Polynomial> vals;
    for (const auto& p : parts) vals.push_back(s.evaluate(parse_polynomial(p, s.ring)));
    for (size_t i = 0; i + 1 < vals.size(); ++i)
        if (vals[i] != vals[i + 1]) {
            v.holds = false;
            v.residual = vals[i] + vals[i + 1];
            break;
        }
    return v;
}

}  // namespace

RingMapReport verify_ring_map(const PresentedRing& source, const std::map<std::string, Polynomial>& images) {
    SymbolRing s = image_symbols(source, images);
    RingMapReport r;
    for (const auto& rel : source.relations) r.relations.push_back(check_relation(source, s, rel));
    return r;
}

std::vector<Polynomial> solve_image(const PresentedRing& source, std::map<std::string, Polynomial> images,
                                    const std::string& gen, const std::string& relation, int nvars) {
    auto it = std::find(source.names.begin(), source.names.end(), gen);
    if (it == source.names.end()) throw std::invalid_argument("solve_image: unknown generator " + gen);
    auto basis = monomial_basis(nvars, source.degrees[it - source.names.begin()]);
    if (basis.size() > 20) throw std::invalid_argument("solve_image: slice too large for exhaustive search");
    std::vector<Polynomial> out;
    for (uint64_t mask = 0; mask < (uint64_t(1) << basis.size()); ++mask) {
        std::vector<Monomial> t;
        for (size_t b = 0; b < basis.size(); ++b)
            if (mask >> b & 1) t.push_back(basis[b]);
        images[gen] = Polynomial::from_terms(t);
        if (check_relation(source, image_symbols(source, images), relation).holds) out.push_back(images[gen]);
    }
    return out;
}

std::map<std::string, Polynomial> s8_restriction_images() {
    SymbolRing s = wtz_symbols();
    auto v = [&](const std::string& t) { return s.evaluate(parse_polynomial(t, s.ring)); };
    return {{"sigma1", v("w")},          {"sigma3", v("w^3 + d3")},        {"c3", v("d3")},
            {"sigma4", v("t*(t+w)*d2")}, {"x5", v("t*(t+w)*d3")},         {"d6", Polynomial()},
            {"d7", Polynomial()}};
}

ImageSubringReport image_subring_check(int bound) {
    ImageSubringReport r;
    r.bound = bound;
    PresentedRing s8 = s8_presentation();
    auto images = s8_restriction_images();
    auto sol = solve_image(s8, images, "sigma2", "c3*(sigma3 + sigma1*sigma2) + sigma1*x5 = 0", 3);
    r.sigma2_solutions = sol.size();
    Ring wtz({"w", "t", "z"});
    if (sol.size() == 1) {
        images["sigma2"] = sol[0];
        r.sigma2_image = to_string(sol[0], wtz);
        r.relations = verify_ring_map(s8, images);
    }

    SymbolRing s = wtz_symbols();
    auto v = [&](const std::string& t) { return s.evaluate(parse_polynomial(t, s.ring)); };
    std::vector<Polynomial> gens;
    for (const auto& [name, img] : images)
        if (!img.is_zero()) gens.push_back(img);
    std::vector<Polynomial> extra{v("d3*d4"), v("t*(t+w)*d3*d4"), v("d4^2")};
    auto generated = [&](bool with_d3d4) {
        std::vector<Polynomial> g = gens;
        for (size_t i = 0; i < extra.size(); ++i)
            if (with_d3d4 || i != 0) g.push_back(extra[i]);
        return Subalgebra(3, g);
    };
    Subalgebra full = generated(true), partial = generated(false);
    Subalgebra stated = *named_subring("image_ring");
    Subalgebra small = wtz_subalgebra({"w", "d2^2"}, {"1", "d3"});
    r.equals_stated = true;
    r.contains_w_d2sq_d3 = true;
    for (int d = 0; d <= bound; ++d) {
        if (full.slice(d) != stated.slice(d)) r.equals_stated = false;
        if (intersect(small.slice(d), full.slice(d)) != small.slice(d)) r.contains_w_d2sq_d3 = false;
        if (r.shortfall_without_d3d4 < 0 && partial.dim(d) < stated.dim(d)) r.shortfall_without_d3d4 = d;
    }
    return r;
}

bool alternate_decomposition_holds() {
    return series_of(need("detector_Ly")) == series_of(need("d4sq_d6sq")) + series_of(need("dickson_gl3_d7"));
}

std::optional<uint64_t> secondary_count(const std::vector<int>& primary_degrees, uint64_t group_order) {
    if (group_order == 0) return std::nullopt;
    uint64_t prod = 1;
    for (int d : primary_degrees) prod *= uint64_t(d);
    if (prod % group_order) return std::nullopt;
    return prod / group_order;
}

bool series_matches(const PoincareSeries& s, const std::vector<size_t>& dims) {
    if (dims.empty()) return true;
    auto e = s.expand(int(dims.size()) - 1);
    for (size_t d = 0; d < dims.size(); ++d)
        if (e[d] != int64_t(dims[d])) return false;
    return true;
}

}  // namespace invar
