#include "invar_app/commands.hpp"

#include <algorithm>
#include <sstream>

#include "invar/catalog.hpp"
#include "invar/invariant.hpp"
#include "invar/perm.hpp"
#include "invar/rings.hpp"
#include "invar/series.hpp"
#include "invar/steenrod.hpp"
#include "invar/subring.hpp"
#include "invar_app/suite.hpp"

namespace invar::app {

namespace {

int resolve_bound(std::optional<int> given, int fallback) {
    int b = given.value_or(fallback);
    if (b <= 0) throw ConfigError("bound must be positive");
    return b;
}

Subalgebra build_subring(const SubringSpec& s) {
    try {
        return wtz_subalgebra(s.gens, s.module);
    } catch (const ParseError& e) {
        throw ConfigError("ring '" + s.name + "': " + e.what());
    }
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
    return out;
}

Report poly_entries(const std::vector<Polynomial>& polys, const Ring& ring) {
    Report out = Report::array();
    for (const auto& p : polys) out.push_back({{"degree", p.degree()}, {"polynomial", to_string(p, ring)}});
    return out;
}

Report mismatch(Report r, const std::string& what, int degree) {
    r["verdict"] = "mismatch";
    r["failure"] = what;
    if (degree >= 0) r["first_failing_degree"] = degree;
    return r;
}

int exit_of(const Report& r) { return r.value("verdict", "ok") == "ok" ? kOk : kMismatch; }

std::string cache_key(const GroupSpec& g, const std::vector<Polynomial>& prim, int bound) {
    std::ostringstream k;
    k << "invariants\n" << join(g.ring.names, ",") << "\n";
    for (const auto& m : g.gens) {
        for (const auto& row : m.rows())
            for (int x : row) k << x;
        k << ";";
    }
    k << "\n";
    for (const auto& p : prim) k << to_string(p, g.ring) << ";";
    k << "\n" << bound;
    return k.str();
}

Report invariants_report(const GroupSpec& g, const std::vector<Polynomial>& prim, int bound) {
    const int n = g.ring.nvars();
    FixedSpaceEngine e(n, g.gens);
    Report r;
    r["command"] = "invariants";
    r["group"] = g.name;
    r["variables"] = g.ring.names;
    r["order"] = e.group_order();
    r["bound"] = bound;
    auto dims = invariant_dims(e, bound);
    r["dims"] = dims;
    r["primaries"] = poly_entries(prim, g.ring);
    for (size_t i = 0; i < prim.size(); ++i)
        if (!is_invariant(g.gens, prim[i])) return mismatch(r, "primary " + std::to_string(i) + " is not invariant", -1);
    auto hsop = validate_hsop(n, prim, bound);
    r["primary_dims"] = hsop.dims;
    if (!hsop.ok) return mismatch(r, "primaries are not algebraically independent", hsop.failure_degree);
    if (int(prim.size()) != n) return mismatch(r, "need one primary per variable", -1);

    auto dec = secondary_invariants(e, prim, bound);
    r["secondaries"] = poly_entries(dec.secondaries, g.ring);
    r["secondary_degrees"] = dec.secondary_degrees;
    r["expected_count"] = dec.expected_count;
    r["complete"] = dec.complete;
    auto fr = freeness_check(dec, e, bound);
    r["free"] = fr.free;
    auto series = series_of(descriptor_of(dec, g.name));
    r["series"] = to_string(series);
    bool matches = series_matches(series, dims);
    r["series_matches_dims"] = matches;
    if (dec.secondaries.size() == 1) {
        std::vector<std::string> texts;
        for (const auto& p : prim) texts.push_back(to_string(p, g.ring));
        r["ring"] = "F2[" + join(texts, ", ") + "]";
    }
    if (!fr.free) return mismatch(r, "module over the primaries is not free", fr.relation_degree);
    if (!matches) return mismatch(r, "series disagrees with dimensions", -1);
    r["verdict"] = "ok";
    return r;
}

}  // namespace

Outcome cmd_invariants(const RunConfig& cfg, const std::string& group, std::optional<int> degrees,
                       const std::vector<std::string>& primaries, const Cache* cache) {
    const GroupSpec& g = cfg.group(group);
    int bound = resolve_bound(degrees, cfg.bounds.invariants);
    std::vector<Polynomial> prim = g.primaries;
    if (!primaries.empty()) {
        prim.clear();
        for (const auto& t : primaries) {
            try {
                prim.push_back(parse_polynomial(t, g.ring));
            } catch (const ParseError& e) {
                throw ConfigError("--primaries: " + std::string(e.what()));
            }
        }
    }
    if (prim.empty()) throw ConfigError("group '" + group + "' has no primaries; pass --primaries");
    for (const auto& p : prim)
        if (p.is_zero() || !p.is_homogeneous()) throw ConfigError("primaries must be nonzero and homogeneous");

    std::string key = cache_key(g, prim, bound);
    if (cache)
        if (auto hit = cache->get(key)) {
            Report r = Report::parse(*hit);
            return {exit_of(r), r};
        }
    Report r = invariants_report(g, prim, bound);
    if (cache) cache->put(key, r.dump());
    return {exit_of(r), r};
}

Outcome cmd_intersect(const RunConfig& cfg, const std::string& a, const std::string& b, std::optional<int> bound,
                      const std::optional<std::string>& candidate) {
    int n = resolve_bound(bound, cfg.bounds.intersect);
    Subalgebra ra = build_subring(cfg.subring(a)), rb = build_subring(cfg.subring(b));
    std::optional<Subalgebra> rc;
    if (candidate) rc = build_subring(cfg.subring(*candidate));
    auto rep = intersect_subalgebras(ra, rb, n, rc ? &*rc : nullptr);
    Report r;
    r["command"] = "intersect";
    r["bound"] = n;
    r["a"] = {{"name", a}, {"ring", ra.describe()}, {"dims", ra.dims(n)}};
    r["b"] = {{"name", b}, {"ring", rb.describe()}, {"dims", rb.dims(n)}};
    r["intersection_dims"] = rep.dims;
    if (rc) {
        r["candidate"] = {{"name", *candidate}, {"ring", rc->describe()}, {"dims", rep.candidate_dims}};
        r["equal"] = rep.equal;
        if (!rep.equal) return {kMismatch, mismatch(r, "candidate differs from the intersection", rep.first_mismatch)};
    }
    r["verdict"] = "ok";
    return {kOk, r};
}

Outcome cmd_appendix(const RunConfig& cfg, std::optional<int> bound) {
    int n = resolve_bound(bound, cfg.bounds.intersect);
    Report r;
    r["command"] = "appendix";
    r["bound"] = n;
    const SymbolRing sym = wtz_symbols();

    ModulePresentation w = w_tower();
    Report powers = Report::array();
    for (const auto& p : w_powers(5)) {
        auto e = w.express(sym.evaluate(p));
        powers.push_back({{"element", to_string(p, sym.ring)}, {"expression", e ? w.format(*e) : "outside"}});
    }
    r["w_tower"] = {{"base", "F2[d2, d3]"}, {"basis", w.basis_names()}, {"powers", powers}};

    Report rel = Report::array();
    for (const auto& c : wtz_relations()) rel.push_back({{"relation", c.description}, {"holds", c.holds}});
    r["relations"] = rel;

    ModulePresentation m = twelve_tower();
    std::vector<Polynomial> powers_ambient;
    for (const auto& p : w_powers(5)) powers_ambient.push_back(sym.evaluate(p));
    r["reduced_generators"] = reduce_generators(powers_ambient, m).retained_text;

    std::vector<Polynomial> u;
    for (const auto& p : triple_products(reduced_w_generators())) u.push_back(sym.evaluate(p));
    auto red = reduce_generators(u, m);
    r["module"] = {{"base", "F2[d2^2, d3, d4^2]"}, {"basis", m.basis_names()}};
    r["products"] = red.expressed_text;
    r["products_retained"] = red.retained_text;

    auto ideals = intersect_by_ideals(m, u, 4);
    r["hypothesis_ok"] = ideals.hypothesis_ok;
    if (!ideals.hypothesis_ok) return {kMismatch, mismatch(r, "generator mixes basis elements: " + ideals.witness, -1)};
    r["ideals"] = ideals.ideal_text;
    std::vector<std::string> gens;
    for (size_t t = 0; t < ideals.ideals.size(); ++t) {
        Polynomial basis = parse_polynomial(m.basis_names()[t], sym.ring);
        for (const auto& c : ideals.ideals[t]) gens.push_back(to_string(c * basis, sym.ring));
    }
    r["generators"] = gens;

    std::vector<Polynomial> base;
    for (const char* s : {"d2^2", "d3", "d4^2"}) base.push_back(sym.evaluate(parse_polynomial(s, sym.ring)));
    Subalgebra from_ideals(3, base, ideals.generators);
    Subalgebra a = build_subring(cfg.subring("image_ring")), b = build_subring(cfg.subring("dickson_d2_d3_d4"));
    auto rep = intersect_subalgebras(a, b, n, &from_ideals);
    r["intersection"] = {{"a", a.describe()}, {"b", b.describe()}, {"dims", rep.dims}, {"equal", rep.equal}};
    if (!rep.equal) return {kMismatch, mismatch(r, "ideal generators differ from the intersection", rep.first_mismatch)};
    r["verdict"] = "ok";
    return {kOk, r};
}

Outcome cmd_detect(const RunConfig& cfg, const std::string& sequence, std::optional<int> bound) {
    const DetectionSequence& seq = cfg.sequence(sequence);
    int n = resolve_bound(bound, cfg.bounds.detect);
    auto rep = verify_detection(seq, n);
    Report r;
    r["command"] = "detect";
    r["sequence"] = sequence;
    r["bound"] = n;
    if (seq.radical) r["radical"] = seq.radical->text;
    std::vector<std::string> mid, det;
    for (const auto& d : seq.middle) mid.push_back(d.text);
    for (const auto& d : seq.detectors) det.push_back(d.text);
    r["middle"] = mid;
    r["detectors"] = det;
    r["quotient"] = seq.quotient.text;
    r["middle_known"] = rep.middle_known;
    if (rep.middle_known) r["identity_holds"] = rep.identity_holds;
    r["series"] = to_string(rep.middle);
    r["expansion"] = rep.expansion;
    r["nonnegative"] = rep.nonnegative;
    if (!rep.identity_holds) return {kMismatch, mismatch(r, "identity fails", rep.first_mismatch)};
    if (!rep.nonnegative) return {kMismatch, mismatch(r, "negative coefficient", rep.first_negative)};
    r["verdict"] = "ok";
    return {kOk, r};
}

Outcome cmd_einfty(const RunConfig& cfg, const std::string& reading, std::optional<int> bound) {
    int n = resolve_bound(bound, cfg.bounds.einfty);
    std::vector<EinftyReading> readings;
    for (auto x : {EinftyReading::Symmetric, EinftyReading::Literal, EinftyReading::E4Removed})
        if (reading == "all" || reading == to_string(x)) readings.push_back(x);
    if (readings.empty())
        throw ConfigError("unknown reading '" + reading + "' (known: all, symmetric, literal, e4_removed)");
    Report r;
    r["command"] = "einfty";
    r["bound"] = n;
    Report out = Report::array();
    int first_bad = -1;
    for (auto x : readings) {
        auto rep = einfty_series_check(x, n);
        Report e;
        e["reading"] = to_string(x);
        e["series"] = to_string(einfty_series(x));
        e["einfty"] = rep.einfty;
        e["detected"] = rep.detected;
        e["agrees"] = rep.agrees();
        e["mismatches"] = rep.mismatches;
        Report claims = Report::array();
        for (const auto& c : rep.claims)
            claims.push_back({{"degree", c.degree},
                              {"stated", c.stated},
                              {"detected", c.computed},
                              {"einfty", rep.einfty[c.degree]},
                              {"flag", c.stated == c.computed ? "" : "stated value differs"}});
        e["claims"] = claims;
        if (!rep.agrees() && first_bad < 0) first_bad = rep.mismatches.front();
        out.push_back(e);
    }
    r["readings"] = out;
    if (first_bad >= 0) return {kMismatch, mismatch(r, "a reading disagrees with the detection series", first_bad)};
    r["verdict"] = "ok";
    return {kOk, r};
}

Outcome cmd_ringmap(std::optional<int> bound) {
    int n = resolve_bound(bound, 40);
    auto rep = image_subring_check(n);
    Report r;
    r["command"] = "ringmap";
    r["bound"] = n;
    r["sigma2_image"] = rep.sigma2_image;
    r["sigma2_solutions"] = rep.sigma2_solutions;
    const Ring target({"w", "t", "z"});
    Report rel = Report::array();
    for (const auto& v : rep.relations.relations) {
        Report e{{"relation", v.relation}, {"holds", v.holds}};
        if (!v.holds) e["residual"] = to_string(v.residual, target);
        rel.push_back(e);
    }
    r["relations"] = rel;
    r["image_equals_stated"] = rep.equals_stated;
    r["contains_w_d2sq_d3"] = rep.contains_w_d2sq_d3;
    r["shortfall_without_d3d4"] = rep.shortfall_without_d3d4;
    if (!rep.relations.all_hold()) return {kMismatch, mismatch(r, "a relation does not map to zero", -1)};
    if (!rep.equals_stated) return {kMismatch, mismatch(r, "generated ring differs from the stated one", -1)};
    r["verdict"] = "ok";
    return {kOk, r};
}

Outcome cmd_perm(const std::string& group, const std::string& sub, const std::string& arg) {
    auto g = parse_symmetric_name(group);
    if (!g) throw ConfigError("unknown permutation group '" + group + "' (use S<n> or A<n>)");
    Report r;
    r["command"] = "perm";
    r["group"] = group;
    r["subcommand"] = sub;
    auto gens_text = [](const PermGroup& h) {
        std::vector<std::string> out;
        for (const auto& p : h.generators()) out.push_back(p.to_string());
        return out;
    };
    Report classes = Report::array();
    if (sub == "maximal-ea2") {
        for (const auto& c : maximal_ea2_subgroups(g->n, g->alternating))
            classes.push_back({{"label", c.label},
                               {"rank", c.rank},
                               {"orbit_sizes", c.orbit_sizes},
                               {"letters", c.letters},
                               {"generators", gens_text(c.rep)}});
    } else if (sub == "cycle-type") {
        std::vector<int> type;
        try {
            type = parse_cycle_type(arg);
        } catch (const std::exception& e) {
            throw ConfigError("cycle type '" + arg + "': " + e.what());
        }
        r["cycle_type"] = arg;
        for (const auto& c : filter_by_cycle_type(g->n, g->alternating, type))
            classes.push_back({{"from_class", c.from_class},
                               {"rank", c.rank},
                               {"orbit_sizes", c.orbit_sizes},
                               {"generators", gens_text(c.rep)}});
    } else {
        throw ConfigError("unknown perm subcommand '" + sub + "' (known: maximal-ea2, cycle-type)");
    }
    r["classes"] = classes;
    r["verdict"] = "ok";
    return {kOk, r};
}

Outcome cmd_steenrod(const std::string& ks, const std::string& poly, const std::vector<std::string>& variables) {
    std::vector<int> seq;
    std::stringstream ss(ks);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            size_t used = 0;
            int k = std::stoi(part, &used);
            if (used != part.size() || k < 0) throw std::invalid_argument(part);
            seq.push_back(k);
        } catch (const std::exception&) {
            throw ConfigError("bad square index '" + part + "'");
        }
    }
    if (seq.empty()) throw ConfigError("no square index given");
    Ring ring = variables.empty() ? Ring({"w", "t", "z"}) : Ring(variables);
    Polynomial p;
    try {
        if (variables.empty()) {
            auto table = wtz_symbols().table();
            p = parse_polynomial(poly, ring, &table);
        } else {
            p = parse_polynomial(poly, ring);
        }
    } catch (const ParseError& e) {
        throw ConfigError(std::string("polynomial: ") + e.what());
    }
    std::string op;
    for (int k : seq) op += (op.empty() ? "" : " ") + std::string("Sq^") + std::to_string(k);
    Report r;
    r["command"] = "steenrod";
    r["operation"] = op;
    r["variables"] = ring.names;
    r["input"] = to_string(p, ring);
    r["result"] = to_string(sq_sequence(seq, p), ring);
    r["verdict"] = "ok";
    return {kOk, r};
}

Outcome cmd_suite(const RunConfig& cfg, const std::vector<int>& ids, bool timings) {
    auto all = criterion_ids();
    std::vector<int> run = ids.empty() ? all : ids;
    for (int id : run)
        if (std::find(all.begin(), all.end(), id) == all.end())
            throw ConfigError("unknown criterion " + std::to_string(id));
    Report r;
    r["command"] = "suite";
    Report out = Report::array();
    int passed = 0;
    for (int id : run) {
        auto c = run_criterion(id, cfg);
        passed += c.pass;
        Report e{{"id", c.id}, {"title", c.title}, {"pass", c.pass}, {"details", c.details}};
        if (timings) e["seconds"] = c.seconds;
        out.push_back(e);
    }
    r["criteria"] = out;
    r["passed"] = passed;
    r["total"] = run.size();
    r["verdict"] = passed == int(run.size()) ? "ok" : "mismatch";
    if (passed != int(run.size())) {
        std::string failed;
        for (const auto& c : out)
            if (!c["pass"].get<bool>()) failed += (failed.empty() ? "" : ", ") + std::to_string(c["id"].get<int>());
        r["failure"] = "criteria failing: " + failed;
    }
    return {exit_of(r), r};
}

}  // namespace invar::app
