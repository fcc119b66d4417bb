#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "invar/catalog.hpp"
#include "invar/rings.hpp"
#include "invar/series.hpp"
#include "invar_app/cache.hpp"
#include "invar_app/commands.hpp"
#include "invar_app/config.hpp"
#include "invar_app/suite.hpp"

using namespace invar;
using namespace invar::app;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("invar_test_" + std::to_string(std::hash<std::string>{}(std::to_string(rand()))));
        std::filesystem::remove_all(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

std::string read(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace

TEST_CASE("bundled groups agree with the catalog") {
    RunConfig cfg = default_config();
    for (const auto& name : matrix_group_names()) {
        CAPTURE(name);
        const auto& g = cfg.group(name);
        auto ref = *named_matrix_group(name);
        CHECK(g.ring.names == ref.ring.names);
        CHECK(g.gens == ref.gens);
        CHECK(g.primaries == *default_primaries(name));
    }
    CHECK(cfg.groups.size() == matrix_group_names().size());
}

TEST_CASE("bundled rings, descriptors and sequences agree with the library") {
    RunConfig cfg = default_config();
    for (const auto& s : named_subrings()) {
        CAPTURE(s.name);
        const auto& spec = cfg.subring(s.name);
        CHECK(spec.gens == s.gens);
        CHECK(spec.module == s.module_gens);
    }
    for (const auto& name : sequence_names()) {
        CAPTURE(name);
        auto a = verify_detection(cfg.sequence(name), 60), b = verify_detection(*named_sequence(name), 60);
        CHECK(a.middle == b.middle);
        CHECK(a.expansion == b.expansion);
    }
    // Every free descriptor has a non-negative expansion; presented ones need their annotation.
    for (const auto& [name, d] : cfg.descriptors) {
        CAPTURE(name);
        if (d.kind == RingDescriptor::Kind::Presented && !d.annotation) continue;
        for (auto c : series_of(d).expand(60)) CHECK(c >= 0);
    }
}

TEST_CASE("config errors") {
    RunConfig base = default_config();
    CHECK_THROWS_AS(load_config("{", base), ConfigError);
    CHECK_THROWS_AS(load_config("[]", base), ConfigError);
    CHECK_THROWS_AS(load_config(R"({"bounds": {"detect": 0}})", base), ConfigError);
    CHECK_THROWS_AS(load_config(R"({"groups": {"g": {"variables": ["x", "y"], "generators": [[[1, 1], [1, 1]]]}}})", base),
                    ConfigError);
    CHECK_THROWS_AS(load_config(R"({"groups": {"g": {"variables": ["x"], "generators": [[[1]]], "primaries": ["y"]}}})",
                                base),
                    ConfigError);
    CHECK_THROWS_AS(load_config(R"({"sequences": {"s": {"detectors": ["nope"], "quotient": "F2[h4,h8]"}}})", base),
                    ConfigError);
    CHECK_THROWS_AS(base.group("nope"), ConfigError);
    CHECK_THROWS_AS(base.sequence("nope"), ConfigError);
}

TEST_CASE("config overlay replaces and adds entries") {
    RunConfig base = default_config();
    RunConfig c = load_config(R"({
        "bounds": {"invariants": 12},
        "groups": {"swap": {"variables": ["a", "b"], "images": [[2, 1]], "primaries": ["a+b", "a*b"]}},
        "descriptors": {"poly1": {"generator_degrees": [1]}},
        "sequences": {"toy": {"detectors": ["poly1"], "quotient": "poly1"}}
    })", base);
    CHECK(c.bounds.invariants == 12);
    CHECK(c.bounds.intersect == base.bounds.intersect);
    CHECK(c.groups.size() == base.groups.size() + 1);
    auto out = cmd_invariants(c, "swap", std::nullopt);
    CHECK(out.exit_code == kOk);
    CHECK(out.report["order"] == 2);
    CHECK(out.report["secondary_degrees"] == Report::array({0}));
    CHECK(out.report["ring"] == "F2[a+b, a*b]");
    auto det = cmd_detect(c, "toy", 10);
    CHECK(det.exit_code == kOk);
    for (auto x : det.report["expansion"]) CHECK(x == 0);
}

TEST_CASE("cache round trip, version stamp and corruption") {
    TempDir tmp;
    Cache cache(tmp.path, "1.0");
    CHECK_FALSE(cache.get("k"));
    cache.put("k", "payload bytes");
    REQUIRE(cache.get("k"));
    CHECK(*cache.get("k") == "payload bytes");
    CHECK_FALSE(cache.get("other"));

    Cache bumped(tmp.path, "1.1");
    CHECK_FALSE(bumped.get("k"));
    CHECK(cache.get("k"));  // the old version's entry is left alone

    // A flipped payload byte fails the digest; the entry is removed.
    auto path = cache.path_for("k");
    std::string text = read(path);
    auto at = text.find("payload bytes");
    REQUIRE(at != std::string::npos);
    text[at] = 'P';
    std::ofstream(path, std::ios::binary) << text;
    CHECK_FALSE(cache.get("k"));
    CHECK_FALSE(std::filesystem::exists(path));

    std::ofstream(cache.path_for("k"), std::ios::binary) << "not json";
    CHECK_FALSE(cache.get("k"));

    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("invariants reports are deterministic and cache hits are byte-identical") {
    RunConfig cfg = default_config();
    TempDir tmp;
    Cache cache(tmp.path);
    auto cold = cmd_invariants(cfg, "L3_2_on_2^4", 21, {}, &cache);
    CHECK(cold.exit_code == kOk);
    CHECK(cold.report["secondary_degrees"] == Report::array({0, 8, 9, 10, 11, 12, 13, 21}));
    auto warm = cmd_invariants(cfg, "L3_2_on_2^4", 21, {}, &cache);
    auto again = cmd_invariants(cfg, "L3_2_on_2^4", 21);
    CHECK(warm.report.dump() == cold.report.dump());
    CHECK(again.report.dump() == cold.report.dump());
    CHECK(render_text(warm.report) == render_text(again.report));
    size_t entries = 0;
    for (const auto& e : std::filesystem::directory_iterator(tmp.path)) entries += e.path().extension() == ".json";
    CHECK(entries == 1);
}

TEST_CASE("invariants command cases") {
    RunConfig cfg = default_config();
    auto triv = cmd_invariants(cfg, "trivial_1var", 3);
    CHECK(triv.exit_code == kOk);
    CHECK(triv.report["ring"] == "F2[x]");
    CHECK(triv.report["dims"] == Report::array({1, 1, 1, 1}));

    auto d8 = cmd_invariants(cfg, "D8_lemma5_3", 8);
    CHECK(d8.exit_code == kOk);
    CHECK(d8.report["secondary_degrees"] == Report::array({0}));
    CHECK(d8.report["primaries"][1]["polynomial"] == "w*t+t^2");

    CHECK_THROWS_AS(cmd_invariants(cfg, "L3_2_on_2^4", 12), BudgetExceeded);
    CHECK_THROWS_AS(cmd_invariants(cfg, "L3_2_on_2^4", 0), ConfigError);
    CHECK_THROWS_AS(cmd_invariants(cfg, "L3_2_on_2^4", 10, {"x^2+"}), ConfigError);
    CHECK_THROWS_AS(cmd_invariants(cfg, "trivial_1var", 3, {"x^2+x"}), ConfigError);

    // A repeated primary is caught by the independence check.
    auto dup = cmd_invariants(cfg, "D8_lemma5_3", 8, {"w", "w^2", "w*t+t^2"});
    CHECK(dup.exit_code == kMismatch);
    CHECK(dup.report["first_failing_degree"] == 2);
    // A non-invariant primary is reported, not thrown.
    auto bad = cmd_invariants(cfg, "D8_lemma5_3", 8, {"z", "w", "t"});
    CHECK(bad.exit_code == kMismatch);
}

TEST_CASE("appendix, intersect, detect, einfty and ringmap commands") {
    RunConfig cfg = default_config();
    auto app = cmd_appendix(cfg);
    CHECK(app.exit_code == kOk);
    CHECK(app.report["ideals"] == Report::array({"(1)", "(d3)", "(d3)", "(d3)"}));
    CHECK(app.report["generators"] == Report::array({"1", "d2*d3", "d3*d4", "d2*d3*d4"}));
    CHECK(app.report["products"].size() == 24);

    auto good = cmd_intersect(cfg, "appendix_intersection", "dickson_gl3", 30, std::string("gl3_intersection"));
    CHECK(good.exit_code == kOk);
    auto wrong = cmd_intersect(cfg, "appendix_intersection", "dickson_gl3", 30, std::string("d4_d6"));
    CHECK(wrong.exit_code == kMismatch);
    CHECK(wrong.report["first_failing_degree"] == 4);
    CHECK_THROWS_AS(cmd_intersect(cfg, "nope", "dickson_gl3", 10), ConfigError);

    for (const auto& name : sequence_names()) CHECK(cmd_detect(cfg, name, 60).exit_code == kOk);
    CHECK_THROWS_AS(cmd_detect(cfg, "2A8", -1), ConfigError);

    CHECK(cmd_einfty(cfg, "e4_removed", 40).exit_code == kOk);
    auto sym = cmd_einfty(cfg, "symmetric", 40);
    CHECK(sym.exit_code == kMismatch);
    CHECK(sym.report["first_failing_degree"] == 4);
    CHECK_THROWS_AS(cmd_einfty(cfg, "sideways", 40), ConfigError);

    auto rm = cmd_ringmap(20);
    CHECK(rm.exit_code == kOk);
    CHECK(rm.report["sigma2_image"] == "w^2");
}

TEST_CASE("perm and steenrod commands") {
    auto s8 = cmd_perm("S8", "maximal-ea2");
    REQUIRE(s8.report["classes"].size() == 4);
    CHECK(s8.report["classes"][2]["label"] == "V2xV1^2");
    auto typed = cmd_perm("A10", "cycle-type", "2^4");
    CHECK(typed.report["classes"].size() == 2);
    CHECK_THROWS_AS(cmd_perm("Q8", "maximal-ea2"), ConfigError);
    CHECK_THROWS_AS(cmd_perm("S8", "sylow"), ConfigError);

    CHECK(cmd_steenrod("1", "w^2+t*w+t^2").report["result"] == "w^2*t+w*t^2");
    // Sq^1 d2 = d3 and Sq^2 Sq^1 of a degree-2 class is its square's Sq^1 part.
    auto d3 = cmd_steenrod("1", "d2");
    CHECK(d3.report["result"] == cmd_steenrod("0", "d3").report["result"]);
    CHECK(cmd_steenrod("2", "x*y", {"x", "y"}).report["result"] == "x^2*y^2");
    CHECK(cmd_steenrod("3", "x*y", {"x", "y"}).report["result"] == "0");
    CHECK_THROWS_AS(cmd_steenrod("a", "w"), ConfigError);
    CHECK_THROWS_AS(cmd_steenrod("1", "q"), ConfigError);
}

TEST_CASE("suite selection and text rendering") {
    RunConfig cfg = default_config();
    auto out = cmd_suite(cfg, {4, 12}, false);
    CHECK(out.exit_code == kOk);
    CHECK(out.report["passed"] == 2);
    std::string text = render_text(out.report);
    CHECK(text.find("PASS  4  ") == 0);
    CHECK(text.find("2 of 2 criteria pass") != std::string::npos);
    CHECK_THROWS_AS(cmd_suite(cfg, {14}, false), ConfigError);
    CHECK(criterion_ids().size() == 13);
    auto bad = run_criterion(99, cfg);
    CHECK_FALSE(bad.pass);
}
