#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "invar_app/cache.hpp"
#include "invar_app/config.hpp"

namespace invar::app {

using Report = nlohmann::ordered_json;

enum ExitCode { kOk = 0, kMismatch = 1, kConfigError = 2, kBudgetExceeded = 3 };

struct Outcome {
    int exit_code = kOk;
    Report report;
};

// Dimension table, primary check, secondaries, freeness and Poincare series. Uses the group's
// configured primaries unless others are given. A cache, when present, stores the whole report.
Outcome cmd_invariants(const RunConfig& cfg, const std::string& group, std::optional<int> degrees,
                       const std::vector<std::string>& primaries = {}, const Cache* cache = nullptr);

// Per-degree intersection of two configured rings, optionally against a candidate ring.
Outcome cmd_intersect(const RunConfig& cfg, const std::string& a, const std::string& b, std::optional<int> bound,
                      const std::optional<std::string>& candidate = std::nullopt);

// Powers of w in the w tower, the reduced generators, the 24 products in the twelve-element
// basis, the ideal intersection and its per-degree check.
Outcome cmd_appendix(const RunConfig& cfg, std::optional<int> bound = std::nullopt);

Outcome cmd_detect(const RunConfig& cfg, const std::string& sequence, std::optional<int> bound);

// E-infinity readings against the detection series; reading is "all" or one reading name.
Outcome cmd_einfty(const RunConfig& cfg, const std::string& reading, std::optional<int> bound);

// Relations of the S8 presentation under the restriction images, with sigma2 solved for.
Outcome cmd_ringmap(std::optional<int> bound);

// sub is "maximal-ea2" or "cycle-type" (arg is the type, e.g. "2^4").
Outcome cmd_perm(const std::string& group, const std::string& sub, const std::string& arg = {});

// ks is "1" or a comma list applied right to left, e.g. "2,1" for Sq^2 Sq^1. The ring defaults
// to F2[w, t, z] with the d2, d3, d4, d6, d7 symbols available.
Outcome cmd_steenrod(const std::string& ks, const std::string& poly, const std::vector<std::string>& variables = {});

// Runs acceptance criteria (all when ids is empty).
Outcome cmd_suite(const RunConfig& cfg, const std::vector<int>& ids, bool timings);

// Human-readable layout of a report.
std::string render_text(const Report& r);

}  // namespace invar::app
