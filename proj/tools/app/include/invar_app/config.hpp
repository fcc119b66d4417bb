#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "invar/gf2.hpp"
#include "invar/group.hpp"
#include "invar/series.hpp"

namespace invar::app {

// Unknown names, malformed files, invalid matrices or polynomials.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GroupSpec {
    std::string name;
    Ring ring;
    std::vector<MatF2> gens;
    std::vector<Polynomial> primaries;  // may be empty
};

// A subalgebra of F2[w, t, z] written over the w, t, z, d2, d3, d4, d6, d7 symbols.
struct SubringSpec {
    std::string name;
    std::vector<std::string> gens, module;
};

struct Bounds {
    int invariants = 30;
    int intersect = 40;
    int detect = 60;
    int einfty = 40;
};

struct RunConfig {
    Bounds bounds;
    std::map<std::string, GroupSpec> groups;
    std::map<std::string, SubringSpec> subrings;
    std::map<std::string, RingDescriptor> descriptors;
    std::map<std::string, DetectionSequence> sequences;

    // Each throws ConfigError naming the missing entry.
    const GroupSpec& group(const std::string& name) const;
    const SubringSpec& subring(const std::string& name) const;
    const RingDescriptor& descriptor(const std::string& name) const;
    const DetectionSequence& sequence(const std::string& name) const;
};

// The JSON text compiled into the tool.
const std::string& default_config_text();

// Parses a JSON config. Entries replace those of base with the same name; sections that are
// absent keep the base entries. Throws ConfigError.
RunConfig load_config(const std::string& text, const RunConfig& base = {});
RunConfig default_config();
RunConfig load_config_file(const std::string& path, const RunConfig& base);

}  // namespace invar::app
