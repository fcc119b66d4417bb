#include "invar_app/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace invar::app {

namespace {

using nlohmann::json;

template <class Map>
const typename Map::mapped_type& lookup(const Map& m, const std::string& name, const char* what) {
    auto it = m.find(name);
    if (it == m.end()) {
        std::string known;
        for (const auto& [k, v] : m) known += (known.empty() ? "" : ", ") + k;
        throw ConfigError(std::string("unknown ") + what + " '" + name + "' (known: " + known + ")");
    }
    return it->second;
}

const json& field(const json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) throw ConfigError(where + ": missing field '" + key + "'");
    return j.at(key);
}

int positive(const json& j, const std::string& where) {
    if (!j.is_number_integer() || j.get<int>() <= 0) throw ConfigError(where + ": expected a positive integer");
    return j.get<int>();
}

std::vector<int> int_list(const json& j, const std::string& where) {
    if (!j.is_array()) throw ConfigError(where + ": expected an array of integers");
    std::vector<int> out;
    for (const auto& x : j) {
        if (!x.is_number_integer() || x.get<int>() < 0) throw ConfigError(where + ": expected non-negative integers");
        out.push_back(x.get<int>());
    }
    return out;
}

std::vector<std::string> string_list(const json& j, const std::string& where) {
    if (!j.is_array()) throw ConfigError(where + ": expected an array of strings");
    std::vector<std::string> out;
    for (const auto& x : j) {
        if (!x.is_string()) throw ConfigError(where + ": expected strings");
        out.push_back(x.get<std::string>());
    }
    return out;
}

MatF2 matrix(const json& j, int n, const std::string& where) {
    if (!j.is_array() || int(j.size()) != n) throw ConfigError(where + ": expected " + std::to_string(n) + " rows");
    std::vector<std::vector<int>> rows;
    for (const auto& r : j) {
        auto row = int_list(r, where);
        if (int(row.size()) != n) throw ConfigError(where + ": expected rows of length " + std::to_string(n));
        for (int x : row)
            if (x > 1) throw ConfigError(where + ": entries must be 0 or 1");
        rows.push_back(row);
    }
    MatF2 m = MatF2::from_rows(rows);
    if (!m.invertible()) throw ConfigError(where + ": matrix is singular");
    return m;
}

GroupSpec parse_group(const std::string& name, const json& j) {
    std::string where = "group '" + name + "'";
    GroupSpec g;
    g.name = name;
    auto vars = string_list(field(j, "variables", where), where + ".variables");
    if (vars.empty() || vars.size() > 8) throw ConfigError(where + ": between 1 and 8 variables are supported");
    g.ring = Ring(vars);
    int n = int(vars.size());
    if (j.contains("generators")) {
        for (const auto& m : j.at("generators")) g.gens.push_back(matrix(m, n, where + ".generators"));
    } else if (j.contains("images")) {
        // images[i] is the bitmask of the linear form x_i maps to.
        for (const auto& m : j.at("images")) {
            auto im = int_list(m, where + ".images");
            if (int(im.size()) != n) throw ConfigError(where + ".images: expected one mask per variable");
            std::vector<uint8_t> masks;
            for (int x : im) {
                if (x >= (1 << n)) throw ConfigError(where + ".images: mask out of range");
                masks.push_back(uint8_t(x));
            }
            MatF2 mat = MatF2::from_images(n, masks);
            if (!mat.invertible()) throw ConfigError(where + ".images: matrix is singular");
            g.gens.push_back(mat);
        }
    } else {
        throw ConfigError(where + ": needs 'generators' or 'images'");
    }
    if (g.gens.empty()) throw ConfigError(where + ": no generators");
    if (j.contains("primaries")) {
        for (const auto& text : string_list(j.at("primaries"), where + ".primaries")) {
            try {
                g.primaries.push_back(parse_polynomial(text, g.ring));
            } catch (const ParseError& e) {
                throw ConfigError(where + ".primaries: " + e.what());
            }
        }
    }
    return g;
}

RingDescriptor parse_descriptor(const std::string& name, const json& j) {
    std::string where = "descriptor '" + name + "'";
    auto gens = int_list(field(j, "generator_degrees", where), where + ".generator_degrees");
    for (int d : gens)
        if (d <= 0) throw ConfigError(where + ": generator degrees must be positive");
    std::vector<int> mods{0};
    if (j.contains("module_degrees")) mods = int_list(j.at("module_degrees"), where + ".module_degrees");
    std::string text = j.contains("text") ? j.at("text").get<std::string>() : name;
    return free_descriptor(name, text, gens, mods);
}

}  // namespace

const GroupSpec& RunConfig::group(const std::string& name) const { return lookup(groups, name, "group"); }
const SubringSpec& RunConfig::subring(const std::string& name) const { return lookup(subrings, name, "ring"); }
const RingDescriptor& RunConfig::descriptor(const std::string& name) const {
    return lookup(descriptors, name, "descriptor");
}
const DetectionSequence& RunConfig::sequence(const std::string& name) const {
    return lookup(sequences, name, "sequence");
}

RunConfig load_config(const std::string& text, const RunConfig& base) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    RunConfig c = base;
    try {
        if (j.contains("bounds")) {
            const auto& b = j.at("bounds");
            if (b.contains("invariants")) c.bounds.invariants = positive(b.at("invariants"), "bounds.invariants");
            if (b.contains("intersect")) c.bounds.intersect = positive(b.at("intersect"), "bounds.intersect");
            if (b.contains("detect")) c.bounds.detect = positive(b.at("detect"), "bounds.detect");
            if (b.contains("einfty")) c.bounds.einfty = positive(b.at("einfty"), "bounds.einfty");
        }
        if (j.contains("groups"))
            for (const auto& [name, g] : j.at("groups").items()) c.groups[name] = parse_group(name, g);
        if (j.contains("subrings"))
            for (const auto& [name, s] : j.at("subrings").items()) {
                std::string where = "ring '" + name + "'";
                SubringSpec spec{name, string_list(field(s, "generators", where), where + ".generators"), {}};
                if (s.contains("module")) spec.module = string_list(s.at("module"), where + ".module");
                c.subrings[name] = spec;
            }
        if (j.contains("descriptors"))
            for (const auto& [name, d] : j.at("descriptors").items()) c.descriptors[name] = parse_descriptor(name, d);
        if (j.contains("sequences"))
            for (const auto& [name, s] : j.at("sequences").items()) {
                std::string where = "sequence '" + name + "'";
                DetectionSequence seq;
                seq.name = name;
                if (s.contains("radical")) seq.radical = c.descriptor(s.at("radical").get<std::string>());
                if (s.contains("middle"))
                    for (const auto& m : string_list(s.at("middle"), where + ".middle"))
                        seq.middle.push_back(c.descriptor(m));
                for (const auto& d : string_list(field(s, "detectors", where), where + ".detectors"))
                    seq.detectors.push_back(c.descriptor(d));
                seq.quotient = c.descriptor(field(s, "quotient", where).get<std::string>());
                c.sequences[name] = seq;
            }
    } catch (const json::exception& e) {
        throw ConfigError(std::string("malformed config: ") + e.what());
    }
    return c;
}

RunConfig default_config() {
    RunConfig c = load_config(default_config_text());
    // Presented rings carry no degree data a config could express, so they come from the library.
    for (const auto& name : descriptor_names()) {
        auto d = named_descriptor(name);
        if (d && d->kind == RingDescriptor::Kind::Presented) c.descriptors.emplace(name, *d);
    }
    return c;
}

RunConfig load_config_file(const std::string& path, const RunConfig& base) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return load_config(ss.str(), base);
}

}  // namespace invar::app
