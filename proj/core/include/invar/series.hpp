#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "invar/gf2.hpp"
#include "invar/invariant.hpp"
#include "invar/subring.hpp"

namespace invar {

// numerator(t) / prod (1 - t^d) over the denominator multiset, integer coefficients.
class PoincareSeries {
public:
    PoincareSeries() = default;
    PoincareSeries(std::vector<int64_t> numerator, std::vector<int> denominator);

    // sum t^s over numerator_degrees divided by prod (1 - t^d).
    static PoincareSeries free_module(const std::vector<int>& gen_degrees, const std::vector<int>& numerator_degrees);
    static PoincareSeries zero() { return {}; }

    const std::vector<int64_t>& numerator() const { return num_; }
    const std::vector<int>& denominator() const { return den_; }  // sorted

    std::vector<int64_t> expand(int bound) const;  // coefficients of t^0..t^bound
    bool is_zero() const { return num_.empty(); }

    PoincareSeries operator+(const PoincareSeries& o) const;
    PoincareSeries operator-(const PoincareSeries& o) const;
    PoincareSeries operator*(int64_t k) const;
    PoincareSeries shifted(int k) const;  // t^k * this

    friend bool operator==(const PoincareSeries& a, const PoincareSeries& b);
    friend bool operator!=(const PoincareSeries& a, const PoincareSeries& b) { return !(a == b); }

private:
    // Rewrites over a larger denominator multiset.
    std::vector<int64_t> numerator_over(const std::vector<int>& den) const;
    void trim();

    std::vector<int64_t> num_;
    std::vector<int> den_;
};

// "(1 + t^8 + t^9) / ((1 - t^4)(1 - t^6))"
std::string to_string(const PoincareSeries& s);

// Graded ring with relations; generator weights are their degrees. Relations are chains
// "a = b = c" read as consecutive equalities; "a = 0" and bare "a" are allowed.
struct PresentedRing {
    std::vector<std::string> names;
    std::vector<int> degrees;
    std::vector<std::string> relations;
    Ring ring() const { return Ring(names, degrees); }  // throws past the variable limit
};

struct RingDescriptor {
    enum class Kind { Free, Presented };
    std::string name;
    Kind kind = Kind::Free;
    std::string text;                     // the ring as written, e.g. "F2[d4, d8](u3, u7, u9)"
    std::vector<int> gen_degrees;         // free form
    std::vector<int> module_degrees;      // free form
    std::optional<PresentedRing> presented;
    std::optional<PoincareSeries> annotation;  // required to take the series of a presented ring
};

RingDescriptor free_descriptor(std::string name, std::string text, std::vector<int> gen_degrees,
                               std::vector<int> module_degrees);
RingDescriptor descriptor_of(const HironakaDecomposition& dec, std::string name);
// Throws std::invalid_argument for a presented ring without an annotation.
PoincareSeries series_of(const RingDescriptor& r);

// Named descriptors: "L3_2_invariants", "radical_2A8", "double_image_2A8", "M_H", "F2[h4,h8]",
// "F2[h8,h12]", "image_2S8", "E2_extra_2S8", "detector_2A10", "A7_invariants",
// "detector_Ly", "d4sq_d6sq", "H_S8", "H_A8".
std::optional<RingDescriptor> named_descriptor(const std::string& name);
std::vector<std::string> descriptor_names();

struct DetectionSequence {
    std::string name;
    std::optional<RingDescriptor> radical;
    std::vector<RingDescriptor> middle;  // summands of the middle term when it is known independently
    std::vector<RingDescriptor> detectors;
    RingDescriptor quotient;
};

struct DetectionReport {
    std::string name;
    int bound = 0;
    bool middle_known = false;
    bool identity_holds = true;    // only meaningful when the middle is known
    int first_mismatch = -1;
    bool nonnegative = true;
    int first_negative = -1;
    PoincareSeries middle;         // given or defined
    std::vector<int64_t> expansion;
    bool ok() const { return identity_holds && nonnegative; }
};

// P(middle) = P(radical) + sum P(detectors) - P(quotient), checked or used as a definition.
DetectionReport verify_detection(const DetectionSequence& seq, int bound = 60);

// "2A8", "2S8", "2A10", "Ly".
std::optional<DetectionSequence> named_sequence(const std::string& name);
std::vector<std::string> sequence_names();

// The E-infinity page of the central extension for 2A8 as free summands in total degree.
// The symmetric reading has F2[e6, e7](1, e, e^2, e^3 e7) e7; the literal one keeps e6 there.
// The e4_removed reading is the symmetric one without e^4 times the unit, which d^5 sends to x5.
enum class EinftyReading { Symmetric, Literal, E4Removed };
std::string to_string(EinftyReading r);
PoincareSeries einfty_series(EinftyReading reading);

struct EinftyReport {
    int bound = 0;
    std::vector<int64_t> einfty;    // expansion of the E-infinity series for the chosen reading
    std::vector<int64_t> detected;  // expansion of P(H*(2A8)) from the detection sequence
    std::vector<int> mismatches;    // degrees where they differ
    // Dimensions asserted for low degrees versus the computed ones.
    struct Claim {
        int degree;
        int64_t stated, computed;
    };
    std::vector<Claim> claims;
    bool agrees() const { return mismatches.empty(); }
};
EinftyReport einfty_series_check(EinftyReading reading, int bound = 40);

struct RelationVerdict {
    std::string relation;
    bool holds = false;
    Polynomial residual;  // image of lhs - rhs for the first failing link
};

struct RingMapReport {
    std::vector<RelationVerdict> relations;
    bool all_hold() const;
};

// Substitutes the images (over symbols, evaluated into the target) into every relation.
// Throws ParseError for a relation or image that does not parse; std::invalid_argument for a
// generator without an image.
RingMapReport verify_ring_map(const PresentedRing& source, const std::map<std::string, Polynomial>& images);

// Every image of gen in the degree-deg slice of an nvars-variable ring that makes relation
// vanish, with the other generators fixed by images. The slice is searched exhaustively.
std::vector<Polynomial> solve_image(const PresentedRing& source, std::map<std::string, Polynomial> images,
                                    const std::string& gen, const std::string& relation, int nvars);

// Restriction images of the H*(S8) generators in F2[w, t, z], without sigma2.
std::map<std::string, Polynomial> s8_restriction_images();

struct ImageSubringReport {
    int bound = 0;
    std::string sigma2_image;              // the solved image, "w^2"
    size_t sigma2_solutions = 0;
    RingMapReport relations;
    bool equals_stated = false;            // generated ring = the stated image ring through bound
    bool contains_w_d2sq_d3 = false;       // F2[w, d2^2](1, d3) lies inside
    int shortfall_without_d3d4 = -1;       // first degree it falls short when d3*d4 is left out
};
ImageSubringReport image_subring_check(int bound = 40);

// F2[d4^2, d6^2, d7](1, d4d7, d6d7, d4d6d7) versus F2[d4^2, d6^2] + t^7 / ((1-t^4)(1-t^6)(1-t^7)).
bool alternate_decomposition_holds();

// Product of primary degrees over the group order, or nullopt if it does not divide.
std::optional<uint64_t> secondary_count(const std::vector<int>& primary_degrees, uint64_t group_order);

// Whether dims agrees with the expansion of s through dims.size() - 1.
bool series_matches(const PoincareSeries& s, const std::vector<size_t>& dims);

}  // namespace invar
