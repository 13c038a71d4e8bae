#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tfcl/annotate.hpp"
#include "tfcl/corpus.hpp"

namespace tfcl {

/// Objects x (fuzzy topic attributes + binary time attributes) membership
/// table with a confidence threshold.
///
/// Attribute indices are 0..fuzzy_attributes.size()-1 for topics (sorted
/// lexicographically) followed by one index per time attribute (chronological
/// peak order). A fuzzy relation counts in derivations when its membership
/// reaches the threshold; a time relation is binary via object_peak.
struct TimedFuzzyContext {
    std::vector<std::string> objects;  // record ids, stream order
    std::vector<std::int64_t> object_timestamps;
    std::vector<std::string> object_texts;
    std::vector<std::string> fuzzy_attributes;
    std::vector<int> time_attributes;  // chronological peak ids
    std::vector<int> object_peak;      // index into time_attributes, -1 = none
    std::vector<double> memberships;   // row-major objects x fuzzy, 0 = absent
    double threshold = 0.6;

    std::size_t object_count() const { return objects.size(); }
    std::size_t fuzzy_count() const { return fuzzy_attributes.size(); }
    std::size_t attribute_count() const { return fuzzy_attributes.size() + time_attributes.size(); }
    bool is_time_attribute(std::size_t attr) const { return attr >= fuzzy_count(); }

    double fuzzy_membership(std::size_t obj, std::size_t fuzzy_attr) const {
        return memberships[obj * fuzzy_count() + fuzzy_attr];
    }
    /// Raw membership of any attribute: fuzzy value, or 0/1 for time attributes.
    double membership_of(std::size_t obj, std::size_t attr) const {
        if (is_time_attribute(attr)) {
            return object_peak[obj] == static_cast<int>(attr - fuzzy_count()) ? 1.0 : 0.0;
        }
        return fuzzy_membership(obj, attr);
    }
    /// Crisp incidence at the threshold; time relations are always crisp.
    bool related(std::size_t obj, std::size_t attr) const {
        if (is_time_attribute(attr)) return object_peak[obj] == static_cast<int>(attr - fuzzy_count());
        return fuzzy_membership(obj, attr) >= threshold;
    }
    std::string attribute_name(std::size_t attr) const {
        if (is_time_attribute(attr)) {
            return "peak_" + std::to_string(time_attributes[attr - fuzzy_count()]);
        }
        return fuzzy_attributes[attr];
    }
    /// Peak id carried by a time attribute index.
    int attribute_peak_id(std::size_t attr) const { return time_attributes[attr - fuzzy_count()]; }
};

/// Closed (extent, intent) pair. Extent objects carry the Def.-style
/// membership: min over the intent's fuzzy attributes, 1 if there are none.
struct FuzzyConcept {
    int id = 0;                                      // canonical lectic position
    std::vector<std::pair<int, double>> extent;      // (object index, membership), ascending
    std::vector<int> intent;                         // attribute indices, ascending

    friend bool operator==(const FuzzyConcept&, const FuzzyConcept&) = default;
};

struct TimedLattice {
    std::vector<FuzzyConcept> concepts;               // lectic order, ids = positions
    std::vector<std::pair<int, int>> hasse_edges;     // (subconcept id, superconcept id) covers
    std::vector<std::pair<int, int>> temporal_edges;  // (earlier id, later id)
};

inline constexpr std::size_t kDefaultConceptCap = 100000;

/// Assemble the timed context from annotated records and the peak
/// assignment. Records outside every peak window are excluded; topics with no
/// membership >= threshold anywhere are dropped. Empty object sets are an
/// error.
TimedFuzzyContext build_context(const Stream& stream,
                                const std::vector<std::vector<TopicAnnotation>>& annotations,
                                const std::map<std::string, int>& peak_assignment,
                                double threshold);

/// A* / B* derivations under the threshold. Inputs and outputs are sorted
/// index vectors.
std::vector<int> derive_intent(const std::vector<int>& object_set, const TimedFuzzyContext& ctx);
std::vector<int> derive_extent(const std::vector<int>& attribute_set, const TimedFuzzyContext& ctx);

/// Fuzzy representation of one object: attribute name -> membership over all
/// related attributes (time attribute at 1). Unknown ids are an error.
std::map<std::string, double> object_representation(const TimedFuzzyContext& ctx,
                                                    const std::string& object_id);

/// Enumerate every concept of the threshold-crisped context in lectic intent
/// order and attach Hasse cover edges. Throws CapError past concept_cap.
TimedLattice enumerate_concepts(const TimedFuzzyContext& ctx,
                                std::size_t concept_cap = kDefaultConceptCap);

/// Independent oracle: closes every attribute subset directly. Bounded to
/// 15x15 contexts. Returns (extent, intent) pairs sorted by intent.
std::vector<std::pair<std::vector<int>, std::vector<int>>> brute_force_concepts(
    const TimedFuzzyContext& ctx);

/// Extent-inclusion order (equivalently reverse intent inclusion).
bool is_subconcept(const FuzzyConcept& c1, const FuzzyConcept& c2);

/// Fuzzy Jaccard of the two extents: sigma-count of the pointwise min over
/// the pointwise max. 0/0 is 0.
double concept_similarity(const FuzzyConcept& c1, const FuzzyConcept& c2);

/// Directed edges tracing attribute evolution: c1 -> c2 when both carry
/// exactly one time attribute, the peaks are consecutive among peaks present
/// in the lattice, c1's peak is earlier, and the non-time intents share at
/// least one attribute.
std::vector<std::pair<int, int>> temporal_edges(const TimedLattice& lattice,
                                                const TimedFuzzyContext& ctx);

}  // namespace tfcl
