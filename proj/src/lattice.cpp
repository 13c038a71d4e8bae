#include "tfcl/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "tfcl/bitset.hpp"
#include "tfcl/errors.hpp"

namespace tfcl {

TimedFuzzyContext build_context(const Stream& stream,
                                const std::vector<std::vector<TopicAnnotation>>& annotations,
                                const std::map<std::string, int>& peak_assignment,
                                double threshold) {
    if (annotations.size() != stream.records.size()) {
        throw std::invalid_argument("build_context: one annotation list per record required");
    }
    if (threshold < 0.0 || threshold > 1.0) throw ConfigError("threshold must be in [0,1]");

    TimedFuzzyContext ctx;
    ctx.threshold = threshold;

    std::vector<std::size_t> kept;  // record indices inside some peak window
    std::set<int> peak_ids;
    for (std::size_t r = 0; r < stream.records.size(); ++r) {
        const auto it = peak_assignment.find(stream.records[r].id);
        if (it == peak_assignment.end()) continue;
        kept.push_back(r);
        peak_ids.insert(it->second);
    }
    if (kept.empty()) throw DataError("no records inside peak windows");

    // Topics need at least one membership >= threshold among kept records.
    std::set<std::string> topics;
    for (const std::size_t r : kept) {
        for (const auto& a : annotations[r]) {
            if (a.membership < 0.0 || a.membership > 1.0) {
                throw DataError("membership outside [0,1] for topic " + a.topic);
            }
            if (a.membership >= threshold) topics.insert(a.topic);
        }
    }
    ctx.fuzzy_attributes.assign(topics.begin(), topics.end());
    ctx.time_attributes.assign(peak_ids.begin(), peak_ids.end());
    for (const auto& topic : ctx.fuzzy_attributes) {
        for (const int peak : ctx.time_attributes) {
            if (topic == "peak_" + std::to_string(peak)) {
                throw DataError("topic id collides with a time attribute label: " + topic);
            }
        }
    }

    std::map<std::string, std::size_t> topic_index;
    for (std::size_t j = 0; j < ctx.fuzzy_attributes.size(); ++j) topic_index[ctx.fuzzy_attributes[j]] = j;
    std::map<int, int> peak_index;
    for (std::size_t j = 0; j < ctx.time_attributes.size(); ++j) peak_index[ctx.time_attributes[j]] = static_cast<int>(j);

    ctx.memberships.assign(kept.size() * ctx.fuzzy_attributes.size(), 0.0);
    for (std::size_t g = 0; g < kept.size(); ++g) {
        const std::size_t r = kept[g];
        const Record& rec = stream.records[r];
        ctx.objects.push_back(rec.id);
        ctx.object_timestamps.push_back(rec.timestamp);
        ctx.object_texts.push_back(rec.text);
        ctx.object_peak.push_back(peak_index.at(peak_assignment.at(rec.id)));
        for (const auto& a : annotations[r]) {
            const auto it = topic_index.find(a.topic);
            if (it != topic_index.end()) {
                ctx.memberships[g * ctx.fuzzy_attributes.size() + it->second] = a.membership;
            }
        }
    }
    return ctx;
}

std::vector<int> derive_intent(const std::vector<int>& object_set, const TimedFuzzyContext& ctx) {
    std::vector<int> intent;
    for (std::size_t a = 0; a < ctx.attribute_count(); ++a) {
        bool shared = true;
        for (const int g : object_set) {
            if (!ctx.related(static_cast<std::size_t>(g), a)) {
                shared = false;
                break;
            }
        }
        if (shared) intent.push_back(static_cast<int>(a));
    }
    return intent;
}

std::vector<int> derive_extent(const std::vector<int>& attribute_set, const TimedFuzzyContext& ctx) {
    std::vector<int> extent;
    for (std::size_t g = 0; g < ctx.object_count(); ++g) {
        bool has_all = true;
        for (const int a : attribute_set) {
            if (!ctx.related(g, static_cast<std::size_t>(a))) {
                has_all = false;
                break;
            }
        }
        if (has_all) extent.push_back(static_cast<int>(g));
    }
    return extent;
}

std::map<std::string, double> object_representation(const TimedFuzzyContext& ctx,
                                                    const std::string& object_id) {
    const auto it = std::find(ctx.objects.begin(), ctx.objects.end(), object_id);
    if (it == ctx.objects.end()) throw DataError("unknown object: " + object_id);
    const std::size_t g = static_cast<std::size_t>(it - ctx.objects.begin());
    std::map<std::string, double> repr;
    for (std::size_t j = 0; j < ctx.fuzzy_count(); ++j) {
        const double mu = ctx.fuzzy_membership(g, j);
        if (mu > 0.0) repr[ctx.fuzzy_attributes[j]] = mu;
    }
    if (ctx.object_peak[g] >= 0) {
        repr["peak_" + std::to_string(ctx.time_attributes[static_cast<std::size_t>(ctx.object_peak[g])])] = 1.0;
    }
    return repr;
}

namespace {

// Membership of an extent object per the concept definition: min over the
// intent's fuzzy attributes of the original fuzzy values, 1 if none.
double extent_membership(const TimedFuzzyContext& ctx, std::size_t obj,
                         const std::vector<int>& intent) {
    double mu = 1.0;
    bool any_fuzzy = false;
    for (const int a : intent) {
        if (!ctx.is_time_attribute(static_cast<std::size_t>(a))) {
            any_fuzzy = true;
            mu = std::min(mu, ctx.fuzzy_membership(obj, static_cast<std::size_t>(a)));
        }
    }
    return any_fuzzy ? mu : 1.0;
}

struct CrispContext {
    std::size_t objects;
    std::size_t attributes;
    std::vector<Bitset> attr_extent;  // per attribute: objects related to it

    explicit CrispContext(const TimedFuzzyContext& ctx)
        : objects(ctx.object_count()), attributes(ctx.attribute_count()) {
        attr_extent.assign(attributes, Bitset(objects));
        for (std::size_t a = 0; a < attributes; ++a) {
            for (std::size_t g = 0; g < objects; ++g) {
                if (ctx.related(g, a)) attr_extent[a].set(g);
            }
        }
    }

    Bitset extent_of(const Bitset& intent) const {
        Bitset extent(objects);
        extent.fill();
        intent.for_each([&](std::size_t a) { extent &= attr_extent[a]; });
        return extent;
    }

    Bitset intent_of(const Bitset& extent) const {
        Bitset intent(attributes);
        for (std::size_t a = 0; a < attributes; ++a) {
            if (extent.is_subset_of(attr_extent[a])) intent.set(a);
        }
        return intent;
    }
};

FuzzyConcept make_concept(const TimedFuzzyContext& ctx, int id, const Bitset& extent,
                          const Bitset& intent) {
    FuzzyConcept c;
    c.id = id;
    intent.for_each([&](std::size_t a) { c.intent.push_back(static_cast<int>(a)); });
    extent.for_each([&](std::size_t g) {
        c.extent.emplace_back(static_cast<int>(g), extent_membership(ctx, g, c.intent));
    });
    return c;
}

std::vector<std::pair<int, int>> hasse_edges(const std::vector<Bitset>& extents) {
    // Covers of the extent-inclusion order. Scanning candidates by ascending
    // extent size, a superset is a cover unless it contains an accepted one.
    const std::size_t n = extents.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const std::size_t ca = extents[a].count(), cb = extents[b].count();
        return ca != cb ? ca < cb : a < b;
    });
    std::vector<std::pair<int, int>> edges;
    std::vector<std::size_t> covers;
    for (std::size_t ia = 0; ia < n; ++ia) {
        const std::size_t a = order[ia];
        covers.clear();
        for (std::size_t ib = ia + 1; ib < n; ++ib) {
            const std::size_t b = order[ib];
            if (!extents[a].is_subset_of(extents[b])) continue;
            bool transitive = false;
            for (const std::size_t c : covers) {
                if (extents[c].is_subset_of(extents[b])) {
                    transitive = true;
                    break;
                }
            }
            if (!transitive) {
                covers.push_back(b);
                edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
            }
        }
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

}  // namespace

TimedLattice enumerate_concepts(const TimedFuzzyContext& ctx, std::size_t concept_cap) {
    const CrispContext crisp(ctx);
    const std::size_t m = crisp.attributes;

    TimedLattice lattice;
    std::vector<Bitset> extents;

    // Ganter's next-closure over intents, ascending lectic order.
    Bitset intent = crisp.intent_of([&] {
        Bitset all(crisp.objects);
        all.fill();
        return all;
    }());
    Bitset extent = crisp.extent_of(intent);
    for (;;) {
        if (lattice.concepts.size() >= concept_cap) {
            throw CapError("concept cap exceeded (" + std::to_string(concept_cap) + ")");
        }
        lattice.concepts.push_back(
            make_concept(ctx, static_cast<int>(lattice.concepts.size()), extent, intent));
        extents.push_back(extent);

        bool advanced = false;
        for (std::size_t step = m; step-- > 0;) {
            if (intent.test(step)) {
                intent.reset(step);
                continue;
            }
            Bitset candidate = intent;
            candidate.set(step);
            Bitset cand_extent = crisp.extent_of(candidate);
            Bitset closed = crisp.intent_of(cand_extent);
            if (closed.prefix_equal(intent, step)) {
                intent = closed;
                extent = cand_extent;
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
    }

    lattice.hasse_edges = hasse_edges(extents);
    return lattice;
}

std::vector<std::pair<std::vector<int>, std::vector<int>>> brute_force_concepts(
    const TimedFuzzyContext& ctx) {
    if (ctx.object_count() > 15 || ctx.attribute_count() > 15) {
        throw std::invalid_argument("brute_force_concepts: context larger than 15x15");
    }
    const int m = static_cast<int>(ctx.attribute_count());
    std::vector<std::pair<std::vector<int>, std::vector<int>>> concepts;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        std::vector<int> subset;
        for (int a = 0; a < m; ++a) {
            if (mask & (1u << a)) subset.push_back(a);
        }
        const std::vector<int> extent = derive_extent(subset, ctx);
        const std::vector<int> closed = derive_intent(extent, ctx);
        if (closed == subset) concepts.emplace_back(extent, closed);
    }
    std::sort(concepts.begin(), concepts.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    return concepts;
}

bool is_subconcept(const FuzzyConcept& c1, const FuzzyConcept& c2) {
    return std::includes(c2.extent.begin(), c2.extent.end(), c1.extent.begin(), c1.extent.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
}

double concept_similarity(const FuzzyConcept& c1, const FuzzyConcept& c2) {
    double inter = 0.0, uni = 0.0;
    auto it1 = c1.extent.begin();
    auto it2 = c2.extent.begin();
    while (it1 != c1.extent.end() || it2 != c2.extent.end()) {
        if (it2 == c2.extent.end() || (it1 != c1.extent.end() && it1->first < it2->first)) {
            uni += it1->second;  // min with 0 contributes nothing
            ++it1;
        } else if (it1 == c1.extent.end() || it2->first < it1->first) {
            uni += it2->second;
            ++it2;
        } else {
            inter += std::min(it1->second, it2->second);
            uni += std::max(it1->second, it2->second);
            ++it1;
            ++it2;
        }
    }
    return uni == 0.0 ? 0.0 : inter / uni;
}

std::vector<std::pair<int, int>> temporal_edges(const TimedLattice& lattice,
                                                const TimedFuzzyContext& ctx) {
    // Participants carry exactly one time attribute.
    struct Participant {
        int concept_id;
        int peak;                    // chronological peak id
        std::vector<int> topic_intent;  // fuzzy part of the intent
    };
    std::vector<Participant> participants;
    std::set<int> peaks_present;
    for (const auto& c : lattice.concepts) {
        std::vector<int> topics;
        int peak = -1;
        int time_count = 0;
        for (const int a : c.intent) {
            if (ctx.is_time_attribute(static_cast<std::size_t>(a))) {
                ++time_count;
                peak = ctx.attribute_peak_id(static_cast<std::size_t>(a));
            } else {
                topics.push_back(a);
            }
        }
        if (time_count == 1) {
            participants.push_back({c.id, peak, std::move(topics)});
            peaks_present.insert(peak);
        }
    }

    std::map<int, int> next_peak;  // consecutive among peaks present
    for (auto it = peaks_present.begin(); it != peaks_present.end(); ++it) {
        auto next = std::next(it);
        if (next != peaks_present.end()) next_peak[*it] = *next;
    }

    std::vector<std::pair<int, int>> edges;
    for (const auto& from : participants) {
        const auto succ = next_peak.find(from.peak);
        if (succ == next_peak.end()) continue;
        for (const auto& to : participants) {
            if (to.peak != succ->second) continue;
            std::vector<int> shared;
            std::set_intersection(from.topic_intent.begin(), from.topic_intent.end(),
                                  to.topic_intent.begin(), to.topic_intent.end(),
                                  std::back_inserter(shared));
            if (!shared.empty()) edges.emplace_back(from.concept_id, to.concept_id);
        }
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

}  // namespace tfcl
