#include "tfcl/summarize.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>
#include <unordered_set>

#include "tfcl/errors.hpp"

namespace tfcl {

double shrinking(const FuzzyConcept& concept, const TimedFuzzyContext& ctx) {
    if (ctx.object_count() == 0) return 1.0;
    return 1.0 - static_cast<double>(concept.extent.size()) /
                     static_cast<double>(ctx.object_count());
}

double concept_weight(const FuzzyConcept& concept, const std::set<int>& covered,
                      const TimedFuzzyContext& ctx) {
    if (concept.intent.empty()) return 0.0;
    double numerator = 0.0;
    for (const int a : concept.intent) {
        if (covered.count(a) > 0) continue;
        if (ctx.is_time_attribute(static_cast<std::size_t>(a))) {
            numerator += 1.0;
        } else {
            double mu_m = 0.0;
            for (const auto& [g, mu_g] : concept.extent) {
                mu_m = std::max(mu_m, ctx.fuzzy_membership(static_cast<std::size_t>(g),
                                                           static_cast<std::size_t>(a)));
            }
            numerator += mu_m;
        }
    }
    return numerator / static_cast<double>(concept.intent.size());
}

Summary summarize(const TimedLattice& lattice, const TimedFuzzyContext& ctx, double r,
                  Presentation presentation) {
    if (!(r >= 0.0 && r <= 1.0)) throw ConfigError("shrinking level must be in [0,1]");

    Summary summary;
    summary.shrinking = r;
    summary.presentation = presentation;

    // Candidate pools per peak, most recent peak first. Only concepts above
    // the shrinking level with a non-empty extent can contribute a record.
    std::vector<std::vector<const FuzzyConcept*>> pools(ctx.time_attributes.size());
    for (const auto& concept : lattice.concepts) {
        if (!(shrinking(concept, ctx) > r) || concept.extent.empty()) continue;
        for (const int a : concept.intent) {
            if (ctx.is_time_attribute(static_cast<std::size_t>(a))) {
                pools[static_cast<std::size_t>(a) - ctx.fuzzy_count()].push_back(&concept);
            }
        }
    }

    std::set<int> covered_attributes;
    std::unordered_set<int> covered_concepts;
    std::unordered_set<std::string> picked_records;

    for (std::size_t t = ctx.time_attributes.size(); t-- > 0;) {
        const int peak_id = ctx.time_attributes[t];
        const auto& pool = pools[t];
        for (;;) {
            const FuzzyConcept* best = nullptr;
            double best_weight = 0.0;
            for (const FuzzyConcept* c : pool) {
                if (covered_concepts.count(c->id) > 0) continue;
                const double w = concept_weight(*c, covered_attributes, ctx);
                if (best == nullptr || w > best_weight ||
                    (w == best_weight && c->id < best->id)) {
                    best = c;
                    best_weight = w;
                }
            }
            if (best == nullptr) break;            // candidates exhausted
            if (best_weight <= 0.0) break;         // nothing left to cover here

            // Best record: highest membership, then earlier timestamp, then id.
            const std::pair<int, double>* top = nullptr;
            for (const auto& entry : best->extent) {
                if (top == nullptr) {
                    top = &entry;
                    continue;
                }
                const std::size_t g = static_cast<std::size_t>(entry.first);
                const std::size_t h = static_cast<std::size_t>(top->first);
                const auto key = std::make_tuple(-entry.second, ctx.object_timestamps[g],
                                                 ctx.objects[g]);
                const auto top_key = std::make_tuple(-top->second, ctx.object_timestamps[h],
                                                     ctx.objects[h]);
                if (key < top_key) top = &entry;
            }
            const std::size_t g = static_cast<std::size_t>(top->first);
            if (picked_records.insert(ctx.objects[g]).second) {
                summary.picks.push_back({ctx.objects[g], best->id, peak_id,
                                         ctx.object_timestamps[g],
                                         g < ctx.object_texts.size() ? ctx.object_texts[g] : ""});
            }
            covered_attributes.insert(best->intent.begin(), best->intent.end());
            covered_concepts.insert(best->id);
        }
    }

    if (presentation == Presentation::chronological) {
        std::stable_sort(summary.picks.begin(), summary.picks.end(),
                         [](const SummaryPick& a, const SummaryPick& b) {
                             return std::tie(a.timestamp, a.record_id) <
                                    std::tie(b.timestamp, b.record_id);
                         });
    }
    return summary;
}

}  // namespace tfcl
