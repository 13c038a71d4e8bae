#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "tfcl/lattice.hpp"

namespace tfcl {

enum class Presentation { selection_order, chronological };

struct SummaryPick {
    std::string record_id;
    int concept_id = 0;
    int peak_id = 0;  // peak group the pick was made in
    std::int64_t timestamp = 0;
    std::string text;

    friend bool operator==(const SummaryPick&, const SummaryPick&) = default;
};

struct Summary {
    double shrinking = 0.0;
    Presentation presentation = Presentation::selection_order;
    std::vector<SummaryPick> picks;
};

/// s(C) = 1 - |extent| / |objects|.
double shrinking(const FuzzyConcept& concept, const TimedFuzzyContext& ctx);

/// Updated concept weight: sum over intent attributes outside `covered` of
/// the attribute's max extent membership (1 for time attributes), divided by
/// the full intent size. Empty intents weigh 0.
double concept_weight(const FuzzyConcept& concept, const std::set<int>& covered,
                      const TimedFuzzyContext& ctx);

/// Greedy walk over the lattice: keep concepts with shrinking above r, visit
/// peaks most-recent-first, and within each peak repeatedly take the concept
/// with the highest updated weight (ties: smaller id) and its best-membership
/// record (ties: earlier timestamp, then smaller id). Covered attributes and
/// concepts accumulate across peaks; a peak's loop stops when its candidates
/// are exhausted or the best updated weight hits zero. Concepts with empty
/// extents never enter the candidate pools.
Summary summarize(const TimedLattice& lattice, const TimedFuzzyContext& ctx, double r,
                  Presentation presentation = Presentation::selection_order);

}  // namespace tfcl
