#pragma once

#include <set>
#include <string>
#include <vector>

#include "tfcl/corpus.hpp"

namespace tfcl {

using ConceptSet = std::set<std::string>;

struct GoldSummary {
    std::vector<std::string> sentences;  // one per line, blanks dropped
};

struct EvaluationReport {
    double sequence_novelty = 0.0;
    double historical_novelty = 0.0;
    double text_similarity = 0.0;
    double precision = 0.0;
    double recall = 0.0;
    double f_measure = 0.0;
};

GoldSummary load_gold_summary(const std::string& path);

/// Mean count of concepts in each item that are absent from its predecessor.
double sequence_novelty(const std::vector<ConceptSet>& sets);

/// Mean count of concepts in each item unseen in the whole preceding history.
double historical_novelty(const std::vector<ConceptSet>& sets);

/// Fraction of the gold n-gram mass matched by the generated side; each
/// n-gram capped at the smaller of the two counts.
double ngram_gain(const NgramCounts& gold, const NgramCounts& generated);

/// 0.2*g1 + 0.3*g2 + 0.5*g3 over stopword-filtered n-grams. N-grams do not
/// cross line/record boundaries.
double text_similarity(const std::vector<std::string>& gold_lines,
                       const std::vector<std::string>& generated_texts,
                       const StopwordSet& stopwords);

struct ConceptPRF {
    double precision = 0.0;
    double recall = 0.0;
    double f_measure = 0.0;
};

/// Set precision/recall of generated vs gold concepts; F is their harmonic
/// mean, 0 when both sides miss. Empty gold is an error.
ConceptPRF concept_prf(const ConceptSet& gold, const ConceptSet& generated);

}  // namespace tfcl
