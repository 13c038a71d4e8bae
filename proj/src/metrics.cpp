#include "tfcl/metrics.hpp"

#include <algorithm>
#include <fstream>

#include "tfcl/errors.hpp"

namespace tfcl {

GoldSummary load_gold_summary(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open gold summary file: " + path);
    GoldSummary gold;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") != std::string::npos) gold.sentences.push_back(line);
    }
    return gold;
}

double sequence_novelty(const std::vector<ConceptSet>& sets) {
    if (sets.size() < 2) throw DataError("need >= 2 summary items");
    double total = 0.0;
    for (std::size_t i = 1; i < sets.size(); ++i) {
        std::size_t overlap = 0;
        for (const auto& c : sets[i]) overlap += sets[i - 1].count(c);
        total += static_cast<double>(sets[i].size() - overlap);
    }
    return total / static_cast<double>(sets.size() - 1);
}

double historical_novelty(const std::vector<ConceptSet>& sets) {
    if (sets.size() < 2) throw DataError("need >= 2 summary items");
    ConceptSet history = sets[0];
    double total = 0.0;
    for (std::size_t i = 1; i < sets.size(); ++i) {
        std::size_t overlap = 0;
        for (const auto& c : sets[i]) overlap += history.count(c);
        total += static_cast<double>(sets[i].size() - overlap);
        history.insert(sets[i].begin(), sets[i].end());
    }
    return total / static_cast<double>(sets.size() - 1);
}

double ngram_gain(const NgramCounts& gold, const NgramCounts& generated) {
    std::int64_t gold_total = 0;
    for (const auto& [gram, count] : gold) gold_total += count;
    if (gold_total == 0) throw DataError("empty gold summary");
    std::int64_t matched = 0;
    for (const auto& [gram, count] : gold) {
        const auto it = generated.find(gram);
        if (it != generated.end()) matched += std::min(count, it->second);
    }
    return static_cast<double>(matched) / static_cast<double>(gold_total);
}

namespace {

NgramCounts collect_ngrams(const std::vector<std::string>& lines, int n,
                           const StopwordSet& stopwords) {
    NgramCounts total;
    for (const auto& line : lines) {
        for (const auto& [gram, count] : ngrams(tokenize(line, stopwords), n)) {
            total[gram] += count;
        }
    }
    return total;
}

}  // namespace

double text_similarity(const std::vector<std::string>& gold_lines,
                       const std::vector<std::string>& generated_texts,
                       const StopwordSet& stopwords) {
    static constexpr double kWeights[3] = {0.2, 0.3, 0.5};
    double sim = 0.0;
    for (int n = 1; n <= 3; ++n) {
        const NgramCounts gold = collect_ngrams(gold_lines, n, stopwords);
        const NgramCounts gen = collect_ngrams(generated_texts, n, stopwords);
        sim += kWeights[n - 1] * ngram_gain(gold, gen);
    }
    return sim;
}

ConceptPRF concept_prf(const ConceptSet& gold, const ConceptSet& generated) {
    if (gold.empty()) throw DataError("empty gold concept set");
    std::size_t inter = 0;
    for (const auto& c : generated) inter += gold.count(c);
    ConceptPRF prf;
    prf.precision = generated.empty()
                        ? 0.0
                        : static_cast<double>(inter) / static_cast<double>(generated.size());
    prf.recall = static_cast<double>(inter) / static_cast<double>(gold.size());
    prf.f_measure = prf.precision + prf.recall == 0.0
                        ? 0.0
                        : 2.0 * prf.precision * prf.recall / (prf.precision + prf.recall);
    return prf;
}

}  // namespace tfcl
