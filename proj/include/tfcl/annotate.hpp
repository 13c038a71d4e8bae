#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace tfcl {

/// One topic hit on a record. relevance comes from the annotator; f_rel and
/// membership are filled by build_relevance.
struct TopicAnnotation {
    std::string topic;
    double relevance = 0.0;   // annotator score in [0,1]
    double f_rel = 0.0;       // relevance * itf(topic)
    double membership = 0.0;  // f_rel normalized into [0,1]

    friend bool operator==(const TopicAnnotation&, const TopicAnnotation&) = default;
};

/// Document frequencies over the records the weights are computed for.
struct CorpusStats {
    std::int64_t total_records = 0;
    std::map<std::string, std::int64_t> doc_frequency;
};

enum class AnnotatorKind { gazetteer, remote };
enum class AnnotatorOnError { abort, skip_record };

struct AnnotatorConfig {
    AnnotatorKind kind = AnnotatorKind::gazetteer;
    std::string gazetteer_path;
    std::string endpoint;  // e.g. http://host:port/annotate
    int timeout_ms = 5000;
    double min_relevance = 0.0;
    AnnotatorOnError on_error = AnnotatorOnError::abort;
};

/// Topic annotator facade over the two backends.
///
/// The gazetteer backend matches dictionary surface forms case-insensitively
/// on token boundaries, leftmost-longest; on equal length the
/// lexicographically smaller topic wins. The remote backend POSTs the text to
/// an HTTP endpoint answering [{"topic": str, "relevance": num}, ...].
/// Either way, per-text results are deduplicated by topic (max relevance),
/// filtered by min_relevance, and sorted by topic.
class Annotator {
public:
    static Annotator open(const AnnotatorConfig& config);

    std::vector<TopicAnnotation> annotate(std::string_view text) const;
    const AnnotatorConfig& config() const { return config_; }

    Annotator(Annotator&&) noexcept;
    Annotator& operator=(Annotator&&) noexcept;
    ~Annotator();

private:
    class Backend;
    Annotator(AnnotatorConfig config, std::unique_ptr<Backend> backend);

    AnnotatorConfig config_;
    std::unique_ptr<Backend> backend_;
};

std::vector<TopicAnnotation> annotate_text(std::string_view text, const Annotator& annotator);

/// Annotate every record of a stream. With on_error = skip_record a failing
/// record yields an empty annotation list instead of aborting the run.
std::vector<std::vector<TopicAnnotation>> annotate_records(
    const std::vector<std::string>& texts, const Annotator& annotator);

/// N and per-topic document frequency over one annotation set per record.
CorpusStats collect_stats(const std::vector<std::vector<TopicAnnotation>>& per_record);

/// log(N / df) in the given base. Unknown topics are an error (df would be 0).
double compute_itf(const std::string& topic, const CorpusStats& stats, double log_base);

/// Fill f_rel = relevance * itf and membership = f_rel / max f_rel over the
/// whole corpus. A zero max (every topic in every record) falls back to the
/// raw relevance as membership.
void build_relevance(std::vector<std::vector<TopicAnnotation>>& per_record,
                     const CorpusStats& stats, double log_base);

}  // namespace tfcl
