#include "tfcl/annotate.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <unordered_map>

#include <httplib.h>
#include <json.hpp>

#include "tfcl/corpus.hpp"
#include "tfcl/errors.hpp"

namespace tfcl {

class Annotator::Backend {
public:
    virtual ~Backend() = default;
    virtual std::vector<TopicAnnotation> annotate(std::string_view text) const = 0;
};

namespace {

struct GazetteerEntry {
    std::vector<std::string> surface_tokens;
    std::string topic;
    double relevance;
};

class GazetteerBackend : public Annotator::Backend {
public:
    explicit GazetteerBackend(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw ConfigError("cannot open gazetteer file: " + path);
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty()) continue;
            const auto tab1 = line.find('\t');
            const auto tab2 = tab1 == std::string::npos ? std::string::npos : line.find('\t', tab1 + 1);
            if (tab2 == std::string::npos) {
                throw ConfigError("gazetteer line " + std::to_string(line_no) +
                                  ": expected surface<TAB>topic<TAB>relevance");
            }
            GazetteerEntry entry;
            entry.surface_tokens = split_tokens(line.substr(0, tab1));
            entry.topic = line.substr(tab1 + 1, tab2 - tab1 - 1);
            try {
                entry.relevance = std::stod(line.substr(tab2 + 1));
            } catch (const std::exception&) {
                throw ConfigError("gazetteer line " + std::to_string(line_no) + ": bad relevance");
            }
            if (entry.surface_tokens.empty() || entry.topic.empty()) {
                throw ConfigError("gazetteer line " + std::to_string(line_no) + ": empty surface or topic");
            }
            if (entry.relevance < 0.0 || entry.relevance > 1.0) {
                throw ConfigError("gazetteer line " + std::to_string(line_no) +
                                  ": relevance outside [0,1]");
            }
            by_first_token_[entry.surface_tokens.front()].push_back(std::move(entry));
        }
        for (auto& [token, entries] : by_first_token_) {
            // longest surface first; equal length resolved by smaller topic
            std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
                if (a.surface_tokens.size() != b.surface_tokens.size())
                    return a.surface_tokens.size() > b.surface_tokens.size();
                return a.topic < b.topic;
            });
        }
    }

    std::vector<TopicAnnotation> annotate(std::string_view text) const override {
        const TokenList tokens = split_tokens(text);
        std::vector<TopicAnnotation> hits;
        std::size_t i = 0;
        while (i < tokens.size()) {
            const auto it = by_first_token_.find(tokens[i]);
            const GazetteerEntry* match = nullptr;
            if (it != by_first_token_.end()) {
                for (const auto& entry : it->second) {
                    const std::size_t len = entry.surface_tokens.size();
                    if (i + len > tokens.size()) continue;
                    if (std::equal(entry.surface_tokens.begin(), entry.surface_tokens.end(),
                                   tokens.begin() + static_cast<std::ptrdiff_t>(i))) {
                        match = &entry;
                        break;
                    }
                }
            }
            if (match != nullptr) {
                hits.push_back({match->topic, match->relevance, 0.0, 0.0});
                i += match->surface_tokens.size();
            } else {
                ++i;
            }
        }
        return hits;
    }

private:
    std::unordered_map<std::string, std::vector<GazetteerEntry>> by_first_token_;
};

class RemoteBackend : public Annotator::Backend {
public:
    RemoteBackend(std::string endpoint, int timeout_ms)
        : endpoint_(std::move(endpoint)), timeout_ms_(timeout_ms) {
        const auto scheme_end = endpoint_.find("://");
        if (scheme_end == std::string::npos) {
            throw ConfigError("annotator endpoint must be an http URL: " + endpoint_);
        }
        const auto path_start = endpoint_.find('/', scheme_end + 3);
        host_ = endpoint_.substr(0, path_start);
        path_ = path_start == std::string::npos ? "/" : endpoint_.substr(path_start);
    }

    std::vector<TopicAnnotation> annotate(std::string_view text) const override {
        httplib::Client client(host_);
        client.set_connection_timeout(timeout_ms_ / 1000, timeout_ms_ % 1000 * 1000);
        client.set_read_timeout(timeout_ms_ / 1000, timeout_ms_ % 1000 * 1000);
        auto res = client.Post(path_, std::string(text), "text/plain; charset=utf-8");
        if (!res) {
            throw DataError("annotator endpoint " + endpoint_ + ": " +
                            httplib::to_string(res.error()));
        }
        if (res->status != 200) {
            throw DataError("annotator endpoint " + endpoint_ + ": HTTP " +
                            std::to_string(res->status));
        }
        nlohmann::json body;
        try {
            body = nlohmann::json::parse(res->body);
        } catch (const nlohmann::json::exception& e) {
            throw DataError("annotator endpoint " + endpoint_ + ": bad JSON: " + e.what());
        }
        if (!body.is_array()) {
            throw DataError("annotator endpoint " + endpoint_ + ": expected a JSON array");
        }
        std::vector<TopicAnnotation> hits;
        for (const auto& item : body) {
            if (!item.is_object() || !item.contains("topic") || !item.contains("relevance") ||
                !item["topic"].is_string() || !item["relevance"].is_number()) {
                throw DataError("annotator endpoint " + endpoint_ +
                                ": items must be {\"topic\": str, \"relevance\": num}");
            }
            hits.push_back({item["topic"].get<std::string>(), item["relevance"].get<double>(),
                            0.0, 0.0});
        }
        return hits;
    }

private:
    std::string endpoint_;
    std::string host_;
    std::string path_;
    int timeout_ms_;
};

}  // namespace

Annotator::Annotator(AnnotatorConfig config, std::unique_ptr<Backend> backend)
    : config_(std::move(config)), backend_(std::move(backend)) {}

Annotator::Annotator(Annotator&&) noexcept = default;
Annotator& Annotator::operator=(Annotator&&) noexcept = default;
Annotator::~Annotator() = default;

Annotator Annotator::open(const AnnotatorConfig& config) {
    if (config.min_relevance < 0.0 || config.min_relevance > 1.0) {
        throw ConfigError("min_relevance must be in [0,1]");
    }
    std::unique_ptr<Backend> backend;
    switch (config.kind) {
        case AnnotatorKind::gazetteer:
            if (config.gazetteer_path.empty()) throw ConfigError("gazetteer path not set");
            backend = std::make_unique<GazetteerBackend>(config.gazetteer_path);
            break;
        case AnnotatorKind::remote:
            if (config.endpoint.empty()) throw ConfigError("annotator endpoint not set");
            backend = std::make_unique<RemoteBackend>(config.endpoint, config.timeout_ms);
            break;
    }
    return Annotator(config, std::move(backend));
}

std::vector<TopicAnnotation> Annotator::annotate(std::string_view text) const {
    std::vector<TopicAnnotation> raw = backend_->annotate(text);
    std::map<std::string, double> best;  // topic -> max relevance
    for (const auto& hit : raw) {
        auto [it, inserted] = best.emplace(hit.topic, hit.relevance);
        if (!inserted && hit.relevance > it->second) it->second = hit.relevance;
    }
    std::vector<TopicAnnotation> out;
    for (const auto& [topic, relevance] : best) {
        if (relevance >= config_.min_relevance) out.push_back({topic, relevance, 0.0, 0.0});
    }
    return out;
}

std::vector<TopicAnnotation> annotate_text(std::string_view text, const Annotator& annotator) {
    return annotator.annotate(text);
}

std::vector<std::vector<TopicAnnotation>> annotate_records(
    const std::vector<std::string>& texts, const Annotator& annotator) {
    std::vector<std::vector<TopicAnnotation>> per_record;
    per_record.reserve(texts.size());
    for (const auto& text : texts) {
        try {
            per_record.push_back(annotator.annotate(text));
        } catch (const DataError&) {
            if (annotator.config().on_error == AnnotatorOnError::abort) throw;
            per_record.emplace_back();  // skip_record: record keeps no topics
        }
    }
    return per_record;
}

CorpusStats collect_stats(const std::vector<std::vector<TopicAnnotation>>& per_record) {
    CorpusStats stats;
    stats.total_records = static_cast<std::int64_t>(per_record.size());
    for (const auto& annotations : per_record) {
        for (const auto& a : annotations) ++stats.doc_frequency[a.topic];
    }
    return stats;
}

double compute_itf(const std::string& topic, const CorpusStats& stats, double log_base) {
    if (!(log_base > 0.0) || log_base == 1.0) throw ConfigError("log_base must be > 0 and != 1");
    const auto it = stats.doc_frequency.find(topic);
    if (it == stats.doc_frequency.end() || it->second < 1) {
        throw DataError("unknown topic in corpus stats: " + topic);
    }
    const double ratio = static_cast<double>(stats.total_records) / static_cast<double>(it->second);
    return std::log(ratio) / std::log(log_base);
}

void build_relevance(std::vector<std::vector<TopicAnnotation>>& per_record,
                     const CorpusStats& stats, double log_base) {
    double max_f_rel = 0.0;
    for (auto& annotations : per_record) {
        for (auto& a : annotations) {
            a.f_rel = a.relevance * compute_itf(a.topic, stats, log_base);
            max_f_rel = std::max(max_f_rel, a.f_rel);
        }
    }
    for (auto& annotations : per_record) {
        for (auto& a : annotations) {
            a.membership = max_f_rel > 0.0 ? a.f_rel / max_f_rel : a.relevance;
        }
    }
}

}  // namespace tfcl
