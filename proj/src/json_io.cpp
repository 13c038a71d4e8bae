#include "tfcl/json_io.hpp"

#include <fstream>

#include "tfcl/errors.hpp"

namespace tfcl {

nlohmann::json windows_to_json(const std::vector<PeakWindow>& windows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& w : windows) {
        arr.push_back({{"peak_id", w.peak_id}, {"start_bin", w.start_bin}, {"end_bin", w.end_bin}});
    }
    return arr;
}

std::vector<PeakWindow> windows_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw DataError("windows document must be a JSON array");
    std::vector<PeakWindow> windows;
    for (const auto& item : j) {
        windows.push_back({item.at("peak_id").get<int>(), item.at("start_bin").get<int>(),
                           item.at("end_bin").get<int>()});
    }
    return windows;
}

nlohmann::json annotations_to_json(const Stream& stream,
                                   const std::vector<std::vector<TopicAnnotation>>& per_record,
                                   const CorpusStats& stats) {
    nlohmann::json records = nlohmann::json::array();
    for (std::size_t r = 0; r < stream.records.size(); ++r) {
        nlohmann::json topics = nlohmann::json::array();
        for (const auto& a : per_record[r]) {
            topics.push_back({{"topic", a.topic},
                              {"relevance", a.relevance},
                              {"f_rel", a.f_rel},
                              {"membership", a.membership}});
        }
        records.push_back({{"id", stream.records[r].id}, {"topics", std::move(topics)}});
    }
    nlohmann::json df = nlohmann::json::object();
    for (const auto& [topic, count] : stats.doc_frequency) df[topic] = count;
    return {{"records", std::move(records)},
            {"stats", {{"total_records", stats.total_records}, {"doc_frequency", std::move(df)}}}};
}

nlohmann::json lattice_to_json(const TimedFuzzyContext& ctx, const TimedLattice& lattice) {
    nlohmann::json objects = nlohmann::json::array();
    for (std::size_t g = 0; g < ctx.object_count(); ++g) {
        nlohmann::json memberships = nlohmann::json::object();
        for (std::size_t j = 0; j < ctx.fuzzy_count(); ++j) {
            const double mu = ctx.fuzzy_membership(g, j);
            if (mu > 0.0) memberships[ctx.fuzzy_attributes[j]] = mu;
        }
        objects.push_back(
            {{"id", ctx.objects[g]},
             {"timestamp", ctx.object_timestamps[g]},
             {"text", g < ctx.object_texts.size() ? ctx.object_texts[g] : std::string{}},
             {"peak", ctx.object_peak[g] < 0
                          ? nlohmann::json(nullptr)
                          : nlohmann::json(ctx.time_attributes[static_cast<std::size_t>(
                                ctx.object_peak[g])])},
             {"memberships", std::move(memberships)}});
    }

    nlohmann::json concepts = nlohmann::json::array();
    for (const auto& c : lattice.concepts) {
        nlohmann::json extent = nlohmann::json::array();
        for (const auto& [g, mu] : c.extent) {
            extent.push_back({{"object", ctx.objects[static_cast<std::size_t>(g)]}, {"mu", mu}});
        }
        nlohmann::json intent = nlohmann::json::array();
        for (const int a : c.intent) intent.push_back(ctx.attribute_name(static_cast<std::size_t>(a)));
        concepts.push_back({{"id", c.id}, {"extent", std::move(extent)}, {"intent", std::move(intent)}});
    }

    nlohmann::json hasse = nlohmann::json::array();
    for (const auto& [sub, super] : lattice.hasse_edges) hasse.push_back({sub, super});
    nlohmann::json temporal = nlohmann::json::array();
    for (const auto& [from, to] : lattice.temporal_edges) temporal.push_back({from, to});

    return {{"threshold", ctx.threshold},
            {"context",
             {{"objects", std::move(objects)},
              {"fuzzy_attributes", ctx.fuzzy_attributes},
              {"time_attributes", ctx.time_attributes}}},
            {"concepts", std::move(concepts)},
            {"hasse", std::move(hasse)},
            {"temporal", std::move(temporal)}};
}

LatticeDocument lattice_from_json(const nlohmann::json& j) {
    LatticeDocument doc;
    TimedFuzzyContext& ctx = doc.context;
    try {
        ctx.threshold = j.at("threshold").get<double>();
        const auto& jctx = j.at("context");
        ctx.fuzzy_attributes = jctx.at("fuzzy_attributes").get<std::vector<std::string>>();
        ctx.time_attributes = jctx.at("time_attributes").get<std::vector<int>>();

        std::map<std::string, std::size_t> topic_index;
        for (std::size_t a = 0; a < ctx.fuzzy_attributes.size(); ++a) {
            topic_index[ctx.fuzzy_attributes[a]] = a;
        }
        std::map<int, int> peak_index;
        for (std::size_t t = 0; t < ctx.time_attributes.size(); ++t) {
            peak_index[ctx.time_attributes[t]] = static_cast<int>(t);
        }

        const auto& jobjects = jctx.at("objects");
        ctx.memberships.assign(jobjects.size() * ctx.fuzzy_attributes.size(), 0.0);
        std::map<std::string, std::size_t> object_index;
        std::size_t g = 0;
        for (const auto& jobj : jobjects) {
            ctx.objects.push_back(jobj.at("id").get<std::string>());
            ctx.object_timestamps.push_back(jobj.value("timestamp", std::int64_t{0}));
            ctx.object_texts.push_back(jobj.value("text", std::string{}));
            const auto& peak = jobj.at("peak");
            ctx.object_peak.push_back(peak.is_null() ? -1 : peak_index.at(peak.get<int>()));
            for (const auto& [topic, mu] : jobj.at("memberships").items()) {
                ctx.memberships[g * ctx.fuzzy_attributes.size() + topic_index.at(topic)] =
                    mu.get<double>();
            }
            object_index[ctx.objects.back()] = g;
            ++g;
        }

        for (const auto& jc : j.at("concepts")) {
            FuzzyConcept c;
            c.id = jc.at("id").get<int>();
            for (const auto& je : jc.at("extent")) {
                c.extent.emplace_back(
                    static_cast<int>(object_index.at(je.at("object").get<std::string>())),
                    je.at("mu").get<double>());
            }
            std::sort(c.extent.begin(), c.extent.end());
            for (const auto& ja : jc.at("intent")) {
                const std::string name = ja.get<std::string>();
                const auto it = topic_index.find(name);
                if (it != topic_index.end()) {
                    c.intent.push_back(static_cast<int>(it->second));
                } else if (name.rfind("peak_", 0) == 0) {
                    const int peak = std::stoi(name.substr(5));
                    c.intent.push_back(static_cast<int>(ctx.fuzzy_attributes.size()) +
                                       peak_index.at(peak));
                } else {
                    throw DataError("unknown intent attribute: " + name);
                }
            }
            std::sort(c.intent.begin(), c.intent.end());
            doc.lattice.concepts.push_back(std::move(c));
        }
        for (const auto& je : j.at("hasse")) {
            doc.lattice.hasse_edges.emplace_back(je.at(0).get<int>(), je.at(1).get<int>());
        }
        for (const auto& je : j.at("temporal")) {
            doc.lattice.temporal_edges.emplace_back(je.at(0).get<int>(), je.at(1).get<int>());
        }
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("malformed lattice document: ") + e.what());
    } catch (const std::out_of_range& e) {
        throw DataError(std::string("malformed lattice document: ") + e.what());
    }
    return doc;
}

nlohmann::json summary_to_json(const Summary& summary) {
    nlohmann::json picks = nlohmann::json::array();
    for (const auto& p : summary.picks) {
        picks.push_back({{"record_id", p.record_id},
                         {"concept_id", p.concept_id},
                         {"peak_id", p.peak_id},
                         {"timestamp", p.timestamp},
                         {"text", p.text}});
    }
    return {{"shrinking", summary.shrinking},
            {"presentation", presentation_name(summary.presentation)},
            {"picks", std::move(picks)}};
}

Summary summary_from_json(const nlohmann::json& j) {
    Summary summary;
    try {
        summary.shrinking = j.at("shrinking").get<double>();
        summary.presentation = presentation_from_name(j.at("presentation").get<std::string>());
        for (const auto& jp : j.at("picks")) {
            summary.picks.push_back({jp.at("record_id").get<std::string>(),
                                     jp.at("concept_id").get<int>(), jp.at("peak_id").get<int>(),
                                     jp.value("timestamp", std::int64_t{0}),
                                     jp.value("text", std::string{})});
        }
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("malformed summary document: ") + e.what());
    }
    return summary;
}

nlohmann::json report_to_json(const EvaluationReport& report) {
    return {{"sequence_novelty", report.sequence_novelty},
            {"historical_novelty", report.historical_novelty},
            {"text_similarity", report.text_similarity},
            {"precision", report.precision},
            {"recall", report.recall},
            {"f_measure", report.f_measure}};
}

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open file: " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw DataError(path + ": " + e.what());
    }
}

void write_json_file(const nlohmann::json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write file: " + path);
    out << j.dump(2) << '\n';
}

std::string presentation_name(Presentation p) {
    return p == Presentation::chronological ? "chronological" : "selection-order";
}

Presentation presentation_from_name(const std::string& name) {
    if (name == "chronological") return Presentation::chronological;
    if (name == "selection-order" || name == "selection") return Presentation::selection_order;
    throw ConfigError("unknown presentation mode: " + name);
}

}  // namespace tfcl
