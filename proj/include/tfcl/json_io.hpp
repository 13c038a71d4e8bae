#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tfcl/annotate.hpp"
#include "tfcl/lattice.hpp"
#include "tfcl/metrics.hpp"
#include "tfcl/peaks.hpp"
#include "tfcl/summarize.hpp"

namespace tfcl {

// Interchange schemas shared by the CLI stages. The lattice document embeds
// the context (objects with memberships, texts and peaks) so summarize and
// export runs are self-contained; intents name fuzzy attributes by topic id
// and time attributes as "peak_<id>".

nlohmann::json windows_to_json(const std::vector<PeakWindow>& windows);
std::vector<PeakWindow> windows_from_json(const nlohmann::json& j);

nlohmann::json annotations_to_json(const Stream& stream,
                                   const std::vector<std::vector<TopicAnnotation>>& per_record,
                                   const CorpusStats& stats);

nlohmann::json lattice_to_json(const TimedFuzzyContext& ctx, const TimedLattice& lattice);
struct LatticeDocument {
    TimedFuzzyContext context;
    TimedLattice lattice;
};
LatticeDocument lattice_from_json(const nlohmann::json& j);

nlohmann::json summary_to_json(const Summary& summary);
Summary summary_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const EvaluationReport& report);

nlohmann::json load_json_file(const std::string& path);
void write_json_file(const nlohmann::json& j, const std::string& path);

std::string presentation_name(Presentation p);
Presentation presentation_from_name(const std::string& name);

}  // namespace tfcl
