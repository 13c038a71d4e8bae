#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tfcl {

/// Knobs for the bundled synthetic stream: a background hum of short texts
/// with topic bursts injected on fixed days.
struct FixtureSpec {
    std::uint32_t seed = 42;
    int days = 40;
    int target_records = 1000;
    std::vector<int> burst_bins = {10, 20, 30};
};

/// Default English stopword list bundled with the fixture.
const std::vector<std::string>& default_stopwords();

/// Write stream.jsonl, gazetteer.tsv, stopwords.txt, gold.txt, truth.json and
/// a ready-to-run config.json under out_dir. The generated stream is
/// validated: peak detection with default settings must find exactly one
/// window per injected burst, each containing its burst bin.
void generate_fixture(const FixtureSpec& spec, const std::string& out_dir);

}  // namespace tfcl
