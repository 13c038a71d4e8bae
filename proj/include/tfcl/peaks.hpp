#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tfcl/corpus.hpp"

namespace tfcl {

struct PeakConfig {
    double tau = 2.0;     // trigger threshold in mean deviations
    double alpha = 0.125; // weight of the newest sample in the running stats
    int init_len = 5;     // bins seeding the initial deviation estimate
};

/// Contiguous bin interval of elevated activity, inclusive on both ends.
struct PeakWindow {
    int peak_id = 0;  // 1-based, chronological
    int start_bin = 0;
    int end_bin = 0;

    friend bool operator==(const PeakWindow&, const PeakWindow&) = default;
};

struct RunningStats {
    double mean = 0.0;
    double meandev = 0.0;
};

/// Exponentially weighted mean / mean-deviation step:
///   meandev' = alpha*|mean - value| + (1-alpha)*meandev
///   mean'    = alpha*value + (1-alpha)*mean
RunningStats update_stats(RunningStats stats, double value, double alpha);

/// Offline peak-area detection over a bin-count series.
///
/// The scan keeps a running mean and mean deviation. A window opens at bin i
/// when |C_i - mean| exceeds tau mean deviations and the count is rising; the
/// window starts one bin before the rise, ascends while counts increase,
/// then descends while counts stay above the start level. A fresh significant
/// rise during the descent closes the window early and starts the next one.
/// Stats update on every bin except those consumed by a window's rise/early
/// close. Returned windows are disjoint and chronological; peak ids count
/// from 1. Requires at least two bins.
std::vector<PeakWindow> detect_peaks(const std::vector<std::int64_t>& counts,
                                     const PeakConfig& config = PeakConfig{});

/// record id -> peak_id for every record whose bin falls inside a window
/// (inclusive bounds). Records outside all windows are absent from the map.
std::map<std::string, int> assign_peaks(const Stream& stream,
                                        const std::vector<PeakWindow>& windows);

}  // namespace tfcl
