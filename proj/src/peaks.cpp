#include "tfcl/peaks.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>

#include "tfcl/errors.hpp"

namespace tfcl {
namespace {

double initial_meandev(const std::vector<std::int64_t>& counts, int init_len) {
    const std::size_t p = std::min<std::size_t>(counts.size(), static_cast<std::size_t>(init_len));
    double mean = 0.0;
    for (std::size_t i = 0; i < p; ++i) mean += static_cast<double>(counts[i]);
    mean /= static_cast<double>(p);
    double dev = 0.0;
    for (std::size_t i = 0; i < p; ++i) dev += std::abs(static_cast<double>(counts[i]) - mean);
    return dev / static_cast<double>(p);
}

// |value - mean| / meandev with the zero-deviation convention: +inf on any
// change, 0 when the value sits exactly on the mean.
double deviation_ratio(double value, const RunningStats& stats) {
    const double diff = std::abs(value - stats.mean);
    if (stats.meandev == 0.0) return diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    return diff / stats.meandev;
}

}  // namespace

RunningStats update_stats(RunningStats stats, double value, double alpha) {
    const double diff = std::abs(stats.mean - value);
    stats.meandev = alpha * diff + (1.0 - alpha) * stats.meandev;
    stats.mean = alpha * value + (1.0 - alpha) * stats.mean;
    return stats;
}

std::vector<PeakWindow> detect_peaks(const std::vector<std::int64_t>& counts,
                                     const PeakConfig& config) {
    if (config.tau <= 0.0) throw ConfigError("tau must be positive");
    if (!(config.alpha > 0.0 && config.alpha < 1.0)) throw ConfigError("alpha must be in (0,1)");
    if (config.init_len < 1) throw ConfigError("init_len must be >= 1");
    const std::int64_t n = static_cast<std::int64_t>(counts.size());
    if (n < 2) throw DataError("series too short: need at least 2 bins");

    const auto at = [&](std::int64_t i) { return static_cast<double>(counts[static_cast<std::size_t>(i)]); };
    RunningStats stats{at(0), initial_meandev(counts, config.init_len)};
    const auto significant_rise = [&](std::int64_t i) {
        return deviation_ratio(at(i), stats) > config.tau && counts[i] > counts[i - 1];
    };

    std::vector<PeakWindow> windows;
    for (std::int64_t i = 1; i < n; ++i) {
        if (!significant_rise(i)) {
            stats = update_stats(stats, at(i), config.alpha);
            continue;
        }
        std::int64_t start = i - 1;
        // A rise right after an early close would reuse the previous window's
        // last bin as its start; shift it so windows stay disjoint.
        if (!windows.empty() && start <= windows.back().end_bin) start = windows.back().end_bin + 1;
        while (i < n && counts[i] > counts[i - 1]) {
            stats = update_stats(stats, at(i), config.alpha);
            ++i;
        }
        std::int64_t end = i - 1;
        while (i < n && counts[i] > counts[start]) {
            if (significant_rise(i)) {
                end = --i;
                break;
            }
            stats = update_stats(stats, at(i), config.alpha);
            end = i++;
        }
        if (i < n && counts[i] < counts[start]) end = i--;
        windows.push_back({static_cast<int>(windows.size()) + 1, static_cast<int>(start),
                           static_cast<int>(end)});
    }
    return windows;
}

std::map<std::string, int> assign_peaks(const Stream& stream,
                                        const std::vector<PeakWindow>& windows) {
    std::map<std::string, int> assignment;
    if (windows.empty()) return assignment;
    std::size_t w = 0;
    for (const auto& rec : stream.records) {  // records and windows are both chronological
        const int bin = bin_index(stream, rec.timestamp);
        while (w < windows.size() && bin > windows[w].end_bin) ++w;
        if (w == windows.size()) break;
        if (bin >= windows[w].start_bin) assignment[rec.id] = windows[w].peak_id;
    }
    return assignment;
}

}  // namespace tfcl
