#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace tfcl {

/// One timestamped short text.
struct Record {
    std::string id;
    std::int64_t timestamp = 0;  // UTC epoch seconds
    std::string text;

    friend bool operator==(const Record&, const Record&) = default;
};

/// Time-ascending record sequence plus the binning width used downstream.
struct Stream {
    std::vector<Record> records;  // sorted by (timestamp, id)
    int bin_minutes = 1440;
};

using TokenList = std::vector<std::string>;
using StopwordSet = std::set<std::string>;
using NgramCounts = std::map<std::string, int>;

/// Parse JSON-Lines input: {"id": str, "timestamp": int|RFC3339 str, "text": str}.
/// Records come back sorted by (timestamp, id). Throws DataError naming the
/// offending line on malformed input, duplicate ids, or an empty stream.
Stream parse_stream(std::istream& in, int bin_minutes = 1440);
Stream parse_stream_file(const std::string& path, int bin_minutes = 1440);

/// Inverse of parse_stream: one JSON object per line, epoch timestamps.
void write_stream(const Stream& stream, std::ostream& out);

/// RFC3339 date-time ("1970-01-01T00:16:40Z") to UTC epoch seconds.
std::int64_t parse_rfc3339(std::string_view text);

/// UTF-8 aware split on whitespace/punctuation, lowercased. Keeps tokens in
/// input order, drops stopwords and empties.
TokenList tokenize(std::string_view text, const StopwordSet& stopwords);

/// tokenize without the stopword filter; used for gazetteer surface matching.
TokenList split_tokens(std::string_view text);

/// One token per line, UTF-8. Blank lines ignored.
StopwordSet load_stopwords(const std::string& path);

/// Contiguous n-token windows joined by single spaces, with multiplicities.
NgramCounts ngrams(const TokenList& tokens, int n);

/// Epoch second where bin 0 starts: midnight UTC of the first record's day
/// for daily bins, otherwise the first record's timestamp.
std::int64_t bin_origin(const Stream& stream);

/// 0-based bin index of a timestamp relative to bin_origin.
int bin_index(const Stream& stream, std::int64_t timestamp);

/// Per-bin record counts from the first record's bin through the last;
/// interior empty bins are zero. Requires a non-empty stream.
std::vector<std::int64_t> bin_counts(const Stream& stream);

}  // namespace tfcl
