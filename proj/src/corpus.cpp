#include "tfcl/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "tfcl/errors.hpp"

namespace tfcl {
namespace {

// --- UTF-8 handling -------------------------------------------------------
//
// The tokenizer decodes codepoints, classifies separators, and lowercases
// Latin/Greek/Cyrillic letters. Anything outside those scripts passes through
// unchanged; malformed bytes act as separators.

std::uint32_t decode_utf8(std::string_view s, std::size_t& i) {
    const auto byte = [&](std::size_t k) { return static_cast<unsigned char>(s[k]); };
    const unsigned char b0 = byte(i);
    if (b0 < 0x80) {
        i += 1;
        return b0;
    }
    auto cont = [&](std::size_t k) { return k < s.size() && (byte(k) & 0xC0) == 0x80; };
    if ((b0 & 0xE0) == 0xC0 && cont(i + 1)) {
        std::uint32_t cp = (b0 & 0x1Fu) << 6 | (byte(i + 1) & 0x3Fu);
        i += 2;
        return cp;
    }
    if ((b0 & 0xF0) == 0xE0 && cont(i + 1) && cont(i + 2)) {
        std::uint32_t cp = (b0 & 0x0Fu) << 12 | (byte(i + 1) & 0x3Fu) << 6 | (byte(i + 2) & 0x3Fu);
        i += 3;
        return cp;
    }
    if ((b0 & 0xF8) == 0xF0 && cont(i + 1) && cont(i + 2) && cont(i + 3)) {
        std::uint32_t cp = (b0 & 0x07u) << 18 | (byte(i + 1) & 0x3Fu) << 12 |
                           (byte(i + 2) & 0x3Fu) << 6 | (byte(i + 3) & 0x3Fu);
        i += 4;
        return cp;
    }
    i += 1;
    return 0xFFFD;  // malformed byte: treated as separator below
}

void encode_utf8(std::uint32_t cp, std::string& out) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

bool is_separator(std::uint32_t cp) {
    if (cp < 0x80) return !std::isalnum(static_cast<int>(cp));
    if (cp == 0xFFFD) return true;
    if (cp >= 0xA0 && cp <= 0xBF) return true;    // Latin-1 punctuation and signs
    if (cp == 0xD7 || cp == 0xF7) return true;    // multiplication/division signs
    if (cp >= 0x2000 && cp <= 0x2BFF) return true;  // general punctuation, arrows, math
    if (cp >= 0x3000 && cp <= 0x303F) return true;  // CJK punctuation
    if (cp >= 0xFE00 && cp <= 0xFE0F) return true;  // variation selectors
    if (cp >= 0x1F000 && cp <= 0x1FAFF) return true;  // emoji and symbol planes
    return false;
}

std::uint32_t to_lower(std::uint32_t cp) {
    if (cp < 0x80) return static_cast<std::uint32_t>(std::tolower(static_cast<int>(cp)));
    if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;  // Latin-1 capitals
    if (cp >= 0x100 && cp <= 0x137) return (cp % 2 == 0) ? cp + 1 : cp;
    if (cp >= 0x139 && cp <= 0x148) return (cp % 2 == 1) ? cp + 1 : cp;
    if (cp >= 0x14A && cp <= 0x177) return (cp % 2 == 0) ? cp + 1 : cp;
    if (cp == 0x178) return 0xFF;  // Y with diaeresis
    if (cp >= 0x179 && cp <= 0x17E) return (cp % 2 == 1) ? cp + 1 : cp;
    if (cp >= 0x391 && cp <= 0x3A9 && cp != 0x3A2) return cp + 0x20;  // Greek capitals
    if (cp >= 0x410 && cp <= 0x42F) return cp + 0x20;                 // Cyrillic capitals
    if (cp >= 0x400 && cp <= 0x40F) return cp + 0x50;
    return cp;
}

// --- RFC3339 --------------------------------------------------------------

// Howard Hinnant's civil-days formula.
std::int64_t days_from_civil(std::int64_t y, unsigned m, unsigned d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

bool parse_uint(std::string_view s, std::size_t pos, std::size_t len, unsigned& out) {
    if (pos + len > s.size()) return false;
    unsigned v = 0;
    for (std::size_t k = 0; k < len; ++k) {
        const char c = s[pos + k];
        if (c < '0' || c > '9') return false;
        v = v * 10 + static_cast<unsigned>(c - '0');
    }
    out = v;
    return true;
}

}  // namespace

std::int64_t parse_rfc3339(std::string_view text) {
    unsigned year, month, day, hour, minute, second;
    const bool shape_ok = text.size() >= 20 && parse_uint(text, 0, 4, year) && text[4] == '-' &&
                          parse_uint(text, 5, 2, month) && text[7] == '-' &&
                          parse_uint(text, 8, 2, day) &&
                          (text[10] == 'T' || text[10] == 't' || text[10] == ' ') &&
                          parse_uint(text, 11, 2, hour) && text[13] == ':' &&
                          parse_uint(text, 14, 2, minute) && text[16] == ':' &&
                          parse_uint(text, 17, 2, second);
    if (!shape_ok || month < 1 || month > 12 || day < 1 || day > 31 || hour > 23 ||
        minute > 59 || second > 60) {
        throw DataError("invalid RFC3339 timestamp: " + std::string(text));
    }
    std::size_t pos = 19;
    if (pos < text.size() && text[pos] == '.') {  // fractional seconds: parsed, floored away
        ++pos;
        const std::size_t frac_start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
        if (pos == frac_start) throw DataError("invalid RFC3339 timestamp: " + std::string(text));
    }
    std::int64_t offset = 0;
    if (pos < text.size() && (text[pos] == 'Z' || text[pos] == 'z')) {
        ++pos;
    } else if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        const int sign = text[pos] == '+' ? 1 : -1;
        unsigned oh, om;
        if (pos + 6 > text.size() || !parse_uint(text, pos + 1, 2, oh) || text[pos + 3] != ':' ||
            !parse_uint(text, pos + 4, 2, om) || oh > 23 || om > 59) {
            throw DataError("invalid RFC3339 timestamp: " + std::string(text));
        }
        offset = sign * (static_cast<std::int64_t>(oh) * 3600 + om * 60);
        pos += 6;
    } else {
        throw DataError("invalid RFC3339 timestamp: " + std::string(text));
    }
    if (pos != text.size()) throw DataError("invalid RFC3339 timestamp: " + std::string(text));
    const std::int64_t days = days_from_civil(year, month, day);
    return days * 86400 + hour * 3600 + minute * 60 + second - offset;
}

Stream parse_stream(std::istream& in, int bin_minutes) {
    if (bin_minutes <= 0) throw ConfigError("bin_minutes must be positive");
    Stream stream;
    stream.bin_minutes = bin_minutes;
    std::unordered_set<std::string> seen_ids;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        nlohmann::json obj;
        try {
            obj = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw DataError("line " + std::to_string(line_no) + ": " + e.what());
        }
        const auto fail = [&](const std::string& why) -> DataError {
            return DataError("line " + std::to_string(line_no) + ": " + why);
        };
        if (!obj.is_object()) throw fail("expected a JSON object");
        if (!obj.contains("id") || !obj["id"].is_string()) throw fail("missing string field \"id\"");
        if (!obj.contains("text") || !obj["text"].is_string())
            throw fail("missing string field \"text\"");
        if (!obj.contains("timestamp")) throw fail("missing field \"timestamp\"");

        Record rec;
        rec.id = obj["id"].get<std::string>();
        rec.text = obj["text"].get<std::string>();
        const auto& ts = obj["timestamp"];
        if (ts.is_number_integer()) {
            rec.timestamp = ts.get<std::int64_t>();
        } else if (ts.is_string()) {
            try {
                rec.timestamp = parse_rfc3339(ts.get<std::string>());
            } catch (const DataError& e) {
                throw fail(e.what());
            }
        } else {
            throw fail("\"timestamp\" must be an integer or RFC3339 string");
        }
        if (rec.id.empty()) throw fail("empty \"id\"");
        if (rec.timestamp < 0) throw fail("negative timestamp");
        if (rec.text.find_first_not_of(" \t\r\n") == std::string::npos) throw fail("empty \"text\"");
        if (!seen_ids.insert(rec.id).second) throw fail("duplicate id \"" + rec.id + "\"");
        stream.records.push_back(std::move(rec));
    }
    if (stream.records.empty()) throw DataError("empty stream");
    std::sort(stream.records.begin(), stream.records.end(),
              [](const Record& a, const Record& b) {
                  return std::tie(a.timestamp, a.id) < std::tie(b.timestamp, b.id);
              });
    return stream;
}

Stream parse_stream_file(const std::string& path, int bin_minutes) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open input file: " + path);
    return parse_stream(in, bin_minutes);
}

void write_stream(const Stream& stream, std::ostream& out) {
    for (const auto& rec : stream.records) {
        nlohmann::json obj{{"id", rec.id}, {"timestamp", rec.timestamp}, {"text", rec.text}};
        out << obj.dump() << '\n';
    }
}

TokenList split_tokens(std::string_view text) {
    TokenList tokens;
    std::string current;
    std::size_t i = 0;
    while (i < text.size()) {
        const std::uint32_t cp = decode_utf8(text, i);
        if (is_separator(cp)) {
            if (!current.empty()) {
                tokens.push_back(std::move(current));
                current.clear();
            }
        } else {
            encode_utf8(to_lower(cp), current);
        }
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    return tokens;
}

TokenList tokenize(std::string_view text, const StopwordSet& stopwords) {
    TokenList tokens = split_tokens(text);
    tokens.erase(std::remove_if(tokens.begin(), tokens.end(),
                                [&](const std::string& t) { return stopwords.count(t) > 0; }),
                 tokens.end());
    return tokens;
}

StopwordSet load_stopwords(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open stopword file: " + path);
    StopwordSet words;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto begin = line.find_first_not_of(" \t");
        if (begin == std::string::npos) continue;
        const auto end = line.find_last_not_of(" \t");
        words.insert(line.substr(begin, end - begin + 1));
    }
    return words;
}

NgramCounts ngrams(const TokenList& tokens, int n) {
    if (n < 1 || n > 3) throw std::invalid_argument("ngrams: n must be 1, 2 or 3");
    NgramCounts counts;
    if (tokens.size() < static_cast<std::size_t>(n)) return counts;
    for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
        std::string gram = tokens[i];
        for (int k = 1; k < n; ++k) {
            gram += ' ';
            gram += tokens[i + k];
        }
        ++counts[gram];
    }
    return counts;
}

std::int64_t bin_origin(const Stream& stream) {
    if (stream.records.empty()) throw DataError("empty stream");
    const std::int64_t first = stream.records.front().timestamp;
    if (stream.bin_minutes == 1440) return first - first % 86400;
    return first;
}

int bin_index(const Stream& stream, std::int64_t timestamp) {
    const std::int64_t width = static_cast<std::int64_t>(stream.bin_minutes) * 60;
    return static_cast<int>((timestamp - bin_origin(stream)) / width);
}

std::vector<std::int64_t> bin_counts(const Stream& stream) {
    if (stream.records.empty()) throw DataError("empty stream");
    const int last = bin_index(stream, stream.records.back().timestamp);
    std::vector<std::int64_t> counts(static_cast<std::size_t>(last) + 1, 0);
    for (const auto& rec : stream.records) ++counts[static_cast<std::size_t>(bin_index(stream, rec.timestamp))];
    return counts;
}

}  // namespace tfcl
