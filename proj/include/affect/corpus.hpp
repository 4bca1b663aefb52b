#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "affect/errors.hpp"

namespace affect {

// One labeled text item.  `created_at` is seconds since the Unix epoch
// (input files carry ISO-8601 UTC strings).
struct Document {
    std::string id;
    std::string text;
    std::string emotion;
    std::string timezone;
    std::int64_t created_at = 0;
};

// The fixed, ordered set of emotion keywords under analysis.  Order is
// the canonical row/column order of every downstream table.
class EmotionSet {
public:
    EmotionSet() = default;
    explicit EmotionSet(std::vector<std::string> keywords);

    // The twelve default keywords, alphabetical.
    static EmotionSet twelve();

    bool contains(std::string_view keyword) const;
    int index_of(std::string_view keyword) const;  // -1 when absent
    std::size_t size() const { return order_.size(); }
    const std::vector<std::string>& keywords() const { return order_; }
    const std::string& at(std::size_t i) const { return order_[i]; }

private:
    std::vector<std::string> order_;
    std::unordered_map<std::string, int> index_;
};

// A named set of timezones treated as one geographical region.
struct RegionSpec {
    std::string name;
    std::set<std::string> timezones;
};

// The three built-in regions (timezone lists ship with the tool and can
// be overridden by a JSON config file).
std::vector<RegionSpec> default_regions();

// Loads `{"RegionName": ["tz", ...], ...}` and validates that the
// timezone sets of distinct regions are disjoint.
std::vector<RegionSpec> load_regions(const std::string& path);
void validate_regions(const std::vector<RegionSpec>& regions);

// --- time helpers -------------------------------------------------------

// Strict "YYYY-MM-DDTHH:MM:SSZ" -> epoch seconds.
std::optional<std::int64_t> parse_iso8601_utc(std::string_view s);
std::string format_iso8601_utc(std::int64_t epoch_seconds);

// --- ingestion ----------------------------------------------------------

struct ParseIssue {
    std::size_t line = 0;
    std::string message;
};

struct ParseReport {
    std::size_t parsed = 0;
    std::size_t skipped_unknown_emotion = 0;
    std::vector<ParseIssue> issues;  // malformed lines, recoverable
};

// Reads line-delimited JSON records {id, text, emotion, timezone,
// created_at} in input order.  Malformed lines are recorded in the
// report and skipped; records whose emotion is outside `emotions` are
// counted and skipped.  Emotion labels are case-folded on ingest.
std::vector<Document> parse_corpus(std::istream& in, const EmotionSet& emotions,
                                   ParseReport* report = nullptr);

// Streaming variant: single pass, one callback per accepted document.
void for_each_document(std::istream& in, const EmotionSet& emotions,
                       const std::function<void(Document&&)>& sink,
                       ParseReport* report = nullptr);

// Opens `path` or throws IoError.
std::vector<Document> parse_corpus_file(const std::string& path,
                                        const EmotionSet& emotions,
                                        ParseReport* report = nullptr);

// --- corpus transforms --------------------------------------------------

// Key used for duplicate detection: case-folded, whitespace-collapsed text.
std::string dedupe_key(std::string_view text);

// Removes exact duplicates (by dedupe_key), keeping the first occurrence;
// order otherwise preserved.
std::vector<Document> dedupe(std::vector<Document> docs);

// Documents whose timezone is in the region, original order preserved.
std::vector<Document> partition_region(const std::vector<Document>& docs,
                                       const RegionSpec& region);

// Exactly n documents at stride floor(len/n), starting at `start`.
// Throws InsufficientDocumentsError when len < n.
std::vector<Document> modulus_sample(const std::vector<Document>& docs,
                                     std::size_t n, std::size_t start,
                                     std::string_view emotion = "",
                                     std::string_view scope = "");

// A balanced sample: exactly n_per_emotion documents for every keyword,
// in stable corpus order (created_at, then id).
struct Subcorpus {
    std::string name;
    EmotionSet emotions;
    std::vector<std::vector<Document>> per_emotion;  // emotions order
    std::size_t n_per_emotion = 0;

    std::size_t total_documents() const;
};

// Groups `docs` by emotion, sorts each group by (created_at, id), and
// modulus-samples n_per_emotion documents per emotion with start 0.
Subcorpus build_subcorpus(const std::vector<Document>& docs, std::string name,
                          const EmotionSet& emotions, std::size_t n_per_emotion);

// `count` region-agnostic control subcorpora named control1..controlN.
// Control i draws one start index per emotion, uniform in [0, stride),
// from a generator seeded with std::seed_seq{seed, i}; i is 1-based.
std::vector<Subcorpus> make_controls(const std::vector<Document>& docs,
                                     const EmotionSet& emotions,
                                     std::size_t n_per_emotion,
                                     std::size_t count, std::uint64_t seed);

}  // namespace affect
