#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "affect/corpus.hpp"

namespace affect {

// Recipe for a deterministic labeled corpus: every emotion draws its
// tokens from its own vocabulary profile, and each document's text
// starts with the label keyword itself.
struct GeneratorSpec {
    EmotionSet emotions = EmotionSet::twelve();
    std::size_t docs_per_emotion = 100;

    // Profiles are synthesized unless given explicitly: `overlap` of
    // each profile's vocab_size tokens is shared across all emotions,
    // the rest are unique to the emotion.
    std::size_t vocab_size = 50;
    double overlap = 0.0;                            // 0 disjoint .. 1 identical
    std::vector<std::vector<std::string>> profiles;  // optional, emotions order

    std::size_t min_tokens = 5;    // per document, excluding the label
    std::size_t max_tokens = 12;
    std::vector<std::string> timezones;  // cycled per emotion; default: all region zones
    std::int64_t start_time = 1350604800;  // 2012-10-19T00:00:00Z
    std::int64_t time_step = 1;            // seconds between documents
};

// JSON file -> spec.  Recognized keys: emotions, docs_per_emotion,
// vocab_size, overlap, profiles, min_tokens, max_tokens, timezones,
// start_time (ISO-8601), time_step_seconds.
GeneratorSpec load_generator_spec(const std::string& path);

// The token lists actually used (synthesized or explicit).  Throws
// ConfigError on an empty profile.
std::vector<std::vector<std::string>> resolve_profiles(const GeneratorSpec& spec);

// Deterministic for a fixed (spec, seed); documents come out in stable
// corpus order (created_at ascending).
std::vector<Document> generate_synthetic(const GeneratorSpec& spec, std::uint64_t seed);

// One JSON record per line, the format parse_corpus reads back.
void write_corpus_jsonl(std::ostream& out, const std::vector<Document>& docs);

}  // namespace affect
