#pragma once

#include <iosfwd>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "storyarc/characters.hpp"
#include "storyarc/corpus.hpp"

namespace storyarc {

struct VerbLexicon {
    std::unordered_map<std::string, std::string> inflection_to_lemma;

    static VerbLexicon load(const std::string& path);
    std::optional<std::string> lemma(const std::string& lowercase_token) const;
};

enum class EventSource { heuristic, external };

struct EventTrigger {
    int event_id = 0;     // global narrative order
    int token_index = 0;
    std::string lemma;
    int sentence_index = 0;
    bool realis = true;
    EventSource source = EventSource::heuristic;
};

struct CharSpan {
    std::size_t start = 0;
    std::size_t end = 0;
};

struct AnnotationRecord {
    std::string doc_id;
    int sentence_index = 0;
    CharSpan trigger;
    std::optional<CharSpan> actor;
    std::optional<CharSpan> experiencer;
    std::optional<double> sentiment;
    std::vector<std::pair<std::string, double>> emotions;
};

struct AnnotationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TaggerOptions {
    std::set<std::string> modals = {"would", "could", "may", "might", "must", "shall", "will"};
    bool exclude_copular = true;
    int clause_scan_cap = 6;
};

// Verb-lexicon tagger with a realis filter. Tokens inside proper-name
// mentions are skipped when `mentions` is supplied.
std::vector<EventTrigger> tag_events(const Document& doc, const VerbLexicon& verbs,
                                     const TaggerOptions& opts = {},
                                     const std::vector<Mention>* mentions = nullptr);

// Line-delimited JSON interchange. Schema errors carry the 1-based line
// number; span bounds are checked against `doc` when provided.
std::vector<AnnotationRecord> ingest_annotations(std::istream& in, const Document* doc = nullptr);
std::vector<AnnotationRecord> ingest_annotations(const std::string& path,
                                                 const Document* doc = nullptr);

struct TaggedEvents {
    std::vector<EventTrigger> triggers;
    // overrides keyed by token index of the trigger
    std::unordered_map<int, AnnotationRecord> overrides;
};

// Merges external annotations into heuristic triggers by trigger-span
// identity (external wins); idempotent.
TaggedEvents merge_annotations(const Document& doc, std::vector<EventTrigger> heuristic,
                               const std::vector<AnnotationRecord>& records);

struct EventDensity {
    double density = 0.0;
    bool zero_words = false;
};

EventDensity event_density(const Document& doc, const std::vector<EventTrigger>& triggers);

}  // namespace storyarc
