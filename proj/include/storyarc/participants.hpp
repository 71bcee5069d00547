#pragma once

#include <optional>
#include <vector>

#include "storyarc/characters.hpp"
#include "storyarc/corpus.hpp"
#include "storyarc/events.hpp"

namespace storyarc {

struct EventRecord {
    int event_id = 0;
    EventTrigger trigger;
    std::optional<int> actor_cluster;
    std::optional<int> experiencer_cluster;
    double sentiment = 0.5;
    std::vector<std::pair<std::string, double>> emotions;
    double t = 0.0;  // circumstance, filled by scoring
};

// Proximity SRL: nearest preceding clustered mention is the actor, nearest
// following is the experiencer; passive voice swaps with the by-phrase as
// actor. Single-participant events become self-relations. Events with no
// resolvable participant are dropped.
std::vector<EventRecord> assign_roles(const Document& doc,
                                      const std::vector<EventTrigger>& triggers,
                                      const std::vector<Mention>& mentions,
                                      const TaggedEvents* merged = nullptr);

// Keeps only the first event per (sentence, actor, experiencer) triple.
std::vector<EventRecord> dedupe_sentence_events(const std::vector<EventRecord>& records);

}  // namespace storyarc
