#include "storyarc/participants.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace storyarc {

namespace {

bool is_passive_aux(const std::string& low) {
    return low == "was" || low == "were" || low == "been";
}

bool is_adverbish(const std::string& low) {
    return low.size() > 2 && low.compare(low.size() - 2, 2, "ly") == 0;
}

bool is_coordinator(const std::string& low) {
    return low == "and" || low == "or" || low == "," || low == "then";
}

}  // namespace

std::vector<EventRecord> assign_roles(const Document& doc,
                                      const std::vector<EventTrigger>& triggers,
                                      const std::vector<Mention>& mentions,
                                      const TaggedEvents* merged) {
    // clustered mentions grouped per sentence, in token order
    std::vector<std::vector<int>> by_sentence(doc.sentences.size());
    for (size_t i = 0; i < mentions.size(); ++i) {
        if (!mentions[i].cluster_id) continue;  // unresolved pronouns do not participate
        by_sentence[mentions[i].sentence_index].push_back(static_cast<int>(i));
    }
    std::vector<bool> is_trigger(doc.tokens.size(), false);
    for (const EventTrigger& tr : triggers) is_trigger[tr.token_index] = true;

    // cluster lookup for an annotation-supplied char span
    auto cluster_for_span = [&](const CharSpan& sp) -> std::optional<int> {
        for (const Mention& m : mentions) {
            if (!m.cluster_id) continue;
            std::size_t ms = doc.tokens[m.start_token].start;
            std::size_t me = doc.tokens[m.end_token - 1].end;
            if (ms <= sp.start && sp.start < me) return m.cluster_id;
        }
        return std::nullopt;
    };

    std::vector<EventRecord> out;
    for (const EventTrigger& tr : triggers) {
        int s = tr.sentence_index;
        int ti = tr.token_index;
        const std::vector<int>& cand = by_sentence[s];

        // nearest preceding / following clustered mentions
        int prev_m = -1, next_m = -1;
        for (int mi : cand) {
            const Mention& m = mentions[mi];
            if (m.end_token <= ti) {
                if (prev_m < 0 || m.end_token > mentions[prev_m].end_token ||
                    (m.end_token == mentions[prev_m].end_token &&
                     m.kind == MentionKind::proper_name &&
                     mentions[prev_m].kind == MentionKind::pronoun))
                    prev_m = mi;
            } else if (m.start_token > ti) {
                if (next_m < 0) next_m = mi;  // token order gives the nearest
            }
        }

        // shared-subject check: an intervening trigger blocks the preceding
        // mention unless everything between is a coordinated verb group
        if (prev_m >= 0) {
            bool blocked = false, coordinated = true;
            for (int k = mentions[prev_m].end_token; k < ti; ++k) {
                if (is_trigger[k]) {
                    blocked = true;
                } else if (!is_coordinator(doc.tokens[k].lowercase) &&
                           !is_adverbish(doc.tokens[k].lowercase)) {
                    coordinated = false;
                }
            }
            if (blocked && !coordinated) prev_m = -1;
        }

        // passive voice: was/were/been immediately before the verb group
        bool passive = false;
        int first_tok = doc.sentence_first_token[s];
        for (int k = ti - 1, steps = 0; k >= first_tok && steps < 3; --k, ++steps) {
            const std::string& low = doc.tokens[k].lowercase;
            if (is_passive_aux(low)) {
                passive = true;
                break;
            }
            if (!is_adverbish(low) && low != "being" && low != "not" && low != "never") break;
        }

        std::optional<int> actor, experiencer;
        if (passive) {
            if (prev_m >= 0) experiencer = mentions[prev_m].cluster_id;
            // by-phrase actor
            int sent_end = first_tok + doc.sentence_token_count[s];
            for (int k = ti + 1; k < sent_end && k <= ti + 4; ++k) {
                if (doc.tokens[k].lowercase == "by") {
                    for (int mi : cand) {
                        if (mentions[mi].start_token > k) {
                            actor = mentions[mi].cluster_id;
                            break;
                        }
                    }
                    break;
                }
            }
        } else {
            if (prev_m >= 0) actor = mentions[prev_m].cluster_id;
            if (next_m >= 0) experiencer = mentions[next_m].cluster_id;
        }

        // external annotation roles win when resolvable
        if (merged) {
            auto it = merged->overrides.find(ti);
            if (it != merged->overrides.end()) {
                if (it->second.actor) {
                    auto c = cluster_for_span(*it->second.actor);
                    if (c) actor = c;
                }
                if (it->second.experiencer) {
                    auto c = cluster_for_span(*it->second.experiencer);
                    if (c) experiencer = c;
                }
            }
        }

        if (!actor && !experiencer) continue;
        if (!experiencer) experiencer = actor;  // self-relation (intransitives)
        if (!actor) actor = experiencer;        // agentless passives

        EventRecord rec;
        rec.event_id = tr.event_id;
        rec.trigger = tr;
        rec.actor_cluster = actor;
        rec.experiencer_cluster = experiencer;
        out.push_back(std::move(rec));
    }
    return out;
}

std::vector<EventRecord> dedupe_sentence_events(const std::vector<EventRecord>& records) {
    std::vector<EventRecord> out;
    int cur_sentence = -1;
    std::set<std::pair<int, int>> seen;
    for (const EventRecord& r : records) {
        if (r.trigger.sentence_index != cur_sentence) {
            cur_sentence = r.trigger.sentence_index;
            seen.clear();
        }
        std::pair<int, int> key{r.actor_cluster.value_or(-1), r.experiencer_cluster.value_or(-1)};
        if (seen.insert(key).second) out.push_back(r);
    }
    return out;
}

}  // namespace storyarc
