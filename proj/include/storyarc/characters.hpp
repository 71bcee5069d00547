#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "storyarc/corpus.hpp"

namespace storyarc {

enum class MentionKind { proper_name, pronoun };

struct Mention {
    int start_token = 0;
    int end_token = 0;  // exclusive
    MentionKind kind = MentionKind::proper_name;
    std::optional<int> cluster_id;
    int sentence_index = 0;
    std::string alias;  // normalized surface, e.g. "Mr. Sawyer"
};

struct CharacterCluster {
    int cluster_id = 0;
    std::string canonical_name;
    std::set<std::string> aliases;
    int mention_count = 0;
    std::vector<int> mention_indices;  // into the mention list (proper names only)
    char gender = 'u';                 // 'm', 'f', 'u'
    std::size_t first_offset = 0;
    std::size_t last_offset = 0;
};

struct CharacterLexicons {
    std::set<std::string> honorifics;       // without trailing period: "Mr", "Dr", ...
    std::set<std::string> pronouns;         // lowercase
    std::set<std::string> stopwords;        // lowercase function words
    std::map<std::string, char> genders;    // lowercase given name -> 'm'/'f'

    static CharacterLexicons defaults();
};

std::vector<Mention> detect_mentions(const Document& doc, const CharacterLexicons& lex);

// Clusters proper_name mentions and fills their cluster_id in place.
std::vector<CharacterCluster> cluster_names(const Document& doc, std::vector<Mention>& mentions);

// Binds pronoun mentions to the nearest gender-compatible preceding proper
// mention within `window_sentences`; unresolved pronouns keep empty cluster_id.
void resolve_pronouns(const Document& doc, std::vector<Mention>& mentions,
                      const std::vector<CharacterCluster>& clusters, const CharacterLexicons& lex,
                      int window_sentences = 2);

}  // namespace storyarc
