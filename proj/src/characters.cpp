#include "storyarc/characters.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "storyarc/utf8.hpp"

namespace storyarc {

CharacterLexicons CharacterLexicons::defaults() {
    CharacterLexicons lex;
    lex.honorifics = {"Mr",    "Mrs",   "Ms",    "Miss",      "Dr",   "Professor", "Sir",
                      "Lady",  "Lord",  "Madam", "Madame",    "Capt", "Captain",   "Col",
                      "Major", "Fr",    "Rev",   "Sergeant",  "St",   "Master",    "Dame",
                      "King",  "Queen", "Prince", "Princess"};
    lex.pronouns = {"he", "she", "him", "her", "his", "hers"};
    lex.stopwords = {"the", "a",  "an",  "and", "but", "or",   "if",  "so",   "then", "when",
                     "while", "as", "at", "by", "for", "from", "in",  "into", "of",   "on",
                     "to",  "up", "with", "it", "its", "they", "them", "their", "we",  "us",
                     "our", "you", "your", "i",  "me",  "my",   "mine", "this", "that", "these",
                     "those", "there", "here", "not", "no",   "yes",  "oh",   "what", "who",
                     "why", "how", "where", "which", "all", "some", "one", "two", "after",
                     "before", "once", "now", "soon", "still", "yet", "even", "just", "only",
                     "later", "finally", "suddenly", "meanwhile", "perhaps", "maybe", "indeed",
                     "however", "although", "though", "because", "until", "unless", "since",
                     "beside", "besides", "behind", "above", "below", "during", "against",
                     "around", "across", "along", "toward", "towards", "without", "within",
                     "inside", "outside", "under", "over", "again", "never", "always", "often",
                     "sometimes", "almost", "away", "back", "down", "out", "off", "such",
                     "each", "every", "both", "few", "many", "much", "other", "another",
                     "any", "anyone", "everyone", "everybody", "everything", "someone",
                     "somebody", "something", "nobody", "nothing", "none", "about", "between",
                     "upon", "near", "than", "thus", "was", "were", "had", "have", "has",
                     "did", "could", "would", "should", "might", "must", "will", "shall"};
    return lex;
}

namespace {

bool starts_alpha(const std::string& s) {
    if (s.empty()) return false;
    unsigned char c = static_cast<unsigned char>(s[0]);
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c >= 0x80;
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ' ') {
            if (!cur.empty()) out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

std::string lower_ascii(const std::string& s) {
    std::string out = s;
    for (char& c : out)
        if (c >= 'A' && c <= 'Z') c += 32;
    return out;
}

std::string strip_trailing_period(const std::string& s) {
    if (!s.empty() && s.back() == '.') return s.substr(0, s.size() - 1);
    return s;
}

}  // namespace

std::vector<Mention> detect_mentions(const Document& doc, const CharacterLexicons& lex) {
    std::vector<Mention> mentions;
    const auto& toks = doc.tokens;

    // evidence pass: surfaces capitalized mid-sentence, lowercase forms seen lowercase
    std::unordered_set<std::string> mid_caps;
    std::unordered_set<std::string> seen_lowercase;
    std::vector<bool> sentence_initial(toks.size(), false);
    for (int s = 0; s < static_cast<int>(doc.sentences.size()); ++s) {
        int f = doc.sentence_first_token[s];
        if (doc.sentence_token_count[s] > 0) sentence_initial[f] = true;
    }
    for (size_t i = 0; i < toks.size(); ++i) {
        if (!starts_alpha(toks[i].surface)) continue;
        if (toks[i].is_capitalized) {
            if (!sentence_initial[i]) mid_caps.insert(toks[i].surface);
        } else {
            seen_lowercase.insert(toks[i].lowercase);
        }
    }

    auto is_honorific = [&](size_t i) {
        return toks[i].is_capitalized && lex.honorifics.count(toks[i].surface) > 0;
    };
    auto qualifies = [&](size_t i) {
        const TokenSpan& t = toks[i];
        if (!t.is_capitalized || !starts_alpha(t.surface)) return false;
        if (lex.pronouns.count(t.lowercase) || lex.stopwords.count(t.lowercase)) return false;
        if (is_honorific(i)) return true;
        if (!sentence_initial[i]) return true;
        // sentence-initial: needs mid-sentence capitalization evidence elsewhere,
        // or no lowercase occurrences anywhere in the document
        return mid_caps.count(t.surface) > 0 || seen_lowercase.count(t.lowercase) == 0;
    };

    for (int s = 0; s < static_cast<int>(doc.sentences.size()); ++s) {
        int f = doc.sentence_first_token[s];
        int n = doc.sentence_token_count[s];
        int i = f;
        while (i < f + n) {
            const TokenSpan& t = toks[i];
            if (lex.pronouns.count(t.lowercase)) {
                Mention m;
                m.start_token = i;
                m.end_token = i + 1;
                m.kind = MentionKind::pronoun;
                m.sentence_index = s;
                m.alias = t.lowercase;
                mentions.push_back(std::move(m));
                ++i;
                continue;
            }
            if (qualifies(i)) {
                int start = i;
                std::string alias;
                while (i < f + n && qualifies(i)) {
                    if (!alias.empty()) alias += ' ';
                    alias += toks[i].surface;
                    if (is_honorific(i) && i + 1 < f + n && toks[i + 1].surface == ".") {
                        alias += '.';
                        i += 2;
                    } else {
                        ++i;
                    }
                }
                Mention m;
                m.start_token = start;
                m.end_token = i;
                m.kind = MentionKind::proper_name;
                m.sentence_index = s;
                m.alias = std::move(alias);
                mentions.push_back(std::move(m));
                continue;
            }
            ++i;
        }
    }
    return mentions;
}

namespace {

struct AliasInfo {
    std::string alias;
    std::vector<std::string> content;  // lowercase tokens, honorifics stripped
    int count = 0;
    int first_mention = 0;
};

// honorific-stripped lowercase tokens; falls back to the honorifics themselves
// for honorific-only aliases ("Professor")
std::vector<std::string> content_tokens(const std::string& alias,
                                        const std::set<std::string>& honorifics) {
    std::vector<std::string> parts = split_ws(alias);
    std::vector<std::string> out;
    for (const auto& p : parts) {
        if (honorifics.count(strip_trailing_period(p))) continue;
        out.push_back(lower_ascii(p));
    }
    if (out.empty())
        for (const auto& p : parts) out.push_back(lower_ascii(strip_trailing_period(p)));
    return out;
}

bool is_initial_of(const std::string& a, const std::string& b) {
    std::string x = strip_trailing_period(a);
    return x.size() == 1 && !b.empty() && b[0] == x[0];
}

bool names_compatible(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    if (a.empty() || b.empty()) return false;
    auto subset = [](const std::vector<std::string>& s, const std::vector<std::string>& t) {
        for (const auto& x : s)
            if (std::find(t.begin(), t.end(), x) == t.end()) return false;
        return true;
    };
    if (subset(a, b) || subset(b, a)) return true;
    // shared surname with compatible first tokens
    if (a.size() >= 2 && b.size() >= 2 && a.back() == b.back()) {
        const std::string& fa = a.front();
        const std::string& fb = b.front();
        if (fa == fb || is_initial_of(fa, fb) || is_initial_of(fb, fa)) return true;
    }
    return false;
}

}  // namespace

std::vector<CharacterCluster> cluster_names(const Document& doc, std::vector<Mention>& mentions) {
    static const CharacterLexicons defaults = CharacterLexicons::defaults();
    const std::set<std::string>& honorifics = defaults.honorifics;

    std::unordered_map<std::string, int> alias_index;
    std::vector<AliasInfo> aliases;
    for (size_t mi = 0; mi < mentions.size(); ++mi) {
        const Mention& m = mentions[mi];
        if (m.kind != MentionKind::proper_name) continue;
        auto it = alias_index.find(m.alias);
        if (it == alias_index.end()) {
            AliasInfo info;
            info.alias = m.alias;
            info.content = content_tokens(m.alias, honorifics);
            info.count = 1;
            info.first_mention = static_cast<int>(mi);
            alias_index.emplace(m.alias, static_cast<int>(aliases.size()));
            aliases.push_back(std::move(info));
        } else {
            ++aliases[it->second].count;
        }
    }

    // longest names seed clusters first; ambiguity then resolves by cluster size
    std::vector<int> order(aliases.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        const AliasInfo& a = aliases[x];
        const AliasInfo& b = aliases[y];
        if (a.content.size() != b.content.size()) return a.content.size() > b.content.size();
        if (a.count != b.count) return a.count > b.count;
        if (a.first_mention != b.first_mention) return a.first_mention < b.first_mention;
        return a.alias < b.alias;
    });

    struct ProtoCluster {
        std::vector<int> alias_ids;
        int canonical_alias = -1;
        int mention_count = 0;
        int first_mention = 0;
    };
    std::vector<ProtoCluster> protos;
    auto better_canonical = [&](int cand, int cur) {
        if (cur < 0) return true;
        const AliasInfo& a = aliases[cand];
        const AliasInfo& b = aliases[cur];
        if (a.content.size() != b.content.size()) return a.content.size() > b.content.size();
        if (a.alias.size() != b.alias.size()) return a.alias.size() > b.alias.size();
        return a.first_mention < b.first_mention;
    };
    for (int ai : order) {
        const AliasInfo& info = aliases[ai];
        int best = -1;
        for (size_t c = 0; c < protos.size(); ++c) {
            if (!names_compatible(info.content, aliases[protos[c].canonical_alias].content))
                continue;
            if (best < 0 || protos[c].mention_count > protos[best].mention_count ||
                (protos[c].mention_count == protos[best].mention_count &&
                 protos[c].first_mention < protos[best].first_mention)) {
                best = static_cast<int>(c);
            }
        }
        if (best < 0) {
            ProtoCluster pc;
            pc.alias_ids = {ai};
            pc.canonical_alias = ai;
            pc.mention_count = info.count;
            pc.first_mention = info.first_mention;
            protos.push_back(std::move(pc));
        } else {
            ProtoCluster& pc = protos[best];
            pc.alias_ids.push_back(ai);
            pc.mention_count += info.count;
            pc.first_mention = std::min(pc.first_mention, info.first_mention);
            if (better_canonical(ai, pc.canonical_alias)) pc.canonical_alias = ai;
        }
    }

    std::sort(protos.begin(), protos.end(),
              [](const ProtoCluster& a, const ProtoCluster& b) {
                  return a.first_mention < b.first_mention;
              });

    std::unordered_map<std::string, int> alias_to_cluster;
    std::vector<CharacterCluster> clusters;
    for (size_t c = 0; c < protos.size(); ++c) {
        CharacterCluster cc;
        cc.cluster_id = static_cast<int>(c);
        cc.canonical_name = aliases[protos[c].canonical_alias].alias;
        for (int ai : protos[c].alias_ids) {
            cc.aliases.insert(aliases[ai].alias);
            alias_to_cluster[aliases[ai].alias] = cc.cluster_id;
        }
        clusters.push_back(std::move(cc));
    }

    for (size_t mi = 0; mi < mentions.size(); ++mi) {
        Mention& m = mentions[mi];
        if (m.kind != MentionKind::proper_name) continue;
        int cid = alias_to_cluster.at(m.alias);
        m.cluster_id = cid;
        CharacterCluster& cc = clusters[cid];
        ++cc.mention_count;
        cc.mention_indices.push_back(static_cast<int>(mi));
        std::size_t off = doc.tokens[m.start_token].start;
        if (cc.mention_indices.size() == 1) cc.first_offset = off;
        cc.last_offset = doc.tokens[m.end_token - 1].end;
    }
    return clusters;
}

namespace {

char pronoun_gender(const std::string& p) {
    if (p == "he" || p == "him" || p == "his" || p == "himself") return 'm';
    if (p == "she" || p == "her" || p == "hers" || p == "herself") return 'f';
    return 'u';
}

}  // namespace

void resolve_pronouns(const Document& doc, std::vector<Mention>& mentions,
                      const std::vector<CharacterCluster>& clusters, const CharacterLexicons& lex,
                      int window_sentences) {
    (void)doc;
    // cluster gender: lexicon lookup on the canonical given name
    std::vector<char> cluster_gender(clusters.size(), 'u');
    for (const CharacterCluster& cc : clusters) {
        static const CharacterLexicons defaults = CharacterLexicons::defaults();
        std::vector<std::string> content =
            content_tokens(cc.canonical_name, defaults.honorifics);
        char g = 'u';
        if (!content.empty()) {
            auto it = lex.genders.find(content.front());
            if (it != lex.genders.end()) g = it->second;
        }
        cluster_gender[cc.cluster_id] = g;
    }

    for (size_t i = 0; i < mentions.size(); ++i) {
        Mention& m = mentions[i];
        if (m.kind != MentionKind::pronoun) continue;
        char pg = pronoun_gender(m.alias);
        for (size_t j = i; j-- > 0;) {
            const Mention& cand = mentions[j];
            if (cand.sentence_index < m.sentence_index - window_sentences) break;
            if (cand.kind != MentionKind::proper_name || !cand.cluster_id) continue;
            char cg = cluster_gender[*cand.cluster_id];
            if (pg == 'u' || cg == 'u' || pg == cg) {
                m.cluster_id = cand.cluster_id;
                break;
            }
        }
    }
}

}  // namespace storyarc
