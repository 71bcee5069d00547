#include "storyarc/scoring.hpp"

#include <algorithm>
#include <fstream>

#include "storyarc/emotions.hpp"

namespace storyarc {

SentimentLexicon SentimentLexicon::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open sentiment lexicon: " + path);
    SentimentLexicon lex;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos) continue;
        double v = std::stod(line.substr(tab + 1));
        if (v < -1.0 || v > 1.0)
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": valence outside [-1,1]");
        lex.valence[line.substr(0, tab)] = v;
    }
    return lex;
}

EmotionLexicon EmotionLexicon::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open emotion lexicon: " + path);
    EmotionLexicon lex;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos) continue;
        std::string token = line.substr(0, tab);
        std::string rest = line.substr(tab + 1);
        std::vector<std::string> labels;
        std::string cur;
        for (char c : rest + ",") {
            if (c == ',') {
                if (!cur.empty()) {
                    if (!is_valid_emotion(cur))
                        throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                                 ": unknown emotion label '" + cur + "'");
                    labels.push_back(cur);
                }
                cur.clear();
            } else if (c != ' ') {
                cur.push_back(c);
            }
        }
        lex.labels[token] = std::move(labels);
    }
    return lex;
}

namespace {

double clamp_unit(double v) {
    return std::min(1.0 - kScoreEpsilon, std::max(kScoreEpsilon, v));
}

// lexicon lookup with verb-lemma fallback
template <typename Map>
typename Map::const_iterator lookup(const Map& m, const std::string& token,
                                    const VerbLexicon* verbs) {
    auto it = m.find(token);
    if (it != m.end()) return it;
    if (verbs) {
        auto lemma = verbs->lemma(token);
        if (lemma) return m.find(*lemma);
    }
    return m.end();
}

}  // namespace

double score_sentiment(const std::vector<std::string>& sentence_tokens,
                       const SentimentLexicon& lexicon, const VerbLexicon* verbs) {
    double sum = 0.0;
    int matched = 0;
    for (const std::string& tok : sentence_tokens) {
        auto it = lookup(lexicon.valence, tok, verbs);
        if (it == lexicon.valence.end()) continue;
        sum += it->second;
        ++matched;
    }
    if (matched == 0) return 0.5;
    return clamp_unit((sum / matched + 1.0) / 2.0);
}

std::vector<std::pair<std::string, double>> score_emotions(
    const std::vector<std::string>& sentence_tokens, const EmotionLexicon& lexicon,
    const VerbLexicon* verbs) {
    std::map<std::string, int> label_counts;
    int total = 0;
    for (const std::string& tok : sentence_tokens) {
        auto it = lookup(lexicon.labels, tok, verbs);
        if (it == lexicon.labels.end()) continue;
        ++total;
        for (const std::string& label : it->second) ++label_counts[label];
    }
    std::vector<std::pair<std::string, double>> out;
    if (total == 0) return out;
    for (const std::string& label : emotion_vocabulary()) {
        auto it = label_counts.find(label);
        if (it == label_counts.end()) continue;
        out.emplace_back(label, clamp_unit(static_cast<double>(it->second) / total));
    }
    return out;
}

double circumstance(double s, const std::vector<std::pair<std::string, double>>& emotions,
                    const CircumstanceParams& params) {
    double t = params.alpha * s;
    for (const auto& [label, conf] : emotions) {
        auto it = params.weights.find(label);
        if (it == params.weights.end())
            throw UnknownEmotionError("no weight for emotion label '" + label + "'");
        t += it->second * conf;
    }
    return t;
}

std::vector<std::string> sentence_tokens_lower(const Document& doc, int sentence_index) {
    std::vector<std::string> out;
    int f = doc.sentence_first_token[sentence_index];
    int n = doc.sentence_token_count[sentence_index];
    out.reserve(n);
    for (int i = f; i < f + n; ++i) out.push_back(doc.tokens[i].lowercase);
    return out;
}

void score_records(const Document& doc, std::vector<EventRecord>& records,
                   const SentimentLexicon& sentiment, const EmotionLexicon& emotion,
                   const CircumstanceParams& params, const VerbLexicon* verbs,
                   const TaggedEvents* merged) {
    // sentence scores shared across events of the same sentence
    int cached_sentence = -1;
    double cached_s = 0.5;
    std::vector<std::pair<std::string, double>> cached_emotions;

    for (EventRecord& rec : records) {
        int si = rec.trigger.sentence_index;
        if (si != cached_sentence) {
            std::vector<std::string> toks = sentence_tokens_lower(doc, si);
            cached_s = score_sentiment(toks, sentiment, verbs);
            cached_emotions = score_emotions(toks, emotion, verbs);
            cached_sentence = si;
        }
        rec.sentiment = cached_s;
        rec.emotions = cached_emotions;
        if (merged) {
            auto it = merged->overrides.find(rec.trigger.token_index);
            if (it != merged->overrides.end()) {
                if (it->second.sentiment) rec.sentiment = *it->second.sentiment;
                if (!it->second.emotions.empty()) rec.emotions = it->second.emotions;
            }
        }
        rec.t = circumstance(rec.sentiment, rec.emotions, params);
    }
}

}  // namespace storyarc
