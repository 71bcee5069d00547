#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "storyarc/corpus.hpp"
#include "storyarc/events.hpp"
#include "storyarc/participants.hpp"

namespace storyarc {

struct SentimentLexicon {
    std::unordered_map<std::string, double> valence;  // lemma -> [-1, 1]

    static SentimentLexicon load(const std::string& path);
};

struct EmotionLexicon {
    std::unordered_map<std::string, std::vector<std::string>> labels;  // lemma -> labels

    static EmotionLexicon load(const std::string& path);
};

struct CircumstanceParams {
    double alpha = 0.5;                     // in (0, 1)
    std::map<std::string, double> weights;  // label -> beta in [-2, 2]
};

struct UnknownEmotionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr double kScoreEpsilon = 0.001;

// Mean lexicon valence of the sentence mapped into (0,1); 0.5 when nothing
// matches. Tokens missing from the lexicon fall back to their verb lemma.
double score_sentiment(const std::vector<std::string>& sentence_tokens,
                       const SentimentLexicon& lexicon, const VerbLexicon* verbs = nullptr);

// Per-label confidence = matched tokens for label / total matched tokens,
// clamped into (0,1); returned in emotion-vocabulary order.
std::vector<std::pair<std::string, double>> score_emotions(
    const std::vector<std::string>& sentence_tokens, const EmotionLexicon& lexicon,
    const VerbLexicon* verbs = nullptr);

// t = alpha * s + sum_i beta_i * c_i
double circumstance(double s, const std::vector<std::pair<std::string, double>>& emotions,
                    const CircumstanceParams& params);

// Fills sentiment, emotions and t for each record from its sentence context;
// interchange overrides take precedence over lexicon scores.
void score_records(const Document& doc, std::vector<EventRecord>& records,
                   const SentimentLexicon& sentiment, const EmotionLexicon& emotion,
                   const CircumstanceParams& params, const VerbLexicon* verbs = nullptr,
                   const TaggedEvents* merged = nullptr);

std::vector<std::string> sentence_tokens_lower(const Document& doc, int sentence_index);

}  // namespace storyarc
