#include "storyarc/emotions.hpp"

#include <algorithm>

namespace storyarc {

const std::vector<std::string>& emotion_vocabulary() {
    static const std::vector<std::string> vocab = {
        "admiration", "amusement",  "anger",        "annoyance",   "approval",
        "caring",     "confusion",  "curiosity",    "desire",      "disappointment",
        "disapproval", "disgust",   "embarrassment", "excitement", "fear",
        "gratitude",  "grief",      "joy",          "love",        "nervousness",
        "optimism",   "pride",      "realization",  "relief",      "remorse",
        "sadness",    "surprise",   "neutral"};
    return vocab;
}

bool is_valid_emotion(const std::string& label) {
    const auto& v = emotion_vocabulary();
    return std::find(v.begin(), v.end(), label) != v.end();
}

std::map<std::string, double> default_emotion_weights() {
    std::map<std::string, double> w;
    for (const std::string& plus2 : {"joy", "love", "gratitude", "excitement"}) w[plus2] = 2.0;
    for (const std::string& plus1 : {"admiration", "amusement", "approval", "caring", "curiosity",
                                     "desire", "optimism", "pride", "relief"})
        w[plus1] = 1.0;
    for (const std::string& zero : {"realization", "surprise", "neutral"}) w[zero] = 0.0;
    for (const std::string& minus1 : {"annoyance", "confusion", "disappointment", "disapproval",
                                      "embarrassment", "nervousness", "remorse"})
        w[minus1] = -1.0;
    for (const std::string& minus2 : {"anger", "disgust", "fear", "grief", "sadness"})
        w[minus2] = -2.0;
    return w;
}

}  // namespace storyarc
