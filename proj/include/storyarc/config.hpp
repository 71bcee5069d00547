#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "storyarc/arcs.hpp"
#include "storyarc/characters.hpp"
#include "storyarc/corpus.hpp"
#include "storyarc/scoring.hpp"

namespace storyarc {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PipelineConfig {
    CleaningConfig cleaning;

    std::string verbs_path;
    std::string sentiment_path;
    std::string emotions_path;
    std::string genders_path;
    std::string honorifics_path;    // optional, defaults bundled
    std::string abbreviations_path;  // optional
    std::string stopwords_path;      // optional

    double alpha = 0.5;
    std::map<std::string, double> beta;  // emotion weights

    WindowSpec window;  // n=0 selects the length-based default
    int min_mentions = 5;
    int pronoun_window_sentences = 2;
    double dead_band_fraction = 0.02;
    double min_prominence_fraction = 0.05;  // of smoothed value range, for extrema export
    std::vector<std::string> pronouns = {"he", "she", "him", "her", "his", "hers"};

    std::string out_dir = "out";

    // Relative lexicon paths resolve against the config file's directory.
    // Validates file existence and numeric ranges.
    static PipelineConfig load(const std::string& path);

    // Bundled defaults rooted at a data directory.
    static PipelineConfig defaults(const std::string& data_dir);

    CharacterLexicons character_lexicons() const;
    CircumstanceParams circumstance_params() const;
    std::set<std::string> abbreviations() const;
};

WindowKind parse_window_kind(const std::string& name);  // savgol|mean|triangular

}  // namespace storyarc
