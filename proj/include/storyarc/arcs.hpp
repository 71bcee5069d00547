#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "storyarc/participants.hpp"
#include "storyarc/scoring.hpp"

namespace storyarc {

enum class WindowKind { rolling_mean, triangular_mean, savitzky_golay };

struct WindowSpec {
    WindowKind kind = WindowKind::savitzky_golay;
    int n = 0;  // odd window size; 0 selects max(5, round(L/10)) forced odd
    int p = 3;  // polynomial order (savitzky_golay only)
};

struct WindowParamError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Least-squares polynomial smoothing weights: degree-p fit over n equally
// spaced points, evaluated at the centre. deriv=0 weights sum to 1.
std::vector<double> savgol_coefficients(int n, int p, int deriv = 0);

struct SmoothResult {
    std::vector<double> values;
    bool too_short = false;  // series shorter than window, passed through
};

// Same-length smoothing with mirror padding at the boundaries.
SmoothResult apply_window(const std::vector<double>& series, const WindowSpec& spec);

struct RelationKey {
    int actor = 0;
    int experiencer = 0;
    auto operator<=>(const RelationKey&) const = default;
};

struct ArcPoint {
    int event_id = 0;
    int ordinal = 0;  // character/pair-local event position
    int sentence_index = 0;
    double raw = 0.0;
    double smoothed = 0.0;
};

struct RelationArc {
    RelationKey key;
    std::vector<ArcPoint> points;
    bool smoothing_skipped = false;
};

struct CharacterArc {
    int cluster_id = 0;
    std::vector<ArcPoint> actor_series;
    std::vector<ArcPoint> experiencer_series;
};

// Records must already be scored (EventRecord::t filled).
std::map<RelationKey, RelationArc> build_relation_arcs(const std::vector<EventRecord>& records,
                                                       const WindowSpec& spec);

CharacterArc build_character_arc(int cluster_id, const std::vector<EventRecord>& records,
                                 const WindowSpec& spec);

struct Extremum {
    int index = 0;  // position in the series
    int event_id = 0;
    bool is_peak = false;
    double prominence = 0.0;
};

std::vector<Extremum> find_extrema(const std::vector<ArcPoint>& series, double min_prominence);

// window size rule for merged character series: next odd >= max(5, round(L/10))
int auto_window_size(std::size_t series_length);

}  // namespace storyarc
