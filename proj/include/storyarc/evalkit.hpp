#pragma once

#include <array>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace storyarc {

struct EvalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

double accuracy(const std::vector<std::string>& predicted, const std::vector<std::string>& gold);

struct RaterResponses {
    std::vector<std::vector<std::string>> answers;  // items x raters
    std::vector<std::string> categories;            // vocabulary, in first-seen order

    // CSV rows: item_id, rater_id, answer (optional header)
    static RaterResponses load_csv(std::istream& in);
    static RaterResponses load_csv(const std::string& path);

    // items x categories count matrix
    std::vector<std::vector<int>> count_matrix() const;
};

struct KappaResult {
    double kappa = 0.0;
    bool degenerate = false;  // expected agreement is 1 (single category observed)
};

// Fleiss kappa over an items x categories count matrix; every row must sum
// to the same rater count >= 2.
KappaResult fleiss_kappa(const std::vector<std::vector<int>>& counts);
KappaResult fleiss_kappa(const RaterResponses& responses);

enum class Shift { positive = 0, neutral = 1, negative = 2 };

const char* shift_name(Shift s);

struct ShiftLabel {
    int event_id = 0;
    Shift label = Shift::neutral;
};

// One label per consecutive pair of the series: positive if the delta
// exceeds dead_band, negative below -dead_band, else neutral. event_id of
// the later point labels the shift.
std::vector<ShiftLabel> label_shifts(const std::vector<std::pair<int, double>>& series,
                                     double dead_band);

// dead band as a fraction of the series value range
double dead_band_from_range(const std::vector<double>& values, double fraction);

// rows = system label, cols = gold label, each nonempty row normalized to 1
std::array<std::array<double, 3>, 3> shift_confusion(const std::vector<ShiftLabel>& system,
                                                     const std::vector<ShiftLabel>& gold);

}  // namespace storyarc
