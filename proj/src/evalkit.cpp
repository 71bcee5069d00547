#include "storyarc/evalkit.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace storyarc {

double accuracy(const std::vector<std::string>& predicted, const std::vector<std::string>& gold) {
    if (predicted.size() != gold.size())
        throw EvalError("accuracy: length mismatch (" + std::to_string(predicted.size()) +
                        " vs " + std::to_string(gold.size()) + ")");
    if (predicted.empty()) throw EvalError("accuracy: empty input");
    std::size_t hits = 0;
    for (std::size_t i = 0; i < predicted.size(); ++i)
        if (predicted[i] == gold[i]) ++hits;
    return static_cast<double>(hits) / static_cast<double>(predicted.size());
}

namespace {

std::vector<std::string> split_csv_row(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cur.push_back('"');
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                cur.push_back(c);
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    fields.push_back(std::move(cur));
    return fields;
}

}  // namespace

RaterResponses RaterResponses::load_csv(std::istream& in) {
    std::map<std::string, std::map<std::string, std::string>> table;  // item -> rater -> answer
    std::vector<std::string> item_order;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::vector<std::string> f = split_csv_row(line);
        if (line_no == 1 && f.size() >= 3 && f[0] == "item_id") continue;  // header
        if (f.size() != 3)
            throw EvalError("responses CSV line " + std::to_string(line_no) +
                            ": expected 3 fields (item_id, rater_id, answer)");
        if (!table.count(f[0])) item_order.push_back(f[0]);
        auto& row = table[f[0]];
        if (row.count(f[1]))
            throw EvalError("responses CSV line " + std::to_string(line_no) +
                            ": duplicate (item, rater) pair");
        row[f[1]] = f[2];
    }
    if (table.empty()) throw EvalError("responses CSV: no data rows");

    RaterResponses r;
    std::size_t raters = table.begin()->second.size();
    for (const std::string& item : item_order) {
        const auto& row = table[item];
        if (row.size() != raters)
            throw EvalError("responses CSV: item '" + item + "' has " +
                            std::to_string(row.size()) + " raters, expected " +
                            std::to_string(raters));
        std::vector<std::string> answers;
        for (const auto& [rater, answer] : row) {
            answers.push_back(answer);
            if (std::find(r.categories.begin(), r.categories.end(), answer) ==
                r.categories.end())
                r.categories.push_back(answer);
        }
        r.answers.push_back(std::move(answers));
    }
    return r;
}

RaterResponses RaterResponses::load_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw EvalError("cannot open responses CSV: " + path);
    return load_csv(in);
}

std::vector<std::vector<int>> RaterResponses::count_matrix() const {
    std::vector<std::vector<int>> counts(answers.size(),
                                         std::vector<int>(categories.size(), 0));
    for (std::size_t i = 0; i < answers.size(); ++i) {
        for (const std::string& a : answers[i]) {
            auto it = std::find(categories.begin(), categories.end(), a);
            counts[i][static_cast<std::size_t>(it - categories.begin())]++;
        }
    }
    return counts;
}

KappaResult fleiss_kappa(const std::vector<std::vector<int>>& counts) {
    if (counts.empty()) throw EvalError("fleiss_kappa: no items");
    const std::size_t items = counts.size();
    const std::size_t cats = counts[0].size();
    if (cats == 0) throw EvalError("fleiss_kappa: no categories");
    long long raters = 0;
    for (int c : counts[0]) raters += c;
    if (raters < 2) throw EvalError("fleiss_kappa: need at least 2 raters per item");
    for (const auto& row : counts) {
        if (row.size() != cats) throw EvalError("fleiss_kappa: ragged count matrix");
        long long s = 0;
        for (int c : row) {
            if (c < 0) throw EvalError("fleiss_kappa: negative count");
            s += c;
        }
        if (s != raters)
            throw EvalError("fleiss_kappa: unequal rater counts across items (" +
                            std::to_string(s) + " vs " + std::to_string(raters) + ")");
    }

    const double n = static_cast<double>(raters);
    double p_bar = 0.0;
    std::vector<double> pj(cats, 0.0);
    for (const auto& row : counts) {
        double agree = 0.0;
        for (std::size_t j = 0; j < cats; ++j) {
            agree += static_cast<double>(row[j]) * (row[j] - 1);
            pj[j] += row[j];
        }
        p_bar += agree / (n * (n - 1.0));
    }
    p_bar /= static_cast<double>(items);
    double pe = 0.0;
    for (std::size_t j = 0; j < cats; ++j) {
        double p = pj[j] / (n * static_cast<double>(items));
        pe += p * p;
    }

    KappaResult res;
    if (pe >= 1.0 - 1e-15) {
        // every rating fell in one category: chance agreement is total and
        // kappa is undefined
        res.degenerate = true;
        res.kappa = 1.0;
        return res;
    }
    res.kappa = (p_bar - pe) / (1.0 - pe);
    return res;
}

KappaResult fleiss_kappa(const RaterResponses& responses) {
    return fleiss_kappa(responses.count_matrix());
}

const char* shift_name(Shift s) {
    switch (s) {
        case Shift::positive: return "positive";
        case Shift::neutral: return "neutral";
        case Shift::negative: return "negative";
    }
    return "?";
}

std::vector<ShiftLabel> label_shifts(const std::vector<std::pair<int, double>>& series,
                                     double dead_band) {
    std::vector<ShiftLabel> out;
    for (std::size_t i = 1; i < series.size(); ++i) {
        double delta = series[i].second - series[i - 1].second;
        ShiftLabel s;
        s.event_id = series[i].first;
        s.label = delta > dead_band    ? Shift::positive
                  : delta < -dead_band ? Shift::negative
                                       : Shift::neutral;
        out.push_back(s);
    }
    return out;
}

double dead_band_from_range(const std::vector<double>& values, double fraction) {
    if (values.empty()) return 0.0;
    auto [mn, mx] = std::minmax_element(values.begin(), values.end());
    return (*mx - *mn) * fraction;
}

std::array<std::array<double, 3>, 3> shift_confusion(const std::vector<ShiftLabel>& system,
                                                     const std::vector<ShiftLabel>& gold) {
    if (system.size() != gold.size())
        throw EvalError("shift_confusion: length mismatch");
    std::array<std::array<double, 3>, 3> table{};
    for (std::size_t i = 0; i < system.size(); ++i) {
        if (system[i].event_id != gold[i].event_id)
            throw EvalError("shift_confusion: misaligned event ids at position " +
                            std::to_string(i) + " (" + std::to_string(system[i].event_id) +
                            " vs " + std::to_string(gold[i].event_id) + ")");
        table[static_cast<int>(system[i].label)][static_cast<int>(gold[i].label)] += 1.0;
    }
    for (auto& row : table) {
        double sum = row[0] + row[1] + row[2];
        if (sum > 0.0)
            for (double& v : row) v /= sum;
    }
    return table;
}

}  // namespace storyarc
