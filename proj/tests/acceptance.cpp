// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Oracles here are written independently of the library code they
// check (QR-based least squares for the smoothing weights, direct formula
// evaluation for the circumstance measure).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "storyarc/arcs.hpp"
#include "storyarc/characters.hpp"
#include "storyarc/emotions.hpp"
#include "storyarc/evalkit.hpp"
#include "storyarc/events.hpp"
#include "storyarc/participants.hpp"
#include "storyarc/pipeline.hpp"
#include "storyarc/scoring.hpp"

using namespace storyarc;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void report(int criterion, bool ok, const std::string& what) {
    std::printf("criterion %2d: %s  %s\n", criterion, ok ? "PASS" : "FAIL", what.c_str());
    if (!ok) ++g_failures;
}

double elapsed_s(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---- independent least-squares oracle (modified Gram-Schmidt QR) ----
// Smoothing weight j for window size n, degree p: row `center` of the hat
// matrix H = Q Q^T where Q spans the polynomial design matrix.
std::vector<double> qr_savgol_oracle(int n, int p) {
    int m = (n - 1) / 2;
    int cols = p + 1;
    // design matrix a[i][k] = x_i^k, x_i = i - m
    std::vector<std::vector<long double>> q(n, std::vector<long double>(cols));
    for (int i = 0; i < n; ++i) {
        long double x = i - m, v = 1.0L;
        for (int k = 0; k < cols; ++k) {
            q[i][k] = v;
            v *= x;
        }
    }
    // modified Gram-Schmidt: orthonormalize columns in place
    for (int k = 0; k < cols; ++k) {
        for (int prev = 0; prev < k; ++prev) {
            long double dot = 0;
            for (int i = 0; i < n; ++i) dot += q[i][k] * q[i][prev];
            for (int i = 0; i < n; ++i) q[i][k] -= dot * q[i][prev];
        }
        long double norm = 0;
        for (int i = 0; i < n; ++i) norm += q[i][k] * q[i][k];
        norm = std::sqrt((double)norm);
        for (int i = 0; i < n; ++i) q[i][k] /= norm;
    }
    std::vector<double> w(n);
    for (int j = 0; j < n; ++j) {
        long double h = 0;
        for (int k = 0; k < cols; ++k) h += q[m][k] * q[j][k];
        w[j] = (double)h;
    }
    return w;
}

std::string testdata(const std::string& rel) {
    return std::string(STORYARC_TESTDATA_DIR) + "/" + rel;
}

void criterion_1() {
    auto t0 = std::chrono::steady_clock::now();
    double max_err = 0;
    // pinned classic window
    const double c52[] = {-3.0 / 35, 12.0 / 35, 17.0 / 35, 12.0 / 35, -3.0 / 35};
    auto got = savgol_coefficients(5, 2);
    for (int i = 0; i < 5; ++i) max_err = std::max(max_err, std::abs(got[i] - c52[i]));
    // oracle sweep
    for (int n = 3; n <= 21; n += 2) {
        for (int p = 0; p <= std::min(5, n - 1); ++p) {
            auto lib = savgol_coefficients(n, p);
            auto ora = qr_savgol_oracle(n, p);
            for (int i = 0; i < n; ++i) max_err = std::max(max_err, std::abs(lib[i] - ora[i]));
            // polynomial reproduction at interior points
            std::vector<double> series(40);
            for (int i = 0; i < 40; ++i) {
                double x = i, v = 0;
                for (int d = 0; d <= p; ++d) v += (d + 1) * std::pow(x / 7.0, d);
                series[i] = v;
            }
            auto sm = apply_window(series, {WindowKind::savitzky_golay, n, p});
            int half = n / 2;
            for (int i = half; i < 40 - half; ++i)
                max_err = std::max(max_err, std::abs(sm.values[i] - series[i]));
        }
    }
    double secs = elapsed_s(t0);
    bool ok = max_err < 1e-9 && secs < 1.0;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "smoothing weights vs QR oracle, n=3..21 p<=5 (max err %.2e, %.2fs)", max_err,
                  secs);
    report(1, ok, buf);
}

void criterion_2() {
    const auto& vocab = emotion_vocabulary();
    std::mt19937 rng(424242);
    std::uniform_real_distribution<double> unit(0.001, 0.999);
    std::uniform_real_distribution<double> betarange(-2.0, 2.0);
    std::uniform_int_distribution<int> pick(0, (int)vocab.size() - 1);
    std::uniform_int_distribution<int> howmany(0, 8);
    double max_err = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        double s = unit(rng), alpha = unit(rng);
        std::map<std::string, double> beta;
        for (const auto& l : vocab) beta[l] = l == "neutral" ? 0.0 : betarange(rng);
        std::vector<std::pair<std::string, double>> em;
        for (int k = howmany(rng); k > 0; --k) em.emplace_back(vocab[pick(rng)], unit(rng));
        // direct evaluation of the weighted-sum definition
        double expected = alpha * s;
        for (const auto& [label, c] : em) expected += beta.at(label) * c;
        double gotv = circumstance(s, em, CircumstanceParams{alpha, beta});
        max_err = std::max(max_err, std::abs(gotv - expected));
    }
    char buf[120];
    std::snprintf(buf, sizeof buf, "circumstance vs direct evaluation, 1000 trials (max err %.2e)",
                  max_err);
    report(2, max_err < 1e-12, buf);
}

void criterion_3() {
    std::mt19937 rng(777);
    std::uniform_real_distribution<double> dist(-5, 5);
    std::uniform_int_distribution<int> lenpick(9, 60);
    double max_err = 0;
    bool flag_ok = true;
    const WindowKind kinds[] = {WindowKind::rolling_mean, WindowKind::triangular_mean,
                                WindowKind::savitzky_golay};
    for (int trial = 0; trial < 100; ++trial) {
        int len = lenpick(rng);
        std::vector<double> series(len);
        for (double& v : series) v = dist(rng);
        double c = dist(rng);
        for (WindowKind kind : kinds) {
            WindowSpec spec{kind, 7, 3};
            // constant preservation
            std::vector<double> flat(len, c);
            for (double v : apply_window(flat, spec).values)
                max_err = std::max(max_err, std::abs(v - c));
            // shift equivariance
            std::vector<double> shifted = series;
            for (double& v : shifted) v += c;
            auto a = apply_window(series, spec).values;
            auto b = apply_window(shifted, spec).values;
            for (int i = 0; i < len; ++i) max_err = std::max(max_err, std::abs(b[i] - (a[i] + c)));
            // short series pass through with the warning flag
            std::vector<double> tiny(series.begin(), series.begin() + 3);
            auto r = apply_window(tiny, spec);
            if (!r.too_short || r.values != tiny) flag_ok = false;
        }
    }
    char buf[120];
    std::snprintf(buf, sizeof buf,
                  "window constant/shift properties, 100 series (max err %.2e, flag %s)", max_err,
                  flag_ok ? "ok" : "broken");
    report(3, max_err < 1e-9 && flag_ok, buf);
}

void criterion_4() {
    Document doc = segment("Harry kicked and punched Ron.");
    CharacterLexicons lex = CharacterLexicons::defaults();
    auto mentions = detect_mentions(doc, lex);
    auto clusters = cluster_names(doc, mentions);
    VerbLexicon verbs = VerbLexicon::load(std::string(STORYARC_DATA_DIR) + "/verbs.tsv");
    auto triggers = tag_events(doc, verbs, {}, &mentions);
    auto records = dedupe_sentence_events(assign_roles(doc, triggers, mentions));
    bool ok = records.size() == 1 && records[0].trigger.lemma == "kick" &&
              records[0].actor_cluster && records[0].experiencer_cluster &&
              *records[0].actor_cluster != *records[0].experiencer_cluster;
    report(4, ok, "same-pair sentence keeps only the earlier trigger (exact)");
}

void criterion_5() {
    Document doc = segment(
        "They saw Tom by the fence. Later Tom Sawyer whitewashed it. "
        "All praised Mr. Sawyer loudly.");
    CharacterLexicons lex = CharacterLexicons::defaults();
    auto mentions = detect_mentions(doc, lex);
    auto clusters = cluster_names(doc, mentions);
    bool ok = clusters.size() == 1 && clusters[0].canonical_name == "Tom Sawyer" &&
              clusters[0].aliases ==
                  std::set<std::string>{"Tom", "Tom Sawyer", "Mr. Sawyer"};
    report(5, ok, "{Tom, Tom Sawyer, Mr. Sawyer} -> one cluster, canonical \"Tom Sawyer\"");
}

void criterion_6() {
    bool ok = true;
    KappaResult unanimous = fleiss_kappa(std::vector<std::vector<int>>{{3, 0}, {0, 3}});
    ok = ok && !unanimous.degenerate && unanimous.kappa == 1.0;
    KappaResult counter = fleiss_kappa(std::vector<std::vector<int>>{{2, 1}, {1, 2}});
    ok = ok && std::abs(counter.kappa - (-1.0 / 3.0)) < 1e-12;
    std::mt19937 rng(31337);
    std::uniform_int_distribution<int> cat(0, 3);
    for (int trial = 0; trial < 50 && ok; ++trial) {
        std::vector<std::vector<int>> counts(10, std::vector<int>(4, 0));
        for (auto& row : counts)
            for (int r = 0; r < 4; ++r) row[cat(rng)]++;
        std::vector<int> perm = {0, 1, 2, 3};
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::vector<int>> relabeled(10, std::vector<int>(4, 0));
        for (size_t i = 0; i < counts.size(); ++i)
            for (int c = 0; c < 4; ++c) relabeled[i][perm[c]] = counts[i][c];
        ok = std::abs(fleiss_kappa(counts).kappa - fleiss_kappa(relabeled).kappa) < 1e-12;
    }
    report(6, ok, "Fleiss kappa: unanimity=1, counter-example=-1/3, relabel-invariant x50");
}

void criterion_7() {
    auto t0 = std::chrono::steady_clock::now();
    PipelineConfig cfg = PipelineConfig::defaults(STORYARC_DATA_DIR);
    std::string input = testdata("mini_narrative.txt");
    std::string ann = testdata("mini_annotations.jsonl");
    AnalysisResult r1 = analyze_file(input, cfg, ann);
    AnalysisResult r2 = analyze_file(input, cfg, ann);
    ArtifactBundle b1 = build_artifacts(r1, cfg);
    ArtifactBundle b2 = build_artifacts(r2, cfg);
    bool repeat_ok = b1 == b2;
    // byte-identical to the committed golden bundle
    bool golden_ok = true;
    std::string mismatch;
    fs::path groot = testdata("golden");
    size_t golden_files = 0;
    for (const auto& entry : fs::recursive_directory_iterator(groot)) {
        if (!entry.is_regular_file()) continue;
        ++golden_files;
        std::string rel = fs::relative(entry.path(), groot).generic_string();
        auto it = b1.find(rel);
        if (it == b1.end() || it->second != read_file(entry.path().string())) {
            golden_ok = false;
            mismatch = rel;
        }
    }
    golden_ok = golden_ok && golden_files == b1.size();
    double secs = elapsed_s(t0);
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "golden mini-narrative run byte-identical (%zu files, %.2fs)%s%s", b1.size(),
                  secs, mismatch.empty() ? "" : " mismatch: ", mismatch.c_str());
    report(7, repeat_ok && golden_ok && secs < 5.0, buf);
}

void criterion_8() {
    std::string text = read_file(testdata("realis_sample.txt"));
    Document doc = segment(clean(text));
    VerbLexicon verbs = VerbLexicon::load(std::string(STORYARC_DATA_DIR) + "/verbs.tsv");
    auto triggers = tag_events(doc, verbs);
    std::multiset<std::pair<int, std::string>> sys, gold;
    for (const auto& t : triggers)
        sys.insert({t.sentence_index, doc.tokens[t.token_index].lowercase});
    std::ifstream g(testdata("realis_gold.tsv"));
    std::string line;
    while (std::getline(g, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto tab = line.find('\t');
        gold.insert({std::stoi(line.substr(0, tab)), line.substr(tab + 1)});
    }
    int tp = 0;
    for (const auto& p : sys)
        if (gold.count(p)) ++tp;
    double precision = sys.empty() ? 0.0 : (double)tp / (double)sys.size();
    double recall = gold.empty() ? 0.0 : (double)tp / (double)gold.size();
    char buf[120];
    std::snprintf(buf, sizeof buf,
                  "realis tagger on 50-sentence gold: precision %.3f (>=0.7), recall %.3f (>=0.6)",
                  precision, recall);
    report(8, precision >= 0.7 && recall >= 0.6, buf);
}

void criterion_9() {
    // The published corpus statistics, regression metrics and survey scores
    // rest on copyrighted novels, trained neural models and human raters,
    // none of which ship with this artifact; criteria 1-6 prove the metric
    // machinery instead. Here: the confusion table conforms to the reported
    // presentation shape (3x3, rows system / cols gold, rows sum to 1).
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> lab(0, 2);
    std::vector<ShiftLabel> sys, gold;
    for (int i = 0; i < 300; ++i) {
        sys.push_back({i, (Shift)lab(rng)});
        gold.push_back({i, (Shift)lab(rng)});
    }
    auto table = shift_confusion(sys, gold);
    bool ok = true;
    for (int i = 0; i < 3; ++i) {
        double sum = table[i][0] + table[i][1] + table[i][2];
        ok = ok && std::abs(sum - 1.0) < 1e-12;
    }
    report(9, ok,
           "paper-survey numbers not reproducible without corpora/models/raters (documented); "
           "3x3 row-normalized confusion shape conforms");
}

std::string synthesize_text(std::size_t target_words) {
    const char* names[] = {"Alden", "Berta", "Casper", "Dora",  "Edmund", "Fiona",
                           "Godwin", "Hilda", "Ivor",  "Junia", "Kellan", "Lora"};
    const char* verbs[] = {"greeted", "helped",  "watched", "followed", "thanked",
                           "praised", "scolded", "hugged",  "blamed",   "comforted"};
    const char* tails[] = {"by the river",  "in the square", "at the gate",  "after the storm",
                           "before sunset", "near the mill", "with a smile", "without a word"};
    std::mt19937 rng(1234);
    std::uniform_int_distribution<int> n(0, 11), v(0, 9), t(0, 7);
    std::string out;
    out.reserve(target_words * 7);
    std::size_t words = 0;
    while (words < target_words) {
        int a = n(rng), b = n(rng);
        if (b == a) b = (b + 1) % 12;
        out += names[a];
        out += ' ';
        out += verbs[v(rng)];
        out += ' ';
        out += names[b];
        out += ' ';
        const char* tail = tails[t(rng)];
        out += tail;
        out += ". ";
        words += 3;  // the two names and the verb
        for (const char* c = tail; *c; ++c)
            if (*c == ' ') ++words;
        ++words;  // last tail word
    }
    return out;
}

std::size_t vm_peak_kb() {
    std::ifstream in("/proc/self/status");
    std::string line;
    while (std::getline(in, line))
        if (line.rfind("VmPeak:", 0) == 0) return std::stoul(line.substr(7));
    return 0;
}

void criterion_10() {
    std::string text = synthesize_text(1'000'000);
    PipelineConfig cfg = PipelineConfig::defaults(STORYARC_DATA_DIR);
    auto t0 = std::chrono::steady_clock::now();
    AnalysisResult r = analyze_text(text, "throughput", cfg);
    ArtifactBundle bundle = build_artifacts(r, cfg);
    double secs = elapsed_s(t0);
    CorpusStats st = corpus_stats(r.doc);
    std::size_t peak_mb = vm_peak_kb() / 1024;
    bool ok = st.word_count >= 1'000'000 && secs < 60.0 && peak_mb < 2048 && !bundle.empty();
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "pipeline on %lld synthetic words: %.1fs (<60s), peak rss %zu MB (<2048)",
                  (long long)st.word_count, secs, peak_mb);
    report(10, ok, buf);
}

}  // namespace

int main() {
    try {
        criterion_1();
        criterion_2();
        criterion_3();
        criterion_4();
        criterion_5();
        criterion_6();
        criterion_7();
        criterion_8();
        criterion_9();
        criterion_10();
    } catch (const std::exception& e) {
        std::printf("FATAL: %s\n", e.what());
        return 2;
    }
    if (g_failures) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all 10 criteria passed\n");
    return 0;
}
