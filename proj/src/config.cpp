#include "storyarc/config.hpp"

#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "storyarc/emotions.hpp"

namespace fs = std::filesystem;

namespace storyarc {

namespace {

std::set<std::string> load_word_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open word list: " + path);
    std::set<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        out.insert(line);
    }
    return out;
}

std::map<std::string, char> load_gender_lexicon(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open gender lexicon: " + path);
    std::map<std::string, char> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos || tab + 1 >= line.size()) continue;
        char g = line[tab + 1];
        if (g == 'm' || g == 'f') out[line.substr(0, tab)] = g;
    }
    return out;
}

void require_file(const std::string& path, const char* what) {
    if (path.empty()) throw ConfigError(std::string(what) + " path not set");
    if (!fs::exists(path)) throw ConfigError(std::string(what) + " file not found: " + path);
}

std::string resolve(const fs::path& base, const std::string& p) {
    if (p.empty()) return p;
    fs::path fp(p);
    if (fp.is_absolute()) return p;
    return (base / fp).lexically_normal().string();
}

}  // namespace

WindowKind parse_window_kind(const std::string& name) {
    if (name == "savgol" || name == "savitzky_golay") return WindowKind::savitzky_golay;
    if (name == "mean" || name == "rolling_mean") return WindowKind::rolling_mean;
    if (name == "triangular" || name == "triangular_mean") return WindowKind::triangular_mean;
    throw ConfigError("unknown filter '" + name + "' (expected savgol|mean|triangular)");
}

PipelineConfig PipelineConfig::defaults(const std::string& data_dir) {
    PipelineConfig c;
    fs::path d(data_dir);
    c.verbs_path = (d / "verbs.tsv").string();
    c.sentiment_path = (d / "sentiment.tsv").string();
    c.emotions_path = (d / "emotions.tsv").string();
    c.genders_path = (d / "genders.tsv").string();
    c.honorifics_path = (d / "honorifics.txt").string();
    c.abbreviations_path = (d / "abbreviations.txt").string();
    c.stopwords_path = (d / "stopwords.txt").string();
    c.beta = default_emotion_weights();
    return c;
}

PipelineConfig PipelineConfig::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
    if (j.is_discarded()) throw ConfigError("config file is not valid JSON: " + path);
    if (!j.is_object()) throw ConfigError("config root must be a JSON object");

    fs::path base = fs::path(path).parent_path();
    PipelineConfig c;
    c.beta = default_emotion_weights();

    if (j.contains("cleaning")) {
        const auto& cj = j["cleaning"];
        if (cj.contains("max_bytes")) c.cleaning.max_bytes = cj["max_bytes"].get<std::size_t>();
        if (cj.contains("remove_page_numbers"))
            c.cleaning.remove_page_numbers = cj["remove_page_numbers"].get<bool>();
        if (cj.contains("remove_urls")) c.cleaning.remove_urls = cj["remove_urls"].get<bool>();
        if (cj.contains("strip_nonprintable"))
            c.cleaning.strip_nonprintable = cj["strip_nonprintable"].get<bool>();
        if (cj.contains("collapse_blank_lines"))
            c.cleaning.collapse_blank_lines = cj["collapse_blank_lines"].get<bool>();
    }

    if (!j.contains("lexicons") || !j["lexicons"].is_object())
        throw ConfigError("config needs a 'lexicons' object");
    const auto& lj = j["lexicons"];
    auto get_path = [&](const char* key) -> std::string {
        if (!lj.contains(key)) return {};
        return resolve(base, lj[key].get<std::string>());
    };
    c.verbs_path = get_path("verbs");
    c.sentiment_path = get_path("sentiment");
    c.emotions_path = get_path("emotions");
    c.genders_path = get_path("genders");
    c.honorifics_path = get_path("honorifics");
    c.abbreviations_path = get_path("abbreviations");
    c.stopwords_path = get_path("stopwords");

    if (j.contains("alpha")) {
        c.alpha = j["alpha"].get<double>();
        if (c.alpha <= 0.0 || c.alpha >= 1.0)
            throw ConfigError("alpha must lie in the open interval (0,1), got " +
                              std::to_string(c.alpha));
    }
    if (j.contains("beta")) {
        if (!j["beta"].is_object()) throw ConfigError("'beta' must be an object label -> weight");
        for (auto it = j["beta"].begin(); it != j["beta"].end(); ++it) {
            if (!is_valid_emotion(it.key()))
                throw ConfigError("beta table: unknown emotion label '" + it.key() + "'");
            double b = it.value().get<double>();
            if (b < -2.0 || b > 2.0)
                throw ConfigError("beta for '" + it.key() + "' outside [-2,2]");
            c.beta[it.key()] = b;
        }
        if (c.beta.count("neutral") && c.beta["neutral"] != 0.0)
            throw ConfigError("beta for 'neutral' must be 0");
    }
    if (j.contains("window")) {
        const auto& wj = j["window"];
        if (wj.contains("kind")) c.window.kind = parse_window_kind(wj["kind"].get<std::string>());
        if (wj.contains("n")) {
            c.window.n = wj["n"].get<int>();
            if (c.window.n != 0 && (c.window.n < 3 || c.window.n % 2 == 0))
                throw ConfigError("window n must be 0 (auto) or an odd integer >= 3");
        }
        if (wj.contains("p")) {
            c.window.p = wj["p"].get<int>();
            if (c.window.p < 0) throw ConfigError("window p must be >= 0");
            if (c.window.n > 0 && c.window.p >= c.window.n)
                throw ConfigError("window p must be < n");
        }
    }
    if (j.contains("min_mentions")) {
        c.min_mentions = j["min_mentions"].get<int>();
        if (c.min_mentions < 1) throw ConfigError("min_mentions must be >= 1");
    }
    if (j.contains("pronoun_window_sentences"))
        c.pronoun_window_sentences = j["pronoun_window_sentences"].get<int>();
    if (j.contains("dead_band")) {
        c.dead_band_fraction = j["dead_band"].get<double>();
        if (c.dead_band_fraction < 0.0 || c.dead_band_fraction >= 1.0)
            throw ConfigError("dead_band must lie in [0,1)");
    }
    if (j.contains("min_prominence"))
        c.min_prominence_fraction = j["min_prominence"].get<double>();
    if (j.contains("pronouns")) {
        c.pronouns.clear();
        for (const auto& p : j["pronouns"]) c.pronouns.push_back(p.get<std::string>());
    }
    if (j.contains("out_dir")) c.out_dir = resolve(base, j["out_dir"].get<std::string>());

    require_file(c.verbs_path, "verb lexicon");
    require_file(c.sentiment_path, "sentiment lexicon");
    require_file(c.emotions_path, "emotion lexicon");
    require_file(c.genders_path, "gender lexicon");
    if (!c.honorifics_path.empty()) require_file(c.honorifics_path, "honorifics");
    if (!c.abbreviations_path.empty()) require_file(c.abbreviations_path, "abbreviations");
    if (!c.stopwords_path.empty()) require_file(c.stopwords_path, "stopwords");
    return c;
}

CharacterLexicons PipelineConfig::character_lexicons() const {
    CharacterLexicons lex = CharacterLexicons::defaults();
    if (!honorifics_path.empty()) lex.honorifics = load_word_list(honorifics_path);
    if (!stopwords_path.empty()) {
        std::set<std::string> extra = load_word_list(stopwords_path);
        lex.stopwords.insert(extra.begin(), extra.end());
    }
    lex.pronouns = std::set<std::string>(pronouns.begin(), pronouns.end());
    lex.genders = load_gender_lexicon(genders_path);
    return lex;
}

CircumstanceParams PipelineConfig::circumstance_params() const {
    CircumstanceParams p;
    p.alpha = alpha;
    p.weights = beta;
    return p;
}

std::set<std::string> PipelineConfig::abbreviations() const {
    if (abbreviations_path.empty()) return {};
    return load_word_list(abbreviations_path);
}

}  // namespace storyarc
