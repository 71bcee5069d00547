#include "storyarc/events.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "storyarc/emotions.hpp"

namespace storyarc {

VerbLexicon VerbLexicon::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open verb lexicon: " + path);
    VerbLexicon lex;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos) continue;
        lex.inflection_to_lemma[line.substr(0, tab)] = line.substr(tab + 1);
    }
    return lex;
}

std::optional<std::string> VerbLexicon::lemma(const std::string& lowercase_token) const {
    auto it = inflection_to_lemma.find(lowercase_token);
    if (it == inflection_to_lemma.end()) return std::nullopt;
    return it->second;
}

namespace {

const std::set<std::string> kClauseBreakers = {",",   ";",    ":",     ".",     "!",    "?",
                                               "and", "but",  "or",    "so",    "because",
                                               "although", "though", "while", "that", "which",
                                               "who", "whom", "-", "--", "—"};

bool is_negation(const std::string& low) {
    if (low == "not" || low == "never") return true;
    return low.size() > 3 && low.compare(low.size() - 3, 3, "n't") == 0;
}

bool is_copular(const std::string& lemma) {
    return lemma == "be" || lemma == "seem" || lemma == "appear";
}

}  // namespace

std::vector<EventTrigger> tag_events(const Document& doc, const VerbLexicon& verbs,
                                     const TaggerOptions& opts,
                                     const std::vector<Mention>* mentions) {
    std::vector<bool> in_mention(doc.tokens.size(), false);
    if (mentions) {
        for (const Mention& m : *mentions) {
            if (m.kind != MentionKind::proper_name) continue;
            for (int k = m.start_token; k < m.end_token; ++k) in_mention[k] = true;
        }
    }
    std::vector<bool> sentence_initial(doc.tokens.size(), false);
    for (int s = 0; s < static_cast<int>(doc.sentences.size()); ++s)
        if (doc.sentence_token_count[s] > 0)
            sentence_initial[doc.sentence_first_token[s]] = true;

    std::vector<EventTrigger> out;
    for (size_t i = 0; i < doc.tokens.size(); ++i) {
        const TokenSpan& tok = doc.tokens[i];
        if (in_mention[i]) continue;
        // a mid-sentence capitalized token is treated as a name, not a verb
        if (tok.is_capitalized && !sentence_initial[i]) continue;
        auto lemma = verbs.lemma(tok.lowercase);
        if (!lemma) continue;
        if (opts.exclude_copular && is_copular(*lemma)) continue;

        int first = doc.sentence_first_token[tok.sentence_index];

        // perfect/do-support auxiliary followed by another verb form
        if ((*lemma == "have" || *lemma == "do") && i + 1 < doc.tokens.size()) {
            const TokenSpan& nxt = doc.tokens[i + 1];
            if (nxt.sentence_index == tok.sentence_index &&
                (verbs.lemma(nxt.lowercase) || is_negation(nxt.lowercase)))
                continue;
        }

        bool realis = true;
        if (static_cast<int>(i) > first) {
            const std::string& prev = doc.tokens[i - 1].lowercase;
            if (prev == "to") realis = false;          // infinitive
            if (is_negation(prev)) realis = false;     // negated verb group
        }
        if (realis) {
            int scanned = 0;
            for (int j = static_cast<int>(i) - 1; j >= first && scanned < opts.clause_scan_cap;
                 --j, ++scanned) {
                const std::string& low = doc.tokens[j].lowercase;
                if (kClauseBreakers.count(doc.tokens[j].surface) ||
                    kClauseBreakers.count(low))
                    break;
                if (opts.modals.count(low) || low == "if" || low == "unless") {
                    realis = false;
                    break;
                }
                if (low.size() > 3 && low.compare(low.size() - 3, 3, "'ll") == 0) {
                    realis = false;
                    break;
                }
            }
        }
        if (!realis) continue;

        EventTrigger tr;
        tr.event_id = static_cast<int>(out.size());
        tr.token_index = static_cast<int>(i);
        tr.lemma = *lemma;
        tr.sentence_index = tok.sentence_index;
        tr.realis = true;
        tr.source = EventSource::heuristic;
        out.push_back(std::move(tr));
    }
    return out;
}

namespace {

CharSpan parse_span(const nlohmann::json& j, const char* field, int line_no) {
    if (!j.is_object() || !j.contains("start") || !j.contains("end") ||
        !j["start"].is_number_integer() || !j["end"].is_number_integer())
        throw AnnotationError("line " + std::to_string(line_no) + ": field '" + field +
                              "' must be an object {start,end} with integer offsets");
    long long s = j["start"].get<long long>();
    long long e = j["end"].get<long long>();
    if (s < 0 || e <= s)
        throw AnnotationError("line " + std::to_string(line_no) + ": field '" + field +
                              "' has an empty or negative span");
    return CharSpan{static_cast<std::size_t>(s), static_cast<std::size_t>(e)};
}

void check_bounds(const CharSpan& sp, const char* field, const Document& doc,
                  const AnnotationRecord& rec, int line_no) {
    if (sp.end > doc.text.size())
        throw AnnotationError("line " + std::to_string(line_no) + ": record (doc_id=" +
                              rec.doc_id + ", sentence=" + std::to_string(rec.sentence_index) +
                              ") " + field + " span [" + std::to_string(sp.start) + "," +
                              std::to_string(sp.end) + ") exceeds document length " +
                              std::to_string(doc.text.size()));
}

std::string valid_labels_list() {
    std::string s;
    for (const auto& l : emotion_vocabulary()) {
        if (!s.empty()) s += ", ";
        s += l;
    }
    return s;
}

}  // namespace

std::vector<AnnotationRecord> ingest_annotations(std::istream& in, const Document* doc) {
    std::vector<AnnotationRecord> records;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded())
            throw AnnotationError("line " + std::to_string(line_no) + ": malformed JSON");
        if (!j.is_object())
            throw AnnotationError("line " + std::to_string(line_no) + ": expected a JSON object");
        AnnotationRecord rec;
        if (!j.contains("doc_id") || !j["doc_id"].is_string())
            throw AnnotationError("line " + std::to_string(line_no) +
                                  ": missing string field 'doc_id'");
        rec.doc_id = j["doc_id"].get<std::string>();
        if (!j.contains("sentence_index") || !j["sentence_index"].is_number_integer())
            throw AnnotationError("line " + std::to_string(line_no) +
                                  ": missing integer field 'sentence_index'");
        rec.sentence_index = j["sentence_index"].get<int>();
        if (rec.sentence_index < 0)
            throw AnnotationError("line " + std::to_string(line_no) +
                                  ": sentence_index must be non-negative");
        if (!j.contains("trigger"))
            throw AnnotationError("line " + std::to_string(line_no) +
                                  ": missing field 'trigger'");
        rec.trigger = parse_span(j["trigger"], "trigger", line_no);
        if (j.contains("actor")) rec.actor = parse_span(j["actor"], "actor", line_no);
        if (j.contains("experiencer"))
            rec.experiencer = parse_span(j["experiencer"], "experiencer", line_no);
        if (j.contains("sentiment")) {
            if (!j["sentiment"].is_number())
                throw AnnotationError("line " + std::to_string(line_no) +
                                      ": 'sentiment' must be a number");
            double s = j["sentiment"].get<double>();
            if (s <= 0.0 || s >= 1.0)
                throw AnnotationError("line " + std::to_string(line_no) +
                                      ": sentiment " + std::to_string(s) +
                                      " outside open interval (0,1)");
            rec.sentiment = s;
        }
        if (j.contains("emotions")) {
            if (!j["emotions"].is_array())
                throw AnnotationError("line " + std::to_string(line_no) +
                                      ": 'emotions' must be an array");
            for (const auto& ej : j["emotions"]) {
                if (!ej.is_object() || !ej.contains("label") || !ej.contains("confidence") ||
                    !ej["label"].is_string() || !ej["confidence"].is_number())
                    throw AnnotationError("line " + std::to_string(line_no) +
                                          ": each emotion needs {label, confidence}");
                std::string label = ej["label"].get<std::string>();
                double conf = ej["confidence"].get<double>();
                if (!is_valid_emotion(label))
                    throw AnnotationError("line " + std::to_string(line_no) +
                                          ": unknown emotion label '" + label +
                                          "'; valid labels: " + valid_labels_list());
                if (conf <= 0.0 || conf >= 1.0)
                    throw AnnotationError("line " + std::to_string(line_no) + ": confidence " +
                                          std::to_string(conf) +
                                          " outside open interval (0,1)");
                rec.emotions.emplace_back(label, conf);
            }
        }
        if (doc) {
            if (rec.sentence_index >= static_cast<int>(doc->sentences.size()))
                throw AnnotationError(
                    "line " + std::to_string(line_no) + ": record (doc_id=" + rec.doc_id +
                    ") sentence_index " + std::to_string(rec.sentence_index) +
                    " exceeds sentence count " + std::to_string(doc->sentences.size()));
            check_bounds(rec.trigger, "trigger", *doc, rec, line_no);
            if (rec.actor) check_bounds(*rec.actor, "actor", *doc, rec, line_no);
            if (rec.experiencer) check_bounds(*rec.experiencer, "experiencer", *doc, rec, line_no);
        }
        records.push_back(std::move(rec));
    }
    return records;
}

std::vector<AnnotationRecord> ingest_annotations(const std::string& path, const Document* doc) {
    std::ifstream in(path);
    if (!in) throw AnnotationError("cannot open annotations file: " + path);
    return ingest_annotations(in, doc);
}

TaggedEvents merge_annotations(const Document& doc, std::vector<EventTrigger> heuristic,
                               const std::vector<AnnotationRecord>& records) {
    TaggedEvents out;
    std::unordered_map<int, EventTrigger> by_token;
    for (EventTrigger& tr : heuristic) by_token.emplace(tr.token_index, std::move(tr));

    for (const AnnotationRecord& rec : records) {
        // locate the token whose span matches (or contains the start of) the trigger span
        int tok_idx = -1;
        for (size_t i = 0; i < doc.tokens.size(); ++i) {
            if (doc.tokens[i].start == rec.trigger.start) {
                tok_idx = static_cast<int>(i);
                break;
            }
            if (doc.tokens[i].start <= rec.trigger.start && rec.trigger.start < doc.tokens[i].end) {
                tok_idx = static_cast<int>(i);
                break;
            }
        }
        if (tok_idx < 0)
            throw AnnotationError("annotation trigger span [" + std::to_string(rec.trigger.start) +
                                  "," + std::to_string(rec.trigger.end) +
                                  ") does not align with any token");
        EventTrigger tr;
        tr.token_index = tok_idx;
        tr.lemma = doc.tokens[tok_idx].lowercase;
        tr.sentence_index = doc.tokens[tok_idx].sentence_index;
        tr.realis = true;
        tr.source = EventSource::external;
        by_token[tok_idx] = std::move(tr);  // external wins
        out.overrides[tok_idx] = rec;
    }

    for (auto& [tok, tr] : by_token) out.triggers.push_back(tr);
    std::sort(out.triggers.begin(), out.triggers.end(),
              [](const EventTrigger& a, const EventTrigger& b) {
                  return a.token_index < b.token_index;
              });
    for (size_t i = 0; i < out.triggers.size(); ++i)
        out.triggers[i].event_id = static_cast<int>(i);
    return out;
}

EventDensity event_density(const Document& doc, const std::vector<EventTrigger>& triggers) {
    EventDensity d;
    CorpusStats st = corpus_stats(doc);
    if (st.word_count == 0) {
        d.zero_words = true;
        d.density = 0.0;
        return d;
    }
    d.density = static_cast<double>(triggers.size()) / static_cast<double>(st.word_count);
    return d;
}

}  // namespace storyarc
