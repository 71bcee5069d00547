#include "storyarc/pipeline.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "storyarc/evalkit.hpp"
#include "storyarc/scoring.hpp"
#include "storyarc/svg.hpp"

namespace fs = std::filesystem;

namespace storyarc {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v + 0.0);
    return buf;
}

std::string slugify(const std::string& name) {
    std::string out;
    for (char c : name) {
        if ((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9')) {
            out.push_back(c);
        } else if (c >= 'A' && c <= 'Z') {
            out.push_back(static_cast<char>(c + 32));
        } else if (!out.empty() && out.back() != '_') {
            out.push_back('_');
        }
    }
    while (!out.empty() && out.back() == '_') out.pop_back();
    return out.empty() ? "unnamed" : out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void atomic_write_file(const std::string& path, const std::string& content) {
    fs::path p(path);
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write file: " + tmp);
        out << content;
    }
    fs::rename(tmp, path);
}

AnalysisResult analyze_text(const std::string& raw_text, const std::string& doc_id,
                            const PipelineConfig& cfg,
                            const std::vector<AnnotationRecord>* external) {
    AnalysisResult res;
    try {
        std::string cleaned = clean(raw_text, cfg.cleaning);
        res.doc = segment(cleaned, doc_id, cfg.abbreviations());
        res.doc.raw_text = raw_text;
    } catch (const std::exception& e) {
        throw StageError("corpus", e.what());
    }

    CharacterLexicons lex;
    try {
        lex = cfg.character_lexicons();
        res.mentions = detect_mentions(res.doc, lex);
        res.clusters = cluster_names(res.doc, res.mentions);
        resolve_pronouns(res.doc, res.mentions, res.clusters, lex,
                         cfg.pronoun_window_sentences);
    } catch (const std::exception& e) {
        throw StageError("characters", e.what());
    }

    VerbLexicon verbs;
    try {
        verbs = VerbLexicon::load(cfg.verbs_path);
        std::vector<EventTrigger> heuristic = tag_events(res.doc, verbs, {}, &res.mentions);
        if (external) {
            res.events = merge_annotations(res.doc, std::move(heuristic), *external);
        } else {
            res.events.triggers = std::move(heuristic);
        }
        res.density = event_density(res.doc, res.events.triggers);
    } catch (const std::exception& e) {
        throw StageError("events", e.what());
    }

    try {
        res.records = assign_roles(res.doc, res.events.triggers, res.mentions, &res.events);
        res.records = dedupe_sentence_events(res.records);
    } catch (const std::exception& e) {
        throw StageError("participants", e.what());
    }

    try {
        SentimentLexicon sentiment = SentimentLexicon::load(cfg.sentiment_path);
        EmotionLexicon emotion = EmotionLexicon::load(cfg.emotions_path);
        score_records(res.doc, res.records, sentiment, emotion, cfg.circumstance_params(),
                      &verbs, &res.events);
    } catch (const std::exception& e) {
        throw StageError("scoring", e.what());
    }

    for (const CharacterCluster& c : res.clusters)
        if (c.mention_count >= cfg.min_mentions) res.arc_clusters.insert(c.cluster_id);

    std::vector<EventRecord> arc_records;
    for (const EventRecord& r : res.records)
        if (r.actor_cluster && r.experiencer_cluster &&
            res.arc_clusters.count(*r.actor_cluster) &&
            res.arc_clusters.count(*r.experiencer_cluster))
            arc_records.push_back(r);
    for (const auto& [key, arc] : build_relation_arcs(arc_records, cfg.window))
        res.smoothing_skipped = res.smoothing_skipped || arc.smoothing_skipped;
    return res;
}

AnalysisResult analyze_file(const std::string& input_path, const PipelineConfig& cfg,
                            const std::string& annotations_path) {
    std::string raw;
    try {
        raw = read_file(input_path);
    } catch (const std::exception& e) {
        throw StageError("corpus", e.what());
    }
    std::string doc_id = fs::path(input_path).stem().string();
    if (annotations_path.empty()) return analyze_text(raw, doc_id, cfg);

    // a first pass without annotations provides the document for span checks
    AnalysisResult pre = analyze_text(raw, doc_id, cfg);
    std::vector<AnnotationRecord> external;
    try {
        external = ingest_annotations(annotations_path, &pre.doc);
    } catch (const std::exception& e) {
        throw StageError("events", e.what());
    }
    return analyze_text(raw, doc_id, cfg, &external);
}

namespace {

std::string emotions_field(const std::vector<std::pair<std::string, double>>& emotions) {
    std::string out;
    for (const auto& [label, conf] : emotions) {
        if (!out.empty()) out += ';';
        out += label + ":" + format_double(conf);
    }
    return out;
}

std::map<int, std::string> cluster_name_map(const std::vector<CharacterCluster>& clusters) {
    std::map<int, std::string> names;
    for (const CharacterCluster& c : clusters) names[c.cluster_id] = c.canonical_name;
    return names;
}

}  // namespace

std::string event_table_csv(const AnalysisResult& result) {
    std::map<int, std::string> names = cluster_name_map(result.clusters);
    std::string out =
        "event_id,sentence_index,token_index,lemma,source,actor_id,actor,"
        "experiencer_id,experiencer,sentiment,emotions,t\n";
    for (const EventRecord& r : result.records) {
        out += std::to_string(r.event_id) + ',' + std::to_string(r.trigger.sentence_index) +
               ',' + std::to_string(r.trigger.token_index) + ',' + r.trigger.lemma + ',' +
               (r.trigger.source == EventSource::external ? "external" : "heuristic") + ',';
        out += (r.actor_cluster ? std::to_string(*r.actor_cluster) : "") + ',';
        out += (r.actor_cluster ? names[*r.actor_cluster] : "") + ',';
        out += (r.experiencer_cluster ? std::to_string(*r.experiencer_cluster) : "") + ',';
        out += (r.experiencer_cluster ? names[*r.experiencer_cluster] : "") + ',';
        out += format_double(r.sentiment) + ',' + emotions_field(r.emotions) + ',' +
               format_double(r.t) + '\n';
    }
    return out;
}

EventTable read_event_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open event table: " + path);
    EventTable table;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line_no == 1 || line.empty()) continue;  // header
        std::vector<std::string> f;
        std::string cur;
        for (char c : line) {
            if (c == ',') {
                f.push_back(std::move(cur));
                cur.clear();
            } else if (c != '\r') {
                cur.push_back(c);
            }
        }
        f.push_back(std::move(cur));
        if (f.size() != 12)
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": expected 12 columns, got " + std::to_string(f.size()));
        EventRecord r;
        r.event_id = std::stoi(f[0]);
        r.trigger.event_id = r.event_id;
        r.trigger.sentence_index = std::stoi(f[1]);
        r.trigger.token_index = std::stoi(f[2]);
        r.trigger.lemma = f[3];
        r.trigger.source = f[4] == "external" ? EventSource::external : EventSource::heuristic;
        if (!f[5].empty()) {
            r.actor_cluster = std::stoi(f[5]);
            table.cluster_names[*r.actor_cluster] = f[6];
        }
        if (!f[7].empty()) {
            r.experiencer_cluster = std::stoi(f[7]);
            table.cluster_names[*r.experiencer_cluster] = f[8];
        }
        r.sentiment = std::stod(f[9]);
        if (!f[10].empty()) {
            std::string part;
            for (char c : f[10] + ";") {
                if (c == ';') {
                    auto colon = part.rfind(':');
                    if (colon != std::string::npos)
                        r.emotions.emplace_back(part.substr(0, colon),
                                                std::stod(part.substr(colon + 1)));
                    part.clear();
                } else {
                    part.push_back(c);
                }
            }
        }
        r.t = std::stod(f[11]);
        table.records.push_back(std::move(r));
    }
    return table;
}

std::string characters_report_json(const AnalysisResult& result, int min_mentions) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const CharacterCluster& c : result.clusters) {
        nlohmann::ordered_json jc;
        jc["cluster_id"] = c.cluster_id;
        jc["canonical_name"] = c.canonical_name;
        jc["aliases"] = std::vector<std::string>(c.aliases.begin(), c.aliases.end());
        jc["mention_count"] = c.mention_count;
        jc["first_mention_offset"] = c.first_offset;
        jc["last_mention_offset"] = c.last_offset;
        jc["included_in_arcs"] = c.mention_count >= min_mentions;
        arr.push_back(std::move(jc));
    }
    nlohmann::ordered_json root;
    root["doc_id"] = result.doc.doc_id;
    root["clusters"] = std::move(arr);
    int unresolved = 0;
    for (const Mention& m : result.mentions)
        if (m.kind == MentionKind::pronoun && !m.cluster_id) ++unresolved;
    root["unresolved_pronouns"] = unresolved;
    return root.dump(2) + "\n";
}

std::string stats_json(const AnalysisResult& result) {
    CorpusStats st = corpus_stats(result.doc);
    std::set<std::pair<int, int>> pairs;
    for (const EventRecord& r : result.records)
        if (r.actor_cluster && r.experiencer_cluster &&
            result.arc_clusters.count(*r.actor_cluster) &&
            result.arc_clusters.count(*r.experiencer_cluster))
            pairs.insert({*r.actor_cluster, *r.experiencer_cluster});
    nlohmann::ordered_json stats;
    stats["doc_id"] = result.doc.doc_id;
    stats["word_count"] = st.word_count;
    stats["sentence_count"] = st.sentence_count;
    stats["cluster_count"] = result.clusters.size();
    stats["arc_character_count"] = result.arc_clusters.size();
    stats["event_count"] = result.events.triggers.size();
    stats["record_count"] = result.records.size();
    stats["relation_arc_count"] = pairs.size();
    stats["event_density"] = result.density.density;
    stats["zero_word_warning"] = result.density.zero_words;
    stats["smoothing_skipped_warning"] = result.smoothing_skipped;
    return stats.dump(2) + "\n";
}

ArtifactBundle build_artifacts(const AnalysisResult& result, const PipelineConfig& cfg) {
    ArtifactBundle bundle;
    try {
        bundle["characters.json"] = characters_report_json(result, cfg.min_mentions);
        bundle["events.csv"] = event_table_csv(result);

        // arc-eligible records only
        std::vector<EventRecord> arc_records;
        for (const EventRecord& r : result.records) {
            if (r.actor_cluster && r.experiencer_cluster &&
                result.arc_clusters.count(*r.actor_cluster) &&
                result.arc_clusters.count(*r.experiencer_cluster))
                arc_records.push_back(r);
        }
        std::map<int, std::string> names = cluster_name_map(result.clusters);

        bool smoothing_skipped = false;
        auto arcs = build_relation_arcs(arc_records, cfg.window);
        std::string rel =
            "actor,experiencer,ordinal,event_id,sentence_index,raw_t,smoothed_t\n";
        for (const auto& [key, arc] : arcs) {
            smoothing_skipped = smoothing_skipped || arc.smoothing_skipped;
            for (const ArcPoint& p : arc.points) {
                rel += names[key.actor] + ',' + names[key.experiencer] + ',' +
                       std::to_string(p.ordinal) + ',' + std::to_string(p.event_id) + ',' +
                       std::to_string(p.sentence_index) + ',' + format_double(p.raw) + ',' +
                       format_double(p.smoothed) + '\n';
            }
        }
        bundle["relation_arcs.csv"] = rel;

        std::string extrema_csv = "character,role,event_id,kind,prominence\n";
        for (int cid : result.arc_clusters) {
            CharacterArc arc = build_character_arc(cid, arc_records, cfg.window);
            if (arc.actor_series.empty() && arc.experiencer_series.empty()) continue;
            const std::string& name = names[cid];
            std::string slug = slugify(name);

            std::string csv =
                "character,role,ordinal,event_id,sentence_index,raw_t,smoothed_t\n";
            for (const auto& [role, series] :
                 {std::pair<const char*, const std::vector<ArcPoint>*>{"actor",
                                                                       &arc.actor_series},
                  {"experiencer", &arc.experiencer_series}}) {
                for (const ArcPoint& p : *series) {
                    csv += name + ',' + role + ',' + std::to_string(p.ordinal) + ',' +
                           std::to_string(p.event_id) + ',' +
                           std::to_string(p.sentence_index) + ',' + format_double(p.raw) +
                           ',' + format_double(p.smoothed) + '\n';
                }
            }
            bundle["arcs/" + slug + ".csv"] = csv;

            for (const auto& [role, series] :
                 {std::pair<const char*, const std::vector<ArcPoint>*>{"actor",
                                                                       &arc.actor_series},
                  {"experiencer", &arc.experiencer_series}}) {
                std::vector<double> vals;
                for (const ArcPoint& p : *series) vals.push_back(p.smoothed);
                double prom = dead_band_from_range(vals, cfg.min_prominence_fraction);
                if (prom <= 0.0) continue;
                for (const Extremum& ex : find_extrema(*series, prom)) {
                    extrema_csv += name + ',' + role + ',' + std::to_string(ex.event_id) +
                                   ',' + (ex.is_peak ? "peak" : "valley") + ',' +
                                   format_double(ex.prominence) + '\n';
                }
            }

            SvgStyle style;
            std::vector<double> all_vals;
            for (const auto* s : {&arc.actor_series, &arc.experiencer_series})
                for (const ArcPoint& p : *s) all_vals.push_back(p.smoothed);
            style.min_prominence = dead_band_from_range(all_vals, cfg.min_prominence_fraction);
            bundle["svg/" + slug + ".svg"] = render_arc_svg(arc, name, style);
        }
        bundle["extrema.csv"] = extrema_csv;

        bundle["stats.json"] = stats_json(result);
    } catch (const StageError&) {
        throw;
    } catch (const std::exception& e) {
        throw StageError("export", e.what());
    }
    return bundle;
}

void write_bundle(const ArtifactBundle& bundle, const std::string& out_dir) {
    for (const auto& [rel, content] : bundle)
        atomic_write_file((fs::path(out_dir) / rel).string(), content);
}

ArtifactBundle run_pipeline(const std::string& input_path, const PipelineConfig& cfg,
                            const std::string& annotations_path) {
    AnalysisResult result = analyze_file(input_path, cfg, annotations_path);
    ArtifactBundle bundle = build_artifacts(result, cfg);
    write_bundle(bundle, cfg.out_dir);
    return bundle;
}

}  // namespace storyarc
