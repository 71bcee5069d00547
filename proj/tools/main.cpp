#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "storyarc/evalkit.hpp"
#include "storyarc/pipeline.hpp"
#include "storyarc/svg.hpp"

using namespace storyarc;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitRuntime = 3;

#ifndef STORYARC_DATA_DIR
#define STORYARC_DATA_DIR "data"
#endif

PipelineConfig load_config(const std::string& config_path) {
    if (!config_path.empty()) return PipelineConfig::load(config_path);
    return PipelineConfig::defaults(STORYARC_DATA_DIR);
}

void apply_window_flags(PipelineConfig& cfg, int window_n, int poly_p,
                        const std::string& filter) {
    if (!filter.empty()) cfg.window.kind = parse_window_kind(filter);
    if (window_n > 0) {
        if (window_n < 3 || window_n % 2 == 0)
            throw ConfigError("--window must be an odd integer >= 3");
        cfg.window.n = window_n;
    }
    if (poly_p >= 0) {
        if (cfg.window.n > 0 && poly_p >= cfg.window.n)
            throw ConfigError("--poly must be < window size");
        cfg.window.p = poly_p;
    }
}

std::vector<std::string> read_label_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw EvalError("cannot open file: " + path);
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (!line.empty()) out.push_back(line);
    }
    return out;
}

std::vector<ShiftLabel> read_shift_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw EvalError("cannot open shift file: " + path);
    std::vector<ShiftLabel> out;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        while (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line_no == 1 && line.rfind("event_id", 0) == 0) continue;
        auto comma = line.find(',');
        if (comma == std::string::npos)
            throw EvalError(path + ":" + std::to_string(line_no) +
                            ": expected event_id,label");
        ShiftLabel s;
        s.event_id = std::stoi(line.substr(0, comma));
        std::string label = line.substr(comma + 1);
        if (label == "positive")
            s.label = Shift::positive;
        else if (label == "neutral")
            s.label = Shift::neutral;
        else if (label == "negative")
            s.label = Shift::negative;
        else
            throw EvalError(path + ":" + std::to_string(line_no) + ": unknown label '" +
                            label + "' (expected positive|neutral|negative)");
        out.push_back(s);
    }
    return out;
}

CharacterArc read_arc_csv(const std::string& path, std::string& character_name) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open arc CSV: " + path);
    CharacterArc arc;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line_no == 1 || line.empty()) continue;
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
        if (f.size() != 7)
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": expected 7 columns");
        character_name = f[0];
        ArcPoint p;
        p.ordinal = std::stoi(f[2]);
        p.event_id = std::stoi(f[3]);
        p.sentence_index = std::stoi(f[4]);
        p.raw = std::stod(f[5]);
        p.smoothed = std::stod(f[6]);
        if (f[1] == "actor")
            arc.actor_series.push_back(p);
        else
            arc.experiencer_series.push_back(p);
    }
    return arc;
}

int find_cluster_by_name(const std::map<int, std::string>& names, const std::string& query) {
    for (const auto& [id, name] : names) {
        if (name == query) return id;
    }
    // fall back to a unique substring match on the canonical name
    int hit = -1;
    for (const auto& [id, name] : names) {
        if (name.find(query) != std::string::npos) {
            if (hit >= 0) throw ConfigError("character name '" + query + "' is ambiguous");
            hit = id;
        }
    }
    if (hit < 0) throw ConfigError("no character named '" + query + "' in the event table");
    return hit;
}

void print_confusion(const std::array<std::array<double, 3>, 3>& table) {
    std::printf("%-10s %9s %9s %9s\n", "system\\gold", "positive", "neutral", "negative");
    const char* rows[3] = {"positive", "neutral", "negative"};
    for (int r = 0; r < 3; ++r)
        std::printf("%-10s %9.2f %9.2f %9.2f\n", rows[r], table[r][0], table[r][1],
                    table[r][2]);
}

int run(int argc, char** argv) {
    CLI::App app{"event-centric relation and character arcs from narrative text"};
    app.require_subcommand(1);

    std::string config_path, annotations_path, out_dir = "out", input_path;
    std::string character, pair, filter;
    int window_n = 0, poly_p = -1;

    auto add_common = [&](CLI::App* sub, bool with_annotations) {
        sub->add_option("--config", config_path, "pipeline config JSON");
        sub->add_option("--out", out_dir, "output directory");
        if (with_annotations)
            sub->add_option("--annotations", annotations_path,
                            "external annotations (JSON lines)");
    };

    CLI::App* cmd_pipeline = app.add_subcommand("pipeline", "run the full pipeline");
    cmd_pipeline->add_option("input", input_path, "input UTF-8 text file")->required();
    add_common(cmd_pipeline, true);

    CLI::App* cmd_characters = app.add_subcommand("characters", "emit character clusters only");
    cmd_characters->add_option("input", input_path)->required();
    add_common(cmd_characters, false);

    CLI::App* cmd_events = app.add_subcommand("events", "emit the tagged event table");
    cmd_events->add_option("input", input_path)->required();
    add_common(cmd_events, true);

    CLI::App* cmd_arcs = app.add_subcommand("arcs", "build arcs from a saved event table");
    cmd_arcs->add_option("events", input_path, "events.csv from a previous run")->required();
    cmd_arcs->add_option("--character", character, "character canonical name");
    cmd_arcs->add_option("--pair", pair, "directed pair ACTOR,EXPERIENCER");
    cmd_arcs->add_option("--window", window_n, "window size (odd, >= 3)");
    cmd_arcs->add_option("--poly", poly_p, "polynomial order");
    cmd_arcs->add_option("--filter", filter, "savgol|mean|triangular");
    add_common(cmd_arcs, false);

    CLI::App* cmd_plot = app.add_subcommand("plot", "render an SVG from an arc CSV");
    cmd_plot->add_option("arc", input_path, "character arc CSV")->required();
    cmd_plot->add_option("--out", out_dir, "output directory");

    CLI::App* cmd_eval = app.add_subcommand("eval", "evaluation metrics");
    cmd_eval->require_subcommand(1);
    std::string eval_a, eval_b;
    CLI::App* cmd_kappa = cmd_eval->add_subcommand("kappa", "Fleiss kappa from a responses CSV");
    cmd_kappa->add_option("responses", eval_a, "CSV: item_id,rater_id,answer")->required();
    CLI::App* cmd_acc = cmd_eval->add_subcommand("accuracy", "exact-match accuracy");
    cmd_acc->add_option("predicted", eval_a, "one label per line")->required();
    cmd_acc->add_option("gold", eval_b, "one label per line")->required();
    CLI::App* cmd_shifts = cmd_eval->add_subcommand("shifts", "shift confusion table");
    cmd_shifts->add_option("system", eval_a, "CSV: event_id,label")->required();
    cmd_shifts->add_option("gold", eval_b, "CSV: event_id,label")->required();
    cmd_shifts->add_option("--out", out_dir, "also write confusion.csv here");
    bool shifts_csv = false;
    cmd_shifts->add_flag("--csv", shifts_csv, "write confusion.csv to --out");

    CLI::App* cmd_validate =
        app.add_subcommand("validate-annotations", "lint an annotation interchange file");
    cmd_validate->add_option("file", input_path, "JSON lines file")->required();
    std::string validate_text;
    cmd_validate->add_option("--input", validate_text,
                             "narrative text for span bounds checking");
    cmd_validate->add_option("--config", config_path, "pipeline config JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    if (*cmd_pipeline) {
        PipelineConfig cfg = load_config(config_path);
        cfg.out_dir = out_dir;
        run_pipeline(input_path, cfg, annotations_path);
        std::cout << "wrote artifact bundle to " << out_dir << "\n";
        return kExitOk;
    }
    if (*cmd_characters) {
        PipelineConfig cfg = load_config(config_path);
        AnalysisResult res = analyze_file(input_path, cfg);
        atomic_write_file(out_dir + "/characters.json",
                          characters_report_json(res, cfg.min_mentions));
        std::cout << "wrote " << out_dir << "/characters.json (" << res.clusters.size()
                  << " clusters)\n";
        return kExitOk;
    }
    if (*cmd_events) {
        PipelineConfig cfg = load_config(config_path);
        AnalysisResult res = analyze_file(input_path, cfg, annotations_path);
        atomic_write_file(out_dir + "/events.csv", event_table_csv(res));
        std::cout << "wrote " << out_dir << "/events.csv (" << res.records.size()
                  << " records)\n";
        return kExitOk;
    }
    if (*cmd_arcs) {
        PipelineConfig cfg = load_config(config_path);
        apply_window_flags(cfg, window_n, poly_p, filter);
        EventTable table = read_event_table(input_path);
        if (character.empty() && pair.empty())
            throw ConfigError("arcs: pass --character NAME or --pair A,B");
        if (!character.empty()) {
            int cid = find_cluster_by_name(table.cluster_names, character);
            CharacterArc arc = build_character_arc(cid, table.records, cfg.window);
            const std::string& name = table.cluster_names[cid];
            std::string slug = slugify(name);
            std::string csv =
                "character,role,ordinal,event_id,sentence_index,raw_t,smoothed_t\n";
            for (const auto& [role, series] :
                 {std::pair<const char*, const std::vector<ArcPoint>*>{"actor",
                                                                       &arc.actor_series},
                  {"experiencer", &arc.experiencer_series}}) {
                for (const ArcPoint& p : *series)
                    csv += name + ',' + role + ',' + std::to_string(p.ordinal) + ',' +
                           std::to_string(p.event_id) + ',' +
                           std::to_string(p.sentence_index) + ',' + format_double(p.raw) +
                           ',' + format_double(p.smoothed) + '\n';
            }
            atomic_write_file(out_dir + "/" + slug + ".csv", csv);
            SvgStyle style;
            std::vector<double> vals;
            for (const auto* s : {&arc.actor_series, &arc.experiencer_series})
                for (const ArcPoint& p : *s) vals.push_back(p.smoothed);
            style.min_prominence = dead_band_from_range(vals, cfg.min_prominence_fraction);
            atomic_write_file(out_dir + "/" + slug + ".svg",
                              render_arc_svg(arc, name, style));
            std::cout << "wrote " << out_dir << "/" << slug << ".{csv,svg}\n";
        }
        if (!pair.empty()) {
            auto comma = pair.find(',');
            if (comma == std::string::npos)
                throw ConfigError("--pair expects ACTOR,EXPERIENCER");
            int a = find_cluster_by_name(table.cluster_names, pair.substr(0, comma));
            int b = find_cluster_by_name(table.cluster_names, pair.substr(comma + 1));
            auto arcs = build_relation_arcs(table.records, cfg.window);
            auto it = arcs.find(RelationKey{a, b});
            if (it == arcs.end())
                throw ConfigError("no events for directed pair " + pair);
            std::string csv =
                "actor,experiencer,ordinal,event_id,sentence_index,raw_t,smoothed_t\n";
            for (const ArcPoint& p : it->second.points)
                csv += table.cluster_names[a] + ',' + table.cluster_names[b] + ',' +
                       std::to_string(p.ordinal) + ',' + std::to_string(p.event_id) + ',' +
                       std::to_string(p.sentence_index) + ',' + format_double(p.raw) + ',' +
                       format_double(p.smoothed) + '\n';
            std::string slug = slugify(table.cluster_names[a]) + "__" +
                               slugify(table.cluster_names[b]);
            atomic_write_file(out_dir + "/" + slug + ".csv", csv);
            std::cout << "wrote " << out_dir << "/" << slug << ".csv\n";
        }
        return kExitOk;
    }
    if (*cmd_plot) {
        std::string name;
        CharacterArc arc = read_arc_csv(input_path, name);
        SvgStyle style;
        std::vector<double> vals;
        for (const auto* s : {&arc.actor_series, &arc.experiencer_series})
            for (const ArcPoint& p : *s) vals.push_back(p.smoothed);
        style.min_prominence = dead_band_from_range(vals, 0.05);
        std::string slug = slugify(name);
        atomic_write_file(out_dir + "/" + slug + ".svg", render_arc_svg(arc, name, style));
        std::cout << "wrote " << out_dir << "/" << slug << ".svg\n";
        return kExitOk;
    }
    if (*cmd_kappa) {
        RaterResponses r = RaterResponses::load_csv(eval_a);
        KappaResult k = fleiss_kappa(r);
        if (k.degenerate) {
            std::cout << "kappa: undefined (all ratings in a single category; expected "
                         "agreement is 1)\n";
        } else {
            std::printf("kappa: %.3f\n", k.kappa);
        }
        return kExitOk;
    }
    if (*cmd_acc) {
        double a = accuracy(read_label_lines(eval_a), read_label_lines(eval_b));
        std::printf("accuracy: %.3f\n", a);
        return kExitOk;
    }
    if (*cmd_shifts) {
        auto table = shift_confusion(read_shift_csv(eval_a), read_shift_csv(eval_b));
        print_confusion(table);
        if (shifts_csv) {
            std::string csv = "system,positive,neutral,negative\n";
            const char* rows[3] = {"positive", "neutral", "negative"};
            for (int r = 0; r < 3; ++r)
                csv += std::string(rows[r]) + ',' + format_double(table[r][0]) + ',' +
                       format_double(table[r][1]) + ',' + format_double(table[r][2]) + '\n';
            atomic_write_file(out_dir + "/confusion.csv", csv);
        }
        return kExitOk;
    }
    if (*cmd_validate) {
        Document doc;
        bool have_doc = false;
        if (!validate_text.empty()) {
            PipelineConfig cfg = load_config(config_path);
            doc = segment(clean(read_file(validate_text), cfg.cleaning));
            have_doc = true;
        }
        std::ifstream in(input_path);
        if (!in) throw AnnotationError("cannot open annotations file: " + input_path);
        std::string line;
        int line_no = 0, errors = 0, records = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            std::istringstream one(line);
            try {
                auto recs = ingest_annotations(one, have_doc ? &doc : nullptr);
                records += static_cast<int>(recs.size());
            } catch (const AnnotationError& e) {
                std::string msg = e.what();
                const std::string prefix = "line 1:";
                if (msg.rfind(prefix, 0) == 0)
                    msg = "line " + std::to_string(line_no) + ":" + msg.substr(prefix.size());
                std::cerr << msg << "\n";
                ++errors;
            }
        }
        if (errors) {
            std::cerr << errors << " error(s) in " << input_path << "\n";
            return kExitConfig;
        }
        std::cout << "OK: " << records << " record(s)\n";
        return kExitOk;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const AnnotationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const EvalError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const StageError& e) {
        std::cerr << "stage failed [" << e.stage << "]: " << e.what() << "\n";
        return kExitRuntime;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
}
