#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "storyarc/arcs.hpp"
#include "storyarc/characters.hpp"
#include "storyarc/config.hpp"
#include "storyarc/corpus.hpp"
#include "storyarc/events.hpp"
#include "storyarc/participants.hpp"

namespace storyarc {

struct StageError : std::runtime_error {
    std::string stage;
    StageError(std::string stage_name, const std::string& cause)
        : std::runtime_error(stage_name + ": " + cause), stage(std::move(stage_name)) {}
};

struct AnalysisResult {
    Document doc;
    std::vector<Mention> mentions;
    std::vector<CharacterCluster> clusters;
    TaggedEvents events;
    std::vector<EventRecord> records;  // roles assigned, deduped, scored
    std::set<int> arc_clusters;        // clusters meeting min_mentions
    EventDensity density;
    bool smoothing_skipped = false;    // any arc shorter than its window
};

AnalysisResult analyze_text(const std::string& raw_text, const std::string& doc_id,
                            const PipelineConfig& cfg,
                            const std::vector<AnnotationRecord>* external = nullptr);

AnalysisResult analyze_file(const std::string& input_path, const PipelineConfig& cfg,
                            const std::string& annotations_path = "");

// In-memory artifact bundle: relative path -> file content. Nothing touches
// the filesystem until the whole bundle is built; writes are atomic
// (temp file + rename).
using ArtifactBundle = std::map<std::string, std::string>;

ArtifactBundle build_artifacts(const AnalysisResult& result, const PipelineConfig& cfg);

void write_bundle(const ArtifactBundle& bundle, const std::string& out_dir);

// Full run: corpus -> characters -> events -> participants -> scoring ->
// arcs -> export. Returns the bundle it wrote.
ArtifactBundle run_pipeline(const std::string& input_path, const PipelineConfig& cfg,
                            const std::string& annotations_path = "");

// event table round-trip for the `arcs` subcommand
std::string event_table_csv(const AnalysisResult& result);

struct EventTable {
    std::vector<EventRecord> records;
    std::map<int, std::string> cluster_names;
};

EventTable read_event_table(const std::string& path);

std::string characters_report_json(const AnalysisResult& result, int min_mentions);
std::string stats_json(const AnalysisResult& result);

std::string slugify(const std::string& name);
std::string format_double(double v);

void atomic_write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace storyarc
