#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "texdesc/regions.hpp"
#include "texdesc/svm.hpp"

namespace texdesc {

// Every image handed to a descriptor is first brought to this square size.
inline constexpr int kCanvasSize = 144;

enum class SplitTag { None, Train, Test };

struct ManifestEntry {
    std::string path;
    std::string label;
    SplitTag tag = SplitTag::None;
};

// One record per line: "path,label[,train|test]". '#' starts a comment.
// Labels must not contain commas or whitespace.
struct DatasetManifest {
    std::vector<ManifestEntry> entries;

    std::vector<std::string> classes() const;  // sorted unique labels
};

DatasetManifest load_manifest(const std::string& path);
void save_manifest(const DatasetManifest& m, const std::string& path);

// Per-class split at the given ratio (round-half-up on the train count),
// applied to the entries without a fixed tag; tagged entries are honored
// verbatim. Deterministic in (manifest, seed). Output manifests preserve the
// input entry order.
std::pair<DatasetManifest, DatasetManifest> stratified_split(const DatasetManifest& m,
                                                             double train_fraction,
                                                             std::uint64_t seed);

// Extracted features for every manifest entry, in manifest order.
struct FeatureTable {
    std::string config;
    std::vector<std::string> paths;
    std::vector<std::string> labels;
    std::vector<std::vector<double>> rows;
};

FeatureTable extract_features(const DatasetManifest& m, const DescriptorConfig& cfg);

// Delimited text: header "path,label,<config>", then one row per image with
// the feature values in canonical order. Returns the data row count.
std::size_t export_features(const DatasetManifest& m, const DescriptorConfig& cfg,
                            const std::string& out_path);

FeatureTable load_feature_file(const std::string& path);

struct EvalReport {
    std::vector<std::string> classes;
    std::vector<std::vector<long>> confusion;  // row = true class, col = predicted
    double accuracy = 0.0;
    std::vector<double> precision;
    std::vector<double> recall;

    // configuration echo
    std::string config;
    double C = 0.0;
    double gamma = 0.0;
    double cv_accuracy = 0.0;
    std::uint64_t seed = 0;

    std::string to_json() const;
    std::string to_text() const;
};

// Evaluate a trained model against labeled features.
EvalReport evaluate(const SvmModel& model, const FeatureTable& features);

// extract -> stratified 4:1 split -> grid search on the training split ->
// final fit -> test-set report.
EvalReport run_protocol(const DatasetManifest& m, const DescriptorConfig& cfg,
                        const GridSpec& grid, std::uint64_t seed,
                        double train_fraction = 0.8);

}  // namespace texdesc
