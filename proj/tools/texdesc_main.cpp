// Command-line front end: extract, train, predict, evaluate, grid-search,
// synth and dims subcommands over the texdesc library.

#include <CLI11.hpp>

#include <cstdio>
#include <string>
#include <vector>

#include "texdesc/pipeline.hpp"
#include "texdesc/regions.hpp"
#include "texdesc/svm.hpp"
#include "texdesc/synth.hpp"

using namespace texdesc;

namespace {

std::vector<double> parse_value_list(const std::string& csv) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        const auto comma = csv.find(',', pos);
        const std::string tok =
            csv.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (!tok.empty()) {
            try {
                out.push_back(std::stod(tok));
            } catch (const std::exception&) {
                throw ParseError("bad number '" + tok + "' in value list");
            }
        }
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    if (out.empty())
        throw ParseError("empty value list");
    return out;
}

GridSpec make_grid(const std::string& c_csv, const std::string& gamma_csv, int folds) {
    GridSpec grid = GridSpec::defaults();
    if (!c_csv.empty())
        grid.c_values = parse_value_list(c_csv);
    if (!gamma_csv.empty())
        grid.gamma_values = parse_value_list(gamma_csv);
    grid.folds = folds;
    return grid;
}

FeatureTable table_for_model(const SvmModel& model, const std::string& manifest_path) {
    if (model.feature_config.empty())
        throw InvalidArgument("model carries no descriptor config; re-train from features");
    const auto manifest = load_manifest(manifest_path);
    return extract_features(manifest, DescriptorConfig::parse(model.feature_config));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"texture descriptor extraction and classification toolkit"};
    app.require_subcommand(1);

    // extract
    auto* extract_cmd = app.add_subcommand("extract", "extract features for a manifest");
    std::string ex_manifest, ex_config, ex_out;
    extract_cmd->add_option("-m,--manifest", ex_manifest, "dataset manifest")->required();
    extract_cmd->add_option("-c,--config", ex_config, "descriptor config string")->required();
    extract_cmd->add_option("-o,--out", ex_out, "output feature file")->required();

    // train
    auto* train_cmd = app.add_subcommand("train", "grid-search and fit a model");
    std::string tr_features, tr_manifest, tr_config, tr_model_out, tr_c, tr_gamma;
    std::uint64_t tr_seed = 42;
    int tr_folds = 5;
    train_cmd->add_option("-f,--features", tr_features, "feature file from 'extract'");
    train_cmd->add_option("-m,--manifest", tr_manifest, "dataset manifest");
    train_cmd->add_option("-c,--config", tr_config, "descriptor config string");
    train_cmd->add_option("--model-out", tr_model_out, "model file to write")->required();
    train_cmd->add_option("--seed", tr_seed, "fold-assignment seed");
    train_cmd->add_option("--folds", tr_folds, "cross-validation folds");
    train_cmd->add_option("--c-values", tr_c, "comma-separated C candidates");
    train_cmd->add_option("--gamma-values", tr_gamma, "comma-separated gamma candidates");

    // predict
    auto* predict_cmd = app.add_subcommand("predict", "classify an image or a manifest");
    std::string pr_model, pr_image, pr_manifest;
    predict_cmd->add_option("--model", pr_model, "model file")->required();
    predict_cmd->add_option("--image", pr_image, "single image to classify");
    predict_cmd->add_option("-m,--manifest", pr_manifest, "manifest to classify");

    // evaluate
    auto* eval_cmd = app.add_subcommand("evaluate", "score a model against labeled data");
    std::string ev_model, ev_manifest;
    bool ev_json = false;
    eval_cmd->add_option("--model", ev_model, "model file")->required();
    eval_cmd->add_option("-m,--manifest", ev_manifest, "labeled manifest")->required();
    eval_cmd->add_flag("--json", ev_json, "emit the report as JSON");

    // grid-search
    auto* grid_cmd = app.add_subcommand("grid-search", "cross-validated (C, gamma) sweep");
    std::string gs_features, gs_c, gs_gamma;
    std::uint64_t gs_seed = 42;
    int gs_folds = 5;
    grid_cmd->add_option("-f,--features", gs_features, "feature file")->required();
    grid_cmd->add_option("--seed", gs_seed, "fold-assignment seed");
    grid_cmd->add_option("--folds", gs_folds, "cross-validation folds");
    grid_cmd->add_option("--c-values", gs_c, "comma-separated C candidates");
    grid_cmd->add_option("--gamma-values", gs_gamma, "comma-separated gamma candidates");

    // synth
    auto* synth_cmd = app.add_subcommand("synth", "generate the synthetic texture corpus");
    std::string sy_dir, sy_manifest_out;
    int sy_per_class = 100, sy_size = 144;
    std::uint64_t sy_seed = 1;
    synth_cmd->add_option("-o,--out-dir", sy_dir, "output directory")->required();
    synth_cmd->add_option("--per-class", sy_per_class, "images per class");
    synth_cmd->add_option("--size", sy_size, "square image size");
    synth_cmd->add_option("--seed", sy_seed, "corpus seed");
    synth_cmd->add_option("--manifest-out", sy_manifest_out,
                          "manifest path (default <out-dir>/manifest.csv)");

    // dims
    auto* dims_cmd = app.add_subcommand("dims", "print the protocol dimension ledger");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*extract_cmd) {
            const auto manifest = load_manifest(ex_manifest);
            const auto cfg = DescriptorConfig::parse(ex_config);
            const std::size_t rows = export_features(manifest, cfg, ex_out);
            std::printf("%zu rows -> %s\n", rows, ex_out.c_str());
        } else if (*train_cmd) {
            FeatureTable table;
            if (!tr_features.empty()) {
                table = load_feature_file(tr_features);
            } else if (!tr_manifest.empty() && !tr_config.empty()) {
                table = extract_features(load_manifest(tr_manifest),
                                         DescriptorConfig::parse(tr_config));
            } else {
                std::fprintf(stderr, "train needs --features or --manifest with --config\n");
                return 1;
            }
            const auto grid = make_grid(tr_c, tr_gamma, tr_folds);
            const auto best = grid_search(table.rows, table.labels, grid, tr_seed);
            auto model = train_multiclass(table.rows, table.labels, best.C, best.gamma);
            model.feature_config = table.config;
            save_model(model, tr_model_out);
            std::printf("C=%g gamma=%g cv_accuracy=%.6f -> %s\n", best.C, best.gamma,
                        best.cv_accuracy, tr_model_out.c_str());
        } else if (*predict_cmd) {
            const auto model = load_model(pr_model);
            if (!pr_image.empty()) {
                if (model.feature_config.empty())
                    throw InvalidArgument("model carries no descriptor config");
                GrayImage img = load_image(pr_image);
                if (img.width != kCanvasSize || img.height != kCanvasSize)
                    img = resize(img, kCanvasSize, kCanvasSize);
                const auto fv = extract(img, DescriptorConfig::parse(model.feature_config));
                std::printf("%s\n", predict(model, fv.values).c_str());
            } else if (!pr_manifest.empty()) {
                const auto table = table_for_model(model, pr_manifest);
                for (std::size_t i = 0; i < table.rows.size(); ++i)
                    std::printf("%s,%s\n", table.paths[i].c_str(),
                                predict(model, table.rows[i]).c_str());
            } else {
                std::fprintf(stderr, "predict needs --image or --manifest\n");
                return 1;
            }
        } else if (*eval_cmd) {
            const auto model = load_model(ev_model);
            const auto table = table_for_model(model, ev_manifest);
            const auto report = evaluate(model, table);
            std::printf("%s", ev_json ? (report.to_json() + "\n").c_str()
                                      : report.to_text().c_str());
        } else if (*grid_cmd) {
            const auto table = load_feature_file(gs_features);
            const auto grid = make_grid(gs_c, gs_gamma, gs_folds);
            const auto best = grid_search(table.rows, table.labels, grid, gs_seed);
            std::printf("C=%g gamma=%g cv_accuracy=%.6f\n", best.C, best.gamma,
                        best.cv_accuracy);
        } else if (*synth_cmd) {
            SynthOptions opts;
            opts.per_class = sy_per_class;
            opts.size = sy_size;
            opts.seed = sy_seed;
            const auto manifest = generate_corpus(sy_dir, opts);
            const std::string manifest_path =
                sy_manifest_out.empty() ? sy_dir + "/manifest.csv" : sy_manifest_out;
            save_manifest(manifest, manifest_path);
            std::printf("%zu images -> %s (manifest %s)\n", manifest.entries.size(),
                        sy_dir.c_str(), manifest_path.c_str());
        } else if (*dims_cmd) {
            std::string group;
            for (const auto& row : dimension_ledger()) {
                if (row.group != group) {
                    group = row.group;
                    std::printf("# %s\n", group.c_str());
                }
                std::printf("%-32s %zu\n", row.config.c_str(), row.dimension);
            }
        }
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
