#include "texdesc/pipeline.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "texdesc/rng.hpp"

namespace texdesc {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    std::size_t e = s.find_last_not_of(" \t\r\n");
    if (b == std::string::npos)
        return "";
    return s.substr(b, e - b + 1);
}

void append_double(std::string* out, double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    out->append(buf, static_cast<std::size_t>(res.ptr - buf));
}

double parse_double(const std::string& tok, const std::string& where) {
    double v = 0.0;
    const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size())
        throw ParseError("bad number '" + tok + "' in " + where);
    return v;
}

std::vector<std::string> split_fields(const std::string& line, char delim) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (true) {
        const auto next = line.find(delim, pos);
        out.push_back(line.substr(pos, next == std::string::npos ? std::string::npos : next - pos));
        if (next == std::string::npos)
            break;
        pos = next + 1;
    }
    return out;
}

}  // namespace

std::vector<std::string> DatasetManifest::classes() const {
    std::vector<std::string> out;
    for (const auto& e : entries)
        out.push_back(e.label);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

DatasetManifest load_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw FileNotFound("cannot open " + path);
    DatasetManifest m;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto fields = split_fields(line, ',');
        if (fields.size() < 2 || fields.size() > 3)
            throw ParseError(path + ":" + std::to_string(lineno) + ": expected path,label[,train|test]");
        ManifestEntry e;
        e.path = trim(fields[0]);
        e.label = trim(fields[1]);
        if (e.path.empty() || e.label.empty())
            throw ParseError(path + ":" + std::to_string(lineno) + ": empty path or label");
        if (fields.size() == 3) {
            const std::string tag = trim(fields[2]);
            if (tag == "train")
                e.tag = SplitTag::Train;
            else if (tag == "test")
                e.tag = SplitTag::Test;
            else
                throw ParseError(path + ":" + std::to_string(lineno) + ": bad split tag '" + tag + "'");
        }
        m.entries.push_back(std::move(e));
    }
    return m;
}

void save_manifest(const DatasetManifest& m, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw IoError("cannot open for writing: " + path);
    for (const auto& e : m.entries) {
        out << e.path << "," << e.label;
        if (e.tag == SplitTag::Train)
            out << ",train";
        else if (e.tag == SplitTag::Test)
            out << ",test";
        out << "\n";
    }
    if (!out)
        throw IoError("write failed: " + path);
}

std::pair<DatasetManifest, DatasetManifest> stratified_split(const DatasetManifest& m,
                                                             double train_fraction,
                                                             std::uint64_t seed) {
    if (!(train_fraction > 0.0) || !(train_fraction < 1.0))
        throw InvalidArgument("train fraction must lie in (0, 1)");

    const auto classes = m.classes();
    std::map<std::string, std::vector<std::size_t>> untagged;
    for (std::size_t i = 0; i < m.entries.size(); ++i)
        if (m.entries[i].tag == SplitTag::None)
            untagged[m.entries[i].label].push_back(i);

    for (const auto& cls : classes) {
        std::size_t total = 0;
        for (const auto& e : m.entries)
            total += e.label == cls;
        if (total < 2)
            throw TooFewSamples("class '" + cls + "' has fewer than 2 samples");
    }

    std::vector<bool> to_train(m.entries.size(), false);
    Rng rng(seed);
    for (const auto& cls : classes) {
        auto it = untagged.find(cls);
        if (it == untagged.end())
            continue;
        auto& members = it->second;
        rng.shuffle(members);
        const std::size_t n_train = static_cast<std::size_t>(
            std::floor(train_fraction * static_cast<double>(members.size()) + 0.5));
        for (std::size_t k = 0; k < members.size(); ++k)
            to_train[members[k]] = k < n_train;
    }

    std::pair<DatasetManifest, DatasetManifest> out;
    for (std::size_t i = 0; i < m.entries.size(); ++i) {
        const auto& e = m.entries[i];
        const bool train = e.tag == SplitTag::Train || (e.tag == SplitTag::None && to_train[i]);
        (train ? out.first : out.second).entries.push_back(e);
    }
    return out;
}

FeatureTable extract_features(const DatasetManifest& m, const DescriptorConfig& cfg) {
    FeatureTable table;
    table.config = cfg.to_string();
    for (const auto& e : m.entries) {
        GrayImage img = load_image(e.path);
        if (img.width != kCanvasSize || img.height != kCanvasSize)
            img = resize(img, kCanvasSize, kCanvasSize);
        FeatureVector fv = extract(img, cfg);
        table.paths.push_back(e.path);
        table.labels.push_back(e.label);
        table.rows.push_back(std::move(fv.values));
    }
    return table;
}

std::size_t export_features(const DatasetManifest& m, const DescriptorConfig& cfg,
                            const std::string& out_path) {
    const FeatureTable table = extract_features(m, cfg);
    std::ofstream out(out_path);
    if (!out)
        throw IoError("cannot open for writing: " + out_path);
    out << "path,label," << table.config << "\n";
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        std::string line = table.paths[i] + "," + table.labels[i];
        for (double v : table.rows[i]) {
            line += ",";
            append_double(&line, v);
        }
        line += "\n";
        out << line;
    }
    if (!out)
        throw IoError("write failed: " + out_path);
    return table.rows.size();
}

FeatureTable load_feature_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw FileNotFound("cannot open " + path);
    std::string line;
    if (!std::getline(in, line))
        throw ParseError("empty feature file: " + path);
    line = trim(line);
    const std::string header_prefix = "path,label,";
    if (line.rfind(header_prefix, 0) != 0)
        throw ParseError("bad feature file header: " + path);

    FeatureTable table;
    table.config = line.substr(header_prefix.size());  // config strings contain commas
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty())
            continue;
        const auto fields = split_fields(line, ',');
        if (fields.size() < 3)
            throw ParseError(path + ":" + std::to_string(lineno) + ": too few columns");
        table.paths.push_back(fields[0]);
        table.labels.push_back(fields[1]);
        std::vector<double> row;
        row.reserve(fields.size() - 2);
        for (std::size_t i = 2; i < fields.size(); ++i)
            row.push_back(parse_double(fields[i], path + ":" + std::to_string(lineno)));
        if (!table.rows.empty() && row.size() != table.rows[0].size())
            throw ParseError(path + ":" + std::to_string(lineno) + ": ragged feature row");
        table.rows.push_back(std::move(row));
    }
    return table;
}

EvalReport evaluate(const SvmModel& model, const FeatureTable& features) {
    EvalReport rep;
    rep.classes = model.classes;
    rep.config = model.feature_config;
    rep.C = model.C;
    rep.gamma = model.gamma;
    const std::size_t k = rep.classes.size();
    rep.confusion.assign(k, std::vector<long>(k, 0));

    auto class_index = [&](const std::string& label) {
        const auto it = std::find(rep.classes.begin(), rep.classes.end(), label);
        if (it == rep.classes.end())
            throw InvalidArgument("label '" + label + "' not known to the model");
        return static_cast<std::size_t>(it - rep.classes.begin());
    };

    long correct = 0;
    for (std::size_t i = 0; i < features.rows.size(); ++i) {
        const std::string pred = predict(model, features.rows[i]);
        const std::size_t t = class_index(features.labels[i]);
        const std::size_t p = class_index(pred);
        rep.confusion[t][p] += 1;
        correct += t == p;
    }
    rep.accuracy = features.rows.empty()
                       ? 0.0
                       : static_cast<double>(correct) / static_cast<double>(features.rows.size());

    rep.precision.assign(k, 0.0);
    rep.recall.assign(k, 0.0);
    for (std::size_t c = 0; c < k; ++c) {
        long col = 0, row = 0;
        for (std::size_t t = 0; t < k; ++t) {
            col += rep.confusion[t][c];
            row += rep.confusion[c][t];
        }
        rep.precision[c] = col > 0 ? static_cast<double>(rep.confusion[c][c]) / col : 0.0;
        rep.recall[c] = row > 0 ? static_cast<double>(rep.confusion[c][c]) / row : 0.0;
    }
    return rep;
}

EvalReport run_protocol(const DatasetManifest& m, const DescriptorConfig& cfg,
                        const GridSpec& grid, std::uint64_t seed, double train_fraction) {
    const auto [train_m, test_m] = stratified_split(m, train_fraction, seed);
    const FeatureTable train_f = extract_features(train_m, cfg);
    const FeatureTable test_f = extract_features(test_m, cfg);

    const GridResult gr = grid_search(train_f.rows, train_f.labels, grid, seed);
    SvmModel model = train_multiclass(train_f.rows, train_f.labels, gr.C, gr.gamma);
    model.feature_config = cfg.to_string();

    EvalReport rep = evaluate(model, test_f);
    rep.cv_accuracy = gr.cv_accuracy;
    rep.seed = seed;
    return rep;
}

std::string EvalReport::to_json() const {
    nlohmann::ordered_json j;
    j["config"] = config;
    j["C"] = C;
    j["gamma"] = gamma;
    j["cv_accuracy"] = cv_accuracy;
    j["seed"] = seed;
    j["classes"] = classes;
    j["confusion"] = confusion;
    j["accuracy"] = accuracy;
    j["precision"] = precision;
    j["recall"] = recall;
    return j.dump(2);
}

std::string EvalReport::to_text() const {
    std::ostringstream out;
    out << "config:      " << config << "\n";
    out << "C, gamma:    " << C << ", " << gamma << "\n";
    if (cv_accuracy > 0.0)
        out << "cv accuracy: " << cv_accuracy << "\n";
    out << "accuracy:    " << accuracy << "\n";
    out << "confusion (rows = true class):\n";
    std::size_t width = 8;
    for (const auto& c : classes)
        width = std::max(width, c.size() + 2);
    out << std::string(width, ' ');
    for (const auto& c : classes)
        out << c << std::string(width - c.size(), ' ');
    out << "\n";
    for (std::size_t t = 0; t < classes.size(); ++t) {
        out << classes[t] << std::string(width - classes[t].size(), ' ');
        for (std::size_t p = 0; p < classes.size(); ++p) {
            const std::string v = std::to_string(confusion[t][p]);
            out << v << std::string(width - v.size(), ' ');
        }
        out << "\n";
    }
    out << "per-class precision / recall:\n";
    for (std::size_t c = 0; c < classes.size(); ++c)
        out << "  " << classes[c] << ": " << precision[c] << " / " << recall[c] << "\n";
    return out.str();
}

}  // namespace texdesc
