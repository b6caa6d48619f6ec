#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "texdesc/errors.hpp"

namespace texdesc {

// One soft-margin RBF-SVM solution. alpha_y holds alpha_i * y_i for the
// support vectors only (alpha_i > 0); decision value is
// sum_i alpha_y[i] * exp(-gamma ||sv_i - x||^2) + bias.
struct BinaryModel {
    std::vector<std::vector<double>> support_vectors;
    std::vector<double> alpha_y;
    double bias = 0.0;
    double gamma = 0.0;
    double C = 0.0;
};

// One-vs-one multi-class model: one binary per unordered class pair, in
// pair order (0,1), (0,2), ..., (1,2), ...; the positive label of a pair is
// the class with the smaller index.
struct SvmModel {
    std::vector<std::string> classes;
    std::vector<std::pair<int, int>> pairs;
    std::vector<BinaryModel> binaries;
    std::size_t trained_dim = 0;
    double C = 0.0;
    double gamma = 0.0;
    std::string feature_config;  // descriptor tag carried for prediction
};

struct SmoOptions {
    double tol = 1e-3;
    long max_iter = 100000;
    std::size_t cache_bytes = std::size_t{256} << 20;
};

// Exponential (C, gamma) grid with stratified k-fold selection.
struct GridSpec {
    std::vector<double> c_values;
    std::vector<double> gamma_values;
    int folds = 5;

    // C = 2^-5 .. 2^15 and gamma = 2^-15 .. 2^3, both in steps of 2^2
    static GridSpec defaults();
};

struct GridResult {
    double C = 0.0;
    double gamma = 0.0;
    double cv_accuracy = 0.0;
};

double rbf(const std::vector<double>& x, const std::vector<double>& y, double gamma);

BinaryModel train_binary(const std::vector<std::vector<double>>& X,
                         const std::vector<int>& y, double C, double gamma,
                         const SmoOptions& opts = {});

double decision_value(const BinaryModel& m, const std::vector<double>& x);

SvmModel train_multiclass(const std::vector<std::vector<double>>& X,
                          const std::vector<std::string>& labels, double C, double gamma,
                          const SmoOptions& opts = {});

// Majority vote; ties go to the larger summed |decision value|, then to the
// smaller class index.
std::string predict(const SvmModel& model, const std::vector<double>& x);

// Stratified k-fold cross-validated accuracy for every grid cell; returns
// the argmax with ties broken toward smaller C, then smaller gamma.
GridResult grid_search(const std::vector<std::vector<double>>& X,
                       const std::vector<std::string>& labels, const GridSpec& grid,
                       std::uint64_t seed, const SmoOptions& opts = {});

// Decimal-text model file with a format-version header; read(write(m))
// predicts identically.
void save_model(const SvmModel& model, const std::string& path);
SvmModel load_model(const std::string& path);

}  // namespace texdesc
