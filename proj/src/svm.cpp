#include "texdesc/svm.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include "texdesc/rng.hpp"

namespace texdesc {

namespace {

double squared_distance(const std::vector<double>& a, const std::vector<double>& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double t = a[i] - b[i];
        d += t * t;
    }
    return d;
}

// Kernel matrix Q_ij = y_i y_j K(i,j) over a subproblem. A dense matrix is
// built when it fits the cache budget; otherwise rows are recomputed through
// a small round-robin row cache.
class QMatrix {
public:
    QMatrix(const std::vector<const std::vector<double>*>& points,
            const std::vector<double>* dist2, std::size_t dist_stride,
            const std::vector<int>& dist_index, const std::vector<signed char>& y,
            double gamma, std::size_t cache_bytes)
        : points_(points),
          dist2_(dist2),
          dist_stride_(dist_stride),
          dist_index_(dist_index),
          y_(y),
          gamma_(gamma),
          n_(y.size()) {
        const std::size_t dense_bytes = n_ * n_ * sizeof(double);
        if (dense_bytes <= cache_bytes) {
            dense_.assign(n_ * n_, 0.0);
            for (std::size_t i = 0; i < n_; ++i) {
                dense_[i * n_ + i] = 1.0;
                for (std::size_t j = i + 1; j < n_; ++j) {
                    const double q = y_[i] * y_[j] * std::exp(-gamma_ * raw_dist(i, j));
                    dense_[i * n_ + j] = q;
                    dense_[j * n_ + i] = q;
                }
            }
        } else {
            std::size_t rows = cache_bytes / (n_ * sizeof(double));
            if (rows < 2) rows = 2;
            if (rows > n_) rows = n_;
            cache_rows_.assign(rows, std::vector<double>(n_));
            cache_owner_.assign(rows, -1);
            row_slot_.assign(n_, -1);
        }
    }

    // Fetches both working rows; the second fetch never evicts the first.
    void row_pair(std::size_t i, std::size_t j, const double** ri, const double** rj) {
        if (!dense_.empty()) {
            *ri = &dense_[i * n_];
            *rj = &dense_[j * n_];
            return;
        }
        const int slot_i = fetch(i, -1);
        const int slot_j = fetch(j, slot_i);
        *ri = cache_rows_[static_cast<std::size_t>(slot_i)].data();
        *rj = cache_rows_[static_cast<std::size_t>(slot_j)].data();
    }

private:
    double raw_dist(std::size_t i, std::size_t j) const {
        if (dist2_)
            return (*dist2_)[static_cast<std::size_t>(dist_index_[i]) * dist_stride_ +
                             dist_index_[j]];
        return squared_distance(*points_[i], *points_[j]);
    }

    int fetch(std::size_t i, int avoid_slot) {
        int slot = row_slot_[i];
        if (slot >= 0)
            return slot;
        do {
            slot = static_cast<int>(next_slot_);
            next_slot_ = (next_slot_ + 1) % cache_rows_.size();
        } while (slot == avoid_slot);
        if (cache_owner_[static_cast<std::size_t>(slot)] >= 0)
            row_slot_[static_cast<std::size_t>(cache_owner_[static_cast<std::size_t>(slot)])] = -1;
        cache_owner_[static_cast<std::size_t>(slot)] = static_cast<int>(i);
        row_slot_[i] = slot;
        auto& r = cache_rows_[static_cast<std::size_t>(slot)];
        for (std::size_t j = 0; j < n_; ++j)
            r[j] = y_[i] * y_[j] * std::exp(-gamma_ * raw_dist(i, j));
        r[i] = 1.0;
        return slot;
    }

    const std::vector<const std::vector<double>*>& points_;
    const std::vector<double>* dist2_;
    std::size_t dist_stride_;
    const std::vector<int>& dist_index_;
    const std::vector<signed char>& y_;
    double gamma_;
    std::size_t n_;

    std::vector<double> dense_;
    std::vector<std::vector<double>> cache_rows_;
    std::vector<int> cache_owner_;
    std::vector<int> row_slot_;
    std::size_t next_slot_ = 0;
};

struct SmoSolution {
    std::vector<double> alpha;
    double bias = 0.0;
};

// Two-variable SMO with maximal-violating-pair working set selection.
// Dual: min 1/2 a'Qa - e'a, 0 <= a <= C, y'a = 0; gradient G = Qa - e.
SmoSolution smo_solve(QMatrix& Q, const std::vector<signed char>& y, double C,
                      const SmoOptions& opts) {
    const std::size_t n = y.size();
    SmoSolution sol;
    sol.alpha.assign(n, 0.0);
    std::vector<double> G(n, -1.0);

    double m_up = 0.0, m_low = 0.0;
    for (long iter = 0; iter < opts.max_iter; ++iter) {
        long i = -1, j = -1;
        m_up = -std::numeric_limits<double>::infinity();
        m_low = std::numeric_limits<double>::infinity();
        for (std::size_t t = 0; t < n; ++t) {
            const double v = -y[t] * G[t];
            const bool in_up = (y[t] > 0 && sol.alpha[t] < C) || (y[t] < 0 && sol.alpha[t] > 0);
            const bool in_low = (y[t] < 0 && sol.alpha[t] < C) || (y[t] > 0 && sol.alpha[t] > 0);
            if (in_up && v > m_up) {
                m_up = v;
                i = static_cast<long>(t);
            }
            if (in_low && v < m_low) {
                m_low = v;
                j = static_cast<long>(t);
            }
        }
        if (i < 0 || j < 0 || m_up - m_low < opts.tol)
            break;

        const double* Qi = nullptr;
        const double* Qj = nullptr;
        Q.row_pair(static_cast<std::size_t>(i), static_cast<std::size_t>(j), &Qi, &Qj);
        // K_ii + K_jj - 2 K_ij; Q_ij = y_i y_j K_ij
        double eta = 2.0 - 2.0 * y[i] * y[j] * Qi[j];
        if (eta <= 0.0)
            eta = 1e-12;
        double step = (m_up - m_low) / eta;

        // box caps along the feasible direction a_i += y_i d, a_j -= y_j d
        const double cap_i = y[i] > 0 ? C - sol.alpha[i] : sol.alpha[i];
        const double cap_j = y[j] > 0 ? sol.alpha[j] : C - sol.alpha[j];
        step = std::min(step, std::min(cap_i, cap_j));

        const double dai = y[i] * step;
        const double daj = -y[j] * step;
        sol.alpha[i] += dai;
        sol.alpha[j] += daj;
        sol.alpha[i] = std::clamp(sol.alpha[i], 0.0, C);
        sol.alpha[j] = std::clamp(sol.alpha[j], 0.0, C);
        for (std::size_t t = 0; t < n; ++t)
            G[t] += Qi[t] * dai + Qj[t] * daj;
    }
    sol.bias = (m_up + m_low) / 2.0;
    if (!std::isfinite(sol.bias))
        sol.bias = 0.0;
    return sol;
}

std::vector<double> pairwise_distances(const std::vector<std::vector<double>>& X) {
    const std::size_t n = X.size();
    std::vector<double> d(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double v = squared_distance(X[i], X[j]);
            d[i * n + j] = v;
            d[j * n + i] = v;
        }
    return d;
}

void check_dims(const std::vector<std::vector<double>>& X) {
    if (X.empty())
        throw InsufficientData("no training samples");
    for (const auto& row : X)
        if (row.size() != X[0].size())
            throw DimensionMismatch("inconsistent feature dimensions");
}

// Solve one pair; dist2, when present, is the full-problem distance matrix
// and idx maps subproblem rows into it.
BinaryModel solve_pair(const std::vector<std::vector<double>>& X,
                       const std::vector<double>* dist2, const std::vector<int>& idx,
                       const std::vector<signed char>& y, double C, double gamma,
                       const SmoOptions& opts) {
    std::vector<const std::vector<double>*> pts(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
        pts[i] = &X[static_cast<std::size_t>(idx[i])];
    QMatrix Q(pts, dist2, X.size(), idx, y, gamma, opts.cache_bytes);
    const SmoSolution sol = smo_solve(Q, y, C, opts);

    BinaryModel m;
    m.C = C;
    m.gamma = gamma;
    m.bias = sol.bias;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (sol.alpha[i] > 0.0) {
            m.support_vectors.push_back(X[static_cast<std::size_t>(idx[i])]);
            m.alpha_y.push_back(sol.alpha[i] * y[i]);
        }
    }
    return m;
}

// Full distance matrix when it fits the cache budget, empty otherwise.
std::vector<double> shared_distances(const std::vector<std::vector<double>>& X,
                                     const SmoOptions& opts) {
    if (X.size() * X.size() * sizeof(double) <= opts.cache_bytes)
        return pairwise_distances(X);
    return {};
}

std::vector<std::string> sorted_classes(const std::vector<std::string>& labels) {
    std::vector<std::string> classes(labels);
    std::sort(classes.begin(), classes.end());
    classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
    return classes;
}

// Round-robin deal of the seed-shuffled per-class index lists.
std::vector<int> stratified_fold_assignment(const std::vector<std::string>& labels,
                                            const std::vector<std::string>& classes,
                                            int folds, std::uint64_t seed) {
    std::vector<int> fold_of(labels.size(), -1);
    Rng rng(seed);
    for (const auto& cls : classes) {
        std::vector<std::size_t> members;
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == cls)
                members.push_back(i);
        rng.shuffle(members);
        for (std::size_t k = 0; k < members.size(); ++k)
            fold_of[members[k]] = static_cast<int>(k % static_cast<std::size_t>(folds));
    }
    return fold_of;
}

}  // namespace

GridSpec GridSpec::defaults() {
    GridSpec g;
    for (int e = -5; e <= 15; e += 2)
        g.c_values.push_back(std::ldexp(1.0, e));
    for (int e = -15; e <= 3; e += 2)
        g.gamma_values.push_back(std::ldexp(1.0, e));
    return g;
}

double rbf(const std::vector<double>& x, const std::vector<double>& y, double gamma) {
    if (x.size() != y.size())
        throw DimensionMismatch("rbf operands differ in dimension");
    if (!(gamma > 0.0))
        throw InvalidArgument("rbf gamma must be positive");
    return std::exp(-gamma * squared_distance(x, y));
}

BinaryModel train_binary(const std::vector<std::vector<double>>& X, const std::vector<int>& y,
                         double C, double gamma, const SmoOptions& opts) {
    check_dims(X);
    if (y.size() != X.size())
        throw DimensionMismatch("label count does not match sample count");
    bool has_pos = false, has_neg = false;
    std::vector<signed char> ys(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (y[i] != 1 && y[i] != -1)
            throw InvalidArgument("binary labels must be +1 or -1");
        ys[i] = static_cast<signed char>(y[i]);
        (y[i] > 0 ? has_pos : has_neg) = true;
    }
    if (!has_pos || !has_neg)
        throw SingleClass("both classes must be present");

    const std::vector<double> dist2 = shared_distances(X, opts);
    std::vector<int> idx(X.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
        idx[i] = static_cast<int>(i);
    return solve_pair(X, dist2.empty() ? nullptr : &dist2, idx, ys, C, gamma, opts);
}

double decision_value(const BinaryModel& m, const std::vector<double>& x) {
    double f = m.bias;
    for (std::size_t i = 0; i < m.support_vectors.size(); ++i) {
        if (m.support_vectors[i].size() != x.size())
            throw DimensionMismatch("query dimension does not match the model");
        f += m.alpha_y[i] * std::exp(-m.gamma * squared_distance(m.support_vectors[i], x));
    }
    return f;
}

SvmModel train_multiclass(const std::vector<std::vector<double>>& X,
                          const std::vector<std::string>& labels, double C, double gamma,
                          const SmoOptions& opts) {
    check_dims(X);
    if (labels.size() != X.size())
        throw DimensionMismatch("label count does not match sample count");

    SvmModel model;
    model.classes = sorted_classes(labels);
    if (model.classes.size() < 2)
        throw SingleClass("multi-class training needs at least two classes");
    model.trained_dim = X[0].size();
    model.C = C;
    model.gamma = gamma;

    const std::vector<double> dist2 = shared_distances(X, opts);
    const std::vector<double>* dist_ptr = dist2.empty() ? nullptr : &dist2;
    const int k = static_cast<int>(model.classes.size());
    for (int a = 0; a < k; ++a) {
        for (int b = a + 1; b < k; ++b) {
            std::vector<int> idx;
            std::vector<signed char> ys;
            for (std::size_t i = 0; i < labels.size(); ++i) {
                if (labels[i] == model.classes[a]) {
                    idx.push_back(static_cast<int>(i));
                    ys.push_back(1);
                } else if (labels[i] == model.classes[b]) {
                    idx.push_back(static_cast<int>(i));
                    ys.push_back(-1);
                }
            }
            model.pairs.emplace_back(a, b);
            model.binaries.push_back(solve_pair(X, dist_ptr, idx, ys, C, gamma, opts));
        }
    }
    return model;
}

std::string predict(const SvmModel& model, const std::vector<double>& x) {
    if (x.size() != model.trained_dim)
        throw DimensionMismatch("query dimension does not match the model");
    std::vector<int> votes(model.classes.size(), 0);
    std::vector<double> strength(model.classes.size(), 0.0);
    for (std::size_t p = 0; p < model.pairs.size(); ++p) {
        const double f = decision_value(model.binaries[p], x);
        const int winner = f >= 0.0 ? model.pairs[p].first : model.pairs[p].second;
        votes[static_cast<std::size_t>(winner)] += 1;
        strength[static_cast<std::size_t>(winner)] += std::abs(f);
    }
    std::size_t best = 0;
    for (std::size_t c = 1; c < votes.size(); ++c) {
        if (votes[c] > votes[best] ||
            (votes[c] == votes[best] && strength[c] > strength[best]))
            best = c;
    }
    return model.classes[best];
}

GridResult grid_search(const std::vector<std::vector<double>>& X,
                       const std::vector<std::string>& labels, const GridSpec& grid,
                       std::uint64_t seed, const SmoOptions& opts) {
    check_dims(X);
    if (labels.size() != X.size())
        throw DimensionMismatch("label count does not match sample count");
    if (grid.c_values.empty() || grid.gamma_values.empty() || grid.folds < 2)
        throw InvalidArgument("grid needs candidates and at least 2 folds");

    const auto classes = sorted_classes(labels);
    if (classes.size() < 2)
        throw SingleClass("grid search needs at least two classes");
    for (const auto& cls : classes) {
        const auto count = std::count(labels.begin(), labels.end(), cls);
        if (count < 2)
            throw InsufficientData("class '" + cls + "' has fewer than 2 samples");
    }
    if (static_cast<std::size_t>(grid.folds) > X.size())
        throw InsufficientData("more folds than samples");

    const std::vector<int> fold_of = stratified_fold_assignment(labels, classes, grid.folds, seed);
    const std::vector<double> dist2 = shared_distances(X, opts);
    const std::vector<double>* dist_ptr = dist2.empty() ? nullptr : &dist2;
    const auto dist_at = [&](int a, int b) {
        if (dist_ptr)
            return dist2[static_cast<std::size_t>(a) * X.size() + static_cast<std::size_t>(b)];
        return squared_distance(X[static_cast<std::size_t>(a)], X[static_cast<std::size_t>(b)]);
    };

    std::vector<std::vector<int>> test_idx(static_cast<std::size_t>(grid.folds));
    for (std::size_t i = 0; i < X.size(); ++i)
        test_idx[static_cast<std::size_t>(fold_of[i])].push_back(static_cast<int>(i));

    struct CvBinary {
        int a = 0, b = 0;
        std::vector<int> sv_idx;
        std::vector<double> alpha_y;
        double bias = 0.0;
    };

    GridResult best;
    best.cv_accuracy = -1.0;
    for (double C : grid.c_values) {
        for (double gamma : grid.gamma_values) {
            long correct = 0;
            for (int f = 0; f < grid.folds; ++f) {
                std::vector<CvBinary> cv_binaries;
                const int k = static_cast<int>(classes.size());
                for (int a = 0; a < k; ++a) {
                    for (int b = a + 1; b < k; ++b) {
                        std::vector<int> idx;
                        std::vector<signed char> ys;
                        for (std::size_t i = 0; i < labels.size(); ++i) {
                            if (fold_of[i] == f)
                                continue;
                            if (labels[i] == classes[static_cast<std::size_t>(a)]) {
                                idx.push_back(static_cast<int>(i));
                                ys.push_back(1);
                            } else if (labels[i] == classes[static_cast<std::size_t>(b)]) {
                                idx.push_back(static_cast<int>(i));
                                ys.push_back(-1);
                            }
                        }
                        std::vector<const std::vector<double>*> pts(idx.size());
                        for (std::size_t i = 0; i < idx.size(); ++i)
                            pts[i] = &X[static_cast<std::size_t>(idx[i])];
                        QMatrix Q(pts, dist_ptr, X.size(), idx, ys, gamma, opts.cache_bytes);
                        const SmoSolution sol = smo_solve(Q, ys, C, opts);
                        CvBinary cb;
                        cb.a = a;
                        cb.b = b;
                        cb.bias = sol.bias;
                        for (std::size_t i = 0; i < idx.size(); ++i)
                            if (sol.alpha[i] > 0.0) {
                                cb.sv_idx.push_back(idx[i]);
                                cb.alpha_y.push_back(sol.alpha[i] * ys[i]);
                            }
                        cv_binaries.push_back(std::move(cb));
                    }
                }
                for (int t : test_idx[static_cast<std::size_t>(f)]) {
                    std::vector<int> votes(classes.size(), 0);
                    std::vector<double> strength(classes.size(), 0.0);
                    for (const auto& cb : cv_binaries) {
                        double fval = cb.bias;
                        for (std::size_t s = 0; s < cb.sv_idx.size(); ++s)
                            fval += cb.alpha_y[s] * std::exp(-gamma * dist_at(t, cb.sv_idx[s]));
                        const int winner = fval >= 0.0 ? cb.a : cb.b;
                        votes[static_cast<std::size_t>(winner)] += 1;
                        strength[static_cast<std::size_t>(winner)] += std::abs(fval);
                    }
                    std::size_t pred = 0;
                    for (std::size_t c = 1; c < votes.size(); ++c)
                        if (votes[c] > votes[pred] ||
                            (votes[c] == votes[pred] && strength[c] > strength[pred]))
                            pred = c;
                    if (classes[pred] == labels[static_cast<std::size_t>(t)])
                        ++correct;
                }
            }
            const double acc = static_cast<double>(correct) / static_cast<double>(X.size());
            if (acc > best.cv_accuracy ||
                (acc == best.cv_accuracy &&
                 (C < best.C || (C == best.C && gamma < best.gamma))))
                best = {C, gamma, acc};
        }
    }
    return best;
}

namespace {

void write_double(std::ostream& out, double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    out.write(buf, res.ptr - buf);
}

double parse_double(const std::string& tok) {
    double v = 0.0;
    const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size())
        throw ParseError("bad number in model file: " + tok);
    return v;
}

}  // namespace

void save_model(const SvmModel& model, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw IoError("cannot open for writing: " + path);
    out << "texdesc-svm 1\n";
    out << "config " << (model.feature_config.empty() ? "-" : model.feature_config) << "\n";
    out << "dim " << model.trained_dim << "\n";
    out << "C ";
    write_double(out, model.C);
    out << "\ngamma ";
    write_double(out, model.gamma);
    out << "\nclasses " << model.classes.size() << "\n";
    for (const auto& c : model.classes)
        out << c << "\n";
    out << "binaries " << model.binaries.size() << "\n";
    for (std::size_t p = 0; p < model.binaries.size(); ++p) {
        const auto& bm = model.binaries[p];
        out << "pair " << model.pairs[p].first << " " << model.pairs[p].second << " "
            << bm.support_vectors.size() << "\n";
        out << "bias ";
        write_double(out, bm.bias);
        out << "\n";
        for (std::size_t s = 0; s < bm.support_vectors.size(); ++s) {
            write_double(out, bm.alpha_y[s]);
            for (double v : bm.support_vectors[s]) {
                out << " ";
                write_double(out, v);
            }
            out << "\n";
        }
    }
    if (!out)
        throw IoError("write failed: " + path);
}

SvmModel load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw FileNotFound("cannot open " + path);
    std::string word;
    int version = 0;
    if (!(in >> word >> version) || word != "texdesc-svm" || version != 1)
        throw ParseError("not a texdesc-svm model file: " + path);

    SvmModel model;
    std::size_t n_classes = 0, n_binaries = 0;
    std::string tok;
    in >> word >> model.feature_config;
    if (word != "config")
        throw ParseError("model file missing config: " + path);
    if (model.feature_config == "-")
        model.feature_config.clear();
    in >> word >> model.trained_dim;
    if (word != "dim")
        throw ParseError("model file missing dim: " + path);
    in >> word >> tok;
    if (word != "C")
        throw ParseError("model file missing C: " + path);
    model.C = parse_double(tok);
    in >> word >> tok;
    if (word != "gamma")
        throw ParseError("model file missing gamma: " + path);
    model.gamma = parse_double(tok);
    in >> word >> n_classes;
    if (word != "classes")
        throw ParseError("model file missing classes: " + path);
    model.classes.resize(n_classes);
    for (auto& c : model.classes)
        in >> c;
    in >> word >> n_binaries;
    if (word != "binaries")
        throw ParseError("model file missing binaries: " + path);
    for (std::size_t p = 0; p < n_binaries; ++p) {
        int a = 0, b = 0;
        std::size_t nsv = 0;
        in >> word >> a >> b >> nsv;
        if (word != "pair")
            throw ParseError("model file missing pair header: " + path);
        BinaryModel bm;
        bm.C = model.C;
        bm.gamma = model.gamma;
        in >> word >> tok;
        if (word != "bias")
            throw ParseError("model file missing bias: " + path);
        bm.bias = parse_double(tok);
        bm.alpha_y.resize(nsv);
        bm.support_vectors.assign(nsv, std::vector<double>(model.trained_dim));
        for (std::size_t s = 0; s < nsv; ++s) {
            in >> tok;
            bm.alpha_y[s] = parse_double(tok);
            for (std::size_t d = 0; d < model.trained_dim; ++d) {
                in >> tok;
                bm.support_vectors[s][d] = parse_double(tok);
            }
        }
        model.pairs.emplace_back(a, b);
        model.binaries.push_back(std::move(bm));
    }
    if (!in)
        throw ParseError("model file truncated: " + path);
    return model;
}

}  // namespace texdesc
