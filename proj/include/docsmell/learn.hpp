#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <set>
#include <span>
#include <vector>

#include "docsmell/corpus.hpp"
#include "docsmell/errors.hpp"
#include "docsmell/features.hpp"
#include "docsmell/random.hpp"

namespace docsmell {

struct TrainConfig {
  double lambda = 0.01;
  std::size_t epochs = 20;
  std::uint64_t seed = 42;
};

struct LinearModel {
  std::vector<double> weights;
  double bias = 0;

  double decision(const FeatureVector& x) const {
    if (x.dimension != weights.size()) throw DimensionMismatch(weights.size(), x.dimension);
    double d = bias;
    for (const auto& [i, v] : x.values) d += weights[i] * v;
    return d;
  }

  // Ties classify as positive.
  bool predict(const FeatureVector& x) const { return decision(x) >= 0.0; }

  friend bool operator==(const LinearModel&, const LinearModel&) = default;
};

namespace detail {

inline void check_training_set(std::span<const FeatureVector> X, std::size_t labels) {
  if (X.empty()) throw EmptyTrainingSet();
  if (X.size() != labels) throw LengthMismatch(X.size(), labels);
  for (const FeatureVector& x : X)
    if (x.dimension != X[0].dimension) throw DimensionMismatch(X[0].dimension, x.dimension);
}

inline double hinge_objective(const std::vector<double>& w, double b, double lambda,
                              std::span<const FeatureVector> X,
                              std::span<const std::uint8_t> y) {
  double norm2 = 0;
  for (double wi : w) norm2 += wi * wi;
  double loss = 0;
  for (std::size_t i = 0; i < X.size(); ++i) {
    double margin = b;
    for (const auto& [j, v] : X[i].values) margin += w[j] * v;
    margin *= y[i] ? 1.0 : -1.0;
    loss += std::max(0.0, 1.0 - margin);
  }
  return 0.5 * lambda * norm2 + loss / static_cast<double>(X.size());
}

}  // namespace detail

// Hinge loss + L2 by stochastic subgradient descent with step 1/(lambda*t),
// one shuffled pass per epoch, unregularized bias. The returned weights are
// the averaged iterates, which is also what the optional per-epoch objective
// trace measures.
inline LinearModel train_linear(std::span<const FeatureVector> X,
                                std::span<const std::uint8_t> y, const TrainConfig& cfg,
                                std::vector<double>* epoch_objective = nullptr) {
  detail::check_training_set(X, y.size());
  if (cfg.lambda <= 0) throw Error("lambda must be positive");
  if (cfg.epochs < 1) throw Error("epochs must be at least 1");

  const std::size_t d = X[0].dimension;
  const std::size_t m = X.size();
  std::vector<double> w(d, 0.0), wa(d, 0.0);
  double b = 0.0, ba = 0.0;

  std::mt19937_64 gen(cfg.seed);
  std::vector<std::size_t> order(m);
  for (std::size_t i = 0; i < m; ++i) order[i] = i;

  if (epoch_objective) epoch_objective->clear();
  std::size_t t = 0;
  for (std::size_t epoch = 0; epoch < cfg.epochs; ++epoch) {
    deterministic_shuffle(order, gen);
    for (std::size_t idx : order) {
      ++t;
      const double eta = 1.0 / (cfg.lambda * static_cast<double>(t));
      const FeatureVector& x = X[idx];
      const double sign = y[idx] ? 1.0 : -1.0;
      double margin = b;
      for (const auto& [j, v] : x.values) margin += w[j] * v;
      margin *= sign;

      const double shrink = 1.0 - eta * cfg.lambda;  // == 1 - 1/t
      for (double& wi : w) wi *= shrink;
      if (margin < 1.0) {
        for (const auto& [j, v] : x.values) w[j] += eta * sign * v;
        b += eta * sign;
      }

      const double tt = static_cast<double>(t);
      for (std::size_t j = 0; j < d; ++j) wa[j] += (w[j] - wa[j]) / tt;
      ba += (b - ba) / tt;
    }
    if (epoch_objective)
      epoch_objective->push_back(detail::hinge_objective(wa, ba, cfg.lambda, X, y));
  }
  return LinearModel{std::move(wa), ba};
}

// ---------------------------------------------------------------------------
// One-vs-rest

struct OvrModel {
  std::array<LinearModel, kSmellCount> models;

  friend bool operator==(const OvrModel&, const OvrModel&) = default;
};

inline OvrModel train_ovr(std::span<const FeatureVector> X, std::span<const SmellLabels> Y,
                          const TrainConfig& cfg) {
  detail::check_training_set(X, Y.size());
  OvrModel model;
  for (std::size_t l = 0; l < kSmellCount; ++l) {
    std::vector<std::uint8_t> y(Y.size());
    for (std::size_t i = 0; i < Y.size(); ++i) y[i] = Y[i].get(l) ? 1 : 0;
    TrainConfig sub = cfg;
    sub.seed = derive_seed(cfg.seed, l);
    model.models[l] = train_linear(X, y, sub);
  }
  return model;
}

inline SmellLabels predict_ovr(const OvrModel& model, const FeatureVector& x) {
  SmellLabels out;
  for (std::size_t l = 0; l < kSmellCount; ++l) out.set(l, model.models[l].predict(x));
  return out;
}

// ---------------------------------------------------------------------------
// Classifier chain

struct ChainModel {
  // order[i] is the label trained at chain position i; identity by default.
  std::array<std::size_t, kSmellCount> order{0, 1, 2, 3, 4};
  std::array<LinearModel, kSmellCount> links;  // links[i] has dimension d+i

  friend bool operator==(const ChainModel&, const ChainModel&) = default;
};

// Earlier links contribute gold labels as 0/1 features during training and
// their own predictions at inference time.
inline ChainModel train_cc(std::span<const FeatureVector> X, std::span<const SmellLabels> Y,
                           const TrainConfig& cfg, bool random_order = false) {
  detail::check_training_set(X, Y.size());
  ChainModel model;
  if (random_order) {
    std::vector<std::size_t> order{0, 1, 2, 3, 4};
    std::mt19937_64 gen(derive_seed(cfg.seed, 0x6f72646572ull));
    deterministic_shuffle(order, gen);
    std::copy(order.begin(), order.end(), model.order.begin());
  }
  for (std::size_t i = 0; i < kSmellCount; ++i) {
    std::vector<std::uint8_t> y(Y.size());
    std::vector<FeatureVector> aug(X.size());
    for (std::size_t r = 0; r < X.size(); ++r) {
      FeatureVector a = X[r];
      a.dimension = X[r].dimension + i;
      for (std::size_t j = 0; j < i; ++j)
        if (Y[r].get(model.order[j])) a.values[X[r].dimension + j] = 1.0;
      aug[r] = std::move(a);
      y[r] = Y[r].get(model.order[i]) ? 1 : 0;
    }
    TrainConfig sub = cfg;
    sub.seed = derive_seed(cfg.seed, 100 + i);
    model.links[i] = train_linear(aug, y, sub);
  }
  return model;
}

inline SmellLabels predict_cc(const ChainModel& model, const FeatureVector& x) {
  SmellLabels out;
  std::vector<bool> predicted(kSmellCount, false);
  for (std::size_t i = 0; i < kSmellCount; ++i) {
    FeatureVector a = x;
    a.dimension = x.dimension + i;
    for (std::size_t j = 0; j < i; ++j)
      if (predicted[j]) a.values[x.dimension + j] = 1.0;
    bool label = model.links[i].predict(a);
    predicted[i] = label;
    out.set(model.order[i], label);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Label powerset

struct PowersetModel {
  // Observed labelsets in ascending mask order, each with its binary model.
  std::vector<std::pair<unsigned, LinearModel>> classes;

  friend bool operator==(const PowersetModel&, const PowersetModel&) = default;
};

inline PowersetModel train_lps(std::span<const FeatureVector> X,
                               std::span<const SmellLabels> Y, const TrainConfig& cfg) {
  detail::check_training_set(X, Y.size());
  std::set<unsigned> observed;
  for (const SmellLabels& labels : Y) observed.insert(labels.mask());

  PowersetModel model;
  std::size_t class_index = 0;
  for (unsigned mask : observed) {
    std::vector<std::uint8_t> y(Y.size());
    for (std::size_t i = 0; i < Y.size(); ++i) y[i] = Y[i].mask() == mask ? 1 : 0;
    TrainConfig sub = cfg;
    sub.seed = derive_seed(cfg.seed, 200 + class_index);
    model.classes.emplace_back(mask, train_linear(X, y, sub));
    ++class_index;
  }
  return model;
}

// Largest decision value wins; ties go to the lexicographically smallest
// labelset encoding, which is the numerically smallest mask.
inline SmellLabels predict_lps(const PowersetModel& model, const FeatureVector& x) {
  if (model.classes.empty()) throw EmptyTrainingSet();
  unsigned best_mask = model.classes[0].first;
  double best = model.classes[0].second.decision(x);
  for (std::size_t c = 1; c < model.classes.size(); ++c) {
    double d = model.classes[c].second.decision(x);
    if (d > best) {
      best = d;
      best_mask = model.classes[c].first;
    }
  }
  return SmellLabels::from_mask(best_mask);
}

// ---------------------------------------------------------------------------
// ML-kNN

namespace detail {

inline double squared_distance(const FeatureVector& a, const FeatureVector& b) {
  double d2 = 0;
  auto ia = a.values.begin();
  auto ib = b.values.begin();
  while (ia != a.values.end() || ib != b.values.end()) {
    if (ib == b.values.end() || (ia != a.values.end() && ia->first < ib->first)) {
      d2 += ia->second * ia->second;
      ++ia;
    } else if (ia == a.values.end() || ib->first < ia->first) {
      d2 += ib->second * ib->second;
      ++ib;
    } else {
      double diff = ia->second - ib->second;
      d2 += diff * diff;
      ++ia;
      ++ib;
    }
  }
  return d2;
}

// Indices of the k nearest pool vectors (Euclidean; distance ties broken by
// ascending pool index). `exclude` skips one pool position.
inline std::vector<std::size_t> nearest_neighbors(std::span<const FeatureVector> pool,
                                                  const FeatureVector& query, std::size_t k,
                                                  std::size_t exclude = static_cast<std::size_t>(-1)) {
  std::vector<std::pair<double, std::size_t>> dist;
  dist.reserve(pool.size());
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (i == exclude) continue;
    dist.emplace_back(squared_distance(pool[i], query), i);
  }
  std::sort(dist.begin(), dist.end());
  if (dist.size() > k) dist.resize(k);
  std::vector<std::size_t> out;
  out.reserve(dist.size());
  for (const auto& [d2, i] : dist) out.push_back(i);
  return out;
}

}  // namespace detail

struct MlknnModel {
  std::size_t k = 10;
  double s = 1.0;
  std::vector<FeatureVector> train_x;
  std::vector<SmellLabels> train_y;
  std::array<double, kSmellCount> prior_h1{};
  // c_pos[l][j]: training instances positive for l with j positive neighbors;
  // c_neg[l][j]: negative instances likewise. j ranges over 0..k.
  std::array<std::vector<std::size_t>, kSmellCount> c_pos;
  std::array<std::vector<std::size_t>, kSmellCount> c_neg;

  friend bool operator==(const MlknnModel&, const MlknnModel&) = default;
};

inline MlknnModel train_mlknn(std::span<const FeatureVector> X,
                              std::span<const SmellLabels> Y, std::size_t k = 10,
                              double s = 1.0) {
  detail::check_training_set(X, Y.size());
  if (k < 1) throw Error("k must be at least 1");
  if (s <= 0) throw Error("smoothing must be positive");
  if (X.size() < k + 1)
    throw TooFewInstances(std::to_string(X.size()) + " instances for k=" + std::to_string(k));

  MlknnModel model;
  model.k = k;
  model.s = s;
  model.train_x.assign(X.begin(), X.end());
  model.train_y.assign(Y.begin(), Y.end());

  const double m = static_cast<double>(X.size());
  for (std::size_t l = 0; l < kSmellCount; ++l) {
    double positives = 0;
    for (const SmellLabels& labels : Y) positives += labels.get(l) ? 1 : 0;
    model.prior_h1[l] = (s + positives) / (2 * s + m);
    model.c_pos[l].assign(k + 1, 0);
    model.c_neg[l].assign(k + 1, 0);
  }

  for (std::size_t i = 0; i < X.size(); ++i) {
    std::vector<std::size_t> nn = detail::nearest_neighbors(X, X[i], k, i);
    for (std::size_t l = 0; l < kSmellCount; ++l) {
      std::size_t delta = 0;
      for (std::size_t j : nn) delta += Y[j].get(l) ? 1 : 0;
      if (Y[i].get(l)) model.c_pos[l][delta] += 1;
      else model.c_neg[l][delta] += 1;
    }
  }
  return model;
}

// MAP decision per label from neighbor counts; ties predict positive.
inline SmellLabels predict_mlknn(const MlknnModel& model, const FeatureVector& x) {
  if (!model.train_x.empty() && x.dimension != model.train_x[0].dimension)
    throw DimensionMismatch(model.train_x[0].dimension, x.dimension);
  std::vector<std::size_t> nn = detail::nearest_neighbors(model.train_x, x, model.k);
  SmellLabels out;
  const double s = model.s;
  const double kk = static_cast<double>(model.k);
  for (std::size_t l = 0; l < kSmellCount; ++l) {
    std::size_t c = 0;
    for (std::size_t j : nn) c += model.train_y[j].get(l) ? 1 : 0;
    double sum_pos = 0, sum_neg = 0;
    for (std::size_t j = 0; j <= model.k; ++j) {
      sum_pos += static_cast<double>(model.c_pos[l][j]);
      sum_neg += static_cast<double>(model.c_neg[l][j]);
    }
    double p_h1 = model.prior_h1[l];
    double p_h0 = 1.0 - p_h1;
    double like_pos = (s + static_cast<double>(model.c_pos[l][c])) / (s * (kk + 1) + sum_pos);
    double like_neg = (s + static_cast<double>(model.c_neg[l][c])) / (s * (kk + 1) + sum_neg);
    out.set(l, p_h1 * like_pos >= p_h0 * like_neg);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Pluggable prediction interface. The four bundled learners adapt to it; new
// predictors (e.g. external models) can implement it directly.

class MultilabelPredictor {
 public:
  virtual ~MultilabelPredictor() = default;
  virtual SmellLabels predict(const FeatureVector& x) const = 0;
};

inline SmellLabels predict(const OvrModel& m, const FeatureVector& x) { return predict_ovr(m, x); }
inline SmellLabels predict(const ChainModel& m, const FeatureVector& x) { return predict_cc(m, x); }
inline SmellLabels predict(const PowersetModel& m, const FeatureVector& x) { return predict_lps(m, x); }
inline SmellLabels predict(const MlknnModel& m, const FeatureVector& x) { return predict_mlknn(m, x); }

template <typename Model>
class ModelPredictor final : public MultilabelPredictor {
 public:
  explicit ModelPredictor(const Model& model) : model_(&model) {}
  SmellLabels predict(const FeatureVector& x) const override {
    return docsmell::predict(*model_, x);
  }

 private:
  const Model* model_;
};

}  // namespace docsmell
