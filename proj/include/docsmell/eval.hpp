#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "docsmell/corpus.hpp"
#include "docsmell/errors.hpp"
#include "docsmell/features.hpp"
#include "docsmell/learn.hpp"
#include "docsmell/metrics.hpp"
#include "docsmell/random.hpp"
#include "docsmell/rules.hpp"

namespace docsmell {

struct FoldAssignment {
  std::vector<std::size_t> fold_of;  // fold index per unit
  std::size_t k = 0;
  std::uint64_t seed = 0;

  std::vector<std::size_t> fold_sizes() const {
    std::vector<std::size_t> sizes(k, 0);
    for (std::size_t f : fold_of) sizes[f] += 1;
    return sizes;
  }
};

// Greedy iterative stratification: repeatedly take the label with the fewest
// unassigned positives and deal its units to the fold with the largest
// remaining quota for that label (ties: largest remaining total quota, then
// a seeded random pick). Units with no labels are dealt last by total quota.
// Quotas are tracked as integers scaled by k so tie detection is exact.
inline FoldAssignment iterative_stratified_folds(std::span<const SmellLabels> Y, std::size_t k,
                                                 std::uint64_t seed) {
  const std::size_t m = Y.size();
  if (k < 2 || m < k)
    throw TooFewInstances(std::to_string(m) + " units for k=" + std::to_string(k));

  std::mt19937_64 gen(seed);
  std::vector<std::int64_t> total_quota(k, static_cast<std::int64_t>(m));
  std::array<std::vector<std::int64_t>, kSmellCount> label_quota;
  std::array<std::vector<std::size_t>, kSmellCount> positives;
  for (std::size_t l = 0; l < kSmellCount; ++l) {
    std::int64_t count = 0;
    for (std::size_t i = 0; i < m; ++i)
      if (Y[i].get(l)) {
        positives[l].push_back(i);
        ++count;
      }
    label_quota[l].assign(k, count);
  }

  std::vector<std::size_t> fold_of(m, k);  // k means unassigned
  auto pick_fold = [&](const std::vector<std::int64_t>* primary) {
    std::vector<std::size_t> best;
    if (primary) {
      std::int64_t top = (*primary)[0];
      for (std::size_t f = 0; f < k; ++f) top = std::max(top, (*primary)[f]);
      for (std::size_t f = 0; f < k; ++f)
        if ((*primary)[f] == top) best.push_back(f);
    } else {
      for (std::size_t f = 0; f < k; ++f) best.push_back(f);
    }
    if (best.size() > 1) {
      std::int64_t top = total_quota[best[0]];
      for (std::size_t f : best) top = std::max(top, total_quota[f]);
      std::vector<std::size_t> narrowed;
      for (std::size_t f : best)
        if (total_quota[f] == top) narrowed.push_back(f);
      best = std::move(narrowed);
    }
    return best.size() == 1 ? best[0] : best[pick_index(best.size(), gen)];
  };

  auto assign = [&](std::size_t unit, std::size_t fold) {
    fold_of[unit] = fold;
    total_quota[fold] -= static_cast<std::int64_t>(k);
    for (std::size_t l = 0; l < kSmellCount; ++l)
      if (Y[unit].get(l)) label_quota[l][fold] -= static_cast<std::int64_t>(k);
  };

  for (;;) {
    std::size_t rarest = kSmellCount;
    std::size_t rarest_count = 0;
    for (std::size_t l = 0; l < kSmellCount; ++l) {
      std::size_t remaining = 0;
      for (std::size_t u : positives[l])
        if (fold_of[u] == k) ++remaining;
      if (remaining > 0 && (rarest == kSmellCount || remaining < rarest_count)) {
        rarest = l;
        rarest_count = remaining;
      }
    }
    if (rarest == kSmellCount) break;
    for (std::size_t u : positives[rarest]) {
      if (fold_of[u] != k) continue;
      assign(u, pick_fold(&label_quota[rarest]));
    }
  }

  for (std::size_t u = 0; u < m; ++u)
    if (fold_of[u] == k) assign(u, pick_fold(nullptr));

  FoldAssignment out;
  out.fold_of = std::move(fold_of);
  out.k = k;
  out.seed = seed;
  return out;
}

// ---------------------------------------------------------------------------
// Scores

struct ConfusionCounts {
  std::size_t tp = 0, fp = 0, tn = 0, fn = 0;
  std::size_t total() const { return tp + fp + tn + fn; }
};

struct BinaryScores {
  double accuracy = 0, precision = 0, recall = 0, f1 = 0;
  ConfusionCounts counts;
};

// Zero denominators yield 0 by convention.
inline BinaryScores label_metrics(std::span<const std::uint8_t> y_true,
                                  std::span<const std::uint8_t> y_pred) {
  if (y_true.size() != y_pred.size()) throw LengthMismatch(y_true.size(), y_pred.size());
  if (y_true.empty()) throw EmptyInput();
  BinaryScores s;
  for (std::size_t i = 0; i < y_true.size(); ++i) {
    if (y_true[i] && y_pred[i]) s.counts.tp += 1;
    else if (!y_true[i] && y_pred[i]) s.counts.fp += 1;
    else if (y_true[i] && !y_pred[i]) s.counts.fn += 1;
    else s.counts.tn += 1;
  }
  const double tp = static_cast<double>(s.counts.tp);
  const double fp = static_cast<double>(s.counts.fp);
  const double tn = static_cast<double>(s.counts.tn);
  const double fn = static_cast<double>(s.counts.fn);
  s.accuracy = (tp + tn) / static_cast<double>(y_true.size());
  s.precision = tp + fp > 0 ? tp / (tp + fp) : 0.0;
  s.recall = tp + fn > 0 ? tp / (tp + fn) : 0.0;
  s.f1 = s.precision + s.recall > 0
             ? 2 * s.precision * s.recall / (s.precision + s.recall)
             : 0.0;
  return s;
}

struct MultilabelScores {
  double emr = 0;
  double hamming_loss = 0;
};

inline MultilabelScores multilabel_metrics(std::span<const SmellLabels> y_true,
                                           std::span<const SmellLabels> y_pred) {
  if (y_true.size() != y_pred.size()) throw LengthMismatch(y_true.size(), y_pred.size());
  if (y_true.empty()) throw EmptyInput();
  std::size_t exact = 0, wrong_slots = 0;
  for (std::size_t i = 0; i < y_true.size(); ++i) {
    if (y_true[i] == y_pred[i]) ++exact;
    for (std::size_t l = 0; l < kSmellCount; ++l)
      if (y_true[i].get(l) != y_pred[i].get(l)) ++wrong_slots;
  }
  MultilabelScores out;
  out.emr = static_cast<double>(exact) / static_cast<double>(y_true.size());
  out.hamming_loss = static_cast<double>(wrong_slots) /
                     static_cast<double>(y_true.size() * kSmellCount);
  return out;
}

inline double cohen_kappa(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
  if (a.size() != b.size()) throw LengthMismatch(a.size(), b.size());
  if (a.empty()) throw EmptyInput();
  const double n = static_cast<double>(a.size());
  double agree = 0, a1 = 0, b1 = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if ((a[i] != 0) == (b[i] != 0)) agree += 1;
    if (a[i]) a1 += 1;
    if (b[i]) b1 += 1;
  }
  const double po = agree / n;
  const double pa = a1 / n, pb = b1 / n;
  const double pe = pa * pb + (1 - pa) * (1 - pb);
  if (pe == 1.0) return po == 1.0 ? 1.0 : 0.0;
  return (po - pe) / (1 - pe);
}

using PhiMatrix = std::array<std::array<std::optional<double>, kSmellCount>, kSmellCount>;

// Phi (Pearson for two binary variables). Diagonal pinned to 1; entries with
// a constant column are left undefined.
inline PhiMatrix phi_matrix(std::span<const SmellLabels> Y) {
  if (Y.size() < 2) throw TooFewInstances("phi needs at least 2 labelings");
  PhiMatrix out;
  for (std::size_t l1 = 0; l1 < kSmellCount; ++l1) {
    out[l1][l1] = 1.0;
    for (std::size_t l2 = l1 + 1; l2 < kSmellCount; ++l2) {
      double n11 = 0, n10 = 0, n01 = 0, n00 = 0;
      for (const SmellLabels& y : Y) {
        bool p = y.get(l1), q = y.get(l2);
        if (p && q) n11 += 1;
        else if (p && !q) n10 += 1;
        else if (!p && q) n01 += 1;
        else n00 += 1;
      }
      double r1 = n11 + n10, r0 = n01 + n00, c1 = n11 + n01, c0 = n10 + n00;
      std::optional<double> phi;
      if (r1 > 0 && r0 > 0 && c1 > 0 && c0 > 0)
        phi = (n11 * n00 - n10 * n01) / std::sqrt(r1 * r0 * c1 * c0);
      out[l1][l2] = phi;
      out[l2][l1] = phi;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cross-validation

struct FeatureSpec {
  FeatureKind kind = FeatureKind::rule;
  std::size_t min_df = kDefaultMinDf;
  std::optional<std::size_t> max_features = kDefaultMaxFeatures;
};

struct ModelSpec {
  std::string kind = "ovr";  // rules | ovr | cc | lps | mlknn
  ThresholdSelector selector = ThresholdSelector::p90;  // rules only
  double lambda = 0.01;
  std::size_t epochs = 20;
  std::size_t knn_k = 10;
  double knn_s = 1.0;
  bool chain_random_order = false;
};

struct FoldScores {
  std::array<BinaryScores, kSmellCount> per_smell;
  MultilabelScores multilabel;
};

struct EvalReport {
  std::string model_id;
  std::string feature_id;
  std::size_t k = 0;
  std::uint64_t seed = 0;
  std::vector<FoldScores> folds;
  FoldScores average;  // scores averaged over folds; counts pooled
};

namespace detail {

inline FoldScores score_fold(std::span<const SmellLabels> gold,
                             std::span<const SmellLabels> pred) {
  FoldScores out;
  for (std::size_t l = 0; l < kSmellCount; ++l) {
    std::vector<std::uint8_t> t(gold.size()), p(gold.size());
    for (std::size_t i = 0; i < gold.size(); ++i) {
      t[i] = gold[i].get(l) ? 1 : 0;
      p[i] = pred[i].get(l) ? 1 : 0;
    }
    out.per_smell[l] = label_metrics(t, p);
  }
  out.multilabel = multilabel_metrics(gold, pred);
  return out;
}

inline FoldScores average_folds(std::span<const FoldScores> folds) {
  FoldScores avg;
  const double n = static_cast<double>(folds.size());
  for (const FoldScores& f : folds) {
    for (std::size_t l = 0; l < kSmellCount; ++l) {
      avg.per_smell[l].accuracy += f.per_smell[l].accuracy / n;
      avg.per_smell[l].precision += f.per_smell[l].precision / n;
      avg.per_smell[l].recall += f.per_smell[l].recall / n;
      avg.per_smell[l].f1 += f.per_smell[l].f1 / n;
      avg.per_smell[l].counts.tp += f.per_smell[l].counts.tp;
      avg.per_smell[l].counts.fp += f.per_smell[l].counts.fp;
      avg.per_smell[l].counts.tn += f.per_smell[l].counts.tn;
      avg.per_smell[l].counts.fn += f.per_smell[l].counts.fn;
    }
    avg.multilabel.emr += f.multilabel.emr / n;
    avg.multilabel.hamming_loss += f.multilabel.hamming_loss / n;
  }
  return avg;
}

}  // namespace detail

// Per fold: fit thresholds / vocabulary / standardizer on the training
// portion only, train, predict the held-out fold. Scores are macro-averaged
// across folds. All randomness derives from `seed`.
inline EvalReport cross_validate(const Corpus& corpus, const FeatureSpec& features,
                                 const ModelSpec& spec, std::size_t k, std::uint64_t seed,
                                 const Lexicon& lexicon = Lexicon::builtin()) {
  if (!corpus.labeled()) throw UnlabeledCorpus();
  if (corpus.size() == 0) throw EmptyCorpus();

  std::vector<MetricVector> metrics(corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i)
    metrics[i] = compute_metrics(corpus.units[i], lexicon);

  FoldAssignment folds = iterative_stratified_folds(corpus.labels, k, seed);

  EvalReport report;
  report.model_id = spec.kind == "rules" ? "rules@" + to_string(spec.selector) : spec.kind;
  report.feature_id = spec.kind == "rules" ? "metrics" : to_string(features.kind);
  report.k = k;
  report.seed = seed;

  for (std::size_t f = 0; f < k; ++f) {
    std::vector<std::size_t> train_idx, test_idx;
    for (std::size_t i = 0; i < corpus.size(); ++i)
      (folds.fold_of[i] == f ? test_idx : train_idx).push_back(i);

    std::vector<SmellLabels> gold;
    for (std::size_t i : test_idx) gold.push_back(corpus.labels[i]);
    std::vector<SmellLabels> pred;

    if (spec.kind == "rules") {
      std::vector<MetricVector> train_metrics;
      for (std::size_t i : train_idx) train_metrics.push_back(metrics[i]);
      RuleModel model = fit_thresholds(train_metrics, spec.selector);
      for (std::size_t i : test_idx) pred.push_back(classify(metrics[i], model));
    } else {
      std::vector<DocUnit> train_units;
      std::vector<MetricVector> train_metrics;
      for (std::size_t i : train_idx) {
        train_units.push_back(corpus.units[i]);
        train_metrics.push_back(metrics[i]);
      }
      FeatureSpace fs = fit_feature_space(features.kind, train_units, train_metrics,
                                          features.min_df, features.max_features);
      std::vector<FeatureVector> X_train, X_test;
      std::vector<SmellLabels> Y_train;
      for (std::size_t i : train_idx) {
        X_train.push_back(fs.vectorize(corpus.units[i], metrics[i]));
        Y_train.push_back(corpus.labels[i]);
      }
      for (std::size_t i : test_idx) X_test.push_back(fs.vectorize(corpus.units[i], metrics[i]));

      TrainConfig cfg;
      cfg.lambda = spec.lambda;
      cfg.epochs = spec.epochs;
      cfg.seed = derive_seed(seed, 1000 + f);

      if (spec.kind == "ovr") {
        OvrModel model = train_ovr(X_train, Y_train, cfg);
        for (const FeatureVector& x : X_test) pred.push_back(predict_ovr(model, x));
      } else if (spec.kind == "cc") {
        ChainModel model = train_cc(X_train, Y_train, cfg, spec.chain_random_order);
        for (const FeatureVector& x : X_test) pred.push_back(predict_cc(model, x));
      } else if (spec.kind == "lps") {
        PowersetModel model = train_lps(X_train, Y_train, cfg);
        for (const FeatureVector& x : X_test) pred.push_back(predict_lps(model, x));
      } else if (spec.kind == "mlknn") {
        MlknnModel model = train_mlknn(X_train, Y_train, spec.knn_k, spec.knn_s);
        for (const FeatureVector& x : X_test) pred.push_back(predict_mlknn(model, x));
      } else {
        throw Error("unknown model kind: " + spec.kind);
      }
    }
    report.folds.push_back(detail::score_fold(gold, pred));
  }
  report.average = detail::average_folds(report.folds);
  return report;
}

// ---------------------------------------------------------------------------
// Permutation feature importance

struct ImportanceReport {
  std::size_t feature_index = 0;
  double baseline_overall = 0;
  std::array<double, kSmellCount> baseline_per_smell{};
  double delta_overall = 0;                        // baseline - mean permuted
  std::array<double, kSmellCount> delta_per_smell{};
};

namespace detail {

inline std::pair<double, std::array<double, kSmellCount>> f1_scores(
    const MultilabelPredictor& model, std::span<const FeatureVector> X,
    std::span<const SmellLabels> Y) {
  std::vector<SmellLabels> pred;
  pred.reserve(X.size());
  for (const FeatureVector& x : X) pred.push_back(model.predict(x));
  FoldScores scores = score_fold(Y, pred);
  std::array<double, kSmellCount> per{};
  double overall = 0;
  for (std::size_t l = 0; l < kSmellCount; ++l) {
    per[l] = scores.per_smell[l].f1;
    overall += per[l] / kSmellCount;
  }
  return {overall, per};
}

}  // namespace detail

// Drop in F1 when one feature column of the held-out set is shuffled.
// Each repeat permutes the original column under one seeded stream.
inline ImportanceReport permutation_importance(const MultilabelPredictor& model,
                                               std::vector<FeatureVector> X_test,
                                               std::span<const SmellLabels> Y_test,
                                               std::size_t feature_index, std::size_t repeats,
                                               std::uint64_t seed) {
  if (X_test.empty()) throw EmptyInput();
  if (X_test.size() != Y_test.size()) throw LengthMismatch(X_test.size(), Y_test.size());
  if (repeats < 1) throw Error("repeats must be at least 1");
  if (feature_index >= X_test[0].dimension)
    throw BadFeatureIndex(feature_index, X_test[0].dimension);

  ImportanceReport report;
  report.feature_index = feature_index;
  auto [base_overall, base_per] = detail::f1_scores(model, X_test, Y_test);
  report.baseline_overall = base_overall;
  report.baseline_per_smell = base_per;

  std::vector<double> column(X_test.size());
  for (std::size_t i = 0; i < X_test.size(); ++i) column[i] = X_test[i].get(feature_index);

  std::mt19937_64 gen(seed);
  double sum_overall = 0;
  std::array<double, kSmellCount> sum_per{};
  for (std::size_t r = 0; r < repeats; ++r) {
    std::vector<double> shuffled = column;
    deterministic_shuffle(shuffled, gen);
    std::vector<FeatureVector> X = X_test;
    for (std::size_t i = 0; i < X.size(); ++i) X[i].set(feature_index, shuffled[i]);
    auto [overall, per] = detail::f1_scores(model, X, Y_test);
    sum_overall += overall;
    for (std::size_t l = 0; l < kSmellCount; ++l) sum_per[l] += per[l];
  }
  const double n = static_cast<double>(repeats);
  report.delta_overall = report.baseline_overall - sum_overall / n;
  for (std::size_t l = 0; l < kSmellCount; ++l)
    report.delta_per_smell[l] = report.baseline_per_smell[l] - sum_per[l] / n;
  return report;
}

// ---------------------------------------------------------------------------
// Report serialization

namespace detail {

inline nlohmann::ordered_json scores_to_json(const FoldScores& s) {
  nlohmann::ordered_json out;
  nlohmann::ordered_json per;
  for (std::size_t l = 0; l < kSmellCount; ++l) {
    nlohmann::ordered_json one;
    one["accuracy"] = s.per_smell[l].accuracy;
    one["precision"] = s.per_smell[l].precision;
    one["recall"] = s.per_smell[l].recall;
    one["f1"] = s.per_smell[l].f1;
    one["tp"] = s.per_smell[l].counts.tp;
    one["fp"] = s.per_smell[l].counts.fp;
    one["tn"] = s.per_smell[l].counts.tn;
    one["fn"] = s.per_smell[l].counts.fn;
    per[std::string(kSmellNames[l])] = one;
  }
  out["per_smell"] = per;
  out["emr"] = s.multilabel.emr;
  out["hamming_loss"] = s.multilabel.hamming_loss;
  return out;
}

inline FoldScores scores_from_json(const nlohmann::json& obj) {
  FoldScores s;
  for (std::size_t l = 0; l < kSmellCount; ++l) {
    const nlohmann::json& one = obj.at("per_smell").at(std::string(kSmellNames[l]));
    s.per_smell[l].accuracy = one.at("accuracy").get<double>();
    s.per_smell[l].precision = one.at("precision").get<double>();
    s.per_smell[l].recall = one.at("recall").get<double>();
    s.per_smell[l].f1 = one.at("f1").get<double>();
    s.per_smell[l].counts.tp = one.at("tp").get<std::size_t>();
    s.per_smell[l].counts.fp = one.at("fp").get<std::size_t>();
    s.per_smell[l].counts.tn = one.at("tn").get<std::size_t>();
    s.per_smell[l].counts.fn = one.at("fn").get<std::size_t>();
  }
  s.multilabel.emr = obj.at("emr").get<double>();
  s.multilabel.hamming_loss = obj.at("hamming_loss").get<double>();
  return s;
}

}  // namespace detail

inline nlohmann::ordered_json to_json(const EvalReport& r) {
  nlohmann::ordered_json out;
  out["model"] = r.model_id;
  out["features"] = r.feature_id;
  out["k"] = r.k;
  out["seed"] = r.seed;
  nlohmann::ordered_json folds = nlohmann::ordered_json::array();
  for (const FoldScores& f : r.folds) folds.push_back(detail::scores_to_json(f));
  out["folds"] = folds;
  out["average"] = detail::scores_to_json(r.average);
  return out;
}

inline EvalReport eval_report_from_json(const nlohmann::json& obj) {
  EvalReport r;
  r.model_id = obj.at("model").get<std::string>();
  r.feature_id = obj.at("features").get<std::string>();
  r.k = obj.at("k").get<std::size_t>();
  r.seed = obj.at("seed").get<std::uint64_t>();
  for (const nlohmann::json& f : obj.at("folds"))
    r.folds.push_back(detail::scores_from_json(f));
  r.average = detail::scores_from_json(obj.at("average"));
  return r;
}

namespace detail {

inline std::string fixed2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return std::string(buf);
}

}  // namespace detail

// One table row per report; per-smell column groups with A/P/R/F1, then EMR
// and Hamming loss.
inline std::string to_markdown(std::span<const EvalReport> reports) {
  std::string out;
  out += "| Model | Features |";
  for (std::string_view smell : kSmellNames)
    for (const char* metric : {"A", "P", "R", "F1"})
      out += " " + std::string(smell) + " " + metric + " |";
  out += " EMR | HL |\n";
  // header separator
  out += "| --- | --- |";
  for (std::size_t i = 0; i < kSmellCount * 4 + 2; ++i) out += " --- |";
  out += "\n";
  for (const EvalReport& r : reports) {
    out += "| " + r.model_id + " | " + r.feature_id + " |";
    for (std::size_t l = 0; l < kSmellCount; ++l) {
      const BinaryScores& s = r.average.per_smell[l];
      out += " " + detail::fixed2(s.accuracy) + " | " + detail::fixed2(s.precision) + " | " +
             detail::fixed2(s.recall) + " | " + detail::fixed2(s.f1) + " |";
    }
    out += " " + detail::fixed2(r.average.multilabel.emr) + " | " +
           detail::fixed2(r.average.multilabel.hamming_loss) + " |\n";
  }
  return out;
}

}  // namespace docsmell
