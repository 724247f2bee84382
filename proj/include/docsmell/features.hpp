#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "docsmell/corpus.hpp"
#include "docsmell/errors.hpp"
#include "docsmell/metrics.hpp"

namespace docsmell {

// Sparse vector keyed by feature index; zeros are never stored.
struct FeatureVector {
  std::map<std::size_t, double> values;
  std::size_t dimension = 0;

  void set(std::size_t i, double v) {
    if (i >= dimension) throw BadFeatureIndex(i, dimension);
    if (v == 0.0) values.erase(i);
    else values[i] = v;
  }

  double get(std::size_t i) const {
    auto it = values.find(i);
    return it == values.end() ? 0.0 : it->second;
  }

  friend bool operator==(const FeatureVector&, const FeatureVector&) = default;
};

struct Vocabulary {
  std::map<std::string, std::size_t> index;     // token -> dense 0-based index
  std::map<std::string, std::size_t> doc_freq;  // retained tokens only
  std::size_t min_df = 2;
  std::optional<std::size_t> max_features;

  std::size_t size() const { return index.size(); }
};

inline constexpr std::size_t kDefaultMinDf = 2;
inline constexpr std::size_t kDefaultMaxFeatures = 5000;

// Document frequencies over tokenize(description_text); tokens below min_df
// dropped; optional cap keeps the top-df tokens (df ties broken in favor of
// the lexicographically smaller token); indices follow lexicographic order.
inline Vocabulary build_vocabulary(std::span<const DocUnit> units, std::size_t min_df,
                                   std::optional<std::size_t> max_features) {
  if (units.empty()) throw EmptyCorpus();
  std::map<std::string, std::size_t> df;
  for (const DocUnit& u : units) {
    std::vector<std::string> tokens = tokenize(u.description_text);
    std::sort(tokens.begin(), tokens.end());
    tokens.erase(std::unique(tokens.begin(), tokens.end()), tokens.end());
    for (std::string& t : tokens) df[std::move(t)] += 1;
  }

  std::vector<std::pair<std::string, std::size_t>> kept;
  for (const auto& [token, count] : df)
    if (count >= min_df) kept.emplace_back(token, count);

  if (max_features && kept.size() > *max_features) {
    // Highest df first; the map iteration above already ordered ties
    // lexicographically, and stable_sort preserves that order.
    std::stable_sort(kept.begin(), kept.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });
    kept.resize(*max_features);
    std::sort(kept.begin(), kept.end());
  }

  Vocabulary vocab;
  vocab.min_df = min_df;
  vocab.max_features = max_features;
  std::size_t next = 0;
  for (auto& [token, count] : kept) {
    vocab.doc_freq[token] = count;
    vocab.index[token] = next++;
  }
  return vocab;
}

inline Vocabulary build_vocabulary(const Corpus& corpus, std::size_t min_df,
                                   std::optional<std::size_t> max_features) {
  return build_vocabulary(std::span<const DocUnit>(corpus.units), min_df, max_features);
}

// Raw term counts; out-of-vocabulary tokens ignored.
inline FeatureVector bow_vector(std::span<const std::string> tokens, const Vocabulary& vocab) {
  FeatureVector out;
  out.dimension = vocab.size();
  for (const std::string& t : tokens) {
    auto it = vocab.index.find(t);
    if (it != vocab.index.end()) out.values[it->second] += 1.0;
  }
  return out;
}

struct Standardizer {
  std::array<double, 6> means{};
  std::array<double, 6> stds{};
  bool fitted = false;

  // Population mean/std per dimension; zero-variance dimensions get std 1 so
  // that z-scoring them yields exactly 0. Values are rescaled before the
  // variance pass so the readability sentinel cannot overflow.
  static Standardizer fit(std::span<const MetricVector> metrics) {
    if (metrics.empty()) throw EmptyInput();
    Standardizer s;
    for (std::size_t d = 0; d < 6; ++d) {
      double mean = 0;
      double n = 0;
      double max_abs = 0;
      for (const MetricVector& m : metrics) {
        double v = m.as_array()[d];
        n += 1;
        mean += (v - mean) / n;
        max_abs = std::max(max_abs, std::abs(v));
      }
      double scale = max_abs > 0 ? max_abs : 1.0;
      double var_scaled = 0;
      double k = 0;
      for (const MetricVector& m : metrics) {
        double v = (m.as_array()[d] - mean) / scale;
        k += 1;
        var_scaled += (v * v - var_scaled) / k;
      }
      double std_dev = scale * std::sqrt(var_scaled);
      if (!std::isfinite(std_dev)) std_dev = std::numeric_limits<double>::max();
      s.means[d] = mean;
      s.stds[d] = std_dev > 0 ? std_dev : 1.0;
    }
    s.fitted = true;
    return s;
  }

  friend bool operator==(const Standardizer&, const Standardizer&) = default;
};

// Fixed order: doc_length, readability, jargon_count, url_count,
// struct_ref_count, edit_distance; each dimension z-scored.
inline FeatureVector rule_features(const MetricVector& m, const Standardizer& s) {
  if (!s.fitted) throw UnfittedStandardizer();
  FeatureVector out;
  out.dimension = 6;
  auto values = m.as_array();
  for (std::size_t d = 0; d < 6; ++d) {
    double diff = values[d] - s.means[d];
    if (!std::isfinite(diff))
      diff = std::copysign(std::numeric_limits<double>::max(), diff);
    double z = diff / s.stds[d];
    if (z != 0.0) out.values[d] = z;
  }
  return out;
}

enum class FeatureKind { rule, bow, bow_rule };

inline std::string to_string(FeatureKind k) {
  switch (k) {
    case FeatureKind::rule: return "rule";
    case FeatureKind::bow: return "bow";
    case FeatureKind::bow_rule: return "bow+rule";
  }
  throw Error("bad feature kind");
}

inline FeatureKind feature_kind_from_string(std::string_view s) {
  if (s == "rule" || s == "rule-feats") return FeatureKind::rule;
  if (s == "bow") return FeatureKind::bow;
  if (s == "bow+rule" || s == "bow_rule") return FeatureKind::bow_rule;
  throw Error("unknown feature kind: " + std::string(s));
}

// A fitted featurization: what to extract and the training-set statistics
// needed to extract it. Fit on training folds only.
struct FeatureSpace {
  FeatureKind kind = FeatureKind::rule;
  Vocabulary vocab;          // bow and bow+rule
  Standardizer standardizer; // rule and bow+rule

  std::size_t dimension() const {
    switch (kind) {
      case FeatureKind::rule: return 6;
      case FeatureKind::bow: return vocab.size();
      case FeatureKind::bow_rule: return vocab.size() + 6;
    }
    throw Error("bad feature kind");
  }

  FeatureVector vectorize(const DocUnit& unit, const MetricVector& m) const {
    switch (kind) {
      case FeatureKind::rule:
        return rule_features(m, standardizer);
      case FeatureKind::bow: {
        std::vector<std::string> tokens = tokenize(unit.description_text);
        return bow_vector(tokens, vocab);
      }
      case FeatureKind::bow_rule: {
        std::vector<std::string> tokens = tokenize(unit.description_text);
        FeatureVector out = bow_vector(tokens, vocab);
        FeatureVector rf = rule_features(m, standardizer);
        out.dimension = vocab.size() + 6;
        for (const auto& [i, v] : rf.values) out.values[vocab.size() + i] = v;
        return out;
      }
    }
    throw Error("bad feature kind");
  }
};

inline FeatureSpace fit_feature_space(FeatureKind kind, std::span<const DocUnit> units,
                                      std::span<const MetricVector> metrics,
                                      std::size_t min_df = kDefaultMinDf,
                                      std::optional<std::size_t> max_features =
                                          kDefaultMaxFeatures) {
  FeatureSpace fs;
  fs.kind = kind;
  if (kind == FeatureKind::bow || kind == FeatureKind::bow_rule)
    fs.vocab = build_vocabulary(units, min_df, max_features);
  if (kind == FeatureKind::rule || kind == FeatureKind::bow_rule)
    fs.standardizer = Standardizer::fit(metrics);
  return fs;
}

inline nlohmann::ordered_json to_json(const Vocabulary& v) {
  nlohmann::ordered_json tokens;
  for (const auto& [token, idx] : v.index) tokens[token] = idx;
  nlohmann::ordered_json out;
  out["tokens"] = tokens;
  nlohmann::ordered_json df;
  for (const auto& [token, count] : v.doc_freq) df[token] = count;
  out["doc_freq"] = df;
  out["min_df"] = v.min_df;
  if (v.max_features) out["max_features"] = *v.max_features;
  return out;
}

inline Vocabulary vocabulary_from_json(const nlohmann::json& obj) {
  Vocabulary v;
  for (const auto& [token, idx] : obj.at("tokens").items())
    v.index[token] = idx.get<std::size_t>();
  for (const auto& [token, count] : obj.at("doc_freq").items())
    v.doc_freq[token] = count.get<std::size_t>();
  v.min_df = obj.at("min_df").get<std::size_t>();
  if (obj.contains("max_features"))
    v.max_features = obj.at("max_features").get<std::size_t>();
  return v;
}

inline nlohmann::ordered_json to_json(const Standardizer& s) {
  nlohmann::ordered_json out;
  out["means"] = s.means;
  out["stds"] = s.stds;
  return out;
}

inline Standardizer standardizer_from_json(const nlohmann::json& obj) {
  Standardizer s;
  auto means = obj.at("means").get<std::vector<double>>();
  auto stds = obj.at("stds").get<std::vector<double>>();
  if (means.size() != 6 || stds.size() != 6) throw Error("standardizer must have 6 dimensions");
  std::copy(means.begin(), means.end(), s.means.begin());
  std::copy(stds.begin(), stds.end(), s.stds.begin());
  s.fitted = true;
  return s;
}

inline nlohmann::ordered_json to_json(const FeatureSpace& fs) {
  nlohmann::ordered_json out;
  out["kind"] = to_string(fs.kind);
  if (fs.kind == FeatureKind::bow || fs.kind == FeatureKind::bow_rule)
    out["vocabulary"] = to_json(fs.vocab);
  if (fs.kind == FeatureKind::rule || fs.kind == FeatureKind::bow_rule)
    out["standardizer"] = to_json(fs.standardizer);
  return out;
}

inline FeatureSpace feature_space_from_json(const nlohmann::json& obj) {
  FeatureSpace fs;
  fs.kind = feature_kind_from_string(obj.at("kind").get<std::string>());
  if (obj.contains("vocabulary")) fs.vocab = vocabulary_from_json(obj.at("vocabulary"));
  if (obj.contains("standardizer"))
    fs.standardizer = standardizer_from_json(obj.at("standardizer"));
  return fs;
}

}  // namespace docsmell
