#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "docsmell/corpus.hpp"
#include "docsmell/errors.hpp"
#include "docsmell/metrics.hpp"

namespace docsmell {

enum class ThresholdSelector { average, p25, p50, p75, p90 };

inline std::string to_string(ThresholdSelector s) {
  switch (s) {
    case ThresholdSelector::average: return "average";
    case ThresholdSelector::p25: return "p25";
    case ThresholdSelector::p50: return "p50";
    case ThresholdSelector::p75: return "p75";
    case ThresholdSelector::p90: return "p90";
  }
  throw Error("bad selector");
}

inline ThresholdSelector selector_from_string(std::string_view s) {
  if (s == "average" || s == "avg") return ThresholdSelector::average;
  if (s == "p25") return ThresholdSelector::p25;
  if (s == "p50") return ThresholdSelector::p50;
  if (s == "p75") return ThresholdSelector::p75;
  if (s == "p90") return ThresholdSelector::p90;
  throw Error("unknown selector: " + std::string(s));
}

inline constexpr std::array<ThresholdSelector, 5> kAllSelectors{
    ThresholdSelector::average, ThresholdSelector::p25, ThresholdSelector::p50,
    ThresholdSelector::p75, ThresholdSelector::p90};

// Nearest-rank percentile: the ceil(p/100 * n)-th smallest value.
inline double percentile(std::span<const double> values, double p) {
  if (values.empty()) throw EmptyInput();
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  double x = p * static_cast<double>(sorted.size()) / 100.0;
  // Snap to an integer rank when floating-point noise puts x a hair above it.
  double nearest = std::round(x);
  if (std::abs(x - nearest) < 1e-9) x = nearest;
  auto rank = static_cast<std::ptrdiff_t>(std::ceil(x));
  rank = std::clamp<std::ptrdiff_t>(rank, 1, static_cast<std::ptrdiff_t>(sorted.size()));
  return sorted[static_cast<std::size_t>(rank - 1)];
}

struct RuleModel {
  ThresholdSelector selector = ThresholdSelector::average;
  double bloated_len = 0;
  double lazy_edit = 0;
  double excess_refs = 0;
  double tangled_readability = 0;
  double tangled_jargon = 0;
  double fragmented_urls = 0;

  friend bool operator==(const RuleModel&, const RuleModel&) = default;
};

namespace detail {

inline double mean_of(std::span<const double> values) {
  // Incremental mean over sorted values: stays finite even when the
  // readability sentinel (largest finite double) appears, and the canonical
  // order makes the result independent of input permutation.
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  double m = 0;
  double n = 0;
  for (double v : sorted) {
    n += 1;
    m += (v - m) / n;
  }
  return m;
}

}  // namespace detail

// Thresholds come from the training metric distribution. Percentile
// selectors use the stated percentile directly for higher-is-smellier
// metrics and the mirrored percentile (100 - p) for the two inverted ones
// (edit distance, readability); average mode uses the plain mean everywhere.
inline RuleModel fit_thresholds(std::span<const MetricVector> metrics,
                                ThresholdSelector selector) {
  if (metrics.empty()) throw EmptyInput();
  std::array<std::vector<double>, 6> columns;
  for (auto& c : columns) c.reserve(metrics.size());
  for (const MetricVector& m : metrics) {
    auto values = m.as_array();
    for (std::size_t d = 0; d < 6; ++d) columns[d].push_back(values[d]);
  }

  RuleModel model;
  model.selector = selector;
  if (selector == ThresholdSelector::average) {
    model.bloated_len = detail::mean_of(columns[0]);
    model.tangled_readability = detail::mean_of(columns[1]);
    model.tangled_jargon = detail::mean_of(columns[2]);
    model.fragmented_urls = detail::mean_of(columns[3]);
    model.excess_refs = detail::mean_of(columns[4]);
    model.lazy_edit = detail::mean_of(columns[5]);
    return model;
  }

  double p = 0;
  switch (selector) {
    case ThresholdSelector::p25: p = 25; break;
    case ThresholdSelector::p50: p = 50; break;
    case ThresholdSelector::p75: p = 75; break;
    case ThresholdSelector::p90: p = 90; break;
    default: break;
  }
  model.bloated_len = percentile(columns[0], p);
  model.tangled_readability = percentile(columns[1], 100 - p);
  model.tangled_jargon = percentile(columns[2], p);
  model.fragmented_urls = percentile(columns[3], p);
  model.excess_refs = percentile(columns[4], p);
  model.lazy_edit = percentile(columns[5], 100 - p);
  return model;
}

// Threshold comparisons are inclusive: a value sitting exactly on the
// threshold classifies as smelly.
inline SmellLabels classify(const MetricVector& m, const RuleModel& model) {
  SmellLabels out;
  out.bloated = static_cast<double>(m.doc_length) >= model.bloated_len;
  out.lazy = static_cast<double>(m.edit_distance) <= model.lazy_edit;
  out.excess_struct = static_cast<double>(m.struct_ref_count) >= model.excess_refs;
  out.tangled = m.readability <= model.tangled_readability ||
                static_cast<double>(m.jargon_count) >= model.tangled_jargon;
  out.fragmented = static_cast<double>(m.url_count) >= model.fragmented_urls;
  return out;
}

inline nlohmann::ordered_json to_json(const RuleModel& model) {
  nlohmann::ordered_json out;
  out["selector"] = to_string(model.selector);
  nlohmann::ordered_json thresholds;
  thresholds["bloated_len"] = model.bloated_len;
  thresholds["lazy_edit"] = model.lazy_edit;
  thresholds["excess_refs"] = model.excess_refs;
  thresholds["tangled_readability"] = model.tangled_readability;
  thresholds["tangled_jargon"] = model.tangled_jargon;
  thresholds["fragmented_urls"] = model.fragmented_urls;
  out["thresholds"] = thresholds;
  return out;
}

inline RuleModel rule_model_from_json(const nlohmann::json& obj) {
  RuleModel model;
  model.selector = selector_from_string(obj.at("selector").get<std::string>());
  const nlohmann::json& t = obj.at("thresholds");
  model.bloated_len = t.at("bloated_len").get<double>();
  model.lazy_edit = t.at("lazy_edit").get<double>();
  model.excess_refs = t.at("excess_refs").get<double>();
  model.tangled_readability = t.at("tangled_readability").get<double>();
  model.tangled_jargon = t.at("tangled_jargon").get<double>();
  model.fragmented_urls = t.at("fragmented_urls").get<double>();
  return model;
}

}  // namespace docsmell
