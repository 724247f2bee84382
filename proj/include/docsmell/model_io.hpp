#pragma once

#include <fstream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "docsmell/errors.hpp"
#include "docsmell/features.hpp"
#include "docsmell/learn.hpp"
#include "docsmell/rules.hpp"

namespace docsmell {

// A trained model plus the featurization it expects. Rule models carry no
// feature space (they consume raw metric values).
struct SavedModel {
  std::variant<RuleModel, OvrModel, ChainModel, PowersetModel, MlknnModel> model;
  std::optional<FeatureSpace> feature_space;
};

namespace detail {

inline nlohmann::ordered_json vector_to_json(const FeatureVector& x) {
  if (x.dimension == 6) {
    std::vector<double> dense(6, 0.0);
    for (const auto& [i, v] : x.values) dense[i] = v;
    return nlohmann::ordered_json(dense);
  }
  nlohmann::ordered_json out;
  out["dim"] = x.dimension;
  nlohmann::ordered_json values;
  for (const auto& [i, v] : x.values) values[std::to_string(i)] = v;
  out["values"] = values;
  return out;
}

inline FeatureVector vector_from_json(const nlohmann::json& obj) {
  FeatureVector x;
  if (obj.is_array()) {
    x.dimension = obj.size();
    for (std::size_t i = 0; i < obj.size(); ++i) {
      double v = obj[i].get<double>();
      if (v != 0.0) x.values[i] = v;
    }
    return x;
  }
  x.dimension = obj.at("dim").get<std::size_t>();
  for (const auto& [key, v] : obj.at("values").items())
    x.values[static_cast<std::size_t>(std::stoull(key))] = v.get<double>();
  return x;
}

inline nlohmann::ordered_json linear_to_json(const LinearModel& m) {
  nlohmann::ordered_json out;
  out["weights"] = m.weights;
  out["bias"] = m.bias;
  return out;
}

inline LinearModel linear_from_json(const nlohmann::json& obj) {
  LinearModel m;
  m.weights = obj.at("weights").get<std::vector<double>>();
  m.bias = obj.at("bias").get<double>();
  return m;
}

}  // namespace detail

inline nlohmann::ordered_json to_json(const SavedModel& saved) {
  nlohmann::ordered_json out;
  nlohmann::ordered_json payload;
  if (const auto* rules = std::get_if<RuleModel>(&saved.model)) {
    out["model_type"] = "rules";
    payload = to_json(*rules);
  } else if (const auto* ovr = std::get_if<OvrModel>(&saved.model)) {
    out["model_type"] = "ovr";
    nlohmann::ordered_json models = nlohmann::ordered_json::array();
    for (const LinearModel& m : ovr->models) models.push_back(detail::linear_to_json(m));
    payload["models"] = models;
  } else if (const auto* cc = std::get_if<ChainModel>(&saved.model)) {
    out["model_type"] = "cc";
    payload["order"] = cc->order;
    nlohmann::ordered_json links = nlohmann::ordered_json::array();
    for (const LinearModel& m : cc->links) links.push_back(detail::linear_to_json(m));
    payload["links"] = links;
  } else if (const auto* lps = std::get_if<PowersetModel>(&saved.model)) {
    out["model_type"] = "lps";
    nlohmann::ordered_json classes = nlohmann::ordered_json::array();
    for (const auto& [mask, m] : lps->classes) {
      nlohmann::ordered_json cls;
      cls["labelset"] = mask;
      cls["model"] = detail::linear_to_json(m);
      classes.push_back(cls);
    }
    payload["classes"] = classes;
  } else if (const auto* knn = std::get_if<MlknnModel>(&saved.model)) {
    out["model_type"] = "mlknn";
    payload["k"] = knn->k;
    payload["s"] = knn->s;
    payload["priors"] = knn->prior_h1;
    payload["c_pos"] = knn->c_pos;
    payload["c_neg"] = knn->c_neg;
    nlohmann::ordered_json xs = nlohmann::ordered_json::array();
    for (const FeatureVector& x : knn->train_x) xs.push_back(detail::vector_to_json(x));
    payload["train_x"] = xs;
    std::vector<unsigned> masks;
    for (const SmellLabels& y : knn->train_y) masks.push_back(y.mask());
    payload["train_y"] = masks;
  }
  if (saved.feature_space) out["feature_space"] = to_json(*saved.feature_space);
  out["payload"] = payload;
  return out;
}

inline SavedModel model_from_json(const nlohmann::json& obj) {
  SavedModel saved;
  std::string type = obj.at("model_type").get<std::string>();
  const nlohmann::json& payload = obj.at("payload");
  if (type == "rules") {
    saved.model = rule_model_from_json(payload);
  } else if (type == "ovr") {
    OvrModel m;
    const nlohmann::json& models = payload.at("models");
    if (models.size() != kSmellCount) throw Error("ovr payload must hold 5 models");
    for (std::size_t l = 0; l < kSmellCount; ++l)
      m.models[l] = detail::linear_from_json(models[l]);
    saved.model = std::move(m);
  } else if (type == "cc") {
    ChainModel m;
    auto order = payload.at("order").get<std::vector<std::size_t>>();
    if (order.size() != kSmellCount) throw Error("cc order must hold 5 entries");
    std::copy(order.begin(), order.end(), m.order.begin());
    const nlohmann::json& links = payload.at("links");
    if (links.size() != kSmellCount) throw Error("cc payload must hold 5 links");
    for (std::size_t i = 0; i < kSmellCount; ++i)
      m.links[i] = detail::linear_from_json(links[i]);
    saved.model = std::move(m);
  } else if (type == "lps") {
    PowersetModel m;
    for (const nlohmann::json& cls : payload.at("classes"))
      m.classes.emplace_back(cls.at("labelset").get<unsigned>(),
                             detail::linear_from_json(cls.at("model")));
    saved.model = std::move(m);
  } else if (type == "mlknn") {
    MlknnModel m;
    m.k = payload.at("k").get<std::size_t>();
    m.s = payload.at("s").get<double>();
    auto priors = payload.at("priors").get<std::vector<double>>();
    if (priors.size() != kSmellCount) throw Error("mlknn payload must hold 5 priors");
    std::copy(priors.begin(), priors.end(), m.prior_h1.begin());
    for (std::size_t l = 0; l < kSmellCount; ++l) {
      m.c_pos[l] = payload.at("c_pos")[l].get<std::vector<std::size_t>>();
      m.c_neg[l] = payload.at("c_neg")[l].get<std::vector<std::size_t>>();
    }
    for (const nlohmann::json& x : payload.at("train_x"))
      m.train_x.push_back(detail::vector_from_json(x));
    for (const nlohmann::json& y : payload.at("train_y"))
      m.train_y.push_back(SmellLabels::from_mask(y.get<unsigned>()));
    saved.model = std::move(m);
  } else {
    throw Error("unknown model_type: " + type);
  }
  if (obj.contains("feature_space"))
    saved.feature_space = feature_space_from_json(obj.at("feature_space"));
  return saved;
}

inline void save_model(const SavedModel& saved, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open model file for writing: " + path);
  out << to_json(saved).dump(2) << '\n';
}

inline SavedModel load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open model file: " + path);
  nlohmann::json obj;
  try {
    in >> obj;
  } catch (const nlohmann::json::exception& e) {
    throw IoError("cannot parse model file " + path + ": " + e.what());
  }
  return model_from_json(obj);
}

}  // namespace docsmell
