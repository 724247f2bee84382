#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include <docsmell/learn.hpp>
#include <docsmell/model_io.hpp>
#include <docsmell/random.hpp>

#include "helpers.hpp"

using namespace docsmell;

namespace {

FeatureVector vec(std::initializer_list<double> values) {
  FeatureVector x;
  x.dimension = values.size();
  std::size_t i = 0;
  for (double v : values) x.set(i++, v);
  return x;
}

std::vector<FeatureVector> random_vectors(std::mt19937_64& gen, std::size_t m,
                                          std::size_t d, unsigned range) {
  std::vector<FeatureVector> X;
  for (std::size_t i = 0; i < m; ++i) {
    FeatureVector x;
    x.dimension = d;
    for (std::size_t j = 0; j < d; ++j)
      x.set(j, static_cast<double>(gen() % range));
    X.push_back(std::move(x));
  }
  return X;
}

std::vector<SmellLabels> random_labels(std::mt19937_64& gen, std::size_t m) {
  std::vector<SmellLabels> Y(m);
  for (auto& y : Y)
    for (std::size_t l = 0; l < kSmellCount; ++l) y.set(l, gen() % 3 == 0);
  return Y;
}

}  // namespace

TEST_CASE("train_linear separates a trivially separable set") {
  std::vector<FeatureVector> X{vec({1.0}), vec({-1.0})};
  std::vector<std::uint8_t> y{1, 0};
  TrainConfig cfg;
  cfg.lambda = 0.01;
  cfg.epochs = 100;
  LinearModel model = train_linear(X, y, cfg);
  CHECK(model.predict(vec({1.0})));
  CHECK_FALSE(model.predict(vec({-1.0})));
}

TEST_CASE("train_linear degenerate and error cases") {
  SECTION("uniform labels are reproduced on the training set") {
    std::mt19937_64 gen(2);
    auto X = random_vectors(gen, 12, 3, 5);
    for (std::uint8_t label : {std::uint8_t{1}, std::uint8_t{0}}) {
      std::vector<std::uint8_t> y(X.size(), label);
      TrainConfig cfg;
      cfg.epochs = 50;
      LinearModel model = train_linear(X, y, cfg);
      for (const FeatureVector& x : X) CHECK(model.predict(x) == (label != 0));
    }
  }

  SECTION("mismatched dimensions rejected") {
    std::vector<FeatureVector> X{vec({1.0}), vec({1.0, 2.0})};
    std::vector<std::uint8_t> y{1, 0};
    CHECK_THROWS_AS(train_linear(X, y, TrainConfig{}), DimensionMismatch);
  }

  SECTION("empty training set rejected") {
    CHECK_THROWS_AS(
        train_linear(std::vector<FeatureVector>{}, std::vector<std::uint8_t>{},
                     TrainConfig{}),
        EmptyTrainingSet);
  }

  SECTION("length mismatch rejected") {
    std::vector<FeatureVector> X{vec({1.0})};
    std::vector<std::uint8_t> y{1, 0};
    CHECK_THROWS_AS(train_linear(X, y, TrainConfig{}), LengthMismatch);
  }

  SECTION("decision value zero predicts positive") {
    LinearModel zero;
    zero.weights.assign(2, 0.0);
    zero.bias = 0.0;
    CHECK(zero.predict(vec({3.0, -1.0})));
  }
}

TEST_CASE("training objective is non-increasing across epochs") {
  std::vector<FeatureVector> X{vec({1.0, 0.0}), vec({0.9, 0.2}), vec({-1.0, 0.1}),
                               vec({-0.8, -0.3})};
  std::vector<std::uint8_t> y{1, 1, 0, 0};
  TrainConfig cfg;
  cfg.lambda = 0.01;
  cfg.epochs = 40;
  std::vector<double> trace;
  train_linear(X, y, cfg, &trace);
  REQUIRE(trace.size() == cfg.epochs);
  for (std::size_t e = 1; e < trace.size(); ++e)
    CHECK(trace[e] <= trace[e - 1] + 1e-6);
}

TEST_CASE("training is deterministic in data, config and seed") {
  std::mt19937_64 gen(5);
  auto X = random_vectors(gen, 20, 4, 7);
  auto Y = random_labels(gen, 20);
  TrainConfig cfg;
  cfg.epochs = 15;
  cfg.seed = 99;

  CHECK(train_ovr(X, Y, cfg) == train_ovr(X, Y, cfg));
  CHECK(train_cc(X, Y, cfg) == train_cc(X, Y, cfg));
  CHECK(train_lps(X, Y, cfg) == train_lps(X, Y, cfg));
  CHECK(train_mlknn(X, Y, 3) == train_mlknn(X, Y, 3));

  TrainConfig other = cfg;
  other.seed = 100;
  CHECK_FALSE(train_ovr(X, Y, cfg) == train_ovr(X, Y, other));
}

TEST_CASE("predict_ovr applies the per-smell tie rule") {
  OvrModel model;
  for (auto& m : model.models) {
    m.weights.assign(2, 0.0);
    m.bias = 0.0;
  }
  SmellLabels y = predict_ovr(model, vec({1.0, 1.0}));
  for (std::size_t l = 0; l < kSmellCount; ++l) CHECK(y.get(l));

  model.models[1].bias = -0.5;
  y = predict_ovr(model, vec({1.0, 1.0}));
  CHECK(y.get(0));
  CHECK_FALSE(y.get(1));
}

TEST_CASE("ovr training per label ignores the other labels") {
  std::mt19937_64 gen(8);
  auto X = random_vectors(gen, 25, 4, 6);
  auto Y = random_labels(gen, 25);
  TrainConfig cfg;
  cfg.epochs = 10;
  OvrModel base = train_ovr(X, Y, cfg);

  const std::size_t fixed = 2;
  std::vector<SmellLabels> scrambled = Y;
  std::vector<std::size_t> perm(Y.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), gen);
  for (std::size_t i = 0; i < Y.size(); ++i)
    for (std::size_t l = 0; l < kSmellCount; ++l)
      if (l != fixed) scrambled[i].set(l, Y[perm[i]].get(l));

  OvrModel moved = train_ovr(X, scrambled, cfg);
  CHECK(moved.models[fixed] == base.models[fixed]);
}

TEST_CASE("classifier chain consumes earlier links' labels") {
  std::mt19937_64 gen(13);
  const std::size_t m = 30, d = 3;
  auto X = random_vectors(gen, m, d, 2);
  std::vector<SmellLabels> Y(m);
  for (auto& y : Y) y.bloated = gen() % 2 == 0;
  for (std::size_t i = 0; i < m; ++i) Y[i].lazy = Y[i].bloated;

  TrainConfig cfg;
  cfg.lambda = 0.01;
  cfg.epochs = 300;
  ChainModel model = train_cc(X, Y, cfg);

  SECTION("link dimensions are base plus chain position") {
    for (std::size_t i = 0; i < kSmellCount; ++i)
      CHECK(model.links[i].weights.size() == d + i);
  }

  SECTION("a perfectly predictive earlier label is exploited") {
    // the lazy link sees gold bloated as its extra feature during training
    std::size_t correct = 0;
    for (std::size_t i = 0; i < m; ++i) {
      FeatureVector aug = X[i];
      aug.dimension = d + 1;
      aug.set(d, Y[i].bloated ? 1.0 : 0.0);
      if (model.links[1].predict(aug) == Y[i].lazy) ++correct;
    }
    CHECK(correct == m);
  }

  SECTION("prediction feeds earlier predictions forward") {
    // replicate the chain by hand: each link sees the query plus the
    // predictions of all earlier links
    for (int trial = 0; trial < 5; ++trial) {
      FeatureVector q = random_vectors(gen, 1, d, 4)[0];
      SmellLabels got = predict_cc(model, q);
      FeatureVector aug = q;
      SmellLabels expected;
      for (std::size_t i = 0; i < kSmellCount; ++i) {
        aug.dimension = d + i;
        bool bit = model.links[i].predict(aug);
        expected.set(model.order[i], bit);
        aug.dimension = d + i + 1;
        aug.set(d + i, bit ? 1.0 : 0.0);
      }
      CHECK(got == expected);
    }
  }

  CHECK_THROWS_AS(
      train_cc(std::vector<FeatureVector>{}, std::vector<SmellLabels>{}, cfg),
      EmptyTrainingSet);
}

TEST_CASE("label powerset predicts only observed labelsets") {
  std::mt19937_64 gen(17);
  const std::size_t m = 24;
  auto X = random_vectors(gen, m, 3, 9);
  std::vector<SmellLabels> Y(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (i % 2 == 0) Y[i].bloated = true;
    else Y[i].lazy = true;
  }
  TrainConfig cfg;
  cfg.epochs = 20;
  PowersetModel model = train_lps(X, Y, cfg);
  CHECK(model.classes.size() == 2);

  unsigned mask_a = Y[0].mask();
  unsigned mask_b = Y[1].mask();
  for (int trial = 0; trial < 100; ++trial) {
    FeatureVector q = random_vectors(gen, 1, 3, 9)[0];
    unsigned predicted = predict_lps(model, q).mask();
    CHECK((predicted == mask_a || predicted == mask_b));
  }
}

TEST_CASE("label powerset degenerate class structures") {
  std::mt19937_64 gen(19);
  TrainConfig cfg;
  cfg.epochs = 5;

  SECTION("single observed labelset is always predicted") {
    auto X = random_vectors(gen, 6, 2, 5);
    std::vector<SmellLabels> Y(6);
    for (auto& y : Y) y.tangled = true;
    PowersetModel model = train_lps(X, Y, cfg);
    CHECK(model.classes.size() == 1);
    FeatureVector q = random_vectors(gen, 1, 2, 5)[0];
    SmellLabels y = predict_lps(model, q);
    CHECK(y.tangled);
    CHECK(y.mask() == Y[0].mask());
  }

  SECTION("all 32 labelsets observed give 32 classes in ascending mask order") {
    auto X = random_vectors(gen, 32, 2, 50);
    std::vector<SmellLabels> Y;
    for (unsigned mask = 0; mask < 32; ++mask) Y.push_back(SmellLabels::from_mask(mask));
    PowersetModel model = train_lps(X, Y, cfg);
    REQUIRE(model.classes.size() == 32);
    for (unsigned mask = 0; mask < 32; ++mask) CHECK(model.classes[mask].first == mask);
  }

  SECTION("empty training set rejected") {
    CHECK_THROWS_AS(
        train_lps(std::vector<FeatureVector>{}, std::vector<SmellLabels>{}, cfg),
        EmptyTrainingSet);
  }
}

TEST_CASE("mlknn worked example with two training points") {
  std::vector<FeatureVector> X{vec({0.0}), vec({10.0})};
  std::vector<SmellLabels> Y(2);
  Y[0].bloated = true;
  MlknnModel model = train_mlknn(X, Y, 1, 1.0);

  CHECK(model.prior_h1[0] == 0.5);      // (1+1)/(2+2)
  CHECK(model.prior_h1[1] == 0.25);     // no positives for the other labels
  CHECK(model.c_pos[0] == std::vector<std::size_t>{1, 0});
  CHECK(model.c_neg[0] == std::vector<std::size_t>{0, 1});

  // query near the positive point: C=1, posterior 0.5*(1/3) < 0.5*(2/3)
  SmellLabels y = predict_mlknn(model, vec({0.1}));
  CHECK_FALSE(y.bloated);
}

TEST_CASE("mlknn requires more instances than neighbors") {
  std::vector<FeatureVector> X{vec({0.0}), vec({1.0})};
  std::vector<SmellLabels> Y(2);
  CHECK_THROWS_AS(train_mlknn(X, Y, 2, 1.0), TooFewInstances);
  CHECK_NOTHROW(train_mlknn(X, Y, 1, 1.0));
}

TEST_CASE("mlknn count tables partition the training set per label") {
  std::mt19937_64 gen(23);
  auto X = random_vectors(gen, 30, 3, 5);
  auto Y = random_labels(gen, 30);
  MlknnModel model = train_mlknn(X, Y, 4, 1.0);
  for (std::size_t l = 0; l < kSmellCount; ++l) {
    std::size_t total = 0;
    for (std::size_t c : model.c_pos[l]) total += c;
    for (std::size_t c : model.c_neg[l]) total += c;
    CHECK(total == X.size());
  }
}

TEST_CASE("mlknn agrees with a brute-force reimplementation") {
  std::mt19937_64 gen(29);
  int queries_checked = 0;
  while (queries_checked < 200) {
    const std::size_t d = 1 + gen() % 5;
    const std::size_t m = 8 + gen() % 43;
    const std::size_t k = std::vector<std::size_t>{1, 3, 5}[gen() % 3];

    // small integer coordinates force frequent exact distance ties
    auto X = random_vectors(gen, m, d, 4);
    auto Y = random_labels(gen, m);
    MlknnModel model = train_mlknn(X, Y, k, 1.0);

    testutil::MlknnOracle oracle;
    oracle.k = k;
    oracle.s = 1.0;
    for (const FeatureVector& x : X) {
      std::vector<double> dense(d, 0.0);
      for (const auto& [j, v] : x.values) dense[j] = v;
      oracle.X.push_back(dense);
    }
    for (const SmellLabels& y : Y) {
      std::array<bool, 5> a{};
      for (std::size_t l = 0; l < kSmellCount; ++l) a[l] = y.get(l);
      oracle.Y.push_back(a);
    }

    for (int q = 0; q < 10; ++q) {
      FeatureVector query = random_vectors(gen, 1, d, 4)[0];
      std::vector<double> dense(d, 0.0);
      for (const auto& [j, v] : query.values) dense[j] = v;
      SmellLabels got = predict_mlknn(model, query);
      std::array<bool, 5> want = oracle.predict(dense);
      for (std::size_t l = 0; l < kSmellCount; ++l) CHECK(got.get(l) == want[l]);
      ++queries_checked;
    }
  }
}

TEST_CASE("mlknn with no positives predicts negative") {
  std::mt19937_64 gen(31);
  auto X = random_vectors(gen, 20, 2, 6);
  std::vector<SmellLabels> Y(20);
  MlknnModel model = train_mlknn(X, Y, 3, 1.0);
  for (std::size_t l = 0; l < kSmellCount; ++l)
    CHECK(model.prior_h1[l] == 1.0 / 22.0);
  for (int trial = 0; trial < 20; ++trial) {
    FeatureVector q = random_vectors(gen, 1, 2, 6)[0];
    CHECK(predict_mlknn(model, q).mask() == 0);
  }
}

TEST_CASE("mlknn finds an isolated positive cluster") {
  // with k=3 a cluster of four positives is the smallest whose members see
  // three positive neighbors in training, which is what a query landing in
  // the cluster observes
  std::vector<FeatureVector> X;
  std::vector<SmellLabels> Y;
  std::mt19937_64 gen(37);
  for (int i = 0; i < 16; ++i) {
    X.push_back(vec({static_cast<double>(gen() % 5), static_cast<double>(gen() % 5)}));
    Y.push_back(SmellLabels{});
  }
  for (int i = 0; i < 4; ++i) {
    X.push_back(vec({100.0 + i, 100.0}));
    SmellLabels y;
    y.fragmented = true;
    Y.push_back(y);
  }
  MlknnModel model = train_mlknn(X, Y, 3, 1.0);
  CHECK(predict_mlknn(model, vec({101.5, 100.0})).fragmented);
  CHECK_FALSE(predict_mlknn(model, vec({2.0, 2.0})).fragmented);
}

TEST_CASE("saved models round-trip through json") {
  std::mt19937_64 gen(41);
  auto X = random_vectors(gen, 20, 4, 6);
  auto Y = random_labels(gen, 20);
  TrainConfig cfg;
  cfg.epochs = 8;

  SECTION("rule model") {
    RuleModel rules{};
    rules.selector = ThresholdSelector::p75;
    rules.bloated_len = 120;
    rules.lazy_edit = 8;
    rules.excess_refs = 5;
    rules.tangled_readability = 40;
    rules.tangled_jargon = 7;
    rules.fragmented_urls = 2;
    SavedModel saved{rules, std::nullopt};
    SavedModel back = model_from_json(to_json(saved));
    CHECK(std::get<RuleModel>(back.model) == rules);
  }

  SECTION("ovr with a feature space") {
    OvrModel model = train_ovr(X, Y, cfg);
    Corpus c;
    for (std::size_t i = 0; i < 6; ++i) {
      DocUnit u;
      u.id = "u" + std::to_string(i);
      u.prototype = "void f()";
      u.description_text = "some words about unit " + std::to_string(i);
      c.units.push_back(u);
    }
    Lexicon lex;
    std::vector<MetricVector> ms;
    for (const DocUnit& u : c.units) ms.push_back(compute_metrics(u, lex));
    FeatureSpace fs = fit_feature_space(FeatureKind::bow_rule, c.units, ms, 1);

    SavedModel saved{model, fs};
    SavedModel back = model_from_json(to_json(saved));
    CHECK(std::get<OvrModel>(back.model) == model);
    REQUIRE(back.feature_space.has_value());
    CHECK(back.feature_space->dimension() == fs.dimension());
  }

  SECTION("chain") {
    ChainModel model = train_cc(X, Y, cfg);
    SavedModel back = model_from_json(to_json(SavedModel{model, std::nullopt}));
    CHECK(std::get<ChainModel>(back.model) == model);
  }

  SECTION("powerset") {
    PowersetModel model = train_lps(X, Y, cfg);
    SavedModel back = model_from_json(to_json(SavedModel{model, std::nullopt}));
    CHECK(std::get<PowersetModel>(back.model) == model);
  }

  SECTION("mlknn") {
    MlknnModel model = train_mlknn(X, Y, 3, 1.0);
    SavedModel back = model_from_json(to_json(SavedModel{model, std::nullopt}));
    CHECK(std::get<MlknnModel>(back.model) == model);
  }

  SECTION("unknown model type rejected") {
    nlohmann::json j;
    j["model_type"] = "forest";
    j["payload"] = nlohmann::json::object();
    CHECK_THROWS_AS(model_from_json(j), Error);
  }
}

TEST_CASE("predictor adapters expose a uniform interface") {
  std::mt19937_64 gen(43);
  auto X = random_vectors(gen, 15, 3, 5);
  auto Y = random_labels(gen, 15);
  TrainConfig cfg;
  cfg.epochs = 8;

  OvrModel ovr = train_ovr(X, Y, cfg);
  ChainModel cc = train_cc(X, Y, cfg);
  PowersetModel lps = train_lps(X, Y, cfg);
  MlknnModel knn = train_mlknn(X, Y, 3, 1.0);

  ModelPredictor<OvrModel> p1(ovr);
  ModelPredictor<ChainModel> p2(cc);
  ModelPredictor<PowersetModel> p3(lps);
  ModelPredictor<MlknnModel> p4(knn);

  FeatureVector q = X[0];
  CHECK(p1.predict(q) == predict(ovr, q));
  CHECK(p2.predict(q) == predict(cc, q));
  CHECK(p3.predict(q) == predict(lps, q));
  CHECK(p4.predict(q) == predict(knn, q));
}
