#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>
#include <vector>

#include <docsmell/eval.hpp>

#include "helpers.hpp"

using namespace docsmell;
using Catch::Matchers::WithinAbs;

namespace {

std::vector<SmellLabels> single_label_set(std::size_t m, std::size_t positives) {
  std::vector<SmellLabels> Y(m);
  for (std::size_t i = 0; i < positives; ++i) Y[i].bloated = true;
  return Y;
}

}  // namespace

TEST_CASE("stratified folds balance a single-label dataset") {
  auto Y = single_label_set(10, 5);
  FoldAssignment folds = iterative_stratified_folds(Y, 5, 42);
  REQUIRE(folds.fold_of.size() == 10);
  std::vector<std::size_t> positives(5, 0), sizes(5, 0);
  for (std::size_t i = 0; i < Y.size(); ++i) {
    sizes[folds.fold_of[i]] += 1;
    if (Y[i].bloated) positives[folds.fold_of[i]] += 1;
  }
  for (std::size_t f = 0; f < 5; ++f) {
    CHECK(sizes[f] == 2);
    CHECK(positives[f] == 1);
  }
}

TEST_CASE("stratified folds degenerate cases") {
  SECTION("all-negative labels split by size alone") {
    std::vector<SmellLabels> Y(4);
    FoldAssignment folds = iterative_stratified_folds(Y, 2, 7);
    auto sizes = folds.fold_sizes();
    CHECK(sizes == std::vector<std::size_t>{2, 2});
  }

  SECTION("fewer units than folds rejected") {
    std::vector<SmellLabels> Y(3);
    CHECK_THROWS_AS(iterative_stratified_folds(Y, 5, 1), TooFewInstances);
  }

  SECTION("k below 2 rejected") {
    std::vector<SmellLabels> Y(6);
    CHECK_THROWS_AS(iterative_stratified_folds(Y, 1, 1), TooFewInstances);
  }
}

TEST_CASE("stratified fold invariants hold on random datasets") {
  std::mt19937_64 gen(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t m = 10 + gen() % 120;
    const std::size_t k = 2 + gen() % 5;
    const bool single = trial % 2 == 0;
    std::vector<SmellLabels> Y(m);
    for (auto& y : Y) {
      if (single) {
        y.tangled = gen() % 4 == 0;
      } else {
        for (std::size_t l = 0; l < kSmellCount; ++l) y.set(l, gen() % 4 == 0);
      }
    }
    const std::uint64_t seed = gen();
    FoldAssignment folds = iterative_stratified_folds(Y, k, seed);

    auto sizes = folds.fold_sizes();
    std::size_t total = 0;
    for (std::size_t s : sizes) total += s;
    CHECK(total == m);
    for (std::size_t s : sizes) CHECK(s > 0);

    if (single) {
      auto [mn, mx] = std::minmax_element(sizes.begin(), sizes.end());
      CHECK(*mx - *mn <= 1);
      std::vector<std::size_t> pos(k, 0);
      for (std::size_t i = 0; i < m; ++i)
        if (Y[i].tangled) pos[folds.fold_of[i]] += 1;
      auto [pn, px] = std::minmax_element(pos.begin(), pos.end());
      CHECK(*px - *pn <= 1);
    }

    FoldAssignment again = iterative_stratified_folds(Y, k, seed);
    CHECK(again.fold_of == folds.fold_of);
  }
}

TEST_CASE("label_metrics matches hand counts") {
  std::vector<std::uint8_t> t{1, 1, 0, 0};
  std::vector<std::uint8_t> p{1, 0, 1, 0};
  BinaryScores s = label_metrics(t, p);
  CHECK(s.counts.tp == 1);
  CHECK(s.counts.fp == 1);
  CHECK(s.counts.tn == 1);
  CHECK(s.counts.fn == 1);
  CHECK(s.accuracy == 0.5);
  CHECK(s.precision == 0.5);
  CHECK(s.recall == 0.5);
  CHECK(s.f1 == 0.5);

  BinaryScores perfect = label_metrics(t, t);
  CHECK(perfect.accuracy == 1.0);
  CHECK(perfect.precision == 1.0);
  CHECK(perfect.recall == 1.0);
  CHECK(perfect.f1 == 1.0);

  std::vector<std::uint8_t> none{0, 0, 0};
  BinaryScores empty = label_metrics(none, none);
  CHECK(empty.accuracy == 1.0);
  CHECK(empty.precision == 0.0);
  CHECK(empty.recall == 0.0);
  CHECK(empty.f1 == 0.0);

  CHECK_THROWS_AS(label_metrics(t, none), LengthMismatch);
  CHECK_THROWS_AS(
      label_metrics(std::vector<std::uint8_t>{}, std::vector<std::uint8_t>{}),
      EmptyInput);
}

TEST_CASE("label_metrics internal consistency on random data") {
  std::mt19937_64 gen(13);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + gen() % 30;
    std::vector<std::uint8_t> t(n), p(n);
    for (std::size_t i = 0; i < n; ++i) {
      t[i] = gen() % 2;
      p[i] = gen() % 2;
    }
    BinaryScores s = label_metrics(t, p);
    CHECK(s.counts.total() == n);
    CHECK_THAT(s.accuracy * static_cast<double>(n),
               WithinAbs(static_cast<double>(s.counts.tp + s.counts.tn), 1e-9));
    CHECK((s.f1 == 0.0) == (s.counts.tp == 0));
    for (double v : {s.accuracy, s.precision, s.recall, s.f1}) {
      CHECK(v >= 0.0);
      CHECK(v <= 1.0);
    }
  }
}

TEST_CASE("multilabel_metrics matches hand counts") {
  std::vector<SmellLabels> t(2), p(2);
  t[0].bloated = true;
  t[1].lazy = true;
  p[0].bloated = true;
  p[1].bloated = true;
  MultilabelScores s = multilabel_metrics(t, p);
  CHECK(s.emr == 0.5);
  CHECK_THAT(s.hamming_loss, WithinAbs(0.2, 1e-12));

  MultilabelScores perfect = multilabel_metrics(t, t);
  CHECK(perfect.emr == 1.0);
  CHECK(perfect.hamming_loss == 0.0);

  std::vector<SmellLabels> complement(2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t l = 0; l < kSmellCount; ++l)
      complement[i].set(l, !t[i].get(l));
  MultilabelScores worst = multilabel_metrics(t, complement);
  CHECK(worst.emr == 0.0);
  CHECK(worst.hamming_loss == 1.0);

  CHECK_THROWS_AS(multilabel_metrics(t, std::vector<SmellLabels>(3)), LengthMismatch);
}

TEST_CASE("hamming loss is zero exactly when every labelset matches") {
  std::mt19937_64 gen(17);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + gen() % 20;
    std::vector<SmellLabels> t(n), p(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < kSmellCount; ++l) {
        t[i].set(l, gen() % 2);
        p[i].set(l, gen() % 2);
      }
    MultilabelScores s = multilabel_metrics(t, p);
    CHECK((s.hamming_loss == 0.0) == (s.emr == 1.0));
  }
}

TEST_CASE("cohen_kappa agreement coefficients") {
  std::vector<std::uint8_t> a{1, 1, 0, 0};
  std::vector<std::uint8_t> b{1, 0, 1, 0};
  CHECK_THAT(cohen_kappa(a, b), WithinAbs(0.0, 1e-12));
  CHECK_THAT(cohen_kappa(a, a), WithinAbs(1.0, 1e-12));

  // both raters constant and agreeing: chance agreement is total, kappa 1
  std::vector<std::uint8_t> ones{1, 1, 1};
  CHECK(cohen_kappa(ones, ones) == 1.0);

  // constant but opposite raters: no agreement beyond the zero baseline
  std::vector<std::uint8_t> zeros{0, 0, 0};
  CHECK_THAT(cohen_kappa(ones, zeros), WithinAbs(0.0, 1e-12));

  CHECK_THROWS_AS(cohen_kappa(a, ones), LengthMismatch);
  CHECK_THROWS_AS(
      cohen_kappa(std::vector<std::uint8_t>{}, std::vector<std::uint8_t>{}),
      EmptyInput);

  std::mt19937_64 gen(19);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + gen() % 20;
    std::vector<std::uint8_t> r(n);
    bool constant = true;
    for (std::size_t i = 0; i < n; ++i) {
      r[i] = gen() % 2;
      if (r[i] != r[0]) constant = false;
    }
    if (!constant) CHECK_THAT(cohen_kappa(r, r), WithinAbs(1.0, 1e-12));
  }
}

TEST_CASE("phi_matrix measures pairwise label association") {
  SECTION("identical and complementary columns") {
    std::vector<SmellLabels> Y(6);
    for (std::size_t i = 0; i < Y.size(); ++i) {
      bool v = i % 2 == 0;
      Y[i].bloated = v;
      Y[i].lazy = v;
      Y[i].excess_struct = !v;
    }
    PhiMatrix phi = phi_matrix(Y);
    REQUIRE(phi[0][1].has_value());
    CHECK_THAT(*phi[0][1], WithinAbs(1.0, 1e-12));
    REQUIRE(phi[0][2].has_value());
    CHECK_THAT(*phi[0][2], WithinAbs(-1.0, 1e-12));
    for (std::size_t l = 0; l < kSmellCount; ++l) {
      REQUIRE(phi[l][l].has_value());
      CHECK(*phi[l][l] == 1.0);
    }
    // tangled and fragmented are constant-false: off-diagonal entries absent
    CHECK_FALSE(phi[0][3].has_value());
    CHECK_FALSE(phi[4][1].has_value());
  }

  SECTION("symmetry and range on random labels") {
    std::mt19937_64 gen(23);
    std::vector<SmellLabels> Y(40);
    for (auto& y : Y)
      for (std::size_t l = 0; l < kSmellCount; ++l) y.set(l, gen() % 3 == 0);
    PhiMatrix phi = phi_matrix(Y);
    for (std::size_t a = 0; a < kSmellCount; ++a)
      for (std::size_t b = 0; b < kSmellCount; ++b) {
        CHECK(phi[a][b].has_value() == phi[b][a].has_value());
        if (phi[a][b].has_value()) {
          CHECK_THAT(*phi[a][b], WithinAbs(*phi[b][a], 1e-12));
          CHECK(*phi[a][b] >= -1.0 - 1e-12);
          CHECK(*phi[a][b] <= 1.0 + 1e-12);
        }
      }
  }

  SECTION("fewer than two instances rejected") {
    CHECK_THROWS_AS(phi_matrix(std::vector<SmellLabels>(1)), TooFewInstances);
  }
}

namespace {

// corpus whose labels are announced by dedicated tokens in the description,
// learnable to near-perfection from bag-of-words
Corpus token_determined_corpus(std::mt19937_64& gen, std::size_t n) {
  static const std::array<std::string, kSmellCount> signals{
      "verbosemark", "stubmark", "structmark", "jumblemark", "linkmark"};
  static const std::vector<std::string> filler{
      "returns", "the", "value", "of", "this", "method", "stream", "buffer",
      "index", "element", "list", "when", "empty", "reader", "writes"};
  Corpus c;
  for (std::size_t i = 0; i < n; ++i) {
    DocUnit u;
    u.id = "unit-" + std::to_string(i);
    u.prototype = "void method" + std::to_string(i) + "()";
    SmellLabels y;
    std::string text;
    for (int w = 0; w < 6; ++w) {
      text += filler[gen() % filler.size()];
      text += ' ';
    }
    for (std::size_t l = 0; l < kSmellCount; ++l) {
      if (gen() % 5 < 2) {
        y.set(l, true);
        text += signals[l];
        text += ' ';
      }
    }
    text += "done.";
    u.description_text = text;
    c.units.push_back(std::move(u));
    c.labels.push_back(y);
  }
  return c;
}

}  // namespace

TEST_CASE("cross_validate learns a token-determined corpus with ovr bow") {
  std::mt19937_64 gen(29);
  Corpus c = token_determined_corpus(gen, 250);

  FeatureSpec features;
  features.kind = FeatureKind::bow;
  features.min_df = 1;
  ModelSpec spec;
  spec.kind = "ovr";
  spec.epochs = 30;

  EvalReport report = cross_validate(c, features, spec, 5, 42);
  CHECK(report.model_id == "ovr");
  CHECK(report.feature_id == "bow");
  CHECK(report.k == 5);
  CHECK(report.seed == 42);
  REQUIRE(report.folds.size() == 5);
  for (std::size_t l = 0; l < kSmellCount; ++l)
    CHECK(report.average.per_smell[l].f1 >= 0.95);
  CHECK(report.average.multilabel.emr >= 0.9);
}

TEST_CASE("cross_validate runs every model kind") {
  std::mt19937_64 gen(31);
  Corpus c = token_determined_corpus(gen, 60);

  for (const char* kind : {"rules", "ovr", "cc", "lps", "mlknn"}) {
    FeatureSpec features;
    features.kind = FeatureKind::rule;
    ModelSpec spec;
    spec.kind = kind;
    spec.epochs = 5;
    spec.knn_k = 3;
    EvalReport report = cross_validate(c, features, spec, 5, 7);
    REQUIRE(report.folds.size() == 5);
    if (std::string(kind) == "rules") {
      CHECK(report.model_id == "rules@p90");
      CHECK(report.feature_id == "metrics");
    } else {
      CHECK(report.model_id == kind);
      CHECK(report.feature_id == "rule");
    }
    for (const FoldScores& fold : report.folds) {
      for (std::size_t l = 0; l < kSmellCount; ++l) {
        const BinaryScores& s = fold.per_smell[l];
        for (double v : {s.accuracy, s.precision, s.recall, s.f1}) {
          CHECK(v >= 0.0);
          CHECK(v <= 1.0);
        }
      }
      CHECK(fold.multilabel.emr >= 0.0);
      CHECK(fold.multilabel.hamming_loss <= 1.0);
    }
  }
}

TEST_CASE("cross_validate is deterministic and validates inputs") {
  std::mt19937_64 gen(37);
  Corpus c = token_determined_corpus(gen, 40);
  FeatureSpec features;
  features.kind = FeatureKind::bow;
  features.min_df = 1;
  ModelSpec spec;
  spec.epochs = 10;

  EvalReport a = cross_validate(c, features, spec, 4, 11);
  EvalReport b = cross_validate(c, features, spec, 4, 11);
  CHECK(to_json(a) == to_json(b));

  Corpus tiny;
  for (int i = 0; i < 3; ++i) {
    DocUnit u;
    u.id = "t" + std::to_string(i);
    u.prototype = "void f()";
    u.description_text = "words";
    tiny.units.push_back(u);
    tiny.labels.push_back(SmellLabels{});
  }
  CHECK_THROWS_AS(cross_validate(tiny, features, spec, 5, 1), TooFewInstances);

  Corpus unlabeled = c;
  unlabeled.labels.clear();
  CHECK_THROWS_AS(cross_validate(unlabeled, features, spec, 5, 1), UnlabeledCorpus);
}

TEST_CASE("permutation importance detects a determining feature") {
  std::mt19937_64 gen(41);
  const std::size_t m = 80, d = 4;
  std::vector<FeatureVector> X;
  std::vector<SmellLabels> Y;
  for (std::size_t i = 0; i < m; ++i) {
    FeatureVector x;
    x.dimension = d;
    bool positive = gen() % 2 == 0;
    x.set(0, positive ? 1.0 : -1.0);
    for (std::size_t j = 1; j < d; ++j)
      x.set(j, static_cast<double>(gen() % 3) - 1.0);
    SmellLabels y;
    y.bloated = positive;
    X.push_back(std::move(x));
    Y.push_back(y);
  }
  TrainConfig cfg;
  cfg.epochs = 50;
  OvrModel model = train_ovr(X, Y, cfg);
  ModelPredictor<OvrModel> predictor(model);

  ImportanceReport zero = permutation_importance(predictor, X, Y, 0, 10, 5);
  CHECK(zero.feature_index == 0);
  CHECK(zero.baseline_per_smell[0] >= 0.95);
  CHECK(zero.delta_per_smell[0] >= 0.3);
  CHECK(zero.delta_overall >= 0.3 / kSmellCount);

  ImportanceReport same = permutation_importance(predictor, X, Y, 0, 10, 5);
  CHECK(same.delta_overall == zero.delta_overall);

  CHECK_THROWS_AS(permutation_importance(predictor, X, Y, d, 3, 5), BadFeatureIndex);
}

TEST_CASE("permuting a constant feature changes nothing") {
  std::mt19937_64 gen(43);
  const std::size_t m = 40, d = 3;
  std::vector<FeatureVector> X;
  std::vector<SmellLabels> Y;
  for (std::size_t i = 0; i < m; ++i) {
    FeatureVector x;
    x.dimension = d;
    x.set(0, static_cast<double>(gen() % 5));
    x.set(1, 2.5);  // constant column
    SmellLabels y;
    y.lazy = gen() % 2 == 0;
    X.push_back(std::move(x));
    Y.push_back(y);
  }
  TrainConfig cfg;
  cfg.epochs = 10;
  OvrModel model = train_ovr(X, Y, cfg);
  ModelPredictor<OvrModel> predictor(model);
  ImportanceReport report = permutation_importance(predictor, X, Y, 1, 5, 9);
  CHECK(report.delta_overall == 0.0);
  for (std::size_t l = 0; l < kSmellCount; ++l) CHECK(report.delta_per_smell[l] == 0.0);
}

TEST_CASE("eval reports serialize to json and markdown") {
  std::mt19937_64 gen(47);
  Corpus c = token_determined_corpus(gen, 40);
  FeatureSpec features;
  features.kind = FeatureKind::bow;
  features.min_df = 1;
  ModelSpec spec;
  spec.epochs = 10;
  EvalReport report = cross_validate(c, features, spec, 4, 3);

  EvalReport back = eval_report_from_json(to_json(report));
  CHECK(to_json(back) == to_json(report));
  CHECK(back.model_id == report.model_id);
  CHECK(back.folds.size() == report.folds.size());

  std::vector<EvalReport> reports{report};
  std::string md = to_markdown(reports);
  CHECK(md.find("| Model | Features |") != std::string::npos);
  CHECK(md.find("| ovr | bow |") != std::string::npos);
  CHECK(md.find("EMR") != std::string::npos);
  for (std::string_view name : kSmellNames)
    CHECK(md.find(std::string(name)) != std::string::npos);
}
