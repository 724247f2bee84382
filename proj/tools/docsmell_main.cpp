// Command-line front end: ingest, metrics, detect, train, crossval, stats,
// report. Exit codes: 0 success, 1 runtime failure, 2 usage error.

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "docsmell/docsmell.hpp"

namespace ds = docsmell;
using nlohmann::ordered_json;

namespace {

constexpr std::array<std::string_view, 6> kFeatureNames{
    "doc_length", "readability", "jargon_count",
    "url_count",  "struct_ref_count", "edit_distance"};

const ds::Lexicon& active_lexicon() {
  static const ds::Lexicon lex = [] {
    if (const char* path = std::getenv("DOCSMELL_LEXICON"))
      return ds::Lexicon::from_file(path);
    return ds::Lexicon::builtin();
  }();
  return lex;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ds::IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ds::Corpus load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ds::IoError("cannot open " + path);
  return ds::parse_jsonl(in);
}

std::vector<ds::MetricVector> metrics_for(const ds::Corpus& corpus) {
  std::vector<ds::MetricVector> out(corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i)
    out[i] = ds::compute_metrics(corpus.units[i], active_lexicon());
  return out;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ds::IoError("cannot write " + path);
  out << text;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::string fixed4(double v) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(4) << v;
  return out.str();
}

ordered_json labels_to_json(const ds::SmellLabels& y) {
  ordered_json out;
  for (std::size_t l = 0; l < ds::kSmellCount; ++l)
    out[std::string(ds::kSmellNames[l])] = y.get(l);
  return out;
}

std::optional<std::size_t> cap_from(std::size_t max_features) {
  if (max_features == 0) return std::nullopt;
  return max_features;
}

// ---------------------------------------------------------------------------
// ingest

struct IngestOpts {
  std::string jsonl;
  std::string javadoc_dir;
  std::string out;
};

void run_ingest(const IngestOpts& o) {
  if (o.jsonl.empty() == o.javadoc_dir.empty())
    throw CLI::ValidationError("ingest", "pass exactly one of --jsonl or --javadoc-dir");

  ds::Corpus corpus;
  if (!o.jsonl.empty()) {
    corpus = load_corpus(o.jsonl);
  } else {
    std::vector<std::filesystem::path> pages;
    for (const auto& entry : std::filesystem::directory_iterator(o.javadoc_dir)) {
      if (!entry.is_regular_file()) continue;
      std::string ext = entry.path().extension().string();
      if (ext == ".html" || ext == ".htm") pages.push_back(entry.path());
    }
    std::sort(pages.begin(), pages.end());
    for (const auto& page : pages) {
      std::vector<ds::DocUnit> units =
          ds::parse_javadoc_html(slurp(page.string()), page.filename().string());
      for (ds::DocUnit& u : units) {
        for (const ds::DocUnit& seen : corpus.units)
          if (seen.id == u.id) throw ds::DuplicateId(u.id);
        corpus.units.push_back(std::move(u));
      }
    }
    if (corpus.units.empty()) throw ds::NoMethodBlocks();
  }

  std::string text = ds::write_jsonl(corpus);
  if (o.out.empty()) {
    std::cout << text;
    std::cerr << corpus.size() << " units\n";
  } else {
    write_text(o.out, text);
    std::cout << corpus.size() << " units\n";
  }
}

// ---------------------------------------------------------------------------
// metrics

struct MetricsOpts {
  std::string corpus;
  std::string out;
};

void run_metrics(const MetricsOpts& o) {
  ds::Corpus corpus = load_corpus(o.corpus);
  std::vector<ds::MetricVector> metrics = metrics_for(corpus);
  if (o.out.empty()) {
    ds::write_metrics_csv(corpus.units, metrics, std::cout);
  } else {
    std::ostringstream buf;
    ds::write_metrics_csv(corpus.units, metrics, buf);
    write_text(o.out, buf.str());
  }
}

// ---------------------------------------------------------------------------
// detect

struct DetectOpts {
  std::string corpus;
  std::string rules;
  std::string model;
  std::string out;
};

void run_detect(const DetectOpts& o) {
  if (o.rules.empty() == o.model.empty())
    throw CLI::ValidationError("detect", "pass exactly one of --rules or --model");

  ds::Corpus corpus = load_corpus(o.corpus);
  if (corpus.size() == 0) throw ds::EmptyCorpus();
  std::vector<ds::MetricVector> metrics = metrics_for(corpus);

  std::vector<ds::SmellLabels> pred(corpus.size());
  std::string model_desc;
  if (!o.rules.empty()) {
    ds::ThresholdSelector sel = ds::selector_from_string(o.rules);
    ds::RuleModel rule_model = ds::fit_thresholds(metrics, sel);
    for (std::size_t i = 0; i < corpus.size(); ++i)
      pred[i] = ds::classify(metrics[i], rule_model);
    model_desc = "rules@" + ds::to_string(sel);
  } else {
    ds::SavedModel saved = ds::load_model(o.model);
    std::visit(
        [&](const auto& m) {
          using T = std::decay_t<decltype(m)>;
          if constexpr (std::is_same_v<T, ds::RuleModel>) {
            for (std::size_t i = 0; i < corpus.size(); ++i)
              pred[i] = ds::classify(metrics[i], m);
            model_desc = "rules@" + ds::to_string(m.selector);
          } else {
            if (!saved.feature_space)
              throw ds::Error("model file carries no feature space");
            for (std::size_t i = 0; i < corpus.size(); ++i)
              pred[i] = ds::predict(
                  m, saved.feature_space->vectorize(corpus.units[i], metrics[i]));
            if constexpr (std::is_same_v<T, ds::OvrModel>) model_desc = "ovr";
            else if constexpr (std::is_same_v<T, ds::ChainModel>) model_desc = "cc";
            else if constexpr (std::is_same_v<T, ds::PowersetModel>) model_desc = "lps";
            else model_desc = "mlknn";
          }
        },
        saved.model);
  }

  std::ostringstream report;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    ordered_json line;
    line["id"] = corpus.units[i].id;
    line["labels"] = labels_to_json(pred[i]);
    report << line.dump() << '\n';
  }
  std::ostream& info = o.out.empty() ? std::cerr : std::cout;
  if (o.out.empty())
    std::cout << report.str();
  else
    write_text(o.out, report.str());

  info << "model: " << model_desc << '\n';
  for (std::size_t l = 0; l < ds::kSmellCount; ++l) {
    std::size_t flagged = 0;
    for (const ds::SmellLabels& y : pred) flagged += y.get(l) ? 1 : 0;
    info << ds::kSmellNames[l] << ": " << flagged << " flagged\n";
  }
  if (corpus.labeled()) {
    for (std::size_t l = 0; l < ds::kSmellCount; ++l) {
      std::vector<std::uint8_t> gold(corpus.size()), guess(corpus.size());
      for (std::size_t i = 0; i < corpus.size(); ++i) {
        gold[i] = corpus.labels[i].get(l) ? 1 : 0;
        guess[i] = pred[i].get(l) ? 1 : 0;
      }
      ds::BinaryScores s = ds::label_metrics(gold, guess);
      info << ds::kSmellNames[l] << " precision=" << fixed4(s.precision)
           << " recall=" << fixed4(s.recall) << " f1=" << fixed4(s.f1) << '\n';
    }
  }
}

// ---------------------------------------------------------------------------
// train

struct TrainOpts {
  std::string corpus;
  std::string out;
  std::string model = "ovr";
  std::string features = "rule";
  std::string selector = "p90";
  double lambda = 0.01;
  std::size_t epochs = 20;
  std::size_t knn_k = 10;
  double knn_s = 1.0;
  std::size_t min_df = ds::kDefaultMinDf;
  std::size_t max_features = ds::kDefaultMaxFeatures;
  bool chain_random_order = false;
  std::uint64_t seed = 42;
};

void run_train(const TrainOpts& o) {
  ds::Corpus corpus = load_corpus(o.corpus);
  if (corpus.size() == 0) throw ds::EmptyCorpus();
  std::vector<ds::MetricVector> metrics = metrics_for(corpus);

  ds::SavedModel saved;
  if (o.model == "rules") {
    saved.model = ds::fit_thresholds(metrics, ds::selector_from_string(o.selector));
  } else {
    if (!corpus.labeled()) throw ds::UnlabeledCorpus();
    ds::FeatureKind kind = ds::feature_kind_from_string(o.features);
    ds::FeatureSpace fs = ds::fit_feature_space(kind, corpus.units, metrics,
                                                o.min_df, cap_from(o.max_features));
    std::vector<ds::FeatureVector> X;
    X.reserve(corpus.size());
    for (std::size_t i = 0; i < corpus.size(); ++i)
      X.push_back(fs.vectorize(corpus.units[i], metrics[i]));

    ds::TrainConfig cfg;
    cfg.lambda = o.lambda;
    cfg.epochs = o.epochs;
    cfg.seed = o.seed;

    if (o.model == "ovr")
      saved.model = ds::train_ovr(X, corpus.labels, cfg);
    else if (o.model == "cc")
      saved.model = ds::train_cc(X, corpus.labels, cfg, o.chain_random_order);
    else if (o.model == "lps")
      saved.model = ds::train_lps(X, corpus.labels, cfg);
    else if (o.model == "mlknn")
      saved.model = ds::train_mlknn(X, corpus.labels, o.knn_k, o.knn_s);
    else
      throw ds::Error("unknown model kind: " + o.model);
    saved.feature_space = std::move(fs);
  }

  ds::save_model(saved, o.out);
  std::cout << "saved " << o.model << " model to " << o.out << '\n';
}

// ---------------------------------------------------------------------------
// crossval

struct CrossvalOpts {
  std::string corpus;
  std::string model = "all";
  std::string features = "all";
  std::string selectors = "all";
  std::size_t k = 5;
  std::uint64_t seed = 42;
  double lambda = 0.01;
  std::size_t epochs = 20;
  std::size_t knn_k = 10;
  double knn_s = 1.0;
  std::size_t min_df = ds::kDefaultMinDf;
  std::size_t max_features = ds::kDefaultMaxFeatures;
  bool chain_random_order = false;
  bool importance = false;
  std::string out_json;
  std::string out_md;
};

struct ImportanceRow {
  std::string feature;
  double baseline_overall = 0;
  double delta_overall = 0;
  std::array<double, ds::kSmellCount> delta_per_smell{};
};

// Fold-wise permutation importance for a max-margin one-vs-rest model over the
// six rule metrics: train on each fold's complement, permute one standardized
// column of the held-out fold at a time, average the F1 drops across folds.
std::vector<ImportanceRow> fold_importance(const ds::Corpus& corpus,
                                           std::span<const ds::MetricVector> metrics,
                                           const CrossvalOpts& o) {
  ds::FoldAssignment folds = ds::iterative_stratified_folds(corpus.labels, o.k, o.seed);
  std::array<double, 6> sum_delta{};
  std::array<std::array<double, ds::kSmellCount>, 6> sum_per{};
  double sum_base = 0;

  for (std::size_t f = 0; f < o.k; ++f) {
    std::vector<std::size_t> train_idx, test_idx;
    for (std::size_t i = 0; i < corpus.size(); ++i)
      (folds.fold_of[i] == f ? test_idx : train_idx).push_back(i);

    std::vector<ds::DocUnit> train_units;
    std::vector<ds::MetricVector> train_metrics;
    std::vector<ds::SmellLabels> Y_train;
    for (std::size_t i : train_idx) {
      train_units.push_back(corpus.units[i]);
      train_metrics.push_back(metrics[i]);
      Y_train.push_back(corpus.labels[i]);
    }
    ds::FeatureSpace fs = ds::fit_feature_space(ds::FeatureKind::rule, train_units,
                                                train_metrics);
    std::vector<ds::FeatureVector> X_train, X_test;
    std::vector<ds::SmellLabels> Y_test;
    for (std::size_t i : train_idx)
      X_train.push_back(fs.vectorize(corpus.units[i], metrics[i]));
    for (std::size_t i : test_idx) {
      X_test.push_back(fs.vectorize(corpus.units[i], metrics[i]));
      Y_test.push_back(corpus.labels[i]);
    }

    ds::TrainConfig cfg;
    cfg.lambda = o.lambda;
    cfg.epochs = o.epochs;
    cfg.seed = ds::derive_seed(o.seed, 1000 + f);
    ds::OvrModel model = ds::train_ovr(X_train, Y_train, cfg);
    ds::ModelPredictor<ds::OvrModel> predictor(model);

    for (std::size_t fi = 0; fi < 6; ++fi) {
      ds::ImportanceReport rep = ds::permutation_importance(
          predictor, X_test, Y_test, fi, 10, ds::derive_seed(o.seed, 2000 + f * 8 + fi));
      sum_delta[fi] += rep.delta_overall;
      for (std::size_t l = 0; l < ds::kSmellCount; ++l)
        sum_per[fi][l] += rep.delta_per_smell[l];
      if (fi == 0) sum_base += rep.baseline_overall;
    }
  }

  std::vector<ImportanceRow> rows;
  const double k = static_cast<double>(o.k);
  for (std::size_t fi = 0; fi < 6; ++fi) {
    ImportanceRow row;
    row.feature = std::string(kFeatureNames[fi]);
    row.baseline_overall = sum_base / k;
    row.delta_overall = sum_delta[fi] / k;
    for (std::size_t l = 0; l < ds::kSmellCount; ++l)
      row.delta_per_smell[l] = sum_per[fi][l] / k;
    rows.push_back(row);
  }
  return rows;
}

std::string importance_markdown(std::span<const ImportanceRow> rows) {
  std::ostringstream out;
  out << "\nPermutation importance (ovr, rule features, baseline macro F1 "
      << ds::detail::fixed2(rows[0].baseline_overall) << ")\n\n";
  out << "| Feature | F1 drop |";
  for (std::string_view name : ds::kSmellNames) out << ' ' << name << " |";
  out << "\n|---|---|---|---|---|---|---|\n";
  for (const ImportanceRow& row : rows) {
    out << "| " << row.feature << " | " << ds::detail::fixed2(row.delta_overall) << " |";
    for (std::size_t l = 0; l < ds::kSmellCount; ++l)
      out << ' ' << ds::detail::fixed2(row.delta_per_smell[l]) << " |";
    out << '\n';
  }
  return out.str();
}

void run_crossval(const CrossvalOpts& o) {
  ds::Corpus corpus = load_corpus(o.corpus);

  std::vector<std::string> model_kinds =
      o.model == "all" ? std::vector<std::string>{"rules", "ovr", "cc", "lps", "mlknn"}
                       : split_list(o.model);
  std::vector<ds::ThresholdSelector> selectors;
  if (o.selectors == "all")
    selectors.assign(ds::kAllSelectors.begin(), ds::kAllSelectors.end());
  else
    for (const std::string& name : split_list(o.selectors))
      selectors.push_back(ds::selector_from_string(name));
  std::vector<ds::FeatureKind> feature_kinds;
  if (o.features == "all")
    feature_kinds = {ds::FeatureKind::rule, ds::FeatureKind::bow};
  else
    for (const std::string& name : split_list(o.features))
      feature_kinds.push_back(ds::feature_kind_from_string(name));

  std::vector<ds::EvalReport> reports;
  for (const std::string& kind : model_kinds) {
    ds::ModelSpec spec;
    spec.kind = kind;
    spec.lambda = o.lambda;
    spec.epochs = o.epochs;
    spec.knn_k = o.knn_k;
    spec.knn_s = o.knn_s;
    spec.chain_random_order = o.chain_random_order;

    if (kind == "rules") {
      for (ds::ThresholdSelector sel : selectors) {
        spec.selector = sel;
        ds::FeatureSpec fspec;
        reports.push_back(ds::cross_validate(corpus, fspec, spec, o.k, o.seed,
                                             active_lexicon()));
      }
    } else {
      for (ds::FeatureKind fk : feature_kinds) {
        ds::FeatureSpec fspec;
        fspec.kind = fk;
        fspec.min_df = o.min_df;
        fspec.max_features = cap_from(o.max_features);
        reports.push_back(ds::cross_validate(corpus, fspec, spec, o.k, o.seed,
                                             active_lexicon()));
      }
    }
  }

  std::string md = ds::to_markdown(reports);
  std::vector<ImportanceRow> importance;
  if (o.importance) {
    std::vector<ds::MetricVector> metrics = metrics_for(corpus);
    importance = fold_importance(corpus, metrics, o);
    md += importance_markdown(importance);
  }

  std::cout << md;
  if (!o.out_md.empty()) write_text(o.out_md, md);
  if (!o.out_json.empty()) {
    ordered_json out;
    out["reports"] = ordered_json::array();
    for (const ds::EvalReport& r : reports) out["reports"].push_back(ds::to_json(r));
    if (!importance.empty()) {
      ordered_json rows = ordered_json::array();
      for (const ImportanceRow& row : importance) {
        ordered_json one;
        one["feature"] = row.feature;
        one["baseline_overall"] = row.baseline_overall;
        one["delta_overall"] = row.delta_overall;
        ordered_json per;
        for (std::size_t l = 0; l < ds::kSmellCount; ++l)
          per[std::string(ds::kSmellNames[l])] = row.delta_per_smell[l];
        one["delta_per_smell"] = per;
        rows.push_back(one);
      }
      out["importance"] = rows;
    }
    write_text(o.out_json, out.dump(2) + "\n");
  }
}

// ---------------------------------------------------------------------------
// stats

struct StatsOpts {
  std::string corpus;
  std::string out;
  std::string phi_csv;
  std::vector<std::string> kappa;
};

std::string phi_to_csv(const ds::PhiMatrix& phi) {
  std::ostringstream out;
  out << "smell";
  for (std::string_view name : ds::kSmellNames) out << ',' << name;
  out << '\n';
  for (std::size_t i = 0; i < ds::kSmellCount; ++i) {
    out << ds::kSmellNames[i];
    for (std::size_t j = 0; j < ds::kSmellCount; ++j) {
      out << ',';
      if (phi[i][j]) out << ds::detail::format_double(*phi[i][j]);
    }
    out << '\n';
  }
  return out.str();
}

void run_stats(const StatsOpts& o) {
  if (o.corpus.empty() && o.kappa.empty())
    throw CLI::ValidationError("stats", "pass --corpus and/or --kappa");

  if (!o.kappa.empty()) {
    ds::Corpus a = load_corpus(o.kappa[0]);
    ds::Corpus b = load_corpus(o.kappa[1]);
    if (!a.labeled() || !b.labeled()) throw ds::UnlabeledCorpus();
    if (a.size() != b.size()) throw ds::LengthMismatch(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a.units[i].id != b.units[i].id)
        throw ds::Error("unit ids disagree at position " + std::to_string(i));
    for (std::size_t l = 0; l < ds::kSmellCount; ++l) {
      std::vector<std::uint8_t> ya(a.size()), yb(b.size());
      for (std::size_t i = 0; i < a.size(); ++i) {
        ya[i] = a.labels[i].get(l) ? 1 : 0;
        yb[i] = b.labels[i].get(l) ? 1 : 0;
      }
      std::cout << ds::kSmellNames[l] << " kappa=" << fixed4(ds::cohen_kappa(ya, yb))
                << '\n';
    }
  }

  if (!o.corpus.empty()) {
    ds::Corpus corpus = load_corpus(o.corpus);
    if (!corpus.labeled()) throw ds::UnlabeledCorpus();
    ordered_json dist = ds::to_json(ds::label_distribution(corpus));
    if (o.out.empty())
      std::cout << dist.dump(2) << '\n';
    else
      write_text(o.out, dist.dump(2) + "\n");
    if (!o.phi_csv.empty())
      write_text(o.phi_csv, phi_to_csv(ds::phi_matrix(corpus.labels)));
  }
}

// ---------------------------------------------------------------------------
// report

struct ReportOpts {
  std::string in;
  std::string format = "json";
  std::string out;
};

std::string reports_to_csv(std::span<const ds::EvalReport> reports) {
  std::ostringstream out;
  out << "model,features,k,seed,smell,accuracy,precision,recall,f1,"
         "exact_match_ratio,hamming_loss\n";
  for (const ds::EvalReport& r : reports) {
    for (std::size_t l = 0; l < ds::kSmellCount; ++l) {
      const ds::BinaryScores& s = r.average.per_smell[l];
      out << r.model_id << ',' << r.feature_id << ',' << r.k << ',' << r.seed << ','
          << ds::kSmellNames[l] << ',' << ds::detail::format_double(s.accuracy) << ','
          << ds::detail::format_double(s.precision) << ','
          << ds::detail::format_double(s.recall) << ','
          << ds::detail::format_double(s.f1) << ','
          << ds::detail::format_double(r.average.multilabel.emr) << ','
          << ds::detail::format_double(r.average.multilabel.hamming_loss) << '\n';
    }
  }
  return out.str();
}

void run_report(const ReportOpts& o) {
  nlohmann::json parsed = nlohmann::json::parse(slurp(o.in));
  std::vector<ds::EvalReport> reports;
  if (parsed.is_array()) {
    for (const auto& item : parsed) reports.push_back(ds::eval_report_from_json(item));
  } else if (parsed.is_object() && parsed.contains("reports")) {
    for (const auto& item : parsed.at("reports"))
      reports.push_back(ds::eval_report_from_json(item));
  } else {
    reports.push_back(ds::eval_report_from_json(parsed));
  }

  std::string text;
  if (o.format == "md") {
    text = ds::to_markdown(reports);
  } else if (o.format == "csv") {
    text = reports_to_csv(reports);
  } else if (o.format == "json") {
    ordered_json arr = ordered_json::array();
    for (const ds::EvalReport& r : reports) arr.push_back(ds::to_json(r));
    text = arr.dump(2) + "\n";
  } else {
    throw CLI::ValidationError("report", "unknown format: " + o.format);
  }
  if (o.out.empty())
    std::cout << text;
  else
    write_text(o.out, text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Detects five documentation smells in method-level API docs"};
  app.require_subcommand(1);

  IngestOpts ingest;
  CLI::App* sub = app.add_subcommand("ingest", "Normalize a corpus to JSONL");
  sub->add_option("--jsonl", ingest.jsonl, "JSONL corpus to normalize");
  sub->add_option("--javadoc-dir", ingest.javadoc_dir, "Directory of javadoc HTML pages");
  sub->add_option("--out", ingest.out, "Output path (default stdout)");
  sub->callback([&] { run_ingest(ingest); });

  MetricsOpts metrics;
  sub = app.add_subcommand("metrics", "Emit the six metrics per unit as CSV");
  sub->add_option("--corpus", metrics.corpus, "JSONL corpus")->required();
  sub->add_option("--out", metrics.out, "Output path (default stdout)");
  sub->callback([&] { run_metrics(metrics); });

  DetectOpts detect;
  sub = app.add_subcommand("detect", "Flag smells in a corpus");
  sub->add_option("--corpus", detect.corpus, "JSONL corpus")->required();
  sub->add_option("--rules", detect.rules,
                  "Fit threshold rules on this corpus (avg|p25|p50|p75|p90)");
  sub->add_option("--model", detect.model, "Saved model JSON file");
  sub->add_option("--out", detect.out, "Report path (default stdout)");
  sub->callback([&] { run_detect(detect); });

  TrainOpts train;
  sub = app.add_subcommand("train", "Train a model and save it as JSON");
  sub->add_option("--corpus", train.corpus, "JSONL corpus")->required();
  sub->add_option("--out", train.out, "Model output path")->required();
  sub->add_option("--model", train.model, "rules|ovr|cc|lps|mlknn (default ovr)");
  sub->add_option("--features", train.features, "rule|bow|bow+rule (default rule)");
  sub->add_option("--selector", train.selector, "Threshold selector for rules (default p90)");
  sub->add_option("--lambda", train.lambda, "Regularization strength (default 0.01)");
  sub->add_option("--epochs", train.epochs, "Training epochs (default 20)");
  sub->add_option("--knn-k", train.knn_k, "Neighbor count for mlknn (default 10)");
  sub->add_option("--knn-s", train.knn_s, "Laplace smoothing for mlknn (default 1)");
  sub->add_option("--min-df", train.min_df, "Vocabulary min document frequency (default 2)");
  sub->add_option("--max-features", train.max_features,
                  "Vocabulary cap, 0 disables (default 5000)");
  sub->add_flag("--chain-random-order", train.chain_random_order,
                "Shuffle the chain label order");
  sub->add_option("--seed", train.seed, "Random seed (default 42)");
  sub->callback([&] { run_train(train); });

  CrossvalOpts crossval;
  sub = app.add_subcommand("crossval", "Stratified k-fold cross-validation");
  sub->add_option("--corpus", crossval.corpus, "Labeled JSONL corpus")->required();
  sub->add_option("--model", crossval.model,
                  "Comma list of rules|ovr|cc|lps|mlknn, or all (default all)");
  sub->add_option("--features", crossval.features,
                  "Comma list of rule|bow|bow+rule, or all (default all = rule,bow)");
  sub->add_option("--selectors", crossval.selectors,
                  "Comma list of avg|p25|p50|p75|p90, or all (default all)");
  sub->add_option("--k", crossval.k, "Fold count (default 5)");
  sub->add_option("--seed", crossval.seed, "Random seed (default 42)");
  sub->add_option("--lambda", crossval.lambda, "Regularization strength (default 0.01)");
  sub->add_option("--epochs", crossval.epochs, "Training epochs (default 20)");
  sub->add_option("--knn-k", crossval.knn_k, "Neighbor count for mlknn (default 10)");
  sub->add_option("--knn-s", crossval.knn_s, "Laplace smoothing for mlknn (default 1)");
  sub->add_option("--min-df", crossval.min_df,
                  "Vocabulary min document frequency (default 2)");
  sub->add_option("--max-features", crossval.max_features,
                  "Vocabulary cap, 0 disables (default 5000)");
  sub->add_flag("--chain-random-order", crossval.chain_random_order,
                "Shuffle the chain label order");
  sub->add_flag("--importance", crossval.importance,
                "Also report permutation feature importance (ovr, rule features)");
  sub->add_option("--out-json", crossval.out_json, "Write reports as JSON here");
  sub->add_option("--out-md", crossval.out_md, "Write the markdown table here");
  sub->callback([&] { run_crossval(crossval); });

  StatsOpts stats;
  sub = app.add_subcommand("stats", "Label distribution, phi matrix, agreement");
  sub->add_option("--corpus", stats.corpus, "Labeled JSONL corpus");
  sub->add_option("--out", stats.out, "Distribution JSON path (default stdout)");
  sub->add_option("--phi-csv", stats.phi_csv, "Write the phi matrix CSV here");
  sub->add_option("--kappa", stats.kappa,
                  "Two labeled JSONL files to compare per smell")
      ->expected(2);
  sub->callback([&] { run_stats(stats); });

  ReportOpts report;
  sub = app.add_subcommand("report", "Re-render saved evaluation reports");
  sub->add_option("--in", report.in, "Report JSON file")->required();
  sub->add_option("--format", report.format, "json|csv|md (default json)");
  sub->add_option("--out", report.out, "Output path (default stdout)");
  sub->callback([&] { run_report(report); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const ds::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
