#pragma once

// Shared test utilities: fixture loading, random generators, and independent
// oracle implementations that deliberately avoid the library's code paths.

#include <algorithm>
#include <array>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <docsmell/corpus.hpp>
#include <docsmell/features.hpp>

namespace testutil {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open fixture: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

inline std::string fixture_path(const std::string& name) {
  return std::string(FIXTURES_DIR) + "/" + name;
}

// Full-table Levenshtein, O(n*m) memory, written independently of the
// two-row version in the library.
inline std::size_t levenshtein_oracle(const std::string& a, const std::string& b) {
  std::vector<std::vector<std::size_t>> dp(a.size() + 1,
                                           std::vector<std::size_t>(b.size() + 1, 0));
  for (std::size_t i = 0; i <= a.size(); ++i) dp[i][0] = i;
  for (std::size_t j = 0; j <= b.size(); ++j) dp[0][j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      std::size_t del = dp[i - 1][j] + 1;
      std::size_t ins = dp[i][j - 1] + 1;
      std::size_t sub = dp[i - 1][j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      dp[i][j] = std::min(del, std::min(ins, sub));
    }
  }
  return dp[a.size()][b.size()];
}

inline std::string random_ascii_word(std::mt19937_64& gen, std::size_t max_len,
                                     const std::string& alphabet) {
  std::size_t len = gen() % (max_len + 1);
  std::string out;
  for (std::size_t i = 0; i < len; ++i) out.push_back(alphabet[gen() % alphabet.size()]);
  return out;
}

// Brute-force ML-kNN: recomputes every distance, neighbor set, count table,
// and Bayes factor from first principles on each call.
struct MlknnOracle {
  std::size_t k = 1;
  double s = 1.0;
  std::vector<std::vector<double>> X;  // dense
  std::vector<std::array<bool, 5>> Y;

  static double dist2(const std::vector<double>& a, const std::vector<double>& b) {
    double d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += (a[i] - b[i]) * (a[i] - b[i]);
    return d;
  }

  std::vector<std::size_t> neighbors(const std::vector<double>& q, long exclude) const {
    std::vector<std::pair<double, std::size_t>> ds;
    for (std::size_t i = 0; i < X.size(); ++i) {
      if (static_cast<long>(i) == exclude) continue;
      ds.emplace_back(dist2(X[i], q), i);
    }
    std::sort(ds.begin(), ds.end());
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < ds.size() && i < k; ++i) out.push_back(ds[i].second);
    return out;
  }

  std::array<bool, 5> predict(const std::vector<double>& q) const {
    const double m = static_cast<double>(X.size());
    std::array<bool, 5> result{};
    for (std::size_t l = 0; l < 5; ++l) {
      double positives = 0;
      for (const auto& y : Y) positives += y[l] ? 1 : 0;
      double ph1 = (s + positives) / (2 * s + m);
      double ph0 = 1 - ph1;

      std::vector<double> cpos(k + 1, 0), cneg(k + 1, 0);
      for (std::size_t i = 0; i < X.size(); ++i) {
        std::size_t delta = 0;
        for (std::size_t j : neighbors(X[i], static_cast<long>(i)))
          delta += Y[j][l] ? 1 : 0;
        if (Y[i][l]) cpos[delta] += 1;
        else cneg[delta] += 1;
      }

      std::size_t c = 0;
      for (std::size_t j : neighbors(q, -1)) c += Y[j][l] ? 1 : 0;
      double sum_pos = 0, sum_neg = 0;
      for (double v : cpos) sum_pos += v;
      for (double v : cneg) sum_neg += v;
      double like1 = (s + cpos[c]) / (s * (static_cast<double>(k) + 1) + sum_pos);
      double like0 = (s + cneg[c]) / (s * (static_cast<double>(k) + 1) + sum_neg);
      result[l] = ph1 * like1 >= ph0 * like0;
    }
    return result;
  }
};

// Random labeled corpus whose descriptions are drawn from a small pool of
// plain words; used by round-trip and distribution tests.
inline docsmell::Corpus random_corpus(std::mt19937_64& gen, std::size_t n, bool labeled) {
  static const std::vector<std::string> vocab = {
      "returns", "the",   "value",  "of",      "this",   "method", "when",
      "buffer",  "is",    "empty",  "stream",  "closes", "reader", "writes",
      "element", "index", "specified", "key",  "mapped", "otherwise"};
  docsmell::Corpus corpus;
  for (std::size_t i = 0; i < n; ++i) {
    docsmell::DocUnit u;
    u.id = "unit-" + std::to_string(i);
    u.package_name = "com.example.pkg" + std::to_string(gen() % 3);
    u.class_name = "Type" + std::to_string(gen() % 5);
    u.prototype = "public int method" + std::to_string(i) + "()";
    std::size_t words = 3 + gen() % 12;
    std::string text;
    for (std::size_t w = 0; w < words; ++w) {
      if (w) text += " ";
      text += vocab[gen() % vocab.size()];
    }
    text += ".";
    u.description_text = text;
    if (gen() % 4 == 0) u.description_html = "<p>" + text + "</p>";
    corpus.units.push_back(std::move(u));
    if (labeled) {
      docsmell::SmellLabels y;
      for (std::size_t l = 0; l < 5; ++l) y.set(l, gen() % 3 == 0);
      corpus.labels.push_back(y);
    }
  }
  return corpus;
}

}  // namespace testutil
