#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "docsmell/errors.hpp"

namespace docsmell {

inline constexpr std::size_t kSmellCount = 5;

// Canonical label order. Everything that iterates labels uses this order.
inline constexpr std::array<std::string_view, kSmellCount> kSmellNames{
    "bloated", "lazy", "excess_struct", "tangled", "fragmented"};

struct SmellLabels {
  bool bloated = false;
  bool lazy = false;
  bool excess_struct = false;
  bool tangled = false;
  bool fragmented = false;

  bool get(std::size_t i) const {
    switch (i) {
      case 0: return bloated;
      case 1: return lazy;
      case 2: return excess_struct;
      case 3: return tangled;
      case 4: return fragmented;
      default: throw Error("label index out of range");
    }
  }

  void set(std::size_t i, bool v) {
    switch (i) {
      case 0: bloated = v; break;
      case 1: lazy = v; break;
      case 2: excess_struct = v; break;
      case 3: tangled = v; break;
      case 4: fragmented = v; break;
      default: throw Error("label index out of range");
    }
  }

  // 5-bit encoding with bloated as the most significant bit; numeric order of
  // masks equals lexicographic order of the label bit-strings.
  unsigned mask() const {
    unsigned m = 0;
    for (std::size_t i = 0; i < kSmellCount; ++i) m = (m << 1) | (get(i) ? 1u : 0u);
    return m;
  }

  static SmellLabels from_mask(unsigned m) {
    SmellLabels out;
    for (std::size_t i = 0; i < kSmellCount; ++i)
      out.set(i, (m >> (kSmellCount - 1 - i)) & 1u);
    return out;
  }

  int count() const {
    int c = 0;
    for (std::size_t i = 0; i < kSmellCount; ++i) c += get(i) ? 1 : 0;
    return c;
  }

  bool any() const { return count() > 0; }

  friend bool operator==(const SmellLabels&, const SmellLabels&) = default;
};

struct DocUnit {
  std::string id;
  std::string package_name;
  std::string class_name;
  std::string prototype;
  std::optional<std::string> description_html;
  std::string description_text;

  friend bool operator==(const DocUnit&, const DocUnit&) = default;
};

// Ordered collection of units. Either every unit has a label (labels.size()
// == units.size()) or none does (labels empty).
struct Corpus {
  std::vector<DocUnit> units;
  std::vector<SmellLabels> labels;

  std::size_t size() const { return units.size(); }
  bool labeled() const { return !labels.empty() && labels.size() == units.size(); }

  friend bool operator==(const Corpus&, const Corpus&) = default;
};

namespace detail {

inline bool is_space_byte(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

inline char ascii_lower(char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

inline std::string ascii_lower_copy(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = ascii_lower(c);
  return out;
}

// Appends the UTF-8 encoding of a code point.
inline void append_utf8(std::string& out, std::uint32_t cp) {
  if (cp <= 0x7F) {
    out.push_back(static_cast<char>(cp));
  } else if (cp <= 0x7FF) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp <= 0xFFFF) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

// A '<' opens a tag only when followed by a letter, '/', '!' or '?'; a bare
// '<' (as in "a < b") is ordinary text.
inline bool opens_tag(std::string_view s, std::size_t i) {
  if (i + 1 >= s.size()) return false;
  char c = s[i + 1];
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '/' ||
         c == '!' || c == '?';
}

// One pass of tag removal. An unclosed trailing tag is dropped.
inline std::string remove_tags_once(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] == '<' && opens_tag(s, i)) {
      std::size_t close = s.find('>', i + 1);
      if (close == std::string_view::npos) break;
      i = close + 1;
    } else {
      out.push_back(s[i]);
      ++i;
    }
  }
  return out;
}

// One pass of entity decoding. Named entities supported: amp, lt, gt, quot,
// nbsp; numeric references (&#10; &#x2F;) are decoded to UTF-8.
inline std::string decode_entities_once(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] != '&') {
      out.push_back(s[i]);
      ++i;
      continue;
    }
    std::size_t semi = s.find(';', i + 1);
    if (semi == std::string_view::npos || semi == i + 1 || semi - i > 10) {
      out.push_back(s[i]);
      ++i;
      continue;
    }
    std::string_view name = s.substr(i + 1, semi - i - 1);
    bool decoded = true;
    if (name == "amp") {
      out.push_back('&');
    } else if (name == "lt") {
      out.push_back('<');
    } else if (name == "gt") {
      out.push_back('>');
    } else if (name == "quot") {
      out.push_back('"');
    } else if (name == "nbsp") {
      out.push_back(' ');
    } else if (name.size() >= 2 && name[0] == '#') {
      std::uint32_t cp = 0;
      bool ok = true;
      if (name[1] == 'x' || name[1] == 'X') {
        ok = name.size() > 2;
        for (std::size_t j = 2; j < name.size() && ok; ++j) {
          char c = name[j];
          int d = (c >= '0' && c <= '9')   ? c - '0'
                  : (c >= 'a' && c <= 'f') ? c - 'a' + 10
                  : (c >= 'A' && c <= 'F') ? c - 'A' + 10
                                           : -1;
          if (d < 0 || cp > 0x10FFFF) ok = false;
          else cp = cp * 16 + static_cast<std::uint32_t>(d);
        }
      } else {
        for (std::size_t j = 1; j < name.size() && ok; ++j) {
          char c = name[j];
          if (c < '0' || c > '9' || cp > 0x10FFFF) ok = false;
          else cp = cp * 10 + static_cast<std::uint32_t>(c - '0');
        }
      }
      if (ok && cp > 0 && cp <= 0x10FFFF) append_utf8(out, cp);
      else decoded = false;
    } else {
      decoded = false;
    }
    if (decoded) {
      i = semi + 1;
    } else {
      out.push_back(s[i]);
      ++i;
    }
  }
  return out;
}

inline std::string collapse_whitespace(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool in_space = false;
  for (unsigned char c : s) {
    if (is_space_byte(c)) {
      in_space = true;
      continue;
    }
    if (in_space && !out.empty()) out.push_back(' ');
    in_space = false;
    out.push_back(static_cast<char>(c));
  }
  return out;
}

}  // namespace detail

// Removes tags, decodes entities, and normalizes whitespace. Passes repeat
// until the string stops changing, which makes the operation idempotent even
// when decoding exposes new markup (e.g. "&amp;lt;" settles at "<").
inline std::string strip_markup(std::string_view html) {
  std::string cur(html);
  for (;;) {
    std::string next = detail::collapse_whitespace(
        detail::decode_entities_once(detail::remove_tags_once(cur)));
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

namespace detail {

inline SmellLabels labels_from_json(const nlohmann::json& obj, std::size_t line_no) {
  if (!obj.is_object() || obj.size() != kSmellCount)
    throw MalformedLine(line_no, "labels must hold exactly the five smell keys");
  SmellLabels out;
  for (std::size_t i = 0; i < kSmellCount; ++i) {
    auto it = obj.find(std::string(kSmellNames[i]));
    if (it == obj.end() || !it->is_boolean())
      throw MalformedLine(line_no, "labels." + std::string(kSmellNames[i]) +
                                       " missing or not a boolean");
    out.set(i, it->get<bool>());
  }
  return out;
}

inline std::string required_string(const nlohmann::json& obj, const char* key,
                                   std::size_t line_no) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_string())
    throw MalformedLine(line_no, std::string("missing required field \"") + key + "\"");
  return it->get<std::string>();
}

}  // namespace detail

// Reads one JSON object per line. The description field is trusted to be
// plain text already; only whitespace is normalized so that serialization
// round-trips are exact.
inline Corpus parse_jsonl(std::istream& in) {
  Corpus corpus;
  std::unordered_set<std::string> seen_ids;
  bool saw_labeled = false;
  bool saw_unlabeled = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw MalformedLine(line_no, e.what());
    }
    if (!obj.is_object()) throw MalformedLine(line_no, "not a JSON object");

    DocUnit unit;
    unit.id = detail::required_string(obj, "id", line_no);
    if (unit.id.empty()) throw MalformedLine(line_no, "id must be non-empty");
    unit.package_name = detail::required_string(obj, "package", line_no);
    unit.class_name = detail::required_string(obj, "class", line_no);
    unit.prototype = detail::required_string(obj, "prototype", line_no);
    if (unit.prototype.empty()) throw MalformedLine(line_no, "prototype must be non-empty");
    unit.description_text =
        detail::collapse_whitespace(detail::required_string(obj, "description", line_no));
    if (auto it = obj.find("description_html"); it != obj.end()) {
      if (!it->is_string()) throw MalformedLine(line_no, "description_html must be a string");
      unit.description_html = it->get<std::string>();
    }

    if (!seen_ids.insert(unit.id).second) throw DuplicateId(unit.id);

    if (auto it = obj.find("labels"); it != obj.end()) {
      saw_labeled = true;
      corpus.labels.push_back(detail::labels_from_json(*it, line_no));
    } else {
      saw_unlabeled = true;
    }
    if (saw_labeled && saw_unlabeled) throw MixedLabeling();
    corpus.units.push_back(std::move(unit));
  }
  return corpus;
}

inline Corpus parse_jsonl(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_jsonl(in);
}

inline void write_jsonl(const Corpus& corpus, std::ostream& out) {
  for (std::size_t i = 0; i < corpus.units.size(); ++i) {
    const DocUnit& u = corpus.units[i];
    nlohmann::ordered_json obj;
    obj["id"] = u.id;
    obj["package"] = u.package_name;
    obj["class"] = u.class_name;
    obj["prototype"] = u.prototype;
    obj["description"] = u.description_text;
    if (u.description_html) obj["description_html"] = *u.description_html;
    if (corpus.labeled()) {
      nlohmann::ordered_json labels;
      for (std::size_t l = 0; l < kSmellCount; ++l)
        labels[std::string(kSmellNames[l])] = corpus.labels[i].get(l);
      obj["labels"] = labels;
    }
    out << obj.dump() << '\n';
  }
}

inline std::string write_jsonl(const Corpus& corpus) {
  std::ostringstream out;
  write_jsonl(corpus, out);
  return out.str();
}

struct DistributionReport {
  std::size_t total = 0;
  std::array<std::size_t, kSmellCount> per_smell{};
  std::array<std::size_t, kSmellCount + 1> histogram{};  // units with 0..5 smells

  std::size_t with_any() const { return total - histogram[0]; }
};

inline DistributionReport label_distribution(const Corpus& corpus) {
  if (!corpus.labeled()) throw UnlabeledCorpus();
  DistributionReport report;
  report.total = corpus.size();
  for (const SmellLabels& y : corpus.labels) {
    report.histogram[static_cast<std::size_t>(y.count())] += 1;
    for (std::size_t l = 0; l < kSmellCount; ++l)
      if (y.get(l)) report.per_smell[l] += 1;
  }
  return report;
}

inline nlohmann::ordered_json to_json(const DistributionReport& r) {
  nlohmann::ordered_json out;
  out["total"] = r.total;
  out["with_any_smell"] = r.with_any();
  nlohmann::ordered_json per;
  for (std::size_t l = 0; l < kSmellCount; ++l)
    per[std::string(kSmellNames[l])] = r.per_smell[l];
  out["per_smell"] = per;
  nlohmann::ordered_json hist;
  for (std::size_t c = 0; c <= kSmellCount; ++c) hist[std::to_string(c)] = r.histogram[c];
  out["smell_count_histogram"] = hist;
  return out;
}

}  // namespace docsmell
