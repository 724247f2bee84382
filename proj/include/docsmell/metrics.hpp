#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cstddef>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "docsmell/builtin_lexicon.hpp"
#include "docsmell/corpus.hpp"
#include "docsmell/errors.hpp"

namespace docsmell {

// Readability recorded for a unit whose description has no words. Kept at
// the largest finite value so that lower-is-harder threshold comparisons
// never flag empty text as hard to read.
inline constexpr double kEmptyReadability = std::numeric_limits<double>::max();

struct MetricVector {
  std::size_t doc_length = 0;
  double readability = kEmptyReadability;
  std::size_t jargon_count = 0;
  std::size_t url_count = 0;
  std::size_t struct_ref_count = 0;
  std::size_t edit_distance = 0;

  // Fixed export order used by CSV output and rule features.
  std::array<double, 6> as_array() const {
    return {static_cast<double>(doc_length), readability,
            static_cast<double>(jargon_count), static_cast<double>(url_count),
            static_cast<double>(struct_ref_count), static_cast<double>(edit_distance)};
  }

  friend bool operator==(const MetricVector&, const MetricVector&) = default;
};

struct Lexicon {
  std::unordered_set<std::string> common_words;

  bool contains(std::string_view word) const {
    return common_words.find(std::string(word)) != common_words.end();
  }

  // One lowercase word per line; blank lines and '#' comments ignored.
  static Lexicon from_stream(std::istream& in) {
    Lexicon lex;
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      std::size_t begin = line.find_first_not_of(" \t");
      if (begin == std::string::npos) continue;
      std::size_t end = line.find_last_not_of(" \t");
      std::string word = line.substr(begin, end - begin + 1);
      if (word[0] == '#') continue;
      for (char& c : word) {
        if (c == ' ' || c == '\t') throw IoError("lexicon entry contains whitespace: " + word);
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
      }
      lex.common_words.insert(std::move(word));
    }
    if (lex.common_words.empty()) throw IoError("lexicon is empty");
    return lex;
  }

  static Lexicon from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open lexicon file: " + path);
    return from_stream(in);
  }

  // The embedded default list of common English words.
  static const Lexicon& builtin() {
    static const Lexicon lex = [] {
      std::istringstream in{std::string(detail::builtin_lexicon_text)};
      return from_stream(in);
    }();
    return lex;
  }
};

namespace detail {

inline bool is_ascii_alnum(char c) {
  return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

inline bool is_ascii_upper(char c) { return c >= 'A' && c <= 'Z'; }
inline bool is_ascii_lower(char c) { return c >= 'a' && c <= 'z'; }

template <typename Fn>
inline void for_each_token(std::string_view text, Fn&& fn) {
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && !is_ascii_alnum(text[i])) ++i;
    std::size_t start = i;
    while (i < text.size() && is_ascii_alnum(text[i])) ++i;
    if (i > start) fn(text.substr(start, i - start));
  }
}

}  // namespace detail

// Splits on runs of non-alphanumeric characters and lowercases.
inline std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  detail::for_each_token(text, [&](std::string_view tok) {
    std::string t(tok);
    for (char& c : t)
      if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    tokens.push_back(std::move(t));
  });
  return tokens;
}

// Same split, original case preserved (needed for acronym detection).
inline std::vector<std::string> tokenize_cased(std::string_view text) {
  std::vector<std::string> tokens;
  detail::for_each_token(text,
                         [&](std::string_view tok) { tokens.emplace_back(tok); });
  return tokens;
}

inline std::size_t doc_length(std::string_view text) {
  std::size_t n = 0;
  detail::for_each_token(text, [&](std::string_view) { ++n; });
  return n;
}

namespace detail {

inline bool is_vowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' || c == 'y';
}

// Contiguous vowel groups (aeiouy), minus one for a trailing silent 'e' that
// forms its own group when another group remains; at least 1.
inline std::size_t syllables(std::string_view lower_token) {
  std::size_t groups = 0;
  bool in_group = false;
  for (char c : lower_token) {
    if (is_vowel(c)) {
      if (!in_group) ++groups;
      in_group = true;
    } else {
      in_group = false;
    }
  }
  if (groups >= 2 && lower_token.size() >= 2 && lower_token.back() == 'e' &&
      !is_vowel(lower_token[lower_token.size() - 2]))
    --groups;
  return groups == 0 ? 1 : groups;
}

inline std::size_t sentence_runs(std::string_view text) {
  std::size_t runs = 0;
  bool in_run = false;
  for (char c : text) {
    if (c == '.' || c == '!' || c == '?') {
      if (!in_run) ++runs;
      in_run = true;
    } else {
      in_run = false;
    }
  }
  return runs == 0 ? 1 : runs;
}

}  // namespace detail

// Flesch Reading Ease: 206.835 - 1.015*(words/sentences) - 84.6*(syllables/words).
inline double flesch_reading_ease(std::string_view text) {
  std::size_t words = 0;
  std::size_t syllables = 0;
  detail::for_each_token(text, [&](std::string_view tok) {
    std::string t(tok);
    for (char& c : t)
      if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    ++words;
    syllables += detail::syllables(t);
  });
  if (words == 0) throw EmptyText();
  double sentences = static_cast<double>(detail::sentence_runs(text));
  double w = static_cast<double>(words);
  return 206.835 - 1.015 * (w / sentences) - 84.6 * (static_cast<double>(syllables) / w);
}

// Acronyms (2-6 chars, all uppercase letters) plus lowercase-alphabetic
// tokens of length >= 4 that the lexicon does not know. One count per token.
inline std::size_t count_acronyms_jargon(std::span<const std::string> tokens_cased,
                                         const Lexicon& lexicon) {
  std::size_t count = 0;
  for (const std::string& tok : tokens_cased) {
    bool acronym = tok.size() >= 2 && tok.size() <= 6 &&
                   std::all_of(tok.begin(), tok.end(), detail::is_ascii_upper);
    if (acronym) {
      ++count;
      continue;
    }
    std::string lower = tok;
    for (char& c : lower)
      if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    bool alphabetic = !lower.empty() &&
                      std::all_of(lower.begin(), lower.end(), detail::is_ascii_lower);
    if (alphabetic && lower.size() >= 4 && !lexicon.contains(lower)) ++count;
  }
  return count;
}

namespace detail {

struct Span {
  std::size_t begin, end;
};

inline void find_literal_spans(std::string_view s, std::string_view needle,
                               std::vector<Span>& out) {
  std::size_t pos = 0;
  while ((pos = s.find(needle, pos)) != std::string_view::npos) {
    out.push_back({pos, pos + needle.size()});
    pos += 1;
  }
}

// Span of a Javadoc inline tag: from "{@link" (or "{@linkplain") to the
// matching '}' or end of string.
inline void find_inline_tag_spans(std::string_view s, std::string_view opener,
                                  std::vector<Span>& out) {
  std::size_t pos = 0;
  while ((pos = s.find(opener, pos)) != std::string_view::npos) {
    std::size_t close = s.find('}', pos);
    std::size_t end = close == std::string_view::npos ? s.size() : close + 1;
    out.push_back({pos, end});
    pos += 1;
  }
}

// href attributes inside tags, spanning the attribute name through its value.
inline void find_href_spans(std::string_view html, std::vector<Span>& out) {
  std::string lower = ascii_lower_copy(html);
  std::size_t pos = 0;
  while (pos < lower.size()) {
    std::size_t lt = lower.find('<', pos);
    if (lt == std::string_view::npos) break;
    std::size_t gt = lower.find('>', lt + 1);
    if (gt == std::string_view::npos) break;
    std::size_t search = lt;
    while ((search = lower.find("href", search)) != std::string_view::npos && search < gt) {
      std::size_t i = search + 4;
      while (i < gt && is_space_byte(static_cast<unsigned char>(lower[i]))) ++i;
      if (i < gt && lower[i] == '=') {
        ++i;
        while (i < gt && is_space_byte(static_cast<unsigned char>(lower[i]))) ++i;
        std::size_t value_end = i;
        if (i < gt && (html[i] == '"' || html[i] == '\'')) {
          char quote = html[i];
          value_end = lower.find(quote, i + 1);
          value_end = value_end == std::string_view::npos || value_end > gt ? gt : value_end + 1;
        } else {
          while (value_end < gt && !is_space_byte(static_cast<unsigned char>(lower[value_end])))
            ++value_end;
        }
        out.push_back({search, value_end});
        search = value_end;
      } else {
        search += 4;
      }
    }
    pos = gt + 1;
  }
}

inline std::size_t count_merged_spans(std::vector<Span>& spans) {
  if (spans.empty()) return 0;
  std::sort(spans.begin(), spans.end(),
            [](const Span& a, const Span& b) { return a.begin < b.begin || (a.begin == b.begin && a.end < b.end); });
  std::size_t count = 1;
  std::size_t reach = spans[0].end;
  for (std::size_t i = 1; i < spans.size(); ++i) {
    if (spans[i].begin >= reach) {
      ++count;
      reach = spans[i].end;
    } else {
      reach = std::max(reach, spans[i].end);
    }
  }
  return count;
}

}  // namespace detail

// URL mentions: scheme matches in the plain text, plus href attributes and
// {@link}/{@linkplain} tags in the markup (markup matches deduplicated by
// overlapping character span).
inline std::size_t count_urls(const DocUnit& unit) {
  std::vector<detail::Span> text_spans;
  detail::find_literal_spans(unit.description_text, "http://", text_spans);
  detail::find_literal_spans(unit.description_text, "https://", text_spans);
  std::size_t count = text_spans.size();
  if (unit.description_html) {
    std::vector<detail::Span> html_spans;
    detail::find_href_spans(*unit.description_html, html_spans);
    detail::find_inline_tag_spans(*unit.description_html, "{@link", html_spans);
    detail::find_inline_tag_spans(*unit.description_html, "{@linkplain", html_spans);
    count += detail::count_merged_spans(html_spans);
  }
  return count;
}

namespace detail {

inline bool is_ident_char(char c) {
  return is_ascii_alnum(c) || c == '_' || c == '$';
}

inline bool is_ident(std::string_view w) {
  if (w.empty() || (!std::isalpha(static_cast<unsigned char>(w[0])) && w[0] != '_' && w[0] != '$'))
    return false;
  return std::all_of(w.begin(), w.end(), is_ident_char);
}

// word.word[.word...] where every segment is an identifier.
inline bool is_dotted_name(std::string_view w) {
  std::size_t segments = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= w.size(); ++i) {
    if (i == w.size() || w[i] == '.') {
      if (!is_ident(w.substr(start, i - start))) return false;
      ++segments;
      start = i + 1;
    }
  }
  return segments >= 2;
}

// name(...) or qualified.name(...), closing at the final character.
inline bool is_call_form(std::string_view w) {
  std::size_t paren = w.find('(');
  if (paren == std::string_view::npos || paren == 0 || w.back() != ')') return false;
  std::string_view head = w.substr(0, paren);
  return is_ident(head) || is_dotted_name(head);
}

// camelCase / PascalCase: an identifier made of letters/digits with an
// uppercase letter after the first position.
inline bool is_camel(std::string_view w) {
  if (w.size() < 2 || !std::isalpha(static_cast<unsigned char>(w[0]))) return false;
  if (!std::all_of(w.begin(), w.end(), is_ident_char)) return false;
  for (std::size_t i = 1; i < w.size(); ++i)
    if (is_ascii_upper(w[i])) return true;
  return false;
}

inline std::string_view trim_word(std::string_view w) {
  while (!w.empty() && (w.front() == '(' || w.front() == '[' || w.front() == '{' ||
                        w.front() == '"' || w.front() == '\''))
    w.remove_prefix(1);
  for (;;) {
    if (w.empty()) break;
    char c = w.back();
    if (c == '.' || c == ',' || c == ';' || c == ':' || c == '!' || c == '?' || c == '"' ||
        c == '\'') {
      w.remove_suffix(1);
      continue;
    }
    if ((c == ')' && w.find('(') == std::string_view::npos) ||
        (c == ']' && w.find('[') == std::string_view::npos) ||
        (c == '}' && w.find('{') == std::string_view::npos)) {
      w.remove_suffix(1);
      continue;
    }
    break;
  }
  return w;
}

}  // namespace detail

// Mentions of code structure: dotted qualified names, call-form identifiers,
// and camelCase/PascalCase identifiers, counted per whitespace-separated word.
inline std::size_t count_struct_refs(std::string_view text) {
  std::size_t count = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && detail::is_space_byte(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t start = i;
    while (i < text.size() && !detail::is_space_byte(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) continue;
    std::string_view word = detail::trim_word(text.substr(start, i - start));
    if (word.empty()) continue;
    if (detail::is_dotted_name(word) || detail::is_call_form(word) || detail::is_camel(word))
      ++count;
  }
  return count;
}

// Classic two-row dynamic program over bytes.
inline std::size_t levenshtein(std::string_view a, std::string_view b) {
  if (a.size() > b.size()) std::swap(a, b);
  std::vector<std::size_t> prev(a.size() + 1), cur(a.size() + 1);
  for (std::size_t i = 0; i <= a.size(); ++i) prev[i] = i;
  for (std::size_t j = 1; j <= b.size(); ++j) {
    cur[0] = j;
    for (std::size_t i = 1; i <= a.size(); ++i) {
      std::size_t sub = prev[i - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[i] = std::min({prev[i] + 1, cur[i - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[a.size()];
}

inline MetricVector compute_metrics(const DocUnit& unit, const Lexicon& lexicon) {
  MetricVector m;
  const std::string& text = unit.description_text;
  m.doc_length = doc_length(text);
  m.readability = m.doc_length == 0 ? kEmptyReadability : flesch_reading_ease(text);
  std::vector<std::string> cased = tokenize_cased(text);
  m.jargon_count = count_acronyms_jargon(cased, lexicon);
  m.url_count = count_urls(unit);
  m.struct_ref_count = count_struct_refs(text);
  m.edit_distance = levenshtein(text, unit.prototype);
  return m;
}

namespace detail {

// Shortest round-trip decimal representation.
inline std::string format_double(double v) {
  std::array<char, 64> buf;
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

}  // namespace detail

inline void write_metrics_csv(std::span<const DocUnit> units,
                              std::span<const MetricVector> metrics, std::ostream& out) {
  if (units.size() != metrics.size()) throw LengthMismatch(units.size(), metrics.size());
  out << "id,doc_length,readability,jargon_count,url_count,struct_ref_count,edit_distance\n";
  for (std::size_t i = 0; i < units.size(); ++i) {
    std::string id = units[i].id;
    bool quote = id.find_first_of(",\"\n") != std::string::npos;
    if (quote) {
      std::string escaped = "\"";
      for (char c : id) {
        escaped.push_back(c);
        if (c == '"') escaped.push_back('"');
      }
      escaped.push_back('"');
      id = escaped;
    }
    const MetricVector& m = metrics[i];
    out << id << ',' << m.doc_length << ',' << detail::format_double(m.readability) << ','
        << m.jargon_count << ',' << m.url_count << ',' << m.struct_ref_count << ','
        << m.edit_distance << '\n';
  }
}

}  // namespace docsmell
