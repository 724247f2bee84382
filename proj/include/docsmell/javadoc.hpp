#pragma once

#include <cctype>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "docsmell/corpus.hpp"
#include "docsmell/errors.hpp"

namespace docsmell {
namespace detail {

struct TagPos {
  std::size_t start = std::string_view::npos;  // position of '<'
  std::size_t attrs_begin = 0;                 // just past the tag name
  std::size_t content_begin = 0;               // just past '>'
};

// Finds the next opening tag with the given (lowercase) name at or after
// `from`, searching in `lower` (a lowercased copy of the document).
inline TagPos find_open_tag(std::string_view lower, std::string_view name, std::size_t from) {
  std::string needle = "<" + std::string(name);
  std::size_t pos = from;
  while ((pos = lower.find(needle, pos)) != std::string_view::npos) {
    std::size_t after = pos + needle.size();
    if (after < lower.size() &&
        (lower[after] == '>' || lower[after] == ' ' || lower[after] == '\t' ||
         lower[after] == '\n' || lower[after] == '\r' || lower[after] == '/')) {
      std::size_t close = lower.find('>', after);
      if (close == std::string_view::npos) break;
      return TagPos{pos, after, close + 1};
    }
    pos += 1;
  }
  return TagPos{};
}

// Extracts the inner markup of the element whose content starts at
// `content_begin`, honoring nesting of same-named elements. Returns the raw
// substring of `doc`; an unclosed element runs to the end of the document.
inline std::string inner_html(std::string_view doc, std::string_view lower,
                              std::string_view name, std::size_t content_begin,
                              std::size_t limit) {
  std::string open_needle = "<" + std::string(name);
  std::string close_needle = "</" + std::string(name);
  std::size_t depth = 1;
  std::size_t pos = content_begin;
  while (pos < limit) {
    std::size_t next_open = lower.find(open_needle, pos);
    std::size_t next_close = lower.find(close_needle, pos);
    if (next_close == std::string_view::npos || next_close >= limit)
      return std::string(doc.substr(content_begin, limit - content_begin));
    if (next_open != std::string_view::npos && next_open < next_close) {
      std::size_t after = next_open + open_needle.size();
      bool real_tag = after < lower.size() &&
                      (lower[after] == '>' || lower[after] == ' ' || lower[after] == '/' ||
                       lower[after] == '\t' || lower[after] == '\n' || lower[after] == '\r');
      pos = next_open + 1;
      if (real_tag) ++depth;
      continue;
    }
    --depth;
    if (depth == 0)
      return std::string(doc.substr(content_begin, next_close - content_begin));
    pos = next_close + 1;
  }
  return std::string(doc.substr(content_begin, limit - content_begin));
}

// Reads the value of an attribute inside a tag's attribute region.
// Returns false when the attribute is absent.
inline bool attr_value(std::string_view doc, std::size_t attrs_begin, std::size_t tag_end,
                       std::string_view attr_name, std::string& out) {
  std::size_t i = attrs_begin;
  while (i < tag_end) {
    while (i < tag_end && (is_space_byte(static_cast<unsigned char>(doc[i])) || doc[i] == '/'))
      ++i;
    std::size_t name_start = i;
    while (i < tag_end && doc[i] != '=' && doc[i] != '>' &&
           !is_space_byte(static_cast<unsigned char>(doc[i])))
      ++i;
    std::string name = ascii_lower_copy(doc.substr(name_start, i - name_start));
    while (i < tag_end && is_space_byte(static_cast<unsigned char>(doc[i]))) ++i;
    std::string value;
    if (i < tag_end && doc[i] == '=') {
      ++i;
      while (i < tag_end && is_space_byte(static_cast<unsigned char>(doc[i]))) ++i;
      if (i < tag_end && (doc[i] == '"' || doc[i] == '\'')) {
        char quote = doc[i++];
        std::size_t value_start = i;
        while (i < tag_end && doc[i] != quote) ++i;
        value = std::string(doc.substr(value_start, i - value_start));
        if (i < tag_end) ++i;
      } else {
        std::size_t value_start = i;
        while (i < tag_end && !is_space_byte(static_cast<unsigned char>(doc[i])) &&
               doc[i] != '>')
          ++i;
        value = std::string(doc.substr(value_start, i - value_start));
      }
    }
    if (name == attr_name) {
      out = value;
      return true;
    }
    if (name.empty()) ++i;
  }
  return false;
}

// Finds the next element (any tag name) whose class attribute equals
// `class_value`, at or after `from` and before `limit`.
inline TagPos find_by_class(std::string_view doc, std::string_view lower,
                            std::string_view class_value, std::size_t from, std::size_t limit,
                            std::string* tag_name_out = nullptr) {
  std::size_t pos = from;
  while (pos < limit) {
    std::size_t lt = lower.find('<', pos);
    if (lt == std::string_view::npos || lt >= limit) break;
    std::size_t gt = lower.find('>', lt + 1);
    if (gt == std::string_view::npos) break;
    if (lt + 1 < lower.size() && (std::isalpha(static_cast<unsigned char>(lower[lt + 1])))) {
      std::size_t name_end = lt + 1;
      while (name_end < gt && std::isalnum(static_cast<unsigned char>(lower[name_end])))
        ++name_end;
      std::string value;
      if (attr_value(doc, name_end, gt, "class", value) && value == class_value) {
        if (tag_name_out) *tag_name_out = std::string(lower.substr(lt + 1, name_end - lt - 1));
        return TagPos{lt, name_end, gt + 1};
      }
    }
    pos = gt + 1;
  }
  return TagPos{};
}

}  // namespace detail

// Parses one offline Javadoc-style HTML page. Method detail blocks are
// delimited by <h4> headings; each block must contain a <pre> signature and
// may contain a description element with class="block". Unit ids are
// source_id + "#" + heading, with "~N" appended to disambiguate overloads.
inline std::vector<DocUnit> parse_javadoc_html(std::string_view document,
                                               std::string_view source_id) {
  std::string lower = detail::ascii_lower_copy(document);

  std::string package_name;
  {
    std::string tag;
    detail::TagPos div =
        detail::find_by_class(document, lower, "subTitle", 0, lower.size(), &tag);
    if (div.start != std::string_view::npos)
      package_name = strip_markup(
          detail::inner_html(document, lower, tag, div.content_begin, lower.size()));
  }

  std::string class_name;
  {
    detail::TagPos title = detail::find_open_tag(lower, "title", 0);
    if (title.start != std::string_view::npos) {
      std::string text = strip_markup(
          detail::inner_html(document, lower, "title", title.content_begin, lower.size()));
      std::size_t space = text.find(' ');
      class_name = space == std::string::npos ? text : text.substr(0, space);
    }
  }

  // Locate every <h4> heading; each one opens a method block that runs to
  // the next heading or the end of the document.
  std::vector<detail::TagPos> headings;
  for (std::size_t pos = 0;;) {
    detail::TagPos h = detail::find_open_tag(lower, "h4", pos);
    if (h.start == std::string_view::npos) break;
    headings.push_back(h);
    pos = h.content_begin;
  }
  if (headings.empty()) throw NoMethodBlocks();

  std::vector<DocUnit> units;
  std::map<std::string, std::size_t> name_uses;
  for (std::size_t b = 0; b < headings.size(); ++b) {
    std::size_t block_begin = headings[b].content_begin;
    std::size_t block_end = b + 1 < headings.size() ? headings[b + 1].start : lower.size();

    DocUnit unit;
    unit.package_name = package_name;
    unit.class_name = class_name;

    std::string heading = strip_markup(
        detail::inner_html(document, lower, "h4", block_begin, block_end));
    std::size_t uses = name_uses[heading]++;
    unit.id = std::string(source_id) + "#" + heading;
    if (uses > 0) unit.id += "~" + std::to_string(uses);

    detail::TagPos pre = detail::find_open_tag(lower, "pre", block_begin);
    if (pre.start == std::string_view::npos || pre.start >= block_end) throw MalformedBlock(b);
    unit.prototype = strip_markup(
        detail::inner_html(document, lower, "pre", pre.content_begin, block_end));
    if (unit.prototype.empty()) throw MalformedBlock(b);

    std::string desc_tag;
    detail::TagPos desc =
        detail::find_by_class(document, lower, "block", block_begin, block_end, &desc_tag);
    if (desc.start != std::string_view::npos) {
      unit.description_html =
          detail::inner_html(document, lower, desc_tag, desc.content_begin, block_end);
      unit.description_text = strip_markup(*unit.description_html);
    }

    units.push_back(std::move(unit));
  }
  return units;
}

}  // namespace docsmell
