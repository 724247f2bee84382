#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include <docsmell/corpus.hpp>
#include <docsmell/javadoc.hpp>

#include "helpers.hpp"

using namespace docsmell;

TEST_CASE("strip_markup removes tags and decodes entities") {
  CHECK(strip_markup("<p>Returns <code>true</code>.</p>") == "Returns true.");
  CHECK(strip_markup("a &amp; b") == "a & b");
  CHECK(strip_markup("") == "");
  CHECK(strip_markup("x &lt; y &gt; z") == "x < y > z");
  CHECK(strip_markup("say &quot;hi&quot;") == "say \"hi\"");
  CHECK(strip_markup("a&nbsp;b") == "a b");
  CHECK(strip_markup("&#65;&#x42;") == "AB");
  CHECK(strip_markup("  lots \t of\n whitespace  ") == "lots of whitespace");
  CHECK(strip_markup("unclosed <a href=") == "unclosed");
  CHECK(strip_markup("&bogus; stays") == "&bogus; stays");
}

TEST_CASE("strip_markup is idempotent") {
  std::mt19937_64 gen(11);
  const std::string alphabet = "ab <>&;/\"ptc#x12 ";
  for (int trial = 0; trial < 500; ++trial) {
    std::string s = testutil::random_ascii_word(gen, 40, alphabet);
    std::string once = strip_markup(s);
    CHECK(strip_markup(once) == once);
  }
  // the classic double-escape case settles at a fixpoint
  std::string twice = strip_markup("&amp;lt;");
  CHECK(strip_markup(twice) == twice);
}

TEST_CASE("parse_jsonl reads labeled units") {
  std::string line =
      R"x({"id":"u1","package":"java.util","class":"List","prototype":"int size()",)x"
      R"x("description":"Returns the number of elements.","labels":{"bloated":false,)x"
      R"x("lazy":true,"excess_struct":false,"tangled":false,"fragmented":false}})x";
  Corpus c = parse_jsonl(line + "\n");
  REQUIRE(c.size() == 1);
  CHECK(c.labeled());
  CHECK(c.units[0].id == "u1");
  CHECK(c.units[0].package_name == "java.util");
  CHECK(c.units[0].class_name == "List");
  CHECK(c.units[0].prototype == "int size()");
  CHECK(c.units[0].description_text == "Returns the number of elements.");
  CHECK(c.labels[0].lazy);
  CHECK_FALSE(c.labels[0].bloated);
}

TEST_CASE("parse_jsonl edge cases and errors") {
  CHECK(parse_jsonl(std::string_view("")).size() == 0);

  SECTION("missing prototype") {
    std::string line = R"x({"id":"u1","package":"p","class":"C","description":"d"})x";
    try {
      parse_jsonl(line);
      FAIL("expected MalformedLine");
    } catch (const MalformedLine& e) {
      CHECK(e.line_no() == 1);
    }
  }

  SECTION("invalid JSON on line 2") {
    std::string text =
        R"x({"id":"u1","package":"p","class":"C","prototype":"void f()","description":"d"})x"
        "\nnot json\n";
    try {
      parse_jsonl(text);
      FAIL("expected MalformedLine");
    } catch (const MalformedLine& e) {
      CHECK(e.line_no() == 2);
    }
  }

  SECTION("duplicate id") {
    std::string one =
        R"x({"id":"dup","package":"p","class":"C","prototype":"void f()","description":"d"})x";
    CHECK_THROWS_AS(parse_jsonl(one + "\n" + one + "\n"), DuplicateId);
  }

  SECTION("mixed labeling") {
    std::string text = testutil::read_file(testutil::fixture_path("mixed.jsonl"));
    CHECK_THROWS_AS(parse_jsonl(text), MixedLabeling);
  }

  SECTION("labels object must have exactly five boolean keys") {
    std::string missing =
        R"x({"id":"u","package":"p","class":"C","prototype":"void f()","description":"d",)x"
        R"x("labels":{"bloated":true,"lazy":false,"excess_struct":false,"tangled":false}})x";
    CHECK_THROWS_AS(parse_jsonl(missing), MalformedLine);
    std::string nonbool =
        R"x({"id":"u","package":"p","class":"C","prototype":"void f()","description":"d",)x"
        R"x("labels":{"bloated":1,"lazy":false,"excess_struct":false,"tangled":false,)x"
        R"x("fragmented":false}})x";
    CHECK_THROWS_AS(parse_jsonl(nonbool), MalformedLine);
  }
}

TEST_CASE("jsonl round-trip is the identity") {
  std::mt19937_64 gen(42);
  for (int trial = 0; trial < 20; ++trial) {
    Corpus original = testutil::random_corpus(gen, 1 + gen() % 30, trial % 2 == 0);
    Corpus reparsed = parse_jsonl(write_jsonl(original));
    CHECK(reparsed == original);
  }
}

TEST_CASE("sample fixture loads") {
  Corpus c = parse_jsonl(testutil::read_file(testutil::fixture_path("sample.jsonl")));
  REQUIRE(c.size() == 5);
  CHECK(c.labeled());
  CHECK(c.units[2].description_html.has_value());
  Corpus again = parse_jsonl(write_jsonl(c));
  CHECK(again == c);
}

TEST_CASE("label_distribution counts per smell and histogram") {
  SECTION("two all-false units") {
    Corpus c;
    for (int i = 0; i < 2; ++i) {
      DocUnit u;
      u.id = "u" + std::to_string(i);
      u.prototype = "void f()";
      u.description_text = "text";
      c.units.push_back(u);
      c.labels.push_back(SmellLabels{});
    }
    DistributionReport r = label_distribution(c);
    CHECK(r.total == 2);
    CHECK(r.histogram[0] == 2);
    for (std::size_t l = 0; l < kSmellCount; ++l) CHECK(r.per_smell[l] == 0);
    CHECK(r.with_any() == 0);
  }

  SECTION("one unit with all five smells") {
    Corpus c;
    DocUnit u;
    u.id = "u";
    u.prototype = "void f()";
    u.description_text = "text";
    c.units.push_back(u);
    SmellLabels y;
    for (std::size_t l = 0; l < kSmellCount; ++l) y.set(l, true);
    c.labels.push_back(y);
    DistributionReport r = label_distribution(c);
    CHECK(r.histogram[5] == 1);
    for (std::size_t l = 0; l < kSmellCount; ++l) CHECK(r.per_smell[l] == 1);
  }

  SECTION("histogram sums to corpus size") {
    std::mt19937_64 gen(3);
    Corpus c = testutil::random_corpus(gen, 57, true);
    DistributionReport r = label_distribution(c);
    std::size_t total = 0;
    for (std::size_t count : r.histogram) total += count;
    CHECK(total == c.size());
  }

  SECTION("unlabeled corpus rejected") {
    std::mt19937_64 gen(4);
    Corpus c = testutil::random_corpus(gen, 3, false);
    CHECK_THROWS_AS(label_distribution(c), UnlabeledCorpus);
  }
}

TEST_CASE("labelset mask round-trips all 32 combinations") {
  for (unsigned mask = 0; mask < 32; ++mask) {
    SmellLabels y = SmellLabels::from_mask(mask);
    CHECK(y.mask() == mask);
  }
  SmellLabels only_bloated;
  only_bloated.bloated = true;
  CHECK(only_bloated.mask() == 16);  // bloated is the most significant bit
}

TEST_CASE("parse_javadoc_html extracts method blocks from fixtures") {
  SECTION("two-method page") {
    std::string html =
        testutil::read_file(testutil::fixture_path("javadoc/list_methods.html"));
    std::vector<DocUnit> units = parse_javadoc_html(html, "list_methods.html");
    REQUIRE(units.size() == 2);
    CHECK(units[0].id == "list_methods.html#size");
    CHECK(units[0].prototype == "public int size()");
    CHECK(units[0].description_text == "Returns the number of elements in this list.");
    CHECK(units[0].package_name == "java.util");
    CHECK(units[0].class_name == "List");
    CHECK(units[1].id == "list_methods.html#isEmpty");
    CHECK(units[1].prototype == "public boolean isEmpty()");
    CHECK(units[1].description_text ==
          "Returns true if this list contains no elements.");
    REQUIRE(units[1].description_html.has_value());
    CHECK(units[1].description_html->find("<code>") != std::string::npos);
  }

  SECTION("single-method page") {
    std::string html =
        testutil::read_file(testutil::fixture_path("javadoc/single_method.html"));
    std::vector<DocUnit> units = parse_javadoc_html(html, "single_method.html");
    REQUIRE(units.size() == 1);
    CHECK(units[0].prototype == "public int size()");
    CHECK(units[0].description_text == "Returns the number of elements.");
    CHECK(units[0].package_name == "java.util.concurrent");
    CHECK(units[0].class_name == "Counter");
  }

  SECTION("page without method blocks") {
    std::string html = testutil::read_file(testutil::fixture_path("no_methods.html"));
    CHECK_THROWS_AS(parse_javadoc_html(html, "x"), NoMethodBlocks);
  }

  SECTION("block without a signature") {
    std::string html =
        testutil::read_file(testutil::fixture_path("missing_signature.html"));
    try {
      parse_javadoc_html(html, "x");
      FAIL("expected MalformedBlock");
    } catch (const MalformedBlock& e) {
      CHECK(e.index() == 0);
    }
  }

  SECTION("overloaded method names get disambiguated ids") {
    std::string html =
        "<html><head><title>T (SE 7)</title></head><body>"
        "<h4>get</h4><pre>int get(int i)</pre><div class=\"block\">One.</div>"
        "<h4>get</h4><pre>int get(long i)</pre><div class=\"block\">Two.</div>"
        "</body></html>";
    std::vector<DocUnit> units = parse_javadoc_html(html, "t.html");
    REQUIRE(units.size() == 2);
    CHECK(units[0].id == "t.html#get");
    CHECK(units[1].id == "t.html#get~1");
  }
}
