#include <doctest.h>

#include "storyarc/corpus.hpp"
#include "storyarc/utf8.hpp"

using namespace storyarc;

TEST_CASE("clean removes standalone page-number lines") {
    CHECK(clean("He ran.\n\n  37  \nShe hid.") == "He ran.\nShe hid.");
    CHECK(clean("a\n- 12 -\nb") == "a\nb");
    CHECK(clean("a\n.12.\nb") == "a\nb");
    CHECK(clean("Route 66 is long.") == "Route 66 is long.");  // not a standalone line
}

TEST_CASE("clean strips URLs") {
    CHECK(clean("See http://x.y/z now") == "See  now");
    CHECK(clean("go to https://example.com/a?b=c end") == "go to  end");
    CHECK(clean("visit www.example.org today") == "visit  today");
}

TEST_CASE("clean leaves plain text untouched") {
    CHECK(clean("plain text, nothing to clean") == "plain text, nothing to clean");
}

TEST_CASE("clean strips control characters and collapses blank lines") {
    CHECK(clean("a\x01\x02z") == "az");
    CHECK(clean("a\r\nb") == "a\nb");
    CHECK(clean("a\n\n\n\nb") == "a\nb");
    CHECK(clean("one\ttwo") == "one two");
}

TEST_CASE("clean is idempotent") {
    const char* samples[] = {
        "He ran.\n\n  37  \nShe hid.",
        "See http://x.y/z now",
        "a\r\n\r\nb\n\n\n42\n\nc\n",
        "",
        "\n\n\n",
        "unicode: caf\xc3\xa9 na\xc3\xafve \xe2\x80\x94 dash",
    };
    for (const char* s : samples) {
        std::string once = clean(s);
        CHECK(clean(once) == once);
    }
}

TEST_CASE("clean rejects oversized input") {
    CleaningConfig rules;
    rules.max_bytes = 8;
    CHECK_THROWS_AS(clean("123456789", rules), OversizedInputError);
}

TEST_CASE("segment basic sentence") {
    Document doc = segment("Harry kicked Ron.");
    REQUIRE(doc.sentences.size() == 1);
    REQUIRE(doc.tokens.size() == 4);
    CHECK(doc.tokens[0].surface == "Harry");
    CHECK(doc.tokens[1].surface == "kicked");
    CHECK(doc.tokens[2].surface == "Ron");
    CHECK(doc.tokens[3].surface == ".");
    CHECK(doc.tokens[0].is_capitalized);
    CHECK_FALSE(doc.tokens[1].is_capitalized);
}

TEST_CASE("segment empty text") {
    Document doc = segment("");
    CHECK(doc.sentences.empty());
    CHECK(doc.tokens.empty());
}

TEST_CASE("abbreviations do not split sentences") {
    Document doc = segment("Mr. Sawyer left. He wept.");
    REQUIRE(doc.sentences.size() == 2);
    CHECK(doc.slice(doc.sentences[0].start, doc.sentences[0].end) == "Mr. Sawyer left.");
    CHECK(doc.slice(doc.sentences[1].start, doc.sentences[1].end) == "He wept.");
}

TEST_CASE("question and exclamation marks end sentences") {
    Document doc = segment("Who goes there? Nobody answered! Silence fell.");
    CHECK(doc.sentences.size() == 3);
}

TEST_CASE("token spans round-trip the text") {
    std::string text = clean("Mr. Sawyer left home.   \"Not again,\" said Tom's aunt!\nShe wept.");
    Document doc = segment(text);
    // every surface equals its slice
    for (const TokenSpan& t : doc.tokens) {
        CHECK(doc.slice(t.start, t.end) == t.surface);
        CHECK(t.start < t.end);
    }
    // spans are sorted, non-overlapping, gaps are whitespace only
    std::u32string recon = doc.text;
    for (size_t i = 1; i < doc.tokens.size(); ++i)
        CHECK(doc.tokens[i - 1].end <= doc.tokens[i].start);
    size_t pos = 0;
    std::string rebuilt;
    for (const TokenSpan& t : doc.tokens) {
        rebuilt += doc.slice(pos, t.start);  // separator
        rebuilt += t.surface;
        pos = t.end;
    }
    rebuilt += doc.slice(pos, doc.text.size());
    CHECK(rebuilt == text);
}

TEST_CASE("tokens nest inside exactly one sentence") {
    Document doc = segment("One two. Three four five. Six!");
    for (const TokenSpan& t : doc.tokens) {
        const SentenceSpan& s = doc.sentences[t.sentence_index];
        CHECK(t.start >= s.start);
        CHECK(t.end <= s.end);
    }
    for (size_t i = 0; i < doc.sentences.size(); ++i)
        CHECK(doc.sentences[i].index == static_cast<int>(i));
}

TEST_CASE("segmentation is deterministic") {
    std::string text = "Anna met Bob. They argued; he left. \"Why?\" she asked.";
    Document a = segment(text);
    Document b = segment(text);
    REQUIRE(a.tokens.size() == b.tokens.size());
    for (size_t i = 0; i < a.tokens.size(); ++i) {
        CHECK(a.tokens[i].start == b.tokens[i].start);
        CHECK(a.tokens[i].end == b.tokens[i].end);
    }
}

TEST_CASE("offsets are scalar values, not bytes") {
    Document doc = segment("caf\xc3\xa9 closed.");  // "café closed."
    REQUIRE(doc.tokens.size() >= 2);
    CHECK(doc.tokens[0].surface == "caf\xc3\xa9");
    CHECK(doc.tokens[0].end - doc.tokens[0].start == 4);  // 4 scalars
    CHECK(doc.tokens[1].start == 5);
}

TEST_CASE("corpus_stats counts alphabetic tokens") {
    Document doc = segment("Harry kicked Ron.");
    CorpusStats st = corpus_stats(doc);
    CHECK(st.word_count == 3);
    CHECK(st.sentence_count == 1);

    CHECK(corpus_stats(segment("")).word_count == 0);
    CHECK(corpus_stats(segment("1 2 33 .")).word_count == 0);
}
