#pragma once

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace storyarc {

struct CleaningConfig {
    std::size_t max_bytes = 256ull * 1024 * 1024;
    bool remove_page_numbers = true;
    bool remove_urls = true;
    bool strip_nonprintable = true;
    bool collapse_blank_lines = true;
};

struct OversizedInputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// All offsets below are Unicode scalar-value indices into Document::text,
// not byte offsets.
struct TokenSpan {
    std::size_t start = 0;
    std::size_t end = 0;  // exclusive
    std::string surface;
    std::string lowercase;
    bool is_capitalized = false;
    int sentence_index = 0;
};

struct SentenceSpan {
    std::size_t start = 0;
    std::size_t end = 0;
    int index = 0;
};

struct Document {
    std::string doc_id;
    std::string raw_text;
    std::string clean_text;   // UTF-8 encoding of `text`
    std::u32string text;      // canonical coordinate system
    std::vector<SentenceSpan> sentences;
    std::vector<TokenSpan> tokens;
    // token indices of the first token of each sentence, parallel to `sentences`
    std::vector<int> sentence_first_token;
    std::vector<int> sentence_token_count;

    std::string slice(std::size_t start, std::size_t end) const;
};

struct CorpusStats {
    std::size_t word_count = 0;
    std::size_t sentence_count = 0;
};

std::string clean(const std::string& raw_text, const CleaningConfig& rules = {});

// Default abbreviation stop-list plus user additions from `extra_abbreviations`.
Document segment(const std::string& clean_text, const std::string& doc_id = "doc",
                 const std::set<std::string>& extra_abbreviations = {});

CorpusStats corpus_stats(const Document& doc);

const std::set<std::string>& default_abbreviations();

}  // namespace storyarc
