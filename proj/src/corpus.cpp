#include "storyarc/corpus.hpp"

#include <algorithm>

#include "storyarc/utf8.hpp"

namespace storyarc {

namespace {

bool is_page_number_line(const std::u32string& line) {
    size_t a = 0, b = line.size();
    while (a < b && utf8::is_space(line[a])) ++a;
    while (b > a && utf8::is_space(line[b - 1])) --b;
    if (a == b) return false;
    bool saw_digit = false;
    bool digits_done = false;
    for (size_t i = a; i < b; ++i) {
        char32_t c = line[i];
        if (utf8::is_ascii_digit(c)) {
            if (digits_done) return false;  // digits must be one contiguous run
            saw_digit = true;
        } else if (c == U'-' || c == U'.' || c == U' ') {
            if (saw_digit) digits_done = true;
        } else {
            return false;
        }
    }
    return saw_digit;
}

bool is_scheme_char(char32_t c) {
    return utf8::is_ascii_alpha(c) || utf8::is_ascii_digit(c) || c == U'+' || c == U'-' ||
           c == U'.';
}

void remove_urls(std::u32string& text) {
    // scheme://non-space runs
    std::u32string out;
    out.reserve(text.size());
    size_t i = 0;
    while (i < text.size()) {
        if (text[i] == U':' && i + 2 < text.size() && text[i + 1] == U'/' && text[i + 2] == U'/') {
            // scan scheme backwards in `out`
            size_t s = out.size();
            while (s > 0 && is_scheme_char(out[s - 1])) --s;
            if (s < out.size()) {
                out.resize(s);
                i += 3;
                while (i < text.size() && !utf8::is_space(text[i])) ++i;
                continue;
            }
        }
        out.push_back(text[i]);
        ++i;
    }
    // www.-prefixed tokens
    std::u32string out2;
    out2.reserve(out.size());
    i = 0;
    const std::u32string www = U"www.";
    while (i < out.size()) {
        bool at_token_start = (i == 0) || utf8::is_space(out[i - 1]);
        if (at_token_start && out.compare(i, www.size(), www) == 0) {
            while (i < out.size() && !utf8::is_space(out[i])) ++i;
            continue;
        }
        out2.push_back(out[i]);
        ++i;
    }
    text = std::move(out2);
}

}  // namespace

std::string clean(const std::string& raw_text, const CleaningConfig& rules) {
    if (raw_text.size() > rules.max_bytes) {
        throw OversizedInputError("input exceeds max_bytes (" + std::to_string(raw_text.size()) +
                                  " > " + std::to_string(rules.max_bytes) + ")");
    }
    std::u32string text = utf8::decode(raw_text);

    if (rules.strip_nonprintable) {
        std::u32string kept;
        kept.reserve(text.size());
        for (char32_t c : text) {
            if (c == U'\r') continue;
            if (c == U'\t') {
                kept.push_back(U' ');
                continue;
            }
            if (c == U'\n' || c >= 0x20) {
                if (c == 0x7f || (c >= 0x80 && c <= 0x9f) || c == 0xfeff) continue;
                kept.push_back(c);
            }
        }
        text = std::move(kept);
    }

    if (rules.remove_urls) remove_urls(text);

    // line-level pass: drop page-number lines, then collapse blank runs
    std::vector<std::u32string> lines;
    {
        std::u32string cur;
        for (char32_t c : text) {
            if (c == U'\n') {
                lines.push_back(std::move(cur));
                cur.clear();
            } else {
                cur.push_back(c);
            }
        }
        lines.push_back(std::move(cur));
    }
    if (rules.remove_page_numbers) {
        std::vector<std::u32string> kept;
        kept.reserve(lines.size());
        for (auto& l : lines)
            if (!is_page_number_line(l)) kept.push_back(std::move(l));
        lines = std::move(kept);
    }

    std::u32string out;
    if (rules.collapse_blank_lines) {
        auto is_blank = [](const std::u32string& l) {
            return std::all_of(l.begin(), l.end(), utf8::is_space);
        };
        // strip leading/trailing blank lines, collapse interior runs
        size_t first = 0, last = lines.size();
        while (first < last && is_blank(lines[first])) ++first;
        while (last > first && is_blank(lines[last - 1])) --last;
        bool first_line = true;
        for (size_t i = first; i < last; ++i) {
            if (is_blank(lines[i])) continue;
            if (!first_line) out.push_back(U'\n');
            out += lines[i];
            first_line = false;
        }
        // keep a single trailing newline when the input body had one
        if (!out.empty() && !text.empty() && text.back() == U'\n') out.push_back(U'\n');
    } else {
        for (size_t i = 0; i < lines.size(); ++i) {
            if (i) out.push_back(U'\n');
            out += lines[i];
        }
    }

    return utf8::encode(out);
}

const std::set<std::string>& default_abbreviations() {
    static const std::set<std::string> abbrevs = {
        "Mr",   "Mrs",  "Ms",   "Dr",   "St",  "Prof", "Sr",   "Jr",  "Capt", "Col",
        "Gen",  "Lt",   "Sgt",  "Rev",  "Hon", "Fr",   "Messrs", "Mme", "Mlle", "Esq",
        "vs",   "etc",  "e.g",  "i.e",  "cf",  "al",   "Inc",  "Ltd", "Co",   "Corp",
        "No",   "no",   "pp",   "p",    "vol", "ch",   "fig",  "approx"};
    return abbrevs;
}

std::string Document::slice(std::size_t start, std::size_t end) const {
    if (start > text.size()) start = text.size();
    if (end > text.size()) end = text.size();
    if (start >= end) return {};
    return utf8::encode(std::u32string_view(text).substr(start, end - start));
}

namespace {

bool is_sentence_terminal(char32_t c) { return c == U'.' || c == U'!' || c == U'?'; }

bool is_closing_quote(char32_t c) {
    return c == U'"' || c == U'\'' || c == 0x2019 || c == 0x201d || c == U')' || c == U']';
}

// surface of the word immediately before position `i` (exclusive), letters only
std::u32string word_before(const std::u32string& t, size_t i) {
    size_t e = i;
    size_t s = e;
    while (s > 0 && utf8::is_word_char(t[s - 1])) --s;
    return t.substr(s, e - s);
}

}  // namespace

Document segment(const std::string& clean_text, const std::string& doc_id,
                 const std::set<std::string>& extra_abbreviations) {
    Document doc;
    doc.doc_id = doc_id;
    doc.clean_text = clean_text;
    doc.text = utf8::decode(clean_text);
    const std::u32string& t = doc.text;

    std::set<std::string> abbrevs = default_abbreviations();
    abbrevs.insert(extra_abbreviations.begin(), extra_abbreviations.end());

    // sentence boundaries: terminal punctuation followed by whitespace + capital,
    // unless the preceding word is an abbreviation or a single initial
    std::vector<size_t> ends;  // exclusive end of each sentence (after terminal + quotes)
    size_t i = 0;
    while (i < t.size()) {
        if (is_sentence_terminal(t[i])) {
            size_t j = i + 1;
            while (j < t.size() && is_sentence_terminal(t[j])) ++j;  // "..." "?!"
            size_t after_punct = j;
            while (after_punct < t.size() && is_closing_quote(t[after_punct])) ++after_punct;
            size_t k = after_punct;
            bool has_ws = false;
            while (k < t.size() && utf8::is_space(t[k])) {
                has_ws = true;
                ++k;
            }
            bool boundary = false;
            if (k >= t.size()) {
                boundary = true;  // end of text closes the sentence
            } else if (has_ws) {
                size_t m = k;
                while (m < t.size() && (t[m] == U'"' || t[m] == U'\'' || t[m] == 0x2018 ||
                                        t[m] == 0x201c || t[m] == U'(' || t[m] == U'['))
                    ++m;
                if (m < t.size() && utf8::is_upper(t[m])) boundary = true;
            }
            if (boundary && t[i] == U'.') {
                std::u32string w = word_before(t, i);
                std::string w8 = utf8::encode(w);
                if (abbrevs.count(w8)) boundary = false;
                // single capital initial, "J."
                if (w.size() == 1 && utf8::is_upper(w[0])) boundary = false;
            }
            if (boundary) {
                ends.push_back(after_punct);
                i = after_punct;
                continue;
            }
            i = j;
            continue;
        }
        ++i;
    }
    if (ends.empty() || ends.back() < t.size()) {
        // trailing material without terminal punctuation forms a final sentence
        size_t s = ends.empty() ? 0 : ends.back();
        bool any = false;
        for (size_t k = s; k < t.size(); ++k)
            if (!utf8::is_space(t[k])) {
                any = true;
                break;
            }
        if (any) ends.push_back(t.size());
    }

    size_t start = 0;
    for (size_t e : ends) {
        while (start < e && utf8::is_space(t[start])) ++start;
        size_t end = e;
        while (end > start && utf8::is_space(t[end - 1])) --end;
        if (end > start) {
            SentenceSpan s;
            s.start = start;
            s.end = end;
            s.index = static_cast<int>(doc.sentences.size());
            doc.sentences.push_back(s);
        }
        start = e;
    }

    // tokenize: word runs (letters/digits, apostrophes inside), punctuation as
    // single-char tokens
    doc.sentence_first_token.assign(doc.sentences.size(), 0);
    doc.sentence_token_count.assign(doc.sentences.size(), 0);
    for (const SentenceSpan& sent : doc.sentences) {
        doc.sentence_first_token[sent.index] = static_cast<int>(doc.tokens.size());
        size_t p = sent.start;
        while (p < sent.end) {
            if (utf8::is_space(t[p])) {
                ++p;
                continue;
            }
            TokenSpan tok;
            tok.start = p;
            tok.sentence_index = sent.index;
            if (utf8::is_word_char(t[p])) {
                size_t q = p + 1;
                while (q < sent.end) {
                    if (utf8::is_word_char(t[q])) {
                        ++q;
                    } else if ((t[q] == U'\'' || t[q] == 0x2019) && q + 1 < sent.end &&
                               utf8::is_word_char(t[q + 1])) {
                        q += 2;
                    } else {
                        break;
                    }
                }
                tok.end = q;
            } else {
                tok.end = p + 1;
            }
            std::u32string surf = t.substr(tok.start, tok.end - tok.start);
            tok.surface = utf8::encode(surf);
            std::u32string low = surf;
            for (auto& c : low) c = utf8::to_lower(c);
            tok.lowercase = utf8::encode(low);
            tok.is_capitalized = !surf.empty() && utf8::is_upper(surf[0]);
            doc.tokens.push_back(std::move(tok));
            p = doc.tokens.back().end;
        }
        doc.sentence_token_count[sent.index] =
            static_cast<int>(doc.tokens.size()) - doc.sentence_first_token[sent.index];
    }

    return doc;
}

CorpusStats corpus_stats(const Document& doc) {
    CorpusStats st;
    st.sentence_count = doc.sentences.size();
    for (const TokenSpan& tok : doc.tokens) {
        if (!tok.surface.empty()) {
            char32_t c0 = utf8::decode(tok.surface)[0];
            if (utf8::is_ascii_alpha(c0) || c0 > 0x7f) ++st.word_count;
        }
    }
    return st;
}

}  // namespace storyarc
