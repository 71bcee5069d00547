#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace storyarc::utf8 {

// Decodes UTF-8 into Unicode scalar values. Invalid bytes are dropped.
std::u32string decode(std::string_view bytes);

std::string encode(std::u32string_view cps);
std::string encode(char32_t cp);

inline bool is_ascii_alpha(char32_t c) {
    return (c >= U'a' && c <= U'z') || (c >= U'A' && c <= U'Z');
}

inline bool is_ascii_digit(char32_t c) { return c >= U'0' && c <= U'9'; }

// English-only pipeline: treat non-ASCII scalars as letters so accented
// names stay inside word tokens.
inline bool is_word_char(char32_t c) {
    return is_ascii_alpha(c) || is_ascii_digit(c) || c > 0x7f;
}

inline bool is_space(char32_t c) {
    return c == U' ' || c == U'\t' || c == U'\n' || c == U'\r' || c == U'\f' || c == U'\v';
}

inline char32_t to_lower(char32_t c) {
    return (c >= U'A' && c <= U'Z') ? c + 32 : c;
}

inline bool is_upper(char32_t c) { return c >= U'A' && c <= U'Z'; }

}  // namespace storyarc::utf8
