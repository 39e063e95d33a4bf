#ifndef SESAM_UTF8_HPP
#define SESAM_UTF8_HPP

#include <cstddef>
#include <string>
#include <string_view>

// Minimal UTF-8 handling for the French/Latin ranges the corpus uses.
// Invalid byte sequences decode to U+FFFD one byte at a time so that
// cleanup passes never get stuck on damaged extraction output.
namespace sesam::utf8 {

inline constexpr char32_t kReplacement = 0xFFFD;

// Decodes the codepoint starting at byte offset i and advances i.
char32_t decode(std::string_view s, std::size_t& i);

void encode(char32_t cp, std::string& out);

std::u32string decode_all(std::string_view s);
std::string encode_all(const std::u32string& s);

bool is_space(char32_t cp);
bool is_digit(char32_t cp);
bool is_alpha(char32_t cp);  // Latin letters incl. accents, OE ligature, dotless i
bool is_greek(char32_t cp);
bool is_upper(char32_t cp);
bool is_lower(char32_t cp);
char32_t to_lower(char32_t cp);

std::string to_lower_copy(std::string_view s);

// Number of codepoints, not bytes.
std::size_t length(std::string_view s);

}  // namespace sesam::utf8

#endif
