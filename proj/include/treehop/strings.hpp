#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace treehop {

/// Strips leading/trailing ASCII whitespace.
std::string trim(std::string_view text);

/// Trims and collapses internal whitespace runs to single spaces. This is the
/// normalization used when deduplicating planned sub-queries.
std::string collapse_whitespace(std::string_view text);

/// Splits on ASCII whitespace, dropping empty pieces.
std::vector<std::string> split_whitespace(std::string_view text);

/// True if `text` starts with `prefix` ignoring ASCII case.
bool istarts_with(std::string_view text, std::string_view prefix);

/// Byte offset of the first case-insensitive occurrence of `needle`
/// (ASCII folding), or npos.
std::size_t ifind(std::string_view text, std::string_view needle);

/// Splits into lines on '\n', stripping a trailing '\r' from each line.
std::vector<std::string> split_lines(std::string_view text);

// UTF-8 aware classification/folding. Coverage: ASCII, Latin-1 supplement and
// Latin Extended-A for lowercasing; common Unicode whitespace and punctuation
// blocks. Unknown codepoints pass through as word characters.
bool is_space_codepoint(char32_t cp);
bool is_punct_codepoint(char32_t cp);
char32_t lower_codepoint(char32_t cp);

/// Lowercases a UTF-8 string (see coverage note above).
std::string lowercase_utf8(std::string_view text);

/// Shared lexical tokenizer: lowercase, remove punctuation codepoints, split
/// on whitespace. Used by both the retrieval index and the QA metrics.
std::vector<std::string> lexical_tokens(std::string_view text);

}  // namespace treehop
