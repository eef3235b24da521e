#pragma once

// Tokenization, sentence counting and the per-document count statistics that
// every measure is computed from.
//
// A token is a maximal run of Unicode letters (general category L) or decimal
// digits (Nd). Combining marks continue a token that already started. A single
// apostrophe (U+0027, U+2019) or hyphen (U+002D, U+2010) is kept inside a
// token when a letter or digit follows it directly, so "risk-prone" and "it's"
// are one token each while "'complex" or "a--b" are not joined.
//
// Sentences are delimited by runs of '.', '!' and '?'. Only sentences holding
// at least one token are counted; trailing text without a terminator forms a
// final sentence. There is no abbreviation handling ("Dr. Smith" is two).
//
// Malformed UTF-8 bytes are treated as separators.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <unicode/uchar.h>
#include <unicode/utf8.h>

#include "texcomp/error.hpp"

namespace texcomp {

struct SegmentationConfig {
  // Tokens with at least this many characters are long words (default: >6).
  std::size_t long_word_min_chars = 7;
  // Lexical-diversity scores of shorter texts are flagged unreliable.
  std::size_t min_tokens_for_ld = 100;
  bool case_fold = true;

  void validate() const {
    if (long_word_min_chars < 1) {
      throw Error(ErrorCode::kInvalidConfig, "long_word_min_chars must be >= 1");
    }
    if (min_tokens_for_ld < 1) {
      throw Error(ErrorCode::kInvalidConfig, "min_tokens_for_ld must be >= 1");
    }
  }
};

// Occurrence count i -> number of types occurring exactly i times.
using FrequencySpectrum = std::map<std::uint64_t, std::uint64_t>;

struct TextStatistics {
  std::uint64_t token_count = 0;
  std::uint64_t type_count = 0;
  std::uint64_t sentence_count = 0;
  std::uint64_t long_word_count = 0;
  FrequencySpectrum frequency_spectrum;

  bool operator==(const TextStatistics&) const = default;
};

namespace detail {

inline bool is_sentence_terminator(UChar32 c) {
  return c == '.' || c == '!' || c == '?';
}

inline bool is_connector(UChar32 c) {
  return c == 0x0027 || c == 0x2019 || c == 0x002D || c == 0x2010;
}

// Letter or decimal digit: may start a token.
inline bool is_word_base(UChar32 c) {
  if (c < 0) return false;
  const auto mask = U_GET_GC_MASK(c);
  return (mask & (U_GC_L_MASK | U_GC_ND_MASK)) != 0;
}

inline bool is_mark(UChar32 c) {
  return c >= 0 && (U_GET_GC_MASK(c) & U_GC_M_MASK) != 0;
}

inline std::vector<UChar32> decode_utf8(std::string_view text) {
  std::vector<UChar32> out;
  out.reserve(text.size());
  const auto* bytes = reinterpret_cast<const std::uint8_t*>(text.data());
  const auto length = static_cast<std::int32_t>(text.size());
  std::int32_t i = 0;
  while (i < length) {
    UChar32 c;
    U8_NEXT(bytes, i, length, c);
    out.push_back(c);  // negative for malformed sequences
  }
  return out;
}

inline void append_utf8(std::string& out, UChar32 c) {
  std::uint8_t buf[U8_MAX_LENGTH];
  std::int32_t n = 0;
  U8_APPEND_UNSAFE(buf, n, c);
  out.append(reinterpret_cast<const char*>(buf), static_cast<std::size_t>(n));
}

// Single pass over the code points. Calls on_token(folded text, length in
// scalar values) per token and returns the sentence count.
template <typename TokenSink>
std::uint64_t scan(std::string_view text, bool case_fold, TokenSink&& on_token) {
  const std::vector<UChar32> cps = decode_utf8(text);
  const std::size_t n = cps.size();
  std::uint64_t sentences = 0;
  bool sentence_open = false;
  std::string token;

  std::size_t i = 0;
  while (i < n) {
    const UChar32 c = cps[i];
    if (!is_word_base(c)) {
      if (is_sentence_terminator(c) && sentence_open) {
        ++sentences;
        sentence_open = false;
      }
      ++i;
      continue;
    }
    token.clear();
    std::size_t length = 0;
    while (i < n) {
      UChar32 cur = cps[i];
      if (is_word_base(cur) || is_mark(cur)) {
        ++i;
      } else if (is_connector(cur) && i + 1 < n && is_word_base(cps[i + 1])) {
        ++i;
      } else {
        break;
      }
      if (case_fold) cur = u_foldCase(cur, U_FOLD_CASE_DEFAULT);
      append_utf8(token, cur);
      ++length;
    }
    on_token(std::string_view(token), length);
    sentence_open = true;
  }
  if (sentence_open) ++sentences;
  return sentences;
}

}  // namespace detail

// Number of Unicode scalar values in a UTF-8 string.
inline std::size_t utf8_length(std::string_view s) {
  std::size_t count = 0;
  for (const char ch : s) {
    if ((static_cast<unsigned char>(ch) & 0xC0) != 0x80) ++count;
  }
  return count;
}

inline std::vector<std::string> tokenize(std::string_view text,
                                         const SegmentationConfig& config = {}) {
  std::vector<std::string> tokens;
  detail::scan(text, config.case_fold, [&](std::string_view token, std::size_t) {
    tokens.emplace_back(token);
  });
  return tokens;
}

inline std::uint64_t split_sentences(std::string_view text) {
  return detail::scan(text, false, [](std::string_view, std::size_t) {});
}

// Throws Error(kZeroTokens) when the text has no tokens.
inline TextStatistics compute_statistics(std::string_view text,
                                         const SegmentationConfig& config = {}) {
  config.validate();
  TextStatistics stats;
  std::unordered_map<std::string, std::uint64_t> counts;
  stats.sentence_count =
      detail::scan(text, config.case_fold, [&](std::string_view token, std::size_t length) {
        ++stats.token_count;
        if (length >= config.long_word_min_chars) ++stats.long_word_count;
        ++counts[std::string(token)];
      });
  if (stats.token_count == 0) {
    throw Error(ErrorCode::kZeroTokens, "text contains no tokens");
  }
  stats.type_count = counts.size();
  for (const auto& [type, count] : counts) ++stats.frequency_spectrum[count];
  return stats;
}

}  // namespace texcomp
