#pragma once

// LIX and RIX readability indices. Both are computed over the whole text;
// higher values mean more complex text.

#include "texcomp/error.hpp"
#include "texcomp/segmentation.hpp"

namespace texcomp {

struct ReadabilityScores {
  double lix = 0.0;
  double rix = 0.0;
  double tcr = 0.0;
};

// LIX = W/S + 100 * LW/W, where W is the token count.
inline double lix(const TextStatistics& stats) {
  if (stats.token_count == 0) {
    throw Error(ErrorCode::kZeroTokens, "LIX of an empty text");
  }
  if (stats.sentence_count == 0) {
    throw Error(ErrorCode::kZeroSentences, "LIX of a text without sentences");
  }
  const auto words = static_cast<double>(stats.token_count);
  const auto sentences = static_cast<double>(stats.sentence_count);
  const auto long_words = static_cast<double>(stats.long_word_count);
  return words / sentences + 100.0 * long_words / words;
}

// RIX = LW/S
inline double rix(const TextStatistics& stats) {
  if (stats.sentence_count == 0) {
    throw Error(ErrorCode::kZeroSentences, "RIX of a text without sentences");
  }
  return static_cast<double>(stats.long_word_count) /
         static_cast<double>(stats.sentence_count);
}

// Composite readability score, (10 * RIX + LIX) / 2.
constexpr double tcr(double lix, double rix) { return (10.0 * rix + lix) / 2.0; }

inline ReadabilityScores readability(const TextStatistics& stats) {
  ReadabilityScores out;
  out.lix = lix(stats);
  out.rix = rix(stats);
  out.tcr = tcr(out.lix, out.rix);
  return out;
}

}  // namespace texcomp
