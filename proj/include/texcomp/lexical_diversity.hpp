#pragma once

// Lexical-diversity measures. Lower values of K, a2 and TCLD all mean a more
// varied vocabulary.

#include <cmath>
#include <cstdint>

#include "texcomp/error.hpp"
#include "texcomp/segmentation.hpp"

namespace texcomp {

struct MaasConfig {
  double log_base = 10.0;
  double scale = 1e4;

  void validate() const {
    if (!(log_base > 1.0) || !std::isfinite(log_base)) {
      throw Error(ErrorCode::kInvalidConfig, "Maas log base must be > 1");
    }
    if (!(scale > 0.0) || !std::isfinite(scale)) {
      throw Error(ErrorCode::kInvalidConfig, "Maas scale must be > 0");
    }
  }
};

struct LexicalDiversityScores {
  double yules_k = 0.0;
  double maas_a2 = 0.0;
  double tcld = 0.0;
  double ttr = 0.0;
};

namespace detail {

inline void require_two_tokens(const TextStatistics& stats) {
  if (stats.token_count < 2) {
    throw Error(ErrorCode::kInsufficientTokens,
                "lexical diversity needs at least two tokens");
  }
}

}  // namespace detail

// K = 1e4 * (sum_i i^2 V_i - N) / N^2. The numerator is accumulated in
// integers, so the only rounding happens in the final division.
inline double yules_k(const TextStatistics& stats) {
  detail::require_two_tokens(stats);
  std::uint64_t sum_squares = 0;
  for (const auto& [occurrences, types] : stats.frequency_spectrum) {
    sum_squares += occurrences * occurrences * types;
  }
  const auto n = static_cast<double>(stats.token_count);
  const auto numerator = static_cast<double>(sum_squares - stats.token_count);
  return 1e4 * numerator / (n * n);
}

// a2 = scale * (log N - log V) / (log N)^2
inline double maas_a2(const TextStatistics& stats, const MaasConfig& config = {}) {
  detail::require_two_tokens(stats);
  config.validate();
  const double log_base = std::log(config.log_base);
  const double log_n = std::log(static_cast<double>(stats.token_count)) / log_base;
  const double log_v = std::log(static_cast<double>(stats.type_count)) / log_base;
  return config.scale * (log_n - log_v) / (log_n * log_n);
}

// Type-token ratio. Diagnostic only; never part of TCLD.
inline double type_token_ratio(const TextStatistics& stats) {
  if (stats.token_count == 0) {
    throw Error(ErrorCode::kZeroTokens, "type-token ratio of an empty text");
  }
  return static_cast<double>(stats.type_count) /
         static_cast<double>(stats.token_count);
}

// Composite lexical-diversity score, (2K + a2) / 2.
constexpr double tcld(double yules_k, double maas_a2) {
  return (2.0 * yules_k + maas_a2) / 2.0;
}

inline LexicalDiversityScores lexical_diversity(const TextStatistics& stats,
                                                const MaasConfig& config = {}) {
  LexicalDiversityScores out;
  out.yules_k = yules_k(stats);
  out.maas_a2 = maas_a2(stats, config);
  out.tcld = tcld(out.yules_k, out.maas_a2);
  out.ttr = type_token_ratio(stats);
  return out;
}

}  // namespace texcomp
