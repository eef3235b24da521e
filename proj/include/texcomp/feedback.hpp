#pragma once

// Threshold profiles, categorical feedback and percentile calibration.
//
// Orientation of the composite scores:
//   TCLD below its band -> highly diverse vocabulary; above -> overly simple.
//   TCR below its band  -> low complexity;           above -> high complexity.
// Verdicts use strict comparisons, so a score equal to a bound is in range.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "texcomp/error.hpp"
#include "texcomp/scores.hpp"

namespace texcomp {

enum class Verdict { kBelowMin, kWithinRange, kAboveMax };

enum class MessageCode {
  kLdOverlySimpleVocabulary,
  kLdHighlyDiverseVocabulary,
  kReadabilityLowComplexity,
  kReadabilityHighComplexity,
};

enum class ProfileSource { kDefault, kCalibrated, kManual };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kBelowMin: return "below_min";
    case Verdict::kWithinRange: return "within_range";
    case Verdict::kAboveMax: return "above_max";
  }
  return "within_range";
}

inline std::string_view to_string(MessageCode m) {
  switch (m) {
    case MessageCode::kLdOverlySimpleVocabulary: return "LD_OVERLY_SIMPLE_VOCABULARY";
    case MessageCode::kLdHighlyDiverseVocabulary: return "LD_HIGHLY_DIVERSE_VOCABULARY";
    case MessageCode::kReadabilityLowComplexity: return "READABILITY_LOW_COMPLEXITY";
    case MessageCode::kReadabilityHighComplexity: return "READABILITY_HIGH_COMPLEXITY";
  }
  return "";
}

inline std::string_view to_string(ProfileSource s) {
  switch (s) {
    case ProfileSource::kDefault: return "default";
    case ProfileSource::kCalibrated: return "calibrated";
    case ProfileSource::kManual: return "manual";
  }
  return "default";
}

inline std::optional<Verdict> verdict_from_string(std::string_view s) {
  for (auto v : {Verdict::kBelowMin, Verdict::kWithinRange, Verdict::kAboveMax}) {
    if (to_string(v) == s) return v;
  }
  return std::nullopt;
}

inline std::optional<ProfileSource> profile_source_from_string(std::string_view s) {
  for (auto v : {ProfileSource::kDefault, ProfileSource::kCalibrated,
                 ProfileSource::kManual}) {
    if (to_string(v) == s) return v;
  }
  return std::nullopt;
}

struct CalibrationMeta {
  std::size_t training_size = 0;
  double p_low = 5.0;
  double p_high = 95.0;

  bool operator==(const CalibrationMeta&) const = default;
};

struct ThresholdProfile {
  double tcld_min = 150.0;
  double tcld_max = 250.0;
  double tcr_min = 40.0;
  double tcr_max = 80.0;
  ProfileSource source = ProfileSource::kDefault;
  std::optional<CalibrationMeta> calibration_meta;

  bool operator==(const ThresholdProfile&) const = default;

  void validate() const {
    if (!std::isfinite(tcld_min) || !std::isfinite(tcld_max) ||
        !std::isfinite(tcr_min) || !std::isfinite(tcr_max)) {
      throw Error(ErrorCode::kInvalidProfile, "thresholds must be finite");
    }
    if (tcld_min > tcld_max) {
      throw Error(ErrorCode::kInvalidProfile, "tcld_min exceeds tcld_max");
    }
    if (tcr_min > tcr_max) {
      throw Error(ErrorCode::kInvalidProfile, "tcr_min exceeds tcr_max");
    }
  }
};

// Uncalibrated-mode thresholds.
inline ThresholdProfile default_thresholds() { return ThresholdProfile{}; }

struct FeedbackReport {
  Verdict tcld_verdict = Verdict::kWithinRange;
  Verdict tcr_verdict = Verdict::kWithinRange;
  std::vector<MessageCode> messages;
  // Set when the text is too short for lexical diversity to be trusted.
  bool reliability_flag = false;
  // Echoed for machine output only.
  double tcld = 0.0;
  double tcr = 0.0;

  bool operator==(const FeedbackReport&) const = default;
};

inline Verdict classify(double score, double min, double max) {
  if (score > max) return Verdict::kAboveMax;
  if (score < min) return Verdict::kBelowMin;
  return Verdict::kWithinRange;
}

inline FeedbackReport evaluate(const ComplexityScores& scores,
                               const ThresholdProfile& profile,
                               bool below_min_length = false) {
  profile.validate();
  FeedbackReport report;
  report.tcld = scores.tcld;
  report.tcr = scores.tcr;
  report.reliability_flag = below_min_length;
  report.tcld_verdict = classify(scores.tcld, profile.tcld_min, profile.tcld_max);
  report.tcr_verdict = classify(scores.tcr, profile.tcr_min, profile.tcr_max);

  if (report.tcld_verdict == Verdict::kAboveMax) {
    report.messages.push_back(MessageCode::kLdOverlySimpleVocabulary);
  } else if (report.tcld_verdict == Verdict::kBelowMin) {
    report.messages.push_back(MessageCode::kLdHighlyDiverseVocabulary);
  }
  if (report.tcr_verdict == Verdict::kAboveMax) {
    report.messages.push_back(MessageCode::kReadabilityHighComplexity);
  } else if (report.tcr_verdict == Verdict::kBelowMin) {
    report.messages.push_back(MessageCode::kReadabilityLowComplexity);
  }
  return report;
}

// Percentile of an ascending sample by linear interpolation between the
// closest ranks at zero-based position (n - 1) * p / 100.
inline double interpolated_percentile(std::span<const double> sorted, double p) {
  if (sorted.empty()) {
    throw Error(ErrorCode::kEmptyTrainingSet, "percentile of an empty sample");
  }
  const double position = static_cast<double>(sorted.size() - 1) * p / 100.0;
  const auto lower = static_cast<std::size_t>(std::floor(position));
  const std::size_t upper = std::min(lower + 1, sorted.size() - 1);
  const double fraction = position - static_cast<double>(lower);
  if (fraction == 0.0 || lower == upper) return sorted[lower];
  return sorted[lower] + fraction * (sorted[upper] - sorted[lower]);
}

struct ScorePair {
  double tcld = 0.0;
  double tcr = 0.0;
};

// Thresholds from the p_low / p_high percentiles of a peer training sample.
inline ThresholdProfile calibrate(std::span<const ScorePair> training,
                                  double p_low = 5.0, double p_high = 95.0) {
  if (training.empty()) {
    throw Error(ErrorCode::kEmptyTrainingSet, "calibration needs at least one document");
  }
  if (!(p_low >= 0.0 && p_low < p_high && p_high <= 100.0)) {
    throw Error(ErrorCode::kInvalidPercentilePair,
                "percentiles must satisfy 0 <= p_low < p_high <= 100");
  }
  std::vector<double> tcld_values;
  std::vector<double> tcr_values;
  tcld_values.reserve(training.size());
  tcr_values.reserve(training.size());
  for (const ScorePair& s : training) {
    tcld_values.push_back(s.tcld);
    tcr_values.push_back(s.tcr);
  }
  std::sort(tcld_values.begin(), tcld_values.end());
  std::sort(tcr_values.begin(), tcr_values.end());

  ThresholdProfile profile;
  profile.tcld_min = interpolated_percentile(tcld_values, p_low);
  profile.tcld_max = interpolated_percentile(tcld_values, p_high);
  profile.tcr_min = interpolated_percentile(tcr_values, p_low);
  profile.tcr_max = interpolated_percentile(tcr_values, p_high);
  profile.source = ProfileSource::kCalibrated;
  profile.calibration_meta = CalibrationMeta{training.size(), p_low, p_high};
  return profile;
}

}  // namespace texcomp
