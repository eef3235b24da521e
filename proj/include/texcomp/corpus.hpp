#pragma once

// Per-document analysis and subcorpus aggregation.

#include <algorithm>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "texcomp/error.hpp"
#include "texcomp/feedback.hpp"
#include "texcomp/scores.hpp"
#include "texcomp/segmentation.hpp"

namespace texcomp {

struct AnalysisConfig {
  SegmentationConfig segmentation;
  MaasConfig maas;

  void validate() const {
    segmentation.validate();
    maas.validate();
  }
};

struct DocumentResult {
  std::string id;
  std::string subcorpus;
  TextStatistics statistics;
  ComplexityScores scores;
  FeedbackReport feedback;

  bool operator==(const DocumentResult&) const = default;
};

// Throws DocumentError (kZeroTokens, kInsufficientTokens) tagged with the id.
inline DocumentResult analyze_document(std::string_view text, std::string id,
                                       std::string subcorpus,
                                       const AnalysisConfig& config,
                                       const ThresholdProfile& profile) {
  config.validate();
  DocumentResult result;
  try {
    result.statistics = compute_statistics(text, config.segmentation);
    result.scores = compute_scores(result.statistics, config.maas);
  } catch (const Error& e) {
    throw DocumentError(e.code(), std::move(id), e.what());
  }
  const bool short_text =
      result.statistics.token_count < config.segmentation.min_tokens_for_ld;
  result.feedback = evaluate(result.scores, profile, short_text);
  result.id = std::move(id);
  result.subcorpus = std::move(subcorpus);
  return result;
}

// One row of the corpus summary. Percentages are in [0, 100].
struct SubcorpusRow {
  std::string label;
  std::size_t count = 0;
  double mean_tcld = 0.0;
  double mean_tcr = 0.0;
  std::size_t tcld_low = 0;   // documents with TCLD below_min
  std::size_t tcld_high = 0;  // documents with TCLD above_max
  std::size_t tcr_low = 0;
  std::size_t tcr_high = 0;
  double tcld_low_pct = 0.0;
  double tcld_high_pct = 0.0;
  double tcr_low_pct = 0.0;
  double tcr_high_pct = 0.0;

  bool operator==(const SubcorpusRow&) const = default;
};

struct CorpusSummary {
  std::vector<SubcorpusRow> rows;  // sorted by label
  SubcorpusRow overall;            // document-weighted average row

  const SubcorpusRow* find(std::string_view label) const {
    for (const SubcorpusRow& r : rows) {
      if (r.label == label) return &r;
    }
    return nullptr;
  }
};

// Document-weighted combination of subcorpus rows. Only (count, mean, pct)
// are needed, so rows reconstructed from published tables work as input.
inline SubcorpusRow combine_rows(std::span<const SubcorpusRow> rows,
                                 std::string label = "AVG") {
  SubcorpusRow out;
  out.label = std::move(label);
  double tcld_sum = 0.0, tcr_sum = 0.0;
  double tcld_low = 0.0, tcld_high = 0.0, tcr_low = 0.0, tcr_high = 0.0;
  for (const SubcorpusRow& r : rows) {
    const auto w = static_cast<double>(r.count);
    out.count += r.count;
    tcld_sum += w * r.mean_tcld;
    tcr_sum += w * r.mean_tcr;
    tcld_low += w * r.tcld_low_pct;
    tcld_high += w * r.tcld_high_pct;
    tcr_low += w * r.tcr_low_pct;
    tcr_high += w * r.tcr_high_pct;
    out.tcld_low += r.tcld_low;
    out.tcld_high += r.tcld_high;
    out.tcr_low += r.tcr_low;
    out.tcr_high += r.tcr_high;
  }
  if (out.count == 0) return out;
  const auto total = static_cast<double>(out.count);
  out.mean_tcld = tcld_sum / total;
  out.mean_tcr = tcr_sum / total;
  out.tcld_low_pct = tcld_low / total;
  out.tcld_high_pct = tcld_high / total;
  out.tcr_low_pct = tcr_low / total;
  out.tcr_high_pct = tcr_high / total;
  return out;
}

// Fixes the fold order so summaries do not depend on input order.
inline void sort_results(std::vector<DocumentResult>& results) {
  std::sort(results.begin(), results.end(),
            [](const DocumentResult& a, const DocumentResult& b) {
              return std::tie(a.id, a.subcorpus, a.scores.tcld, a.scores.tcr) <
                     std::tie(b.id, b.subcorpus, b.scores.tcld, b.scores.tcr);
            });
}

inline CorpusSummary summarize(std::vector<DocumentResult> results) {
  if (results.empty()) {
    throw Error(ErrorCode::kEmptyResultSet, "no document results to summarize");
  }
  sort_results(results);

  std::map<std::string, std::vector<const DocumentResult*>> groups;
  for (const DocumentResult& r : results) groups[r.subcorpus].push_back(&r);

  CorpusSummary summary;
  for (const auto& [label, docs] : groups) {
    SubcorpusRow row;
    row.label = label;
    row.count = docs.size();
    double tcld_sum = 0.0, tcr_sum = 0.0;
    for (const DocumentResult* d : docs) {
      tcld_sum += d->scores.tcld;
      tcr_sum += d->scores.tcr;
      row.tcld_low += d->feedback.tcld_verdict == Verdict::kBelowMin;
      row.tcld_high += d->feedback.tcld_verdict == Verdict::kAboveMax;
      row.tcr_low += d->feedback.tcr_verdict == Verdict::kBelowMin;
      row.tcr_high += d->feedback.tcr_verdict == Verdict::kAboveMax;
    }
    const auto n = static_cast<double>(row.count);
    row.mean_tcld = tcld_sum / n;
    row.mean_tcr = tcr_sum / n;
    row.tcld_low_pct = 100.0 * static_cast<double>(row.tcld_low) / n;
    row.tcld_high_pct = 100.0 * static_cast<double>(row.tcld_high) / n;
    row.tcr_low_pct = 100.0 * static_cast<double>(row.tcr_low) / n;
    row.tcr_high_pct = 100.0 * static_cast<double>(row.tcr_high) / n;
    summary.rows.push_back(std::move(row));
  }
  summary.overall = combine_rows(summary.rows);
  return summary;
}

enum class Measure { kTcld, kTcr };

inline std::string_view to_string(Measure m) {
  return m == Measure::kTcld ? "tcld" : "tcr";
}

struct TrendViolation {
  Measure measure = Measure::kTcld;
  std::string from;
  std::string to;
  double from_value = 0.0;
  double to_value = 0.0;

  bool operator==(const TrendViolation&) const = default;
};

// Labels are in ascending skill order. Expected: TCLD non-increasing and TCR
// non-decreasing between adjacent labels; every exception is reported.
inline std::vector<TrendViolation> trend_check(const CorpusSummary& summary,
                                               std::span<const std::string> ordered_labels) {
  std::vector<const SubcorpusRow*> rows;
  for (const std::string& label : ordered_labels) {
    const SubcorpusRow* row = summary.find(label);
    if (row == nullptr) {
      throw Error(ErrorCode::kUnknownLabel, "unknown subcorpus label: " + label);
    }
    rows.push_back(row);
  }
  std::vector<TrendViolation> violations;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const SubcorpusRow& a = *rows[i - 1];
    const SubcorpusRow& b = *rows[i];
    if (b.mean_tcld > a.mean_tcld) {
      violations.push_back({Measure::kTcld, a.label, b.label, a.mean_tcld, b.mean_tcld});
    }
    if (b.mean_tcr < a.mean_tcr) {
      violations.push_back({Measure::kTcr, a.label, b.label, a.mean_tcr, b.mean_tcr});
    }
  }
  return violations;
}

}  // namespace texcomp
