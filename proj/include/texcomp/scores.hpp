#pragma once

#include "texcomp/lexical_diversity.hpp"
#include "texcomp/readability.hpp"
#include "texcomp/segmentation.hpp"

namespace texcomp {

// All per-document scores, lexical diversity and readability together.
struct ComplexityScores {
  double yules_k = 0.0;
  double maas_a2 = 0.0;
  double tcld = 0.0;
  double ttr = 0.0;
  double lix = 0.0;
  double rix = 0.0;
  double tcr = 0.0;

  bool operator==(const ComplexityScores&) const = default;
};

inline ComplexityScores compute_scores(const TextStatistics& stats,
                                       const MaasConfig& maas = {}) {
  const LexicalDiversityScores ld = lexical_diversity(stats, maas);
  const ReadabilityScores rd = readability(stats);
  return {ld.yules_k, ld.maas_a2, ld.tcld, ld.ttr, rd.lix, rd.rix, rd.tcr};
}

}  // namespace texcomp
