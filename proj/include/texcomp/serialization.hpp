#pragma once

// JSON and CSV encodings of profiles, document results and corpus summaries.
// Schemas live in schemas/ and are versioned by kReportSchemaVersion and
// kProfileFormatVersion.

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "texcomp/batch.hpp"
#include "texcomp/corpus.hpp"
#include "texcomp/error.hpp"
#include "texcomp/feedback.hpp"

namespace texcomp {

inline constexpr int kReportSchemaVersion = 1;
inline constexpr int kProfileFormatVersion = 1;

using nlohmann::json;

inline void to_json(json& j, const TextStatistics& s) {
  json spectrum = json::array();
  for (const auto& [occurrences, types] : s.frequency_spectrum) {
    spectrum.push_back({{"occurrences", occurrences}, {"types", types}});
  }
  j = json{{"tokens", s.token_count},
           {"types", s.type_count},
           {"sentences", s.sentence_count},
           {"long_words", s.long_word_count},
           {"spectrum", std::move(spectrum)}};
}

inline void to_json(json& j, const ComplexityScores& s) {
  j = json{{"yules_k", s.yules_k}, {"maas_a2", s.maas_a2}, {"tcld", s.tcld},
           {"ttr", s.ttr},         {"lix", s.lix},         {"rix", s.rix},
           {"tcr", s.tcr}};
}

inline void to_json(json& j, const FeedbackReport& f) {
  json messages = json::array();
  for (MessageCode m : f.messages) messages.push_back(to_string(m));
  j = json{{"tcld_verdict", to_string(f.tcld_verdict)},
           {"tcr_verdict", to_string(f.tcr_verdict)},
           {"messages", std::move(messages)},
           {"reliability_flag", f.reliability_flag},
           {"tcld", f.tcld},
           {"tcr", f.tcr}};
}

inline void to_json(json& j, const DocumentResult& d) {
  j = json{{"id", d.id},
           {"subcorpus", d.subcorpus},
           {"statistics", d.statistics},
           {"scores", d.scores},
           {"feedback", d.feedback}};
}

inline void to_json(json& j, const SubcorpusRow& r) {
  j = json{{"subcorpus", r.label},         {"count", r.count},
           {"mean_tcld", r.mean_tcld},     {"mean_tcr", r.mean_tcr},
           {"tcld_low_pct", r.tcld_low_pct}, {"tcld_high_pct", r.tcld_high_pct},
           {"tcr_low_pct", r.tcr_low_pct}, {"tcr_high_pct", r.tcr_high_pct}};
}

inline void to_json(json& j, const CorpusSummary& s) {
  j = json{{"rows", s.rows}, {"overall", s.overall}};
}

inline void to_json(json& j, const TrendViolation& v) {
  j = json{{"measure", to_string(v.measure)},
           {"from", v.from},
           {"to", v.to},
           {"from_value", v.from_value},
           {"to_value", v.to_value}};
}

inline void to_json(json& j, const DocumentFailure& f) {
  j = json{{"id", f.id},
           {"subcorpus", f.subcorpus},
           {"path", f.path},
           {"error", to_string(f.code)},
           {"message", f.message}};
}

inline json profile_to_json(const ThresholdProfile& p) {
  json meta = nullptr;
  if (p.calibration_meta) {
    meta = json{{"n", p.calibration_meta->training_size},
                {"p_low", p.calibration_meta->p_low},
                {"p_high", p.calibration_meta->p_high}};
  }
  return json{{"version", kProfileFormatVersion},
              {"tcld_min", p.tcld_min},
              {"tcld_max", p.tcld_max},
              {"tcr_min", p.tcr_min},
              {"tcr_max", p.tcr_max},
              {"source", to_string(p.source)},
              {"calibration_meta", std::move(meta)}};
}

inline ThresholdProfile profile_from_json(const json& j) {
  const auto fail = [](const std::string& what) {
    return Error(ErrorCode::kInvalidProfile, "profile: " + what);
  };
  if (!j.is_object()) throw fail("not a JSON object");
  const auto number = [&](const char* key) {
    const auto it = j.find(key);
    if (it == j.end() || !it->is_number()) throw fail(std::string(key) + " must be a number");
    return it->get<double>();
  };
  const auto version = j.find("version");
  if (version == j.end() || !version->is_number_integer() ||
      version->get<int>() != kProfileFormatVersion) {
    throw fail("unsupported version");
  }
  ThresholdProfile p;
  p.tcld_min = number("tcld_min");
  p.tcld_max = number("tcld_max");
  p.tcr_min = number("tcr_min");
  p.tcr_max = number("tcr_max");
  const auto source = j.find("source");
  if (source == j.end() || !source->is_string()) throw fail("source must be a string");
  const auto parsed = profile_source_from_string(source->get<std::string>());
  if (!parsed) throw fail("unknown source " + source->get<std::string>());
  p.source = *parsed;
  const auto meta = j.find("calibration_meta");
  if (meta != j.end() && !meta->is_null()) {
    if (!meta->is_object()) throw fail("calibration_meta must be an object");
    const auto n = meta->find("n");
    const auto lo = meta->find("p_low");
    const auto hi = meta->find("p_high");
    if (n == meta->end() || !n->is_number_unsigned() || lo == meta->end() ||
        !lo->is_number() || hi == meta->end() || !hi->is_number()) {
      throw fail("calibration_meta needs n, p_low and p_high");
    }
    p.calibration_meta =
        CalibrationMeta{n->get<std::size_t>(), lo->get<double>(), hi->get<double>()};
  }
  p.validate();
  return p;
}

inline std::string serialize_profile(const ThresholdProfile& p) {
  return profile_to_json(p).dump(2) + "\n";
}

inline ThresholdProfile parse_profile(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kInvalidProfile, std::string("profile: ") + e.what());
  }
  return profile_from_json(j);
}

// Display rounding for reports: one decimal place.
inline std::string format_one_decimal(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.1f", value);
  return buf;
}

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline void write_csv_row(std::ostream& out, const SubcorpusRow& r) {
  out << csv_field(r.label) << ',' << r.count << ',' << format_one_decimal(r.mean_tcld)
      << ',' << format_one_decimal(r.mean_tcr) << ',' << format_one_decimal(r.tcld_low_pct)
      << ',' << format_one_decimal(r.tcld_high_pct) << ','
      << format_one_decimal(r.tcr_low_pct) << ',' << format_one_decimal(r.tcr_high_pct)
      << '\n';
}

}  // namespace detail

inline void write_summary_csv(std::ostream& out, const CorpusSummary& summary) {
  out << "subcorpus,count,mean_tcld,mean_tcr,tcld_low_pct,tcld_high_pct,tcr_low_pct,"
         "tcr_high_pct\n";
  for (const SubcorpusRow& r : summary.rows) detail::write_csv_row(out, r);
  detail::write_csv_row(out, summary.overall);
}

inline void write_documents_csv(std::ostream& out,
                                const std::vector<DocumentResult>& documents) {
  out << "id,subcorpus,tokens,tcld,tcr,tcld_verdict,tcr_verdict,reliability_flag\n";
  for (const DocumentResult& d : documents) {
    out << detail::csv_field(d.id) << ',' << detail::csv_field(d.subcorpus) << ','
        << d.statistics.token_count << ',' << format_one_decimal(d.scores.tcld) << ','
        << format_one_decimal(d.scores.tcr) << ',' << to_string(d.feedback.tcld_verdict)
        << ',' << to_string(d.feedback.tcr_verdict) << ','
        << (d.feedback.reliability_flag ? "true" : "false") << '\n';
  }
}

}  // namespace texcomp
