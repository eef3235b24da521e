#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "texcomp/texcomp.hpp"

namespace texcomp::cli {
namespace {

struct MeasureOptions {
  std::size_t long_word_min_chars = 7;
  std::size_t min_tokens = 100;
  bool no_case_fold = false;
  double maas_log_base = 10.0;
  double maas_scale = 1e4;
  std::string profile_path;

  AnalysisConfig config() const {
    AnalysisConfig c;
    c.segmentation.long_word_min_chars = long_word_min_chars;
    c.segmentation.min_tokens_for_ld = min_tokens;
    c.segmentation.case_fold = !no_case_fold;
    c.maas.log_base = maas_log_base;
    c.maas.scale = maas_scale;
    return c;
  }
};

void add_measure_options(CLI::App* cmd, MeasureOptions& o, bool with_profile = true) {
  cmd->add_option("--long-word-min-chars", o.long_word_min_chars,
                  "Minimum characters for a long word")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--min-tokens", o.min_tokens,
                  "Texts with fewer tokens get an unreliable lexical-diversity flag")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--no-case-fold", o.no_case_fold, "Keep case distinctions between types");
  cmd->add_option("--maas-log-base", o.maas_log_base, "Logarithm base for Maas a2")
      ->capture_default_str();
  cmd->add_option("--maas-scale", o.maas_scale, "Scale factor for Maas a2")
      ->capture_default_str();
  if (with_profile) {
    cmd->add_option("--profile", o.profile_path,
                    "Threshold profile JSON (default: $TEXCOMP_PROFILE, then built-in)");
  }
}

ThresholdProfile resolve_profile(const MeasureOptions& o, const Context& ctx) {
  std::string path = o.profile_path;
  if (path.empty() && ctx.env_profile && !ctx.env_profile->empty()) path = *ctx.env_profile;
  if (path.empty()) return default_thresholds();
  return parse_profile(read_text_file(path));
}

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

std::string_view describe(Verdict v) {
  switch (v) {
    case Verdict::kBelowMin: return "below range";
    case Verdict::kWithinRange: return "within range";
    case Verdict::kAboveMax: return "above range";
  }
  return "";
}

nlohmann::json report_header(std::string_view kind, const ThresholdProfile& profile) {
  return {{"schema_version", kReportSchemaVersion},
          {"kind", kind},
          {"profile", profile_to_json(profile)}};
}

// Text mode shows verdicts and message codes only, never score values.
void write_document_text(std::ostream& out, const DocumentResult& d) {
  out << "document: " << d.id << '\n'
      << "lexical diversity: " << describe(d.feedback.tcld_verdict) << '\n'
      << "readability: " << describe(d.feedback.tcr_verdict) << '\n';
  if (d.feedback.messages.empty()) {
    out << "messages: none\n";
  } else {
    out << "messages:\n";
    for (MessageCode m : d.feedback.messages) out << "  " << to_string(m) << '\n';
  }
  if (d.feedback.reliability_flag) {
    out << "note: text is shorter than the minimum length for a reliable "
           "lexical diversity verdict\n";
  }
}

void write_row_text(std::ostream& out, const SubcorpusRow& r) {
  const auto within = [&](std::size_t low, std::size_t high) { return r.count - low - high; };
  out << "  lexical diversity: " << r.tcld_low << " below, " << within(r.tcld_low, r.tcld_high)
      << " within, " << r.tcld_high << " above\n"
      << "  readability: " << r.tcr_low << " below, " << within(r.tcr_low, r.tcr_high)
      << " within, " << r.tcr_high << " above\n";
}

std::vector<std::string> split_labels(const std::string& list) {
  std::vector<std::string> labels;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) labels.push_back(item);
  }
  return labels;
}

int cmd_analyze(const std::string& file, const std::string& id, const std::string& subcorpus,
                const std::string& format, const MeasureOptions& opts, Context& ctx) {
  ThresholdProfile profile;
  std::string text;
  try {
    profile = resolve_profile(opts, ctx);
    text = read_text_file(file);
  } catch (const Error& e) {
    ctx.err << "texcomp: " << e.what() << '\n';
    return kExitIo;
  }
  DocumentResult result;
  try {
    result = analyze_document(text, id.empty() ? file : id, subcorpus, opts.config(), profile);
  } catch (const DocumentError& e) {
    ctx.err << "texcomp: " << e.what() << '\n';
    return kExitAnalysis;
  } catch (const Error& e) {
    ctx.err << "texcomp: " << e.what() << '\n';
    return kExitIo;
  }

  if (format == "json") {
    nlohmann::json j = report_header("document", profile);
    j["document"] = result;
    ctx.out << j.dump(2) << '\n';
  } else {
    write_document_text(ctx.out, result);
  }
  return kExitOk;
}

int cmd_batch(const std::string& manifest_path, const std::string& format, bool per_doc,
              const std::string& order, unsigned threads, const MeasureOptions& opts,
              Context& ctx) {
  ThresholdProfile profile;
  std::vector<ManifestEntry> entries;
  try {
    profile = resolve_profile(opts, ctx);
    entries = load_manifest(manifest_path);
  } catch (const Error& e) {
    ctx.err << "texcomp: " << e.what() << '\n';
    return kExitIo;
  }
  if (entries.empty()) {
    ctx.err << "texcomp: manifest has no entries\n";
    return kExitIo;
  }

  BatchResult batch;
  try {
    batch = analyze_batch(entries, opts.config(), profile, resolve_threads(threads));
  } catch (const Error& e) {
    ctx.err << "texcomp: " << e.what() << '\n';
    return kExitIo;
  }
  for (const DocumentFailure& f : batch.failures) ctx.err << "texcomp: " << f.message << '\n';
  if (batch.documents.empty()) {
    ctx.err << "texcomp: no document could be analyzed\n";
    return kExitAnalysis;
  }

  const CorpusSummary summary = summarize(batch.documents);
  std::optional<std::vector<TrendViolation>> violations;
  if (!order.empty()) {
    try {
      violations = trend_check(summary, split_labels(order));
    } catch (const Error& e) {
      ctx.err << "texcomp: " << e.what() << '\n';
      return kExitIo;
    }
  }

  if (format == "json") {
    nlohmann::json j = report_header("batch", profile);
    j["summary"] = summary;
    j["errors"] = batch.failures;
    if (violations) j["trend_violations"] = *violations;
    if (per_doc) j["documents"] = batch.documents;
    ctx.out << j.dump(2) << '\n';
  } else if (format == "csv") {
    write_summary_csv(ctx.out, summary);
    if (per_doc) {
      ctx.out << '\n';
      write_documents_csv(ctx.out, batch.documents);
    }
  } else {
    std::ostream& out = ctx.out;
    out << "profile: " << to_string(profile.source) << '\n'
        << "documents analyzed: " << batch.documents.size() << '\n'
        << "documents failed: " << batch.failures.size() << '\n';
    for (const SubcorpusRow& r : summary.rows) {
      out << "\nsubcorpus " << r.label << " (" << r.count << " documents)\n";
      write_row_text(out, r);
    }
    out << "\nall subcorpora (" << summary.overall.count << " documents)\n";
    write_row_text(out, summary.overall);
    if (!batch.failures.empty()) {
      out << "\nfailed documents:\n";
      for (const DocumentFailure& f : batch.failures) {
        out << "  " << f.id << ": " << to_string(f.code) << '\n';
      }
    }
    if (violations) {
      out << "\ntrend violations:";
      if (violations->empty()) out << " none";
      out << '\n';
      for (const TrendViolation& v : *violations) {
        out << "  " << (v.measure == Measure::kTcld ? "lexical diversity score rises"
                                                     : "readability score falls")
            << " from " << v.from << " to " << v.to << '\n';
      }
    }
    if (per_doc) {
      out << "\ndocuments:\n";
      for (const DocumentResult& d : batch.documents) {
        out << "  " << d.id << " [" << d.subcorpus << "]: lexical diversity "
            << describe(d.feedback.tcld_verdict) << ", readability "
            << describe(d.feedback.tcr_verdict);
        for (MessageCode m : d.feedback.messages) out << ' ' << to_string(m);
        out << '\n';
      }
    }
  }
  return kExitOk;
}

int cmd_calibrate(const std::string& manifest_path, double p_low, double p_high,
                  const std::string& output, unsigned threads, const MeasureOptions& opts,
                  Context& ctx) {
  std::vector<ManifestEntry> entries;
  try {
    entries = load_manifest(manifest_path);
  } catch (const Error& e) {
    ctx.err << "texcomp: " << e.what() << '\n';
    return kExitIo;
  }
  if (entries.empty()) {
    ctx.err << "texcomp: manifest has no entries\n";
    return kExitIo;
  }
  ThresholdProfile profile;
  try {
    const BatchResult batch =
        analyze_batch(entries, opts.config(), default_thresholds(), resolve_threads(threads));
    for (const DocumentFailure& f : batch.failures) ctx.err << "texcomp: " << f.message << '\n';
    if (batch.documents.empty()) {
      ctx.err << "texcomp: no document could be analyzed\n";
      return kExitAnalysis;
    }
    std::vector<ScorePair> training;
    training.reserve(batch.documents.size());
    for (const DocumentResult& d : batch.documents) {
      training.push_back({d.scores.tcld, d.scores.tcr});
    }
    profile = calibrate(training, p_low, p_high);
  } catch (const Error& e) {
    ctx.err << "texcomp: " << e.what() << '\n';
    return kExitIo;
  }

  const std::string serialized = serialize_profile(profile);
  if (output.empty() || output == "-") {
    ctx.out << serialized;
    return kExitOk;
  }
  std::ofstream file(output, std::ios::binary);
  file << serialized;
  if (!file) {
    ctx.err << "texcomp: cannot write " << output << '\n';
    return kExitIo;
  }
  ctx.out << "calibrated profile written to " << output << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, Context& ctx) {
  CLI::App app{"Text complexity feedback for student writing", "texcomp"};
  app.require_subcommand(1);

  MeasureOptions analyze_opts, batch_opts, calibrate_opts;

  std::string analyze_file, analyze_id, analyze_subcorpus, analyze_format = "text";
  auto* analyze = app.add_subcommand("analyze", "Feedback for one document");
  analyze->add_option("file", analyze_file, "UTF-8 text file")->required();
  analyze->add_option("--id", analyze_id, "Document id (default: the path)");
  analyze->add_option("--subcorpus", analyze_subcorpus, "Subcorpus label");
  analyze->add_option("--format", analyze_format, "Report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  add_measure_options(analyze, analyze_opts);

  std::string batch_manifest, batch_format = "text", batch_order;
  bool batch_per_doc = false;
  unsigned batch_threads = 0;
  auto* batch = app.add_subcommand("batch", "Analyze a manifest and summarize subcorpora");
  batch->add_option("manifest", batch_manifest, "JSONL or CSV manifest")->required();
  batch->add_option("--format", batch_format, "Report format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  batch->add_flag("--per-doc", batch_per_doc, "Include every document result");
  batch->add_option("--order", batch_order,
                    "Comma-separated subcorpus labels in ascending skill order");
  batch->add_option("--threads", batch_threads, "Worker threads (0 = all cores)")
      ->capture_default_str();
  add_measure_options(batch, batch_opts);

  std::string calibrate_manifest, calibrate_output;
  double p_low = 5.0, p_high = 95.0;
  unsigned calibrate_threads = 0;
  auto* calib = app.add_subcommand("calibrate", "Derive a threshold profile from peer texts");
  calib->add_option("manifest", calibrate_manifest, "JSONL or CSV manifest")->required();
  calib->add_option("--p-low", p_low, "Lower percentile")->capture_default_str();
  calib->add_option("--p-high", p_high, "Upper percentile")->capture_default_str();
  calib->add_option("-o,--output", calibrate_output, "Profile path (default: stdout)");
  calib->add_option("--threads", calibrate_threads, "Worker threads (0 = all cores)")
      ->capture_default_str();
  add_measure_options(calib, calibrate_opts, false);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, ctx.out, ctx.err);
    return code == 0 ? kExitOk : kExitIo;
  }

  if (analyze->parsed()) {
    return cmd_analyze(analyze_file, analyze_id, analyze_subcorpus, analyze_format,
                       analyze_opts, ctx);
  }
  if (batch->parsed()) {
    return cmd_batch(batch_manifest, batch_format, batch_per_doc, batch_order, batch_threads,
                     batch_opts, ctx);
  }
  return cmd_calibrate(calibrate_manifest, p_low, p_high, calibrate_output, calibrate_threads,
                       calibrate_opts, ctx);
}

}  // namespace texcomp::cli
