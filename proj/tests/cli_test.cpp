#include "cli.hpp"

#include <random>
#include <regex>
#include <sstream>

#include <gtest/gtest.h>

#include "support/schema_validator.hpp"
#include "support/test_support.hpp"
#include "texcomp/texcomp.hpp"

namespace texcomp {
namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(std::vector<std::string> args, std::optional<std::string> env = std::nullopt) {
  std::ostringstream out, err;
  cli::Context ctx{out, err, std::move(env)};
  args.insert(args.begin(), "texcomp");
  const int code = cli::run(args, ctx);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  std::string file(const std::string& name, const std::string& content) {
    const auto p = dir_.path() / name;
    testing::write_file(p, content);
    return p.string();
  }

  std::string profile(double tcld_max) {
    ThresholdProfile p;
    p.tcld_max = tcld_max;
    p.source = ProfileSource::kManual;
    return file("profile-" + std::to_string(tcld_max) + ".json", serialize_profile(p));
  }

  testing::TempDir dir_;
  const testing::SchemaValidator schema_{testing::load_json(TEXCOMP_SCHEMA_PATH)};
};

const std::string kRepetitive = "the cat and the dog and the cat and the dog sat.";

TEST_F(CliTest, AnalyzeTextShowsMessageCodes) {
  const auto r = run({"analyze", file("rep.txt", kRepetitive)});
  EXPECT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_NE(r.out.find("LD_OVERLY_SIMPLE_VOCABULARY"), std::string::npos);
  EXPECT_NE(r.out.find("lexical diversity: above range"), std::string::npos);
  EXPECT_NE(r.out.find("note:"), std::string::npos);
}

TEST_F(CliTest, AnalyzeTextHasNoDigits) {
  const auto r = run({"analyze", file("rep.txt", kRepetitive), "--id", "sample"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.find_first_of("0123456789"), std::string::npos) << r.out;
}

TEST_F(CliTest, AnalyzeJsonValidatesAndCarriesScores) {
  const auto r = run({"analyze", file("mat.txt", "the cat sat on the mat"), "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(schema_.validate(j).empty());
  EXPECT_NEAR(j["document"]["scores"]["tcld"].get<double>(), 1209.384732, 1e-6);
  EXPECT_EQ(j["document"]["feedback"]["tcld_verdict"], "above_max");
  EXPECT_EQ(j["document"]["feedback"]["reliability_flag"], true);
}

TEST_F(CliTest, AnalyzeErrors) {
  EXPECT_EQ(run({"analyze", file("empty.txt", "")}).code, cli::kExitAnalysis);
  EXPECT_EQ(run({"analyze", file("dots.txt", "...")}).code, cli::kExitAnalysis);
  EXPECT_EQ(run({"analyze", file("one.txt", "A.")}).code, cli::kExitAnalysis);
  const auto missing = run({"analyze", (dir_.path() / "missing.txt").string()});
  EXPECT_EQ(missing.code, cli::kExitIo);
  EXPECT_NE(missing.err.find("missing.txt"), std::string::npos);
  EXPECT_EQ(run({"analyze"}).code, cli::kExitIo);
  EXPECT_EQ(run({"analyze", file("x.txt", "a b"), "--format", "xml"}).code, cli::kExitIo);
  EXPECT_EQ(run({"analyze", file("y.txt", "a b"), "--profile", file("bad.json", "{}")}).code,
            cli::kExitIo);
}

TEST_F(CliTest, ProfileFlagOverridesDefaults) {
  // cat-on-mat TCLD is about 1209: above 250, within 2000
  const auto text = file("mat.txt", "the cat sat on the mat");
  const auto defaults = run({"analyze", text, "--format", "json"});
  const auto custom = run({"analyze", text, "--format", "json", "--profile", profile(2000)});
  ASSERT_EQ(custom.code, 0) << custom.err;
  EXPECT_EQ(nlohmann::json::parse(defaults.out)["document"]["feedback"]["tcld_verdict"],
            "above_max");
  const auto j = nlohmann::json::parse(custom.out);
  EXPECT_EQ(j["document"]["feedback"]["tcld_verdict"], "within_range");
  EXPECT_EQ(j["profile"]["source"], "manual");
}

TEST_F(CliTest, EnvironmentProfileAndFlagPrecedence) {
  const auto text = file("mat.txt", "the cat sat on the mat");
  const auto env = run({"analyze", text, "--format", "json"}, profile(2000));
  EXPECT_EQ(nlohmann::json::parse(env.out)["document"]["feedback"]["tcld_verdict"],
            "within_range");
  const auto both =
      run({"analyze", text, "--format", "json", "--profile", profile(250)}, profile(2000));
  EXPECT_EQ(nlohmann::json::parse(both.out)["document"]["feedback"]["tcld_verdict"],
            "above_max");
}

TEST_F(CliTest, MeasureFlags) {
  const auto text = file("long.txt", "abcdef abcdefg abcdef abcdefg.");
  const auto def = nlohmann::json::parse(run({"analyze", text, "--format", "json"}).out);
  const auto six = nlohmann::json::parse(
      run({"analyze", text, "--format", "json", "--long-word-min-chars", "6"}).out);
  EXPECT_EQ(def["document"]["statistics"]["long_words"], 2);
  EXPECT_EQ(six["document"]["statistics"]["long_words"], 4);

  const auto caps = file("caps.txt", "Cat cat CAT dog");
  const auto folded = nlohmann::json::parse(run({"analyze", caps, "--format", "json"}).out);
  const auto kept =
      nlohmann::json::parse(run({"analyze", caps, "--format", "json", "--no-case-fold"}).out);
  EXPECT_EQ(folded["document"]["statistics"]["types"], 2);
  EXPECT_EQ(kept["document"]["statistics"]["types"], 4);

  const auto shortflag = nlohmann::json::parse(
      run({"analyze", caps, "--format", "json", "--min-tokens", "4"}).out);
  EXPECT_EQ(shortflag["document"]["feedback"]["reliability_flag"], false);

  const auto scaled = nlohmann::json::parse(
      run({"analyze", caps, "--format", "json", "--maas-scale", "1"}).out);
  EXPECT_NEAR(scaled["document"]["scores"]["maas_a2"].get<double>() * 1e4,
              folded["document"]["scores"]["maas_a2"].get<double>(), 1e-9);
  EXPECT_EQ(run({"analyze", caps, "--maas-log-base", "1"}).code, cli::kExitIo);
  EXPECT_EQ(run({"analyze", caps, "--long-word-min-chars", "0"}).code, cli::kExitIo);
}

TEST_F(CliTest, BatchPartialFailure) {
  file("a.txt", kRepetitive);
  file("b.txt", "the cat sat on the mat");
  const auto manifest = file("m.jsonl",
                             "{\"path\": \"a.txt\", \"subcorpus\": \"G\"}\n"
                             "{\"path\": \"missing.txt\", \"subcorpus\": \"G\"}\n"
                             "{\"path\": \"b.txt\", \"subcorpus\": \"H\"}\n");
  const auto r = run({"batch", manifest, "--format", "json", "--per-doc"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(schema_.validate(j).empty()) << j.dump(2);
  EXPECT_EQ(j["summary"]["overall"]["count"], 2);
  ASSERT_EQ(j["errors"].size(), 1u);
  EXPECT_EQ(j["errors"][0]["id"], "missing.txt");
  EXPECT_EQ(j["errors"][0]["error"], "io");
  EXPECT_EQ(j["documents"].size(), 2u);
  EXPECT_NE(r.err.find("missing.txt"), std::string::npos);

  const auto text = run({"batch", manifest});
  EXPECT_EQ(text.code, 0);
  EXPECT_NE(text.out.find("documents failed: 1"), std::string::npos);
  EXPECT_FALSE(std::regex_search(text.out, std::regex("[0-9]\\.[0-9]"))) << text.out;
}

TEST_F(CliTest, BatchFailureModes) {
  EXPECT_EQ(run({"batch", (dir_.path() / "none.jsonl").string()}).code, cli::kExitIo);
  EXPECT_EQ(run({"batch", file("blank.jsonl", "\n\n")}).code, cli::kExitIo);
  EXPECT_EQ(run({"batch", file("broken.jsonl", "{oops\n")}).code, cli::kExitIo);
  file("empty.txt", "");
  EXPECT_EQ(run({"batch", file("allbad.csv", "path,subcorpus\nempty.txt,G\nnope.txt,G\n")}).code,
            cli::kExitAnalysis);
}

TEST_F(CliTest, BatchCsvSummary) {
  file("a.txt", kRepetitive);
  file("b.txt", "the cat sat on the mat");
  const auto manifest = file("m.csv", "path,subcorpus,id\na.txt,G,a\nb.txt,G,b\n");
  const auto r = run({"batch", manifest, "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string header, g, avg, extra;
  std::getline(lines, header);
  std::getline(lines, g);
  std::getline(lines, avg);
  EXPECT_EQ(header,
            "subcorpus,count,mean_tcld,mean_tcr,tcld_low_pct,tcld_high_pct,tcr_low_pct,"
            "tcr_high_pct");
  EXPECT_EQ(g.substr(0, 4), "G,2,");
  EXPECT_EQ(avg.substr(0, 6), "AVG,2,");
  EXPECT_FALSE(std::getline(lines, extra));

  const auto per_doc = run({"batch", manifest, "--format", "csv", "--per-doc"});
  EXPECT_NE(per_doc.out.find("id,subcorpus,tokens,tcld,tcr"), std::string::npos);
}

TEST_F(CliTest, BatchOrderReportsTrendViolation) {
  file("y1.txt", "a b a b a b a b a b a b.");
  file("y2.txt", testing::distinct_text(40));
  file("y3.txt", kRepetitive);
  const auto manifest = file("m.jsonl",
                             "{\"path\": \"y1.txt\", \"subcorpus\": \"y1\"}\n"
                             "{\"path\": \"y2.txt\", \"subcorpus\": \"y2\"}\n"
                             "{\"path\": \"y3.txt\", \"subcorpus\": \"y3\"}\n");
  const auto r = run({"batch", manifest, "--order", "y1,y2,y3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("lexical diversity score rises from y2 to y3"), std::string::npos)
      << r.out;
  EXPECT_EQ(r.out.find("rises from y1 to y2"), std::string::npos);

  const auto j =
      nlohmann::json::parse(run({"batch", manifest, "--order", "y1,y2,y3", "--format", "json"}).out);
  bool found = false;
  for (const auto& v : j["trend_violations"]) {
    found = found || (v["measure"] == "tcld" && v["from"] == "y2" && v["to"] == "y3");
  }
  EXPECT_TRUE(found);
  EXPECT_EQ(run({"batch", manifest, "--order", "y1,zz"}).code, cli::kExitIo);
}

TEST_F(CliTest, CalibrateMatchesLibraryAndRoundTrips) {
  std::mt19937_64 rng(17);
  std::string manifest_text;
  std::vector<ScorePair> training;
  for (int i = 0; i < 10; ++i) {
    const std::string name = "doc" + std::to_string(i) + ".txt";
    const auto sample = testing::random_text(rng, 120, 20 + 10 * i);
    file(name, sample.text);
    manifest_text += "{\"path\": \"" + name + "\", \"subcorpus\": \"C\"}\n";
    const auto d = analyze_document(sample.text, name, "C", {}, default_thresholds());
    training.push_back({d.scores.tcld, d.scores.tcr});
  }
  const auto manifest = file("m.jsonl", manifest_text);
  const auto out_path = (dir_.path() / "profile.json").string();
  const auto r = run({"calibrate", manifest, "--p-low", "5", "--p-high", "95", "-o", out_path});
  ASSERT_EQ(r.code, 0) << r.err;

  const ThresholdProfile written = parse_profile(read_text_file(out_path));
  EXPECT_EQ(written, calibrate(training, 5, 95));
  ASSERT_TRUE(written.calibration_meta);
  EXPECT_EQ(written.calibration_meta->training_size, 10u);
  EXPECT_TRUE(schema_.validate(profile_to_json(written), "#/definitions/profile").empty());

  // Reloading the profile reproduces the library's verdicts.
  const auto reloaded =
      nlohmann::json::parse(run({"batch", manifest, "--format", "json", "--per-doc",
                                 "--profile", out_path}).out);
  for (const auto& doc : reloaded["documents"]) {
    const ComplexityScores s{0, 0, doc["scores"]["tcld"], 0, 0, 0, doc["scores"]["tcr"]};
    const FeedbackReport f = evaluate(s, written);
    EXPECT_EQ(doc["feedback"]["tcld_verdict"], to_string(f.tcld_verdict));
    EXPECT_EQ(doc["feedback"]["tcr_verdict"], to_string(f.tcr_verdict));
  }
}

TEST_F(CliTest, CalibrateSingleDocumentAndErrors) {
  file("only.txt", kRepetitive);
  const auto manifest = file("one.csv", "path,subcorpus\nonly.txt,C\n");
  const auto r = run({"calibrate", manifest});
  ASSERT_EQ(r.code, 0) << r.err;
  const ThresholdProfile p = parse_profile(r.out);
  EXPECT_EQ(p.tcld_min, p.tcld_max);
  EXPECT_EQ(p.tcr_min, p.tcr_max);
  const auto d = analyze_document(kRepetitive, "x", "C", {}, default_thresholds());
  EXPECT_EQ(p.tcld_min, d.scores.tcld);
  EXPECT_EQ(p.tcr_min, d.scores.tcr);

  EXPECT_EQ(run({"calibrate", manifest, "--p-low", "60", "--p-high", "40"}).code, cli::kExitIo);
  EXPECT_EQ(run({"calibrate", file("blank.jsonl", "")}).code, cli::kExitIo);
  file("empty.txt", "");
  EXPECT_EQ(run({"calibrate", file("bad.csv", "path,subcorpus\nempty.txt,C\n")}).code,
            cli::kExitAnalysis);
}

TEST_F(CliTest, HelpExitsCleanly) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("analyze"), std::string::npos);
}

}  // namespace
}  // namespace texcomp
