// tests/cli_test.cc

// Copyright 2026  The phonesv Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "phonesv/base/error.h"
#include "phonesv/cli/commands.h"
#include "phonesv/cli/manifest.h"
#include "phonesv/cli/run_config.h"
#include "phonesv/dsp/audio.h"
#include "phonesv/pooling/supervector_io.h"
#include "phonesv/posterior/cd_to_ci.h"
#include "phonesv/posterior/posteriorgram.h"
#include "synthetic_corpus.h"
#include "test_util.h"

namespace phonesv {
namespace {

using testing::TempDir;

std::string Slurp(const std::filesystem::path &p) {
  std::ifstream is(p, std::ios::binary);
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

// Human-readable reports embed the resolved config, including the output
// directory; everything else must match.
std::string WithoutOutLine(const std::filesystem::path &p) {
  std::istringstream is(Slurp(p));
  std::string line, kept;
  while (std::getline(is, line))
    if (line.rfind("out = ", 0) != 0) kept += line + "\n";
  return kept;
}

struct SpeakerSpec {
  std::string id;
  bool positive;
  int utterances;
};

// Writes `count` tiny noise utterances (0.5 s at 8 kHz, flat posteriors)
// per speaker and a manifest listing them.
std::filesystem::path WriteTinyCorpus(const std::filesystem::path &dir,
                                      const std::string &name,
                                      const std::vector<SpeakerSpec> &speakers,
                                      bool touch_only = false) {
  std::filesystem::create_directories(dir);
  std::mt19937_64 rng(std::hash<std::string>{}(name));
  std::normal_distribution<double> g(0.0, 0.05);
  std::vector<std::string> labels = CiLabels(PhonemeInventory::Default(), "sil");
  auto manifest = dir / (name + ".csv");
  std::ofstream os(manifest);
  os << "utterance_id,speaker_id,label,audio_path,posteriorgram_path\n";
  for (const auto &s : speakers) {
    for (int u = 0; u < s.utterances; ++u) {
      std::string utt = s.id + "_" + std::to_string(u);
      if (touch_only) {
        std::ofstream(dir / (utt + ".wav")).put('x');
        std::ofstream(dir / (utt + ".pgv")).put('x');
      } else {
        AudioClip clip{std::vector<double>(4000), 8000};
        for (double &v : clip.samples) v = g(rng) * (s.positive ? 1.5 : 1.0);
        WriteWav16(dir / (utt + ".wav"), clip);
        Posteriorgram pg{Matrix(48, 40), labels};
        for (std::size_t i = 0; i < 48 * 40; ++i) pg.probs.data()[i] = 1.0 / 40;
        WritePosteriorgram(dir / (utt + ".pgv"), pg);
      }
      os << utt << ',' << s.id << ',' << (s.positive ? "positive" : "negative")
         << ',' << utt << ".wav," << utt << ".pgv\n";
    }
  }
  return manifest;
}

// Study dataset shape: 10 positive speakers with 464 utterances and 9
// negative with 238; 12 train speakers (501) and 7 test speakers (201).
std::vector<SpeakerSpec> StudyTrainSpeakers() {
  return {{"P01", true, 52}, {"P02", true, 51}, {"P03", true, 51},
          {"P04", true, 51}, {"P05", true, 51}, {"P06", true, 51},
          {"N01", false, 33}, {"N02", false, 33}, {"N03", false, 32},
          {"N04", false, 32}, {"N05", false, 32}, {"N06", false, 32}};
}
std::vector<SpeakerSpec> StudyTestSpeakers() {
  return {{"P07", true, 40}, {"P08", true, 39}, {"P09", true, 39},
          {"P10", true, 39}, {"N07", false, 15}, {"N08", false, 15},
          {"N09", false, 14}};
}

TEST(Manifest, ParsesAndResolvesPaths) {
  auto m = ParseManifest(
      "speaker_id,utterance_id,label,audio_path,posteriorgram_path,notes\n"
      "s1,u1,Positive,a/u1.wav,\"b, c/u1.pgv\",x\n"
      "\n"
      "s2,u2,negative,/abs/u2.wav,u2.pgv,\"quoted \"\"note\"\"\"\n",
      "/data/set");
  ASSERT_EQ(m.records.size(), 2u);
  EXPECT_EQ(m.records[0].utterance_id, "u1");
  EXPECT_EQ(m.records[0].speaker_id, "s1");
  EXPECT_EQ(m.records[0].label, Label::kPositive);
  EXPECT_EQ(m.records[0].audio_path, "/data/set/a/u1.wav");
  EXPECT_EQ(m.records[0].posteriorgram_path, "/data/set/b, c/u1.pgv");
  EXPECT_EQ(m.records[1].audio_path, "/abs/u2.wav");
  EXPECT_EQ(m.records[1].label, Label::kNegative);
}

TEST(Manifest, RejectsMalformedInput) {
  EXPECT_THROW(ParseManifest("", "."), ValidationError);
  EXPECT_THROW(ParseManifest("utterance_id,speaker_id,label,audio_path\n", "."),
               ValidationError);
  const std::string header =
      "utterance_id,speaker_id,label,audio_path,posteriorgram_path\n";
  EXPECT_THROW(ParseManifest(header + "u,s,maybe,a.wav,a.pgv\n", "."),
               ValidationError);
  EXPECT_THROW(ParseManifest(header + "u,s,positive\n", "."), ValidationError);
  EXPECT_THROW(ParseManifest(header + ",s,positive,a.wav,a.pgv\n", "."),
               ValidationError);
  EXPECT_TRUE(ParseManifest(header, ".").records.empty());
}

TEST(Manifest, Problems) {
  TempDir dir("man");
  std::ofstream(dir / "a.wav").put('x');
  std::ofstream(dir / "a.pgv").put('x');
  const std::string header =
      "utterance_id,speaker_id,label,audio_path,posteriorgram_path\n";
  auto problems = [&](const std::string &body) {
    return ManifestProblems(ParseManifest(header + body, dir.path()), true);
  };
  EXPECT_TRUE(problems("u1,s1,positive,a.wav,a.pgv\n").empty());
  EXPECT_EQ(problems("").size(), 1u);
  EXPECT_FALSE(problems("u1,s1,positive,a.wav,a.pgv\n"
                        "u1,s2,negative,b.wav,b.pgv\n").empty());
  EXPECT_FALSE(problems("u1,s1,positive,a.wav,a.pgv\n"
                        "u2,s1,negative,a.wav,c.pgv\n").empty());
  EXPECT_FALSE(problems("u1,s1,positive,missing.wav,a.pgv\n").empty());
  auto conflict = problems("u1,s1,positive,a.wav,a.pgv\n"
                           "u2,s1,negative,b.wav,b.pgv\n");
  bool named = false;
  for (const auto &p : conflict) named |= p.find("conflicting") != std::string::npos;
  EXPECT_TRUE(named);
}

TEST(CmdValidate, StudyDatasetCounts) {
  TempDir dir("val");
  auto speakers = StudyTrainSpeakers();
  for (const auto &s : StudyTestSpeakers()) speakers.push_back(s);
  auto manifest = WriteTinyCorpus(dir.path(), "all", speakers, true);
  DatasetManifest m = ReadManifest(manifest);
  ManifestSummary s = Summarize(m);
  EXPECT_EQ(s.speakers, 19u);
  EXPECT_EQ(s.utterances, 702u);
  EXPECT_EQ(s.speakers_by_label[Label::kPositive], 10u);
  EXPECT_EQ(s.speakers_by_label[Label::kNegative], 9u);
  EXPECT_EQ(s.utterances_by_label[Label::kPositive], 168u + 296u);
  EXPECT_EQ(s.utterances_by_label[Label::kNegative], 44u + 194u);

  std::ostringstream out, err;
  EXPECT_EQ(CmdValidate({manifest, {}, {}, {}}, out, err), kExitOk) << err.str();
  EXPECT_NE(out.str().find("speakers: 19"), std::string::npos);
  EXPECT_NE(out.str().find("utterances: 702"), std::string::npos);
}

TEST(CmdValidate, FailuresExitNonzero) {
  TempDir dir("val");
  auto conflict = WriteTinyCorpus(dir.path(), "c", {{"s1", true, 2}}, true);
  {
    std::ofstream os(conflict, std::ios::app);
    os << "extra,s1,negative,s1_0.wav,other.pgv\n";
  }
  std::ofstream(dir / "other.pgv").put('x');
  std::ostringstream out, err;
  EXPECT_EQ(CmdValidate({conflict, {}, {}, {}}, out, err), kExitValidation);
  EXPECT_NE(err.str().find("conflicting"), std::string::npos);

  std::ofstream(dir / "empty.csv")
      << "utterance_id,speaker_id,label,audio_path,posteriorgram_path\n";
  EXPECT_NE(CmdValidate({dir / "empty.csv", {}, {}, {}}, out, err), kExitOk);
  std::ofstream(dir / "blank.csv") << "";
  EXPECT_EQ(CmdValidate({dir / "blank.csv", {}, {}, {}}, out, err),
            kExitValidation);
  EXPECT_EQ(CmdValidate({dir / "none.csv", {}, {}, {}}, out, err),
            kExitValidation);
}

TEST(RunConfig, FileOverridesAndText) {
  TempDir dir("cfg");
  std::ofstream(dir / "run.cfg") << "# ablation\nphone_class = Nasals\n"
                                    "threshold = 12.5\nc_grid = 1, 10\n"
                                    "gamma_grid = scale,0.01\nseed = 7\n"
                                    "inventory = inv.txt\n";
  RunConfig cfg = RunConfig::FromFile(dir / "run.cfg");
  EXPECT_EQ(cfg.phone_class, "nasals");
  EXPECT_EQ(cfg.threshold, 12.5);
  EXPECT_EQ(cfg.c_grid, (std::vector<double>{1, 10}));
  EXPECT_EQ(cfg.gamma_grid.size(), 2u);
  EXPECT_EQ(cfg.seed, 7u);
  EXPECT_EQ(*cfg.inventory_path, dir / "inv.txt");
  EXPECT_FALSE(cfg.is_full());
  cfg.Set("inventory", "default");
  EXPECT_FALSE(cfg.inventory_path);

  std::ofstream(dir / "again.cfg") << cfg.ToText();
  EXPECT_EQ(RunConfig::FromFile(dir / "again.cfg").ToText(), cfg.ToText());

  CommandOptions opts;
  opts.config = dir / "run.cfg";
  opts.overrides = {{"seed", "9"}, {"phone_class", "full"}};
  RunConfig resolved = ResolveConfig(opts);
  EXPECT_EQ(resolved.seed, 9u);
  EXPECT_TRUE(resolved.is_full());
}

TEST(RunConfig, Validation) {
  RunConfig cfg;
  EXPECT_THROW(cfg.Set("colour", "blue"), ValidationError);
  EXPECT_THROW(cfg.Set("phone_class", "liquids"), ValidationError);
  EXPECT_THROW(cfg.Set("folds", "two"), ValidationError);
  RunConfig neg;
  neg.threshold = -1;
  EXPECT_THROW(neg.Validate(), ValidationError);
  RunConfig one;
  one.folds = 1;
  EXPECT_THROW(one.Validate(), ValidationError);
  RunConfig half;
  half.c = 1.0;
  EXPECT_THROW(half.Validate(), ValidationError);
  EXPECT_NO_THROW(RunConfig{}.Validate());
}

SyntheticCorpusOptions SmallCorpus() {
  SyntheticCorpusOptions o;
  o.speakers_per_class = 3;
  o.utterances_per_speaker = 2;
  o.seconds = 3.5;
  return o;
}

TEST(CmdExtract, DimensionsAndDeterminism) {
  TempDir dir("ext");
  auto corpus = WriteSyntheticCorpus(dir / "data", SmallCorpus());
  std::ostringstream out, err;
  for (auto [cls, dim] : {std::pair{"full", 1560u}, std::pair{"nasals", 120u}}) {
    for (const char *run : {"a", "b"}) {
      CommandOptions o{corpus.manifest, {}, {},
                       {{"phone_class", cls},
                        {"out", (dir / (std::string(cls) + run)).string()}}};
      ASSERT_EQ(CmdExtract(o, out, err), kExitOk) << err.str();
    }
    auto base = dir / (std::string(cls) + "a");
    std::size_t d = 0;
    auto whole = ReadSuperVectors(base / "utterances.svv", &d);
    EXPECT_EQ(d, dim);
    auto segs = ReadSuperVectors(base / "segments.svv", &d);
    EXPECT_EQ(d, dim);
    for (const auto &r : segs) EXPECT_EQ(r.values.size(), dim);
    if (std::string(cls) == "full") {
      EXPECT_EQ(whole.size(), 12u);
      EXPECT_EQ(segs.size(), 12u * 5);  // 348 frames -> 5 windows each
    }
    auto other = dir / (std::string(cls) + "b");
    for (const char *f : {"utterances.svv", "segments.svv"})
      EXPECT_EQ(Slurp(base / f), Slurp(other / f)) << f;
    EXPECT_EQ(WithoutOutLine(base / "extract_summary.txt"),
              WithoutOutLine(other / "extract_summary.txt"));
  }
}

TEST(CmdExtract, FailuresAreReportedAndSkipped) {
  TempDir dir("ext");
  auto corpus = WriteSyntheticCorpus(dir / "data", SmallCorpus());
  std::ofstream(dir / "data" / "p01_1.pgv", std::ios::trunc) << "PGV1garbage";
  std::ostringstream out, err;
  CommandOptions o{corpus.manifest, {}, {}, {{"out", (dir / "o").string()}}};
  EXPECT_EQ(CmdExtract(o, out, err), kExitRuntime);
  EXPECT_NE(err.str().find("p01_1"), std::string::npos);
  EXPECT_EQ(ReadSuperVectors(dir / "o" / "utterances.svv").size(), 11u);
}

TEST(CmdCv, FoldCountBeyondSpeakers) {
  TempDir dir("cv");
  auto corpus = WriteSyntheticCorpus(dir / "data", SmallCorpus());
  std::ostringstream out, err;
  CommandOptions o{corpus.manifest, {}, {},
                   {{"folds", "7"}, {"out", (dir / "o").string()}}};
  EXPECT_EQ(CmdCv(o, out, err), kExitValidation);
  EXPECT_NE(err.str().find("7"), std::string::npos);
  EXPECT_NE(err.str().find("6"), std::string::npos);
}

TEST(CmdCv, SeededRerunIsIdentical) {
  TempDir dir("cv");
  auto corpus = WriteSyntheticCorpus(dir / "data", SmallCorpus());
  std::ostringstream out, err;
  for (const char *run : {"a", "b"}) {
    CommandOptions o{corpus.manifest, {}, {},
                     {{"folds", "3"}, {"seed", "5"},
                      {"out", (dir / run).string()}}};
    ASSERT_EQ(CmdCv(o, out, err), kExitOk) << err.str();
  }
  for (const char *f : {"folds.txt", "cv_report.csv", "cv_grid.csv",
                        "cv_scores.csv", "cv_roc.csv"})
    EXPECT_EQ(Slurp(dir / "a" / f), Slurp(dir / "b" / f)) << f;
  EXPECT_EQ(WithoutOutLine(dir / "a" / "cv_report.txt"),
            WithoutOutLine(dir / "b" / "cv_report.txt"));
  std::string report = Slurp(dir / "a" / "cv_report.txt");
  EXPECT_NE(report.find("seed = 5"), std::string::npos);
  EXPECT_NE(report.find("phone_class = full"), std::string::npos);
}

TEST(CmdEvaluate, StudyStyleSplit) {
  TempDir dir("eval");
  auto train = WriteTinyCorpus(dir.path(), "train", StudyTrainSpeakers());
  auto test = WriteTinyCorpus(dir.path(), "test", StudyTestSpeakers());
  std::ostringstream out, err;
  CommandOptions o{train, test, {},
                   {{"c", "1"}, {"gamma", "scale"},
                    {"out", (dir / "o").string()}}};
  ASSERT_EQ(CmdEvaluate(o, out, err), kExitOk) << err.str();
  EXPECT_NE(out.str().find("test: n=201"), std::string::npos) << out.str();
  EXPECT_TRUE(std::filesystem::exists(dir / "o" / "model.svm"));
  EXPECT_TRUE(std::filesystem::exists(dir / "o" / "eval_roc.csv"));
  std::string csv = Slurp(dir / "o" / "eval_report.csv");
  EXPECT_NE(csv.find("evaluate,test,full,201,201,"), std::string::npos) << csv;
}

TEST(CmdEvaluate, RefusesSpeakerOverlap) {
  TempDir dir("eval");
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<SpeakerSpec> a = {{"A", true, 1}, {"B", false, 1}, {"C", true, 1}};
    std::vector<SpeakerSpec> b = {{"D", true, 1}, {"E", false, 1}};
    b.push_back(a[rng() % a.size()]);  // one shared speaker
    std::swap(b[rng() % b.size()], b.back());
    auto sub = dir / std::to_string(trial);
    auto train = WriteTinyCorpus(sub / "tr", "train", a, true);
    auto test = WriteTinyCorpus(sub / "te", "test", b, true);
    std::ostringstream out, err;
    CommandOptions o{train, test, {}, {{"out", (sub / "o").string()}}};
    EXPECT_EQ(CmdEvaluate(o, out, err), kExitValidation);
    EXPECT_NE(err.str().find("both"), std::string::npos);
    EXPECT_FALSE(std::filesystem::exists(sub / "o" / "model.svm"));
  }
}

TEST(CmdEvaluate, PhoneClassRunReportsRetainedFraction) {
  TempDir dir("eval");
  SyntheticCorpusOptions opts = SmallCorpus();
  opts.seconds = 2.0;  // nasal mass straddles the gate
  auto corpus = WriteSyntheticCorpus(dir / "data", opts);
  // split the synthetic speakers into two manifests
  std::ifstream is(corpus.manifest);
  std::ofstream tr(dir / "data" / "train.csv"), te(dir / "data" / "test.csv");
  std::string line;
  std::getline(is, line);
  tr << line << '\n';
  te << line << '\n';
  while (std::getline(is, line))
    (line.find("p03") == 0 || line.find("n03") == 0 ? te : tr) << line << '\n';
  tr.close();
  te.close();
  std::ostringstream out, err;
  CommandOptions o{dir / "data" / "train.csv", dir / "data" / "test.csv", {},
                   {{"phone_class", "nasals"}, {"threshold", "10"},
                    {"gate_mode", "test"}, {"c", "1"}, {"gamma", "scale"},
                    {"out", (dir / "o").string()}}};
  ASSERT_EQ(CmdEvaluate(o, out, err), kExitOk) << err.str();
  EXPECT_NE(out.str().find("retained test utterances: "), std::string::npos)
      << out.str();
}

#ifdef PHONESV_BINARY
TEST(Binary, ExitCodes) {
  TempDir dir("bin");
  auto manifest = WriteTinyCorpus(dir.path(), "m", {{"s1", true, 1}}, true);
  auto run = [](const std::string &args) {
    int rc = std::system((std::string(PHONESV_BINARY) + " " + args +
                          " >/dev/null 2>&1").c_str());
    return WEXITSTATUS(rc);
  };
  EXPECT_EQ(run("validate --manifest " + manifest.string()), 0);
  EXPECT_EQ(run("validate --manifest " + (dir / "nope.csv").string()), 1);
  EXPECT_EQ(run("cv --manifest " + manifest.string() + " --phone-class vowels"),
            1);
  EXPECT_EQ(run("frobnicate"), 1);
}
#endif

}  // namespace
}  // namespace phonesv
