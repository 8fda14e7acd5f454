#include <doctest.h>

#include <cstdlib>
#include <sys/wait.h>
#include <filesystem>
#include <sstream>

#include "lrtag/harness/cli.hpp"
#include "support.hpp"

using lrtag::testing::data_path;
using lrtag::testing::read_file;
using lrtag::testing::scratch_dir;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = lrtag::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return data_path("silver/" + name); }

std::vector<std::string> training_args(const std::filesystem::path& dir) {
  return {"--out-dir",        dir.string(),
          "train",            "--strategy",
          "amb",              "--corpus",
          fixture("raw.conllu"), "--bilingual",
          fixture("bilingual.tsv"), "--high-resource",
          fixture("high_resource.conllu"), "--monolingual",
          fixture("monolingual.tsv"), "--seeds",
          "1,2",              "--word-dim",
          "6",                "--char-dim",
          "5",                "--hidden-dim",
          "6",                "--min-epochs",
          "2",                "--max-epochs",
          "3"};
}

}  // namespace

TEST_CASE("usage errors exit with 1") {
  CHECK(cli({}).code == 1);
  CHECK(cli({"frobnicate"}).code == 1);
  const auto no_gold = cli({"eval", "--model", "x.ckpt"});
  CHECK(no_gold.code == 1);
  CHECK(no_gold.err.find("--gold") != std::string::npos);
  CHECK(cli({"train", "--strategy", "crf"}).code == 1);
  CHECK(cli({"train"}).code == 1);  // no silver, corpus or dictionaries
  CHECK(cli({"baseline", "--system", "hmm", "--gold", fixture("high_resource.conllu")}).code == 1);
  const auto dir = scratch_dir("cli_annotate_pla");
  CHECK(cli({"--out-dir", dir.string(), "annotate", "--strategy", "pla16", "--corpus", fixture("raw.conllu"),
             "--bilingual", fixture("bilingual.tsv"), "--high-resource", fixture("high_resource.conllu")})
            .code == 1);
}

TEST_CASE("help exits with 0") {
  const auto r = cli({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("annotate") != std::string::npos);
}

TEST_CASE("annotate reproduces the oracle silver files") {
  const auto dir = scratch_dir("cli_annotate");
  const std::vector<std::string> common{"--corpus", fixture("raw.conllu"), "--bilingual", fixture("bilingual.tsv"),
                                        "--high-resource", fixture("high_resource.conllu"), "--monolingual",
                                        fixture("monolingual.tsv")};
  std::vector<std::string> freq{"--out-dir", dir.string(), "annotate", "--strategy", "freq"};
  freq.insert(freq.end(), common.begin(), common.end());
  REQUIRE(cli(freq).code == 0);
  CHECK(read_file((dir / "silver.freq.txt").string()) == read_file(fixture("freq.golden.silver")));

  std::vector<std::string> amb{"--out-dir", dir.string(), "annotate", "--strategy", "amb", "-o",
                               (dir / "a.txt").string()};
  amb.insert(amb.end(), common.begin(), common.end());
  REQUIRE(cli(amb).code == 0);
  CHECK(read_file((dir / "a.txt").string()) == read_file(fixture("amb.golden.silver")));

  const auto report = cli({"--out-dir", dir.string(), "report", "--freq", (dir / "silver.freq.txt").string(),
                           "--amb", (dir / "a.txt").string()});
  CHECK(report.code == 0);
  CHECK(report.out.find("table silver-freq") != std::string::npos);
  CHECK(report.out.find("multi-label") != std::string::npos);
}

TEST_CASE("train then eval") {
  const auto dir = scratch_dir("cli_train");
  const auto trained = cli(training_args(dir));
  REQUIRE(trained.code == 0);
  CHECK(std::filesystem::exists(dir / "model.seed1.ckpt"));
  CHECK(std::filesystem::exists(dir / "model.seed2.ckpt"));
  CHECK(trained.out.find("completed: 2/2") != std::string::npos);

  const auto eval = cli({"--out-dir", dir.string(), "eval", "--model", (dir / "model.seed1.ckpt").string(),
                         (dir / "model.seed2.ckpt").string(), "--gold", fixture("high_resource.conllu")});
  REQUIRE(eval.code == 0);
  CHECK(eval.out.find("seed 1: accuracy") != std::string::npos);
  CHECK(eval.out.find("seed 2: accuracy") != std::string::npos);
  CHECK(eval.out.find("mean: ") != std::string::npos);
  CHECK(read_file((dir / "eval_report.txt").string()) == eval.out);
  CHECK(std::filesystem::exists(dir / "predictions.conllu"));

  // same inputs, same bytes
  const auto dir2 = scratch_dir("cli_train_again");
  REQUIRE(cli(training_args(dir2)).code == 0);
  CHECK(read_file((dir / "train_report.txt").string()) == read_file((dir2 / "train_report.txt").string()));
  CHECK(read_file((dir / "model.seed1.ckpt").string()) == read_file((dir2 / "model.seed1.ckpt").string()));

  // untagged gold token
  CHECK(cli({"--out-dir", dir.string(), "eval", "--model", (dir / "model.seed1.ckpt").string(), "--gold",
             data_path("sample.conllu")})
            .code == 2);
}

TEST_CASE("data errors exit with 2") {
  const auto dir = scratch_dir("cli_data");
  CHECK(cli({"--out-dir", dir.string(), "eval", "--model", "/nonexistent.ckpt", "--gold",
             fixture("high_resource.conllu")})
            .code == 2);
  const auto bad = dir / "bad.conllu";
  {
    std::ofstream f(bad);
    f << "1\tonly\tthree\n";
  }
  const auto r = cli({"--out-dir", dir.string(), "report", "--gold", bad.string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("data error") != std::string::npos);
}

TEST_CASE("baselines from the command line") {
  const auto dir = scratch_dir("cli_baseline");
  const auto maj = cli({"--out-dir", dir.string(), "baseline", "--system", "majority", "--gold",
                        fixture("high_resource.conllu"), "--tag", "NOUN"});
  REQUIRE(maj.code == 0);
  CHECK(maj.out.find("seed 0: accuracy") != std::string::npos);

  const auto clu = cli({"--out-dir", dir.string(), "baseline", "--system", "cluster", "--clusters", "2",
                        "--iterations", "5", "--seeds", "3", "--gold", fixture("high_resource.conllu"),
                        "--corpus", fixture("raw.conllu"), "--monolingual", fixture("monolingual.tsv")});
  REQUIRE(clu.code == 0);
  CHECK(std::filesystem::exists(dir / "clusters.seed3.tsv"));
}

TEST_CASE("the installed binary reports exit codes") {
  const std::string bin = LRTAG_CLI_PATH;
  const auto dir = scratch_dir("cli_binary");
  const std::string quiet = " >" + (dir / "o.txt").string() + " 2>&1";
  const int ok = std::system((bin + " --help" + quiet).c_str());
  const int usage = std::system((bin + " eval --model x" + quiet).c_str());
  REQUIRE(ok != -1);
  CHECK(WEXITSTATUS(ok) == 0);
  CHECK(WEXITSTATUS(usage) == 1);
}
