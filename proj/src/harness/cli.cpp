#include "lrtag/harness/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <spdlog/spdlog.h>

#include "lrtag/baselines/taggers.hpp"
#include "lrtag/corpus/text.hpp"
#include "lrtag/corpus/vocabulary.hpp"
#include "lrtag/error.hpp"
#include "lrtag/harness/evaluate.hpp"
#include "lrtag/harness/experiment.hpp"
#include "lrtag/silver/silver_io.hpp"

namespace lrtag {
namespace {

namespace fs = std::filesystem;

struct Globals {
  std::string config_file;
  std::string out_dir = ".";
  std::uint64_t seed = 0;
  bool verbose = false;
};

// Every config key as a --dashed option; values are applied after the config
// file so the command line wins.
struct ConfigOptions {
  std::map<std::string, std::string> values;

  void attach(CLI::App& cmd) {
    for (const auto& key : ExperimentConfig::keys()) {
      std::string flag = key;
      std::replace(flag.begin(), flag.end(), '_', '-');
      cmd.add_option("--" + flag, values[key], "config key " + key);
    }
  }

  ExperimentConfig resolve(const CLI::App& cmd, const Globals& g) const {
    ExperimentConfig c;
    if (!g.config_file.empty()) apply_config_file(c, g.config_file);
    for (const auto& [key, value] : values) {
      std::string flag = key;
      std::replace(flag.begin(), flag.end(), '_', '-');
      if (cmd.count("--" + flag) > 0) c.set(key, value);
    }
    if (g.seed != 0) c.seeds = {g.seed};
    return c;
  }
};

fs::path output_path(const Globals& g, const std::string& name) {
  fs::create_directories(g.out_dir);
  return fs::path(g.out_dir) / name;
}

std::ofstream open_output(const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path.string());
  return out;
}

void write_vocabulary_files(const Globals& g, const Vocabulary& vocab) {
  auto words = open_output(output_path(g, "words.txt"));
  for (const auto& w : vocab.words()) words << w << '\n';
  auto chars = open_output(output_path(g, "chars.txt"));
  for (char32_t cp : vocab.chars()) chars << text::encode_utf8(cp) << '\n';
}

int cmd_prepare(const ExperimentConfig& c, const Globals& g, std::ostream& out) {
  if (c.raw.empty()) throw UsageError("prepare needs --raw");
  if (c.bilingual.empty()) throw UsageError("prepare needs --bilingual");
  ExperimentConfig only_raw = c;
  only_raw.corpus.clear();
  const ExperimentInputs in = load_inputs(only_raw, false);
  const auto path = output_path(g, "clean.conllu");
  auto file = open_output(path);
  write_conllu(file, *in.raw);
  const Corpus* corpora[] = {&*in.raw};
  const Vocabulary vocab =
      build_vocabulary(corpora, in.embeddings ? &*in.embeddings : nullptr, c.max_words);
  write_vocabulary_files(g, vocab);

  auto report = open_output(output_path(g, "prepare_report.txt"));
  const auto& s = in.cleaning;
  for (std::ostream* o : {static_cast<std::ostream*>(&report), &out}) {
    *o << "lrtag-report 1\ncommand: prepare\n"
       << "segmented: " << s.segmented << '\n'
       << "dropped_foreign: " << s.dropped_foreign << '\n'
       << "dropped_symbols: " << s.dropped_symbols << '\n'
       << "dropped_no_dictionary_word: " << s.dropped_no_dictionary_word << '\n'
       << "kept: " << s.kept << '\n'
       << "tokens: " << in.raw->token_count() << '\n'
       << "words: " << vocab.words().size() << '\n'
       << "chars: " << vocab.chars().size() << '\n';
  }
  return 0;
}

int cmd_annotate(const ExperimentConfig& c, const Globals& g, std::ostream& out,
                 const std::string& output) {
  ExperimentConfig cfg = c;
  cfg.silver.clear();
  const ExperimentInputs in = load_inputs(cfg, false);
  const SilverMode mode = silver_mode(c.strategy);
  if (c.strategy != Strategy::Freq && c.strategy != Strategy::Amb) {
    throw UsageError("annotate --strategy must be freq or amb");
  }
  const SilverCorpus silver = annotate_inputs(in, mode);
  const fs::path path = output.empty()
                            ? output_path(g, std::string("silver.") + std::string(strategy_name(c.strategy)) + ".txt")
                            : fs::path(output);
  auto file = open_output(path);
  write_silver(file, silver);
  const std::size_t sentences_in = in.raw->sentences.size();
  out << "annotated " << silver.sentences.size() << " of " << sentences_in << " sentences ("
      << silver.token_count() << " tokens) -> " << path.string() << '\n';
  if (silver.sentences.empty()) {
    spdlog::warn("no sentence received usable supervision; check dictionary coverage");
  }
  return 0;
}

int cmd_train(const ExperimentConfig& c, const Globals& g, std::ostream& out) {
  c.validate_for_training();
  const ExperimentInputs in = load_inputs(c, !c.gold.empty());
  ExperimentReport report = run_experiment(c, in, [&](std::uint64_t seed, const TrainResult& r) {
    save_checkpoint_file(output_path(g, "model.seed" + std::to_string(seed) + ".ckpt").string(),
                         r.model);
  });
  const auto path = output_path(g, "train_report.txt");
  write_report_file(path.string(), report);
  write_report(out, report);
  return report.completed == 0 ? 2 : 0;
}

int cmd_eval(const std::vector<std::string>& models, const std::string& gold_path, const Globals& g,
             std::ostream& out) {
  const Corpus gold = load_conllu_file(gold_path);
  std::vector<TaggerModel> loaded;
  for (const auto& m : models) loaded.push_back(load_checkpoint_file(m));
  std::size_t next = 0;
  std::vector<std::uint64_t> seeds;
  for (const auto& m : loaded) seeds.push_back(m.hyperparams.seed);
  std::optional<std::vector<std::vector<PosTag>>> predictions;
  ExperimentReport report = run_seeds(seeds, [&](std::uint64_t) {
    const TaggerModel& model = loaded[next++];
    const TaggerFn tagger = neural_tagger(model);
    SeedRun run;
    run.accuracy = evaluate(tagger, gold).value();
    if (!predictions) predictions = tag_corpus(tagger, gold);
    return run;
  });
  report.command = "eval";
  report.strategy = "-";
  report.distributions.push_back(gold_distribution("gold", gold));
  if (predictions) {
    report.distributions.push_back(prediction_distribution(
        "predicted-seed" + std::to_string(report.runs.front().seed), *predictions));
    Corpus tagged = gold;
    for (std::size_t s = 0; s < tagged.sentences.size(); ++s) {
      for (std::size_t t = 0; t < tagged.sentences[s].tokens.size(); ++t) {
        tagged.sentences[s].tokens[t].gold_tag = (*predictions)[s][t];
      }
    }
    auto file = open_output(output_path(g, "predictions.conllu"));
    write_conllu(file, tagged);
  }
  write_report_file(output_path(g, "eval_report.txt").string(), report);
  write_report(out, report);
  return report.completed == 0 ? 2 : 0;
}

int cmd_baseline(const ExperimentConfig& c, const Globals& g, std::ostream& out,
                 const std::string& system, std::size_t clusters, int iterations,
                 const std::string& majority_tag) {
  if (c.gold.empty()) throw UsageError("baseline needs --gold");
  const ExperimentInputs in = load_inputs(c, true);
  ExperimentReport report;
  std::optional<std::vector<std::vector<PosTag>>> predictions;
  if (system == "majority") {
    PosTag tag = PosTag::NOUN;
    if (!majority_tag.empty()) {
      const auto parsed = parse_ud_tag(majority_tag);
      if (!parsed) throw UsageError("unknown tag '" + majority_tag + "'");
      tag = *parsed;
    }
    const MajorityTagger tagger =
        majority_tag.empty() && in.high_resource ? majority_baseline(&*in.high_resource, tag)
                                                 : MajorityTagger(tag);
    report = run_seeds({0}, [&](std::uint64_t) {
      SeedRun run;
      run.accuracy = evaluate(tagger, *in.gold).value();
      predictions = tag_corpus(tagger, *in.gold);
      return run;
    });
  } else if (system == "cluster") {
    if (!in.raw) throw UsageError("cluster baseline needs --raw or --corpus");
    if (!in.monolingual) throw UsageError("cluster baseline needs --monolingual");
    bool dumped = false;
    report = run_seeds(c.seeds, [&](std::uint64_t seed) {
      ClusterBaselineOptions opts;
      opts.mixture.clusters = clusters;
      opts.mixture.iterations = iterations;
      opts.mixture.seed = seed;
      const ClusterTagger tagger = train_cluster_baseline(*in.raw, *in.monolingual, opts);
      SeedRun run;
      run.accuracy = evaluate(std::cref(tagger), *in.gold).value();
      if (!dumped) {
        auto file = open_output(output_path(g, "clusters.seed" + std::to_string(seed) + ".tsv"));
        write_cluster_assignments(file, tagger.model(), tagger.map());
        predictions = tag_corpus(std::cref(tagger), *in.gold);
        dumped = true;
      }
      return run;
    });
  } else {
    throw UsageError("unknown baseline system '" + system + "' (expected cluster or majority)");
  }
  report.command = "baseline";
  report.strategy = system;
  report.distributions.push_back(gold_distribution("gold", *in.gold));
  if (predictions) report.distributions.push_back(prediction_distribution("predicted", *predictions));
  write_report_file(output_path(g, "baseline_report.txt").string(), report);
  write_report(out, report);
  return report.completed == 0 ? 2 : 0;
}

int cmd_report(const Globals& g, std::ostream& out, const std::string& gold,
               const std::string& freq, const std::string& amb, const std::string& predicted) {
  std::vector<TagDistribution> tables;
  if (!gold.empty()) tables.push_back(gold_distribution("gold", load_conllu_file(gold)));
  if (!freq.empty()) {
    tables.push_back(silver_distribution("silver-freq", load_silver_file(freq, SilverMode::Freq)));
  }
  if (!amb.empty()) {
    tables.push_back(silver_distribution("silver-amb", load_silver_file(amb, SilverMode::Amb)));
  }
  if (!predicted.empty()) {
    tables.push_back(gold_distribution("predicted", load_conllu_file(predicted)));
  }
  if (tables.empty()) throw UsageError("report needs at least one of --gold, --freq, --amb, --predicted");
  std::ostringstream body;
  body << "lrtag-report 1\ncommand: report\n";
  write_distribution_tables(body, tables);
  auto file = open_output(output_path(g, "distribution_report.txt"));
  file << body.str();
  out << body.str();
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weakly supervised cross-lingual POS tagging", "lrtag"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--config", g.config_file, "key = value configuration file");
  app.add_option("--out-dir", g.out_dir, "directory for outputs")->capture_default_str();
  app.add_option("--seed", g.seed, "run a single seed (overrides seeds)");
  app.add_flag("-v,--verbose", g.verbose, "debug logging");

  auto* prepare = app.add_subcommand("prepare", "clean raw text and build vocabularies");
  ConfigOptions prepare_opts;
  prepare_opts.attach(*prepare);

  auto* annotate = app.add_subcommand("annotate", "build FREQ or AMB silver data");
  ConfigOptions annotate_opts;
  annotate_opts.attach(*annotate);
  std::string annotate_output;
  annotate->add_option("-o,--output", annotate_output, "silver file (default OUT_DIR/silver.STRATEGY.txt)");

  auto* train = app.add_subcommand("train", "train the tagger once per seed");
  ConfigOptions train_opts;
  train_opts.attach(*train);

  auto* eval = app.add_subcommand("eval", "token accuracy of trained models");
  std::vector<std::string> eval_models;
  std::string eval_gold;
  eval->add_option("--model", eval_models, "checkpoint file(s)")->required();
  eval->add_option("--gold", eval_gold, "gold CoNLL-U corpus")->required();

  auto* baseline = app.add_subcommand("baseline", "cluster or majority baseline");
  ConfigOptions baseline_opts;
  baseline_opts.attach(*baseline);
  std::string system;
  std::size_t clusters = 17;
  int iterations = 50;
  std::string majority_tag;
  baseline->add_option("--system", system, "cluster or majority")->required();
  baseline->add_option("--clusters", clusters, "mixture components")->capture_default_str();
  baseline->add_option("--iterations", iterations, "EM iterations")->capture_default_str();
  baseline->add_option("--tag", majority_tag, "fixed tag for the majority baseline");

  auto* report = app.add_subcommand("report", "tag distribution tables");
  std::string r_gold, r_freq, r_amb, r_pred;
  report->add_option("--gold", r_gold, "gold CoNLL-U");
  report->add_option("--freq", r_freq, "FREQ silver file");
  report->add_option("--amb", r_amb, "AMB silver file");
  report->add_option("--predicted", r_pred, "CoNLL-U with predicted tags");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 1;
  }

  spdlog::set_level(g.verbose ? spdlog::level::debug : spdlog::level::info);
  try {
    if (*prepare) return cmd_prepare(prepare_opts.resolve(*prepare, g), g, out);
    if (*annotate) return cmd_annotate(annotate_opts.resolve(*annotate, g), g, out, annotate_output);
    if (*train) return cmd_train(train_opts.resolve(*train, g), g, out);
    if (*eval) return cmd_eval(eval_models, eval_gold, g, out);
    if (*baseline) {
      return cmd_baseline(baseline_opts.resolve(*baseline, g), g, out, system, clusters, iterations,
                          majority_tag);
    }
    if (*report) return cmd_report(g, out, r_gold, r_freq, r_amb, r_pred);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n\n" << app.help();
    return 1;
  } catch (const DataError& e) {
    err << "data error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}

int run_cli(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace lrtag
