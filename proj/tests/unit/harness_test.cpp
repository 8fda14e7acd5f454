#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "lrtag/baselines/taggers.hpp"
#include "lrtag/error.hpp"
#include "lrtag/harness/config.hpp"
#include "lrtag/harness/early_stopping.hpp"
#include "lrtag/harness/evaluate.hpp"
#include "lrtag/harness/experiment.hpp"
#include "lrtag/harness/report.hpp"
#include "lrtag/harness/synthetic.hpp"

using namespace lrtag;

namespace {

StoppingOutcome run_losses(const std::vector<double>& losses, std::vector<int>* bests = nullptr) {
  return run_until_stopped(
      StoppingRule{},
      [&](int epoch) { return losses.at(static_cast<std::size_t>(epoch - 1)); },
      [&](int epoch) {
        if (bests) bests->push_back(epoch);
      });
}

Corpus gold_of(std::initializer_list<std::vector<PosTag>> tags) {
  Corpus c;
  int n = 0;
  for (const auto& sent : tags) {
    Sentence s;
    for (PosTag t : sent) s.tokens.push_back(Token{"w" + std::to_string(n++), t});
    c.sentences.push_back(s);
  }
  return c;
}

SyntheticOptions small_pair() {
  SyntheticOptions o;
  o.raw_sentences = 150;
  o.gold_sentences = 30;
  o.high_resource_sentences = 300;
  return o;
}

ExperimentConfig small_config(Strategy s) {
  ExperimentConfig cfg;
  cfg.strategy = s;
  cfg.hyper.word_dim = 8;
  cfg.hyper.char_dim = 6;
  cfg.hyper.hidden_dim = 8;
  cfg.hyper.min_epochs = 2;
  cfg.hyper.max_epochs = 3;
  cfg.seeds = {1, 2};
  return cfg;
}

ExperimentInputs inputs_from(const SyntheticLanguagePair& pair) {
  ExperimentInputs in;
  in.gold = pair.gold;
  in.raw = pair.raw;
  in.bilingual = pair.bilingual;
  in.monolingual = pair.monolingual;
  in.high_resource = pair.high_resource;
  return in;
}

}  // namespace

TEST_CASE("early stopping regimes") {
  SUBCASE("steady improvement runs to the epoch cap") {
    std::vector<double> l(40);
    for (std::size_t i = 0; i < l.size(); ++i) l[i] = 100.0 - static_cast<double>(i);
    std::vector<int> bests;
    const auto o = run_losses(l, &bests);
    CHECK(o.stop_epoch == 30);
    CHECK(o.best_epoch == 30);
    CHECK(o.losses.size() == 30);
    CHECK(bests.size() == 30);
  }
  SUBCASE("a flat loss stops at the minimum") {
    const auto o = run_losses(std::vector<double>(40, 1.0));
    CHECK(o.stop_epoch == 15);
    CHECK(o.best_epoch == 1);
  }
  SUBCASE("plateau after the minimum waits for patience") {
    std::vector<double> l(40);
    for (std::size_t i = 0; i < l.size(); ++i) l[i] = i < 20 ? 100.0 - static_cast<double>(i) : 90.0;
    std::vector<int> bests;
    const auto o = run_losses(l, &bests);
    CHECK(o.best_epoch == 20);
    CHECK(o.stop_epoch == 23);
    CHECK(o.best_loss == 81.0);
    CHECK(bests.back() == 20);
  }
  SUBCASE("improvements below the tolerance do not count") {
    std::vector<double> l(40);
    for (std::size_t i = 0; i < l.size(); ++i) l[i] = 5.0 - 1e-8 * static_cast<double>(i);
    const auto o = run_losses(l);
    CHECK(o.best_epoch == 1);
    CHECK(o.stop_epoch == 15);
  }
  SUBCASE("the stopper itself") {
    EarlyStopper s(StoppingRule{2, 5, 1});
    CHECK(s.observe(3.0));
    CHECK_FALSE(s.should_stop());
    CHECK_FALSE(s.observe(3.5));
    CHECK(s.should_stop());
    CHECK(s.best_epoch() == 1);
    CHECK(s.best_loss() == 3.0);
  }
  Hyperparams h;
  h.min_epochs = 4;
  h.max_epochs = 9;
  h.patience = 2;
  const auto r = StoppingRule::from(h);
  CHECK(r.min_epochs == 4);
  CHECK(r.max_epochs == 9);
  CHECK(r.patience == 2);
}

TEST_CASE("token accuracy") {
  const auto gold = gold_of({{PosTag::NOUN, PosTag::VERB}, {PosTag::NOUN, PosTag::NOUN}});
  const auto a = evaluate(MajorityTagger(PosTag::NOUN), gold);
  CHECK(a.correct == 3);
  CHECK(a.total == 4);
  CHECK(a.value() == doctest::Approx(0.75));
  CHECK(evaluate(MajorityTagger(PosTag::X), gold).value() == 0.0);
  CHECK(evaluate(MajorityTagger(), Corpus{}).value() == 0.0);

  const TaggerFn short_tagger = [](const Sentence&) { return std::vector<PosTag>{PosTag::NOUN}; };
  CHECK_THROWS_AS(evaluate(short_tagger, gold), DataError);
  Corpus untagged = gold;
  untagged.sentences[1].tokens[0].gold_tag.reset();
  CHECK_THROWS_AS(evaluate(MajorityTagger(), untagged), DataError);
}

TEST_CASE("accuracy does not depend on sentence order") {
  std::mt19937_64 rng(4);
  Corpus gold;
  for (int s = 0; s < 20; ++s) {
    Sentence sent;
    for (int i = 0; i < 5; ++i) sent.tokens.push_back(Token{std::string(1, static_cast<char>('a' + rng() % 6)), tag_at(rng() % 4)});
    gold.sentences.push_back(sent);
  }
  // deterministic per-word tagger
  const TaggerFn f = [](const Sentence& s) {
    std::vector<PosTag> out;
    for (const auto& t : s.tokens) out.push_back(tag_at(static_cast<std::size_t>(t.surface[0] - 'a') % 4));
    return out;
  };
  const auto base = evaluate(f, gold);
  for (int k = 0; k < 5; ++k) {
    std::shuffle(gold.sentences.begin(), gold.sentences.end(), rng);
    const auto again = evaluate(f, gold);
    CHECK(again.correct == base.correct);
    CHECK(again.total == base.total);
  }
}

TEST_CASE("mean and population std") {
  const std::vector<double> v{0.4, 0.6};
  const auto m = mean_and_std(v);
  CHECK(m.mean == doctest::Approx(0.5));
  CHECK(m.stddev == doctest::Approx(0.1));
  const std::vector<double> one{0.7};
  CHECK(mean_and_std(one).stddev == 0.0);
  CHECK(mean_and_std(std::span<const double>{}).mean == 0.0);
}

TEST_CASE("tag distributions") {
  const auto gold = gold_of({{PosTag::NOUN, PosTag::VERB, PosTag::NOUN, PosTag::PUNCT}});
  const auto g = gold_distribution("gold", gold);
  CHECK(g.tokens == 4);
  CHECK(g.percent[index_of(PosTag::NOUN)] == doctest::Approx(50.0));
  CHECK(std::accumulate(g.percent.begin(), g.percent.end(), 0.0) == doctest::Approx(100.0));

  SilverCorpus s;
  s.mode = SilverMode::Freq;
  s.sentences.push_back({{{"a", Single{PosTag::VERB}}, {"b", Masked{}}, {"c", Single{PosTag::ADJ}}}, {}});
  const auto sf = silver_distribution("freq", s);
  CHECK(sf.tokens == 2);
  CHECK_FALSE(sf.multi_label);
  CHECK(sf.percent[index_of(PosTag::VERB)] == doctest::Approx(50.0));
  CHECK(std::accumulate(sf.percent.begin(), sf.percent.end(), 0.0) == doctest::Approx(100.0));

  SilverCorpus a;
  a.mode = SilverMode::Amb;
  a.sentences.push_back({{{"a", Ambiguous{TagSet{PosTag::NOUN, PosTag::VERB}}}, {"b", Ambiguous{TagSet{PosTag::NOUN}}}}, {}});
  const auto sa = silver_distribution("amb", a);
  CHECK(sa.multi_label);
  CHECK(sa.percent[index_of(PosTag::NOUN)] == doctest::Approx(100.0));
  CHECK(sa.percent[index_of(PosTag::VERB)] == doctest::Approx(50.0));

  const auto p = prediction_distribution("pred", {{PosTag::X, PosTag::X}, {PosTag::DET}});
  CHECK(p.tokens == 3);
  CHECK(p.percent[index_of(PosTag::X)] == doctest::Approx(200.0 / 3.0));

  std::ostringstream out;
  const std::vector<TagDistribution> tables{g};
  write_distribution_tables(out, tables);
  CHECK(out.str().find("table gold tokens 4 single-label") != std::string::npos);
  CHECK(out.str().find("NOUN") != std::string::npos);
  CHECK(documented_reference_values().size() == 3);
}

TEST_CASE("config files and keys") {
  ExperimentConfig cfg;
  std::istringstream in(
      "# comment\n"
      "strategy = freq+ae\n"
      "hidden-dim = 12\n"
      "seeds = 3, 4\n"
      "scripts = Latin,Greek\n"
      "foreign_frac = 0.25\n"
      "\n"
      "mono_scheme = unimorph\n");
  apply_config(cfg, in);
  CHECK(cfg.strategy == Strategy::FreqAe);
  CHECK(cfg.hyper.hidden_dim == 12);
  CHECK(cfg.seeds == std::vector<std::uint64_t>{3, 4});
  CHECK(cfg.cleaning.scripts == std::vector<std::string>{"Latin", "Greek"});
  CHECK(cfg.cleaning.foreign_frac == 0.25);
  CHECK(cfg.mono_scheme == TagScheme::Unimorph);

  std::ostringstream written;
  write_config(written, cfg);
  ExperimentConfig back;
  std::istringstream again(written.str());
  apply_config(back, again);
  CHECK(back.strategy == cfg.strategy);
  CHECK(back.hyper == cfg.hyper);
  CHECK(back.seeds == cfg.seeds);
  CHECK(back.cleaning.scripts == cfg.cleaning.scripts);

  CHECK_THROWS_AS(cfg.set("nonsense", "1"), UsageError);
  CHECK_THROWS_AS(cfg.set("word_dim", "abc"), UsageError);
  CHECK_THROWS_AS(cfg.set("strategy", "crf"), UsageError);
  std::istringstream no_eq("strategy freq\n");
  CHECK_THROWS_AS(apply_config(cfg, no_eq), ParseError);
  std::istringstream bad_line("\n\nword_dim = -3\n");
  CHECK_THROWS_WITH_AS(apply_config(cfg, bad_line), doctest::Contains("3"), ParseError);

  CHECK(parse_strategy("amb+ae") == Strategy::AmbAe);
  CHECK(strategy_name(Strategy::Pla16) == "pla16");
  CHECK(silver_mode(Strategy::Pla16) == SilverMode::Amb);
  CHECK(silver_mode(Strategy::FreqAe) == SilverMode::Freq);
  CHECK(uses_autoencoder(Strategy::AmbAe));
  CHECK_FALSE(uses_autoencoder(Strategy::Pla16));
  CHECK(uses_logfreq(Strategy::Pla16));

  ExperimentConfig t;
  CHECK_THROWS_AS(t.validate_for_training(), UsageError);
  t.silver = "x";
  CHECK_NOTHROW(t.validate_for_training());
  ExperimentConfig u;
  u.raw = "r";
  u.bilingual = "b";
  CHECK_THROWS_AS(u.validate_for_training(), UsageError);
  u.high_resource = "d";
  CHECK_NOTHROW(u.validate_for_training());
}

TEST_CASE("seed failures are isolated") {
  const auto r = run_seeds({1, 2, 3}, [](std::uint64_t seed) {
    if (seed == 2) throw std::runtime_error("diverged");
    SeedRun run;
    run.seed = seed;
    run.completed = true;
    run.accuracy = seed == 1 ? 0.4 : 0.6;
    return run;
  });
  CHECK(r.completed == 2);
  REQUIRE(r.runs.size() == 3);
  CHECK_FALSE(r.runs[1].completed);
  CHECK(r.runs[1].error.find("diverged") != std::string::npos);
  CHECK(r.accuracy.mean == doctest::Approx(0.5));
  CHECK(r.accuracy.stddev == doctest::Approx(0.1));
  CHECK_FALSE(r.warnings.empty());

  std::ostringstream out;
  write_report(out, r);
  CHECK(out.str().find("seed 2: failed") != std::string::npos);
  CHECK(out.str().find("completed: 2/3") != std::string::npos);
}

TEST_CASE("synthetic language pair") {
  const auto a = generate_language_pair(small_pair());
  const auto b = generate_language_pair(small_pair());
  CHECK(to_conllu(a.raw_reference) == to_conllu(b.raw_reference));
  CHECK(to_conllu(a.gold) == to_conllu(b.gold));
  CHECK(a.bilingual.entries() == b.bilingual.entries());

  CHECK(a.raw.sentence_count() == 150);
  CHECK(a.gold.sentence_count() == 30);
  CHECK(a.high_resource.sentence_count() == 300);
  CHECK(a.gold.fully_tagged());
  CHECK(a.high_resource.fully_tagged());
  for (const auto& s : a.raw.sentences) {
    CHECK(s.size() >= 4);
    CHECK(s.size() <= 10);
    for (const auto& t : s.tokens) CHECK_FALSE(t.gold_tag.has_value());
  }

  double total = 0;
  for (double p : a.tag_marginals) total += p;
  CHECK(total == doctest::Approx(1.0));
  const auto pi = stationary_distribution(a.transitions);
  for (std::size_t j = 0; j < kTagCount; ++j) {
    double next = 0;
    for (std::size_t i = 0; i < kTagCount; ++i) next += pi[i] * a.transitions[i][j];
    CHECK(next == doctest::Approx(pi[j]).epsilon(1e-9));
  }
  const auto best = std::max_element(a.tag_marginals.begin(), a.tag_marginals.end());
  CHECK(a.majority_tag == tag_at(static_cast<std::size_t>(best - a.tag_marginals.begin())));
  CHECK(a.majority_accuracy == doctest::Approx(*best));

  auto other = small_pair();
  other.seed = 8;
  CHECK_FALSE(to_conllu(generate_language_pair(other).gold) == to_conllu(a.gold));
}

TEST_CASE("a small experiment is reproducible") {
  const auto pair = generate_language_pair(small_pair());
  const auto inputs = inputs_from(pair);
  for (Strategy s : {Strategy::Freq, Strategy::AmbAe, Strategy::Pla16}) {
    CAPTURE(strategy_name(s));
    const auto cfg = small_config(s);
    const auto r1 = run_experiment(cfg, inputs);
    const auto r2 = run_experiment(cfg, inputs);
    std::ostringstream o1, o2;
    write_report(o1, r1);
    write_report(o2, r2);
    CHECK(o1.str() == o2.str());
    CHECK(r1.completed == 2);
    CHECK(r1.evaluated);
    for (const auto& run : r1.runs) {
      CHECK(run.accuracy >= 0.0);
      CHECK(run.accuracy <= 1.0);
      CHECK(run.epochs_trained >= 2);
      CHECK(run.epochs_trained <= 3);
    }
    CHECK_FALSE(r1.distributions.empty());
  }

  auto no_gold = inputs;
  no_gold.gold.reset();
  const auto r = run_experiment(small_config(Strategy::Freq), no_gold);
  CHECK_FALSE(r.evaluated);
  std::ostringstream o;
  write_report(o, r);
  CHECK(o.str().find("accuracy") == std::string::npos);
}

TEST_CASE("training inputs are checked before any work") {
  ExperimentInputs in;
  in.raw = generate_language_pair(small_pair()).raw;
  CHECK_THROWS_AS(annotate_inputs(in, SilverMode::Freq), UsageError);
  CHECK_THROWS_AS(make_training_data(SilverCorpus{}, false, nullptr, 100), DataError);
  CHECK_THROWS_AS(load_conllu_file("/nonexistent/file.conllu"), DataError);
}
