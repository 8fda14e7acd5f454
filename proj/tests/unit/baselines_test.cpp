#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "lrtag/baselines/features.hpp"
#include "lrtag/baselines/mixture.hpp"
#include "lrtag/baselines/taggers.hpp"
#include "lrtag/error.hpp"

using namespace lrtag;

namespace {

Corpus sentences(std::initializer_list<std::vector<std::string>> list) {
  Corpus c;
  for (const auto& words : list) {
    Sentence s;
    for (const auto& w : words) s.tokens.push_back(Token{w, std::nullopt});
    c.sentences.push_back(s);
  }
  return c;
}

// Two word groups that never share a context.
Corpus separable_corpus() {
  Corpus c;
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const bool a = rng() % 2;
    const std::string w = std::string(a ? "a" : "b") + std::to_string(rng() % 5);
    Sentence s;
    for (const char* x : {a ? "the" : "to", w.c_str(), a ? "sat" : "now"}) s.tokens.push_back(Token{x, std::nullopt});
    c.sentences.push_back(s);
  }
  return c;
}

}  // namespace

TEST_CASE("type features on a toy sentence") {
  const auto f = extract_type_features(sentences({{"a", "b", "a"}}), 100);
  CHECK(f.types == std::vector<std::string>{"a", "b"});
  CHECK(f.context_words == std::vector<std::string>{"a", "b"});
  CHECK(f.dimension == 7);
  const std::size_t a = f.find("a"), b = f.find("b");
  CHECK(f.value(a, f.left_feature(1)) == 1.0);   // b a
  CHECK(f.value(a, f.right_feature(1)) == 1.0);  // a b
  CHECK(f.value(a, f.left_feature(0)) == 0.0);
  CHECK(f.value(b, f.left_feature(0)) == 1.0);
  CHECK(f.value(b, f.right_feature(0)) == 1.0);
  CHECK(f.find("c") == f.types.size());

  const auto g = extract_type_features(sentences({{"B.", "x7", "Ab"}}), 1);
  CHECK(g.context_words == std::vector<std::string>{"Ab"});  // tie broken lexicographically
  CHECK(g.dimension == 5);
  const std::size_t bdot = g.find("B.");
  CHECK(g.value(bdot, g.capital_feature()) == 1.0);
  CHECK(g.value(bdot, g.punct_feature()) == 1.0);
  CHECK(g.value(bdot, g.digit_feature()) == 0.0);
  CHECK(g.value(g.find("x7"), g.digit_feature()) == 1.0);
  CHECK(g.value(g.find("x7"), g.right_feature(0)) == 1.0);
  CHECK(g.value(g.find("x7"), g.capital_feature()) == 0.0);
}

TEST_CASE("context counts agree with a brute-force bigram count") {
  std::mt19937_64 rng(11);
  const std::vector<std::string> vocab{"p", "q", "r", "s", "t", "u"};
  for (int trial = 0; trial < 30; ++trial) {
    Corpus c;
    std::vector<std::vector<std::string>> raw;
    for (int s = 0; s < 4; ++s) {
      raw.emplace_back();
      Sentence sent;
      for (int i = 0; i < 5; ++i) {
        raw.back().push_back(vocab[rng() % vocab.size()]);
        sent.tokens.push_back(Token{raw.back().back(), std::nullopt});
      }
      c.sentences.push_back(sent);
    }
    const std::size_t F = 3;
    const auto f = extract_type_features(c, F);
    REQUIRE(f.context_words.size() == std::min<std::size_t>(F, f.types.size()));
    for (std::size_t t = 0; t < f.types.size(); ++t) {
      for (std::size_t k = 0; k < f.context_words.size(); ++k) {
        double left = 0, right = 0;
        for (const auto& s : raw) {
          for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] != f.types[t]) continue;
            if (i > 0 && s[i - 1] == f.context_words[k]) ++left;
            if (i + 1 < s.size() && s[i + 1] == f.context_words[k]) ++right;
          }
        }
        CHECK(f.value(t, f.left_feature(k)) == left);
        CHECK(f.value(t, f.right_feature(k)) == right);
      }
    }
  }
}

TEST_CASE("mixture separates two disjoint context groups") {
  const auto f = extract_type_features(separable_corpus(), 100);
  MixtureOptions o;
  o.clusters = 2;
  o.iterations = 30;
  const auto m = fit_mixture(f, o);
  const int ca = m.cluster_of("a0"), cb = m.cluster_of("b0");
  CHECK(ca != cb);
  for (int i = 0; i < 5; ++i) {
    CHECK(m.cluster_of("a" + std::to_string(i)) == ca);
    CHECK(m.cluster_of("b" + std::to_string(i)) == cb);
  }
  CHECK(m.cluster_of("zzz") == -1);
}

TEST_CASE("penalized EM objective never decreases") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const auto f = extract_type_features(separable_corpus(), 100);
    MixtureOptions o;
    o.clusters = 4;
    o.iterations = 25;
    o.seed = seed;
    const auto m = fit_mixture(f, o);
    REQUIRE(m.objective_trace.size() == 25);
    REQUIRE(m.log_likelihood_trace.size() == 25);
    for (std::size_t i = 1; i < m.objective_trace.size(); ++i) {
      CHECK(m.objective_trace[i] >= m.objective_trace[i - 1] - 1e-9);
    }
    double sum = 0;
    for (double p : m.priors) sum += p;
    CHECK(sum == doctest::Approx(1.0));
    for (const auto& row : m.multinomials) {
      double s = 0;
      for (double x : row) {
        CHECK(x > 0.0);
        s += x;
      }
      CHECK(s == doctest::Approx(1.0));
    }
  }
}

TEST_CASE("mixture fitting is deterministic for a seed and validates its options") {
  const auto f = extract_type_features(separable_corpus(), 100);
  MixtureOptions o;
  o.clusters = 3;
  o.iterations = 10;
  const auto a = fit_mixture(f, o);
  const auto b = fit_mixture(f, o);
  CHECK(a.assignment == b.assignment);
  CHECK(a.objective_trace == b.objective_trace);

  MixtureOptions bad = o;
  bad.clusters = 1;
  CHECK_THROWS_AS(fit_mixture(f, bad), UsageError);
  bad = o;
  bad.clusters = f.types.size() + 1;
  CHECK_THROWS_AS(fit_mixture(f, bad), UsageError);
  bad = o;
  bad.alpha = 0.0;
  CHECK_THROWS_AS(fit_mixture(f, bad), UsageError);
}

TEST_CASE("cluster to tag mapping") {
  MixtureModel m;
  m.clusters = 3;
  m.types = {"go", "run", "the", "x"};
  m.assignment = {0, 0, 1, 2};
  Corpus c;
  Sentence s;
  for (int i = 0; i < 10; ++i) s.tokens.push_back(Token{"go", std::nullopt});
  for (int i = 0; i < 3; ++i) s.tokens.push_back(Token{"the", std::nullopt});
  for (int i = 0; i < 2; ++i) s.tokens.push_back(Token{"x", std::nullopt});
  c.sentences.push_back(s);

  MonolingualTagDictionary dict;
  dict.add("go", PosTag::VERB);
  dict.add("the", PosTag::NOUN);
  dict.add("the", PosTag::DET);
  const auto map = map_clusters_to_tags(m, c, dict);
  REQUIRE(map.tags.size() == 3);
  CHECK(map.tags[0] == PosTag::VERB);
  CHECK(map.tags[1] == PosTag::DET);  // DET and NOUN tie at 3, DET comes first
  CHECK(map.tags[2] == PosTag::NOUN);  // no dictionary evidence

  MonolingualTagDictionary d2;
  d2.add("x", PosTag::VERB);
  d2.add("the", PosTag::NOUN);
  m.assignment = {0, 0, 2, 2};
  CHECK(map_clusters_to_tags(m, c, d2).tags[2] == PosTag::NOUN);  // 3 NOUN vs 2 VERB

  std::ostringstream out;
  write_cluster_assignments(out, m, map);
  CHECK(out.str() == "go\t0\tVERB\nrun\t0\tVERB\nthe\t2\tNOUN\nx\t2\tNOUN\n");

  const ClusterTagger tagger(m, map, PosTag::X);
  CHECK(tagger.tag_of("go") == PosTag::VERB);
  CHECK(tagger.tag_of("never") == PosTag::X);
}

TEST_CASE("cluster taggers are type level") {
  MonolingualTagDictionary dict;
  for (int i = 0; i < 5; ++i) {
    dict.add("a" + std::to_string(i), PosTag::NOUN);
    dict.add("b" + std::to_string(i), PosTag::VERB);
  }
  ClusterBaselineOptions o;
  o.mixture.clusters = 2;
  o.mixture.iterations = 20;
  const auto tagger = train_cluster_baseline(separable_corpus(), dict, o);
  CHECK(tagger.tag_of("a3") == PosTag::NOUN);
  CHECK(tagger.tag_of("b1") == PosTag::VERB);
  const auto s = sentences({{"a1", "b2", "a1"}}).sentences[0];
  const auto tags = tagger(s);
  CHECK(tags[0] == tags[2]);
  CHECK(tags == std::vector<PosTag>{PosTag::NOUN, PosTag::VERB, PosTag::NOUN});
}

TEST_CASE("majority baseline") {
  CHECK(majority_baseline().tag() == PosTag::NOUN);
  CHECK(majority_baseline(nullptr, PosTag::X).tag() == PosTag::X);
  Corpus c;
  Sentence s;
  for (PosTag t : {PosTag::VERB, PosTag::PUNCT, PosTag::VERB, PosTag::ADJ}) s.tokens.push_back(Token{"w", t});
  c.sentences.push_back(s);
  CHECK(majority_baseline(&c).tag() == PosTag::VERB);
  s.tokens.push_back(Token{"w", PosTag::ADJ});
  c.sentences[0] = s;
  CHECK(majority_baseline(&c).tag() == PosTag::ADJ);  // tie, ADJ first

  const MajorityTagger m(PosTag::PRON);
  CHECK(m(s) == std::vector<PosTag>(5, PosTag::PRON));
  CHECK(m(Sentence{}).empty());
}

TEST_CASE("cluster tags do not depend on sentence order") {
  MonolingualTagDictionary dict;
  dict.add("a0", PosTag::NOUN);
  dict.add("b0", PosTag::VERB);
  auto c = separable_corpus();
  ClusterBaselineOptions o;
  o.mixture.clusters = 2;
  o.mixture.iterations = 20;
  const auto t1 = train_cluster_baseline(c, dict, o);
  std::reverse(c.sentences.begin(), c.sentences.end());
  const auto t2 = train_cluster_baseline(c, dict, o);
  for (const auto& type : t1.model().types) CHECK(t1.tag_of(type) == t2.tag_of(type));
}
