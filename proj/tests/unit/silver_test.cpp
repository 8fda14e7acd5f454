#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "lrtag/corpus/corpus.hpp"
#include "lrtag/error.hpp"
#include "lrtag/silver/annotate.hpp"
#include "lrtag/silver/aux_tasks.hpp"
#include "lrtag/silver/pos_stats.hpp"
#include "lrtag/silver/silver_io.hpp"
#include "support.hpp"

using namespace lrtag;
using lrtag::testing::data_path;
using lrtag::testing::read_file;

namespace {

Corpus tagged(std::initializer_list<std::pair<const char*, PosTag>> tokens) {
  Corpus c;
  Sentence s;
  for (const auto& [w, t] : tokens) s.tokens.push_back(Token{w, t});
  c.sentences.push_back(s);
  return c;
}

Corpus untagged(std::initializer_list<std::vector<std::string>> sentences) {
  Corpus c;
  for (const auto& words : sentences) {
    Sentence s;
    for (const auto& w : words) s.tokens.push_back(Token{w, std::nullopt});
    c.sentences.push_back(s);
  }
  return c;
}

struct Shared {
  BilingualDictionary b = load_bilingual_dictionary("w\tdog\nw\trun\nki\tdog\nf\tfly\n");
  PosStats stats;
  Shared() {
    stats.add("dog", PosTag::NOUN, 5);
    stats.add("run", PosTag::VERB, 3);
    stats.add("run", PosTag::NOUN, 1);
    stats.add("fly", PosTag::NOUN, 2);
    stats.add("fly", PosTag::VERB, 2);
  }
};

}  // namespace

TEST_CASE("pos stats") {
  const auto s = compute_pos_stats(tagged({{"run", PosTag::VERB}, {"run", PosTag::NOUN}, {"run", PosTag::VERB}}));
  REQUIRE(s.counts("run") != nullptr);
  CHECK((*s.counts("run"))[index_of(PosTag::VERB)] == 2);
  CHECK((*s.counts("run"))[index_of(PosTag::NOUN)] == 1);
  CHECK(s.total() == 3);
  CHECK(s.attested("run") == TagSet{PosTag::NOUN, PosTag::VERB});

  CHECK(compute_pos_stats(Corpus{}).size() == 0);

  const auto folded = compute_pos_stats(tagged({{"Run", PosTag::VERB}, {"run", PosTag::VERB}, {"RUN", PosTag::NOUN}}));
  CHECK(folded.size() == 1);
  CHECK((*folded.counts("run"))[index_of(PosTag::VERB)] == 2);
  CHECK((*folded.counts("run"))[index_of(PosTag::NOUN)] == 1);

  Corpus bad = tagged({{"a", PosTag::NOUN}});
  bad.sentences.push_back(untagged({{"x"}}).sentences[0]);
  CHECK_THROWS_WITH_AS(compute_pos_stats(bad), doctest::Contains("sentence 2"), DataError);
}

TEST_CASE("freq tag") {
  Shared f;
  CHECK(freq_tag("w", f.b, f.stats) == Supervision{Single{PosTag::NOUN}});  // 6 vs 3
  CHECK(freq_tag("zz", f.b, f.stats) == Supervision{Masked{}});
  CHECK(freq_tag("f", f.b, f.stats) == Supervision{Single{PosTag::NOUN}});  // tie -> NOUN
  CHECK(freq_tag("W", f.b, f.stats) == Supervision{Single{PosTag::NOUN}});
  const auto b2 = load_bilingual_dictionary("q\tunseen\n");
  CHECK(freq_tag("q", b2, f.stats) == Supervision{Masked{}});
}

TEST_CASE("amb tag set") {
  Shared f;
  CHECK(amb_tagset("w", f.b, f.stats, nullptr) == TagSet{PosTag::NOUN, PosTag::VERB});
  const auto m = load_monolingual_dictionary("only\tADJ\n", TagScheme::Ud);
  CHECK(amb_tagset("only", f.b, f.stats, &m) == TagSet{PosTag::ADJ});
  CHECK(amb_tagset("nothing", f.b, f.stats, &m) == TagSet::all());
  const auto m2 = load_monolingual_dictionary("ki\tPROPN\n", TagScheme::Ud);
  CHECK(amb_tagset("ki", f.b, f.stats, &m2) == TagSet{PosTag::NOUN, PosTag::PROPN});
}

TEST_CASE("annotate freq") {
  Shared f;
  const auto s = annotate_freq(untagged({{"zz", "yy"}, {"ki", "zz"}}), f.b, f.stats);
  CHECK(s.mode == SilverMode::Freq);
  REQUIRE(s.sentences.size() == 1);
  CHECK(s.sentences[0].tokens[0].supervision == Supervision{Single{PosTag::NOUN}});
  CHECK(s.sentences[0].tokens[1].supervision == Supervision{Masked{}});
  CHECK(annotate_freq(Corpus{}, f.b, f.stats).sentences.empty());
}

TEST_CASE("annotate amb") {
  Shared f;
  const auto s = annotate_amb(untagged({{"zz", "yy"}, {"w", "zz"}}), f.b, f.stats, nullptr);
  CHECK(s.mode == SilverMode::Amb);
  REQUIRE(s.sentences.size() == 1);
  CHECK(s.sentences[0].tokens[0].supervision == Supervision{Ambiguous{TagSet{PosTag::NOUN, PosTag::VERB}}});
  CHECK(s.sentences[0].tokens[1].supervision == Supervision{Ambiguous{TagSet::all()}});
}

TEST_CASE("annotation keeps surfaces and order, and drops exactly the uninformative sentences") {
  std::mt19937_64 rng(17);
  const std::vector<std::string> lows{"a", "b", "C", "d", "e", "f"};
  const std::vector<std::string> highs{"x", "y", "z", "u"};
  for (int trial = 0; trial < 200; ++trial) {
    BilingualDictionary b;
    for (const auto& l : lows) {
      if (rng() % 3 == 0) continue;
      for (const auto& h : highs) {
        if (rng() % 2) b.add(l, h);
      }
    }
    PosStats stats;
    for (const auto& h : highs) {
      if (rng() % 4 == 0) continue;
      stats.add(h, tag_at(rng() % kTagCount), 1 + rng() % 3);
    }
    Corpus c;
    for (int s = 0; s < 5; ++s) {
      Sentence sent;
      for (int t = 0, n = 1 + static_cast<int>(rng() % 4); t < n; ++t) {
        sent.tokens.push_back(Token{lows[rng() % lows.size()], std::nullopt});
      }
      c.sentences.push_back(sent);
    }
    const auto freq = annotate_freq(c, b, stats);
    const auto amb = annotate_amb(c, b, stats, nullptr);
    std::size_t fi = 0, ai = 0;
    for (const auto& sent : c.sentences) {
      bool informative_freq = false, informative_amb = false;
      for (const auto& t : sent.tokens) {
        informative_freq |= !std::holds_alternative<Masked>(freq_tag(t.surface, b, stats));
        informative_amb |= !amb_tagset(t.surface, b, stats, nullptr).is_full();
      }
      if (informative_freq) {
        REQUIRE(fi < freq.sentences.size());
        const auto& out = freq.sentences[fi++];
        REQUIRE(out.tokens.size() == sent.tokens.size());
        for (std::size_t i = 0; i < out.tokens.size(); ++i) CHECK(out.tokens[i].surface == sent.tokens[i].surface);
      }
      if (informative_amb) {
        REQUIRE(ai < amb.sentences.size());
        const auto& out = amb.sentences[ai++];
        for (std::size_t i = 0; i < out.tokens.size(); ++i) {
          CHECK(out.tokens[i].surface == sent.tokens[i].surface);
          const Supervision fs = freq_tag(sent.tokens[i].surface, b, stats);
          const auto* single = std::get_if<Single>(&fs);
          if (single) CHECK(std::get<Ambiguous>(out.tokens[i].supervision).tags.contains(single->tag));
        }
      }
    }
    CHECK(fi == freq.sentences.size());
    CHECK(ai == amb.sentences.size());
  }
}

TEST_CASE("autoencode examples") {
  const std::vector<std::string> one{"ab"};
  CHECK(make_autoencode_examples(one) == std::vector<AuxExample>{{"ab", "ab"}});
  const std::vector<std::string> dup{"ab", "ab"};
  CHECK(make_autoencode_examples(dup).size() == 1);
  const std::vector<std::string> two{"ab", "a"};
  CHECK(make_autoencode_examples(two) == std::vector<AuxExample>{{"a", "a"}, {"ab", "ab"}});
  CHECK_THROWS_AS(make_autoencode_examples(std::vector<std::string>{}), UsageError);
}

TEST_CASE("log frequency buckets") {
  CHECK(logfreq_bucket(1) == 0);
  CHECK(logfreq_bucket(20) == 2);
  CHECK(logfreq_bucket(21) == 3);  // ln 21 = 3.04
  CHECK(logfreq_bucket(0) == 0);
  for (std::size_t n = 1; n < 5000; n += 37) CHECK(logfreq_bucket(n) == static_cast<int>(std::log(static_cast<double>(n))));

  Corpus source = untagged({{"a", "b"}});
  for (int i = 0; i < 19; ++i) source.sentences[0].tokens.push_back(Token{"b", std::nullopt});
  const auto labels = make_logfreq_labels(untagged({{"x", "b", "a", "q"}}), source);
  REQUIRE(labels.size() == 1);
  CHECK(labels[0] == std::vector<int>{2, 0, 0, 0});  // b: 20, a: 1, q: unseen, end
}

TEST_CASE("log frequency labels depend only on the next token") {
  const Corpus source = untagged({{"a", "a", "a", "b"}});
  const auto l1 = make_logfreq_labels(untagged({{"x", "a", "b"}}), source);
  const auto l2 = make_logfreq_labels(untagged({{"y", "a", "b"}}), source);
  CHECK(l1 == l2);
}

TEST_CASE("silver serialization round trip") {
  SilverCorpus c;
  c.mode = SilverMode::Freq;
  c.sentences.push_back({{{"ki", Single{PosTag::NOUN}}, {"zz", Masked{}}}, {}});
  const std::string text = to_silver_text(c);
  CHECK(text == "ki\tNOUN\nzz\tMASK\n\n");
  CHECK(read_silver(text, SilverMode::Freq).sentences == c.sentences);

  SilverCorpus a;
  a.mode = SilverMode::Amb;
  a.sentences.push_back({{{"w", Ambiguous{TagSet{PosTag::VERB, PosTag::NOUN}}}, {"v", Ambiguous{TagSet::all()}}}, {1, 0}});
  const std::string atext = to_silver_text(a);
  CHECK(atext.substr(0, 14) == "w\tNOUN|VERB\t1\n");
  CHECK(read_silver(atext, SilverMode::Amb).sentences == a.sentences);

  CHECK_THROWS_AS(read_silver("zz\tMASK\n", SilverMode::Amb), ParseError);
  CHECK_THROWS_AS(read_silver("zz\tNOUN|VERB\n", SilverMode::Freq), ParseError);
  CHECK_THROWS_WITH_AS(read_silver("a\tNOUN\t1\nb\tNOUN\n", SilverMode::Freq), doctest::Contains("line"), ParseError);
  CHECK_THROWS_AS(read_silver("a\tFOO\n", SilverMode::Freq), ParseError);
}

TEST_CASE("fixture annotation matches the oracle goldens byte for byte") {
  const std::string dir = data_path("silver/");
  const Corpus raw = parse_conllu(read_file(dir + "raw.conllu"));
  const auto b = load_bilingual_dictionary(read_file(dir + "bilingual.tsv"));
  const auto m = load_monolingual_dictionary(read_file(dir + "monolingual.tsv"), TagScheme::Ud);
  const auto stats = compute_pos_stats(parse_conllu(read_file(dir + "high_resource.conllu")));

  CHECK(to_silver_text(annotate_freq(raw, b, stats)) == read_file(dir + "freq.golden.silver"));
  auto amb = annotate_amb(raw, b, stats, &m);
  CHECK(to_silver_text(amb) == read_file(dir + "amb.golden.silver"));
  attach_logfreq_labels(amb, raw);
  CHECK(to_silver_text(amb) == read_file(dir + "amb_logfreq.golden.silver"));

  const std::string golden = read_file(dir + "freq.golden.silver");
  CHECK(to_silver_text(read_silver(golden, SilverMode::Freq)) == golden);
}
