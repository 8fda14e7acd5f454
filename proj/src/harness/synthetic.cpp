#include "lrtag/harness/synthetic.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace lrtag {
namespace {

using Rng64 = std::mt19937_64;
using T = PosTag;

struct TagProfile {
  PosTag tag;
  double weight;       // rough share before the transition structure kicks in
  std::size_t words;   // lexicon size per language
};

constexpr TagProfile kProfiles[] = {
    {T::NOUN, 0.25, 80}, {T::VERB, 0.14, 50}, {T::PUNCT, 0.11, 4}, {T::ADP, 0.09, 8},
    {T::DET, 0.08, 6},   {T::ADJ, 0.07, 30},  {T::PRON, 0.05, 8},  {T::ADV, 0.04, 15},
    {T::AUX, 0.04, 5},   {T::CCONJ, 0.03, 3}, {T::PROPN, 0.03, 20}, {T::NUM, 0.02, 10},
    {T::PART, 0.02, 4},  {T::SCONJ, 0.01, 4}, {T::INTJ, 0.005, 3}, {T::SYM, 0.005, 3},
    {T::X, 0.005, 4},
};

struct Boost {
  PosTag from;
  PosTag to;
  double factor;
};

constexpr Boost kBoosts[] = {
    {T::DET, T::NOUN, 6.0},  {T::DET, T::ADJ, 3.0},   {T::ADJ, T::NOUN, 5.0},
    {T::ADP, T::DET, 3.0},   {T::ADP, T::NOUN, 2.0},  {T::PRON, T::VERB, 4.0},
    {T::AUX, T::VERB, 5.0},  {T::NOUN, T::VERB, 2.0}, {T::NOUN, T::PUNCT, 2.0},
    {T::VERB, T::DET, 2.0},  {T::NUM, T::NOUN, 4.0},  {T::PROPN, T::VERB, 2.0},
};

const char* const kConsonants[] = {"p", "t", "k", "b", "d", "g", "m", "n", "s", "l", "r", "v", "z"};
const char* const kVowels[] = {"a", "e", "i", "o", "u"};

std::string syllables(Rng64& rng, int lo, int hi) {
  std::uniform_int_distribution<int> count(lo, hi);
  std::uniform_int_distribution<std::size_t> c(0, std::size(kConsonants) - 1);
  std::uniform_int_distribution<std::size_t> v(0, std::size(kVowels) - 1);
  std::string out;
  for (int i = count(rng); i > 0; --i) out += std::string(kConsonants[c(rng)]) + kVowels[v(rng)];
  return out;
}

// A fresh form for `tag`; open classes carry a tag-specific ending.
std::string make_form(PosTag tag, std::size_t index, bool high, Rng64& rng,
                      std::set<std::string>& used) {
  static const char* const kPunct[] = {".", ",", "!", "?"};
  static const char* const kSym[] = {"%", "+", "="};
  if (tag == T::PUNCT) return kPunct[index % std::size(kPunct)];
  if (tag == T::SYM) return kSym[index % std::size(kSym)];
  for (;;) {
    std::string w;
    switch (tag) {
      case T::NUM: w = std::to_string(std::uniform_int_distribution<int>(2, 999)(rng)); break;
      case T::NOUN: w = syllables(rng, 1, 2) + (index % 2 ? "a" : "on"); break;
      case T::VERB: w = syllables(rng, 1, 2) + (index % 2 ? "et" : "ir"); break;
      case T::ADJ: w = syllables(rng, 1, 2) + "ul"; break;
      case T::ADV: w = syllables(rng, 1, 2) + "em"; break;
      case T::PROPN:
        w = syllables(rng, 2, 3);
        w[0] = static_cast<char>(w[0] - 'a' + 'A');
        break;
      default: w = syllables(rng, 1, 2); break;
    }
    if (high) w = "h" + w;
    std::string key = w;
    for (char& ch : key) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    if (used.insert(key).second) return w;
  }
}

struct Lexicon {
  std::array<std::vector<std::string>, kTagCount> words;
  std::array<std::discrete_distribution<std::size_t>, kTagCount> pick;

  void finish() {
    for (std::size_t t = 0; t < kTagCount; ++t) {
      std::vector<double> zipf;
      for (std::size_t r = 0; r < words[t].size(); ++r) zipf.push_back(1.0 / (r + 1.0));
      pick[t] = std::discrete_distribution<std::size_t>(zipf.begin(), zipf.end());
    }
  }
};

std::vector<PosTag> sample_tags(const SyntheticLanguagePair& pair, const SyntheticOptions& o,
                                Rng64& rng) {
  std::uniform_int_distribution<std::size_t> len(o.min_length, o.max_length);
  const std::size_t n = len(rng);
  std::vector<PosTag> tags;
  std::discrete_distribution<std::size_t> start(pair.tag_marginals.begin(), pair.tag_marginals.end());
  tags.push_back(tag_at(start(rng)));
  while (tags.size() < n) {
    const auto& row = pair.transitions[index_of(tags.back())];
    std::discrete_distribution<std::size_t> next(row.begin(), row.end());
    tags.push_back(tag_at(next(rng)));
  }
  return tags;
}

}  // namespace

std::array<double, kTagCount> stationary_distribution(
    const std::array<std::array<double, kTagCount>, kTagCount>& transitions) {
  std::array<double, kTagCount> pi;
  pi.fill(1.0 / kTagCount);
  for (int iter = 0; iter < 10000; ++iter) {
    std::array<double, kTagCount> next{};
    for (std::size_t a = 0; a < kTagCount; ++a) {
      for (std::size_t b = 0; b < kTagCount; ++b) next[b] += pi[a] * transitions[a][b];
    }
    double diff = 0.0;
    for (std::size_t i = 0; i < kTagCount; ++i) diff += std::abs(next[i] - pi[i]);
    pi = next;
    if (diff < 1e-15) break;
  }
  return pi;
}

SyntheticLanguagePair generate_language_pair(const SyntheticOptions& o) {
  SyntheticLanguagePair pair;
  Rng64 rng(o.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> gauss(0.0, 1.0);

  std::array<double, kTagCount> weight{};
  std::array<std::size_t, kTagCount> lexicon_size{};
  for (const auto& p : kProfiles) {
    weight[index_of(p.tag)] = p.weight;
    lexicon_size[index_of(p.tag)] = p.words;
  }
  for (std::size_t a = 0; a < kTagCount; ++a) {
    double z = 0.0;
    for (std::size_t b = 0; b < kTagCount; ++b) {
      double v = weight[b] * std::exp(0.5 * gauss(rng));
      for (const auto& boost : kBoosts) {
        if (index_of(boost.from) == a && index_of(boost.to) == b) v *= boost.factor;
      }
      pair.transitions[a][b] = v;
      z += v;
    }
    for (auto& v : pair.transitions[a]) v /= z;
  }
  pair.tag_marginals = stationary_distribution(pair.transitions);
  const auto top = std::max_element(pair.tag_marginals.begin(), pair.tag_marginals.end());
  pair.majority_tag = tag_at(static_cast<std::size_t>(top - pair.tag_marginals.begin()));
  pair.majority_accuracy = *top;

  // Parallel lexicons: low word i of tag t translates to high word i of tag t.
  Lexicon low, high;
  std::set<std::string> used;
  for (std::size_t t = 0; t < kTagCount; ++t) {
    for (std::size_t i = 0; i < lexicon_size[t]; ++i) {
      low.words[t].push_back(make_form(tag_at(t), i, false, rng, used));
      high.words[t].push_back(tag_at(t) == T::PUNCT || tag_at(t) == T::SYM
                                  ? low.words[t].back()
                                  : make_form(tag_at(t), i, true, rng, used));
    }
  }
  low.finish();
  high.finish();

  // Some high words also occur under a second tag in the tagged corpus.
  std::array<std::vector<std::string>, kTagCount> second_tag_words;
  std::uniform_int_distribution<std::size_t> any_tag(0, kTagCount - 1);
  for (std::size_t t = 0; t < kTagCount; ++t) {
    for (const auto& w : high.words[t]) {
      if (tag_at(t) == T::PUNCT || unit(rng) >= o.ambiguous_high_rate) continue;
      std::size_t t2 = any_tag(rng);
      if (t2 == t) t2 = (t2 + 1) % kTagCount;
      second_tag_words[t2].push_back(w);
    }
  }

  for (std::size_t t = 0; t < kTagCount; ++t) {
    for (std::size_t i = 0; i < low.words[t].size(); ++i) {
      const std::string& w = low.words[t][i];
      const bool fixed = tag_at(t) == T::PUNCT;
      if (!fixed && unit(rng) < o.uncovered_rate) {
        // untranslatable
      } else {
        pair.bilingual.add(w, high.words[t][i]);
        if (!fixed && unit(rng) < o.ambiguous_translation_rate) {
          std::size_t t2 = any_tag(rng);
          if (t2 == t) t2 = (t2 + 1) % kTagCount;
          const auto& pool = high.words[t2];
          pair.bilingual.add(w, pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)]);
        }
      }
      if (unit(rng) < o.monolingual_rate) pair.monolingual.add(w, tag_at(t));
    }
  }

  Rng64 high_rng(o.seed + 1);
  for (std::size_t s = 0; s < o.high_resource_sentences; ++s) {
    Sentence sent;
    for (PosTag tag : sample_tags(pair, o, high_rng)) {
      const std::size_t t = index_of(tag);
      std::string w;
      if (!second_tag_words[t].empty() && unit(high_rng) < o.second_tag_emission) {
        const auto& pool = second_tag_words[t];
        w = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(high_rng)];
      } else {
        w = high.words[t][high.pick[t](high_rng)];
      }
      sent.tokens.push_back(Token{std::move(w), tag});
    }
    pair.high_resource.sentences.push_back(std::move(sent));
  }

  auto low_sentences = [&](std::size_t count, Rng64& r) {
    Corpus c;
    for (std::size_t s = 0; s < count; ++s) {
      Sentence sent;
      for (PosTag tag : sample_tags(pair, o, r)) {
        const std::size_t t = index_of(tag);
        sent.tokens.push_back(Token{low.words[t][low.pick[t](r)], tag});
      }
      c.sentences.push_back(std::move(sent));
    }
    return c;
  };
  Rng64 raw_rng(o.seed + 2);
  pair.raw_reference = low_sentences(o.raw_sentences, raw_rng);
  Rng64 gold_rng(o.seed + 3);
  pair.gold = low_sentences(o.gold_sentences, gold_rng);

  pair.raw = pair.raw_reference;
  for (auto& s : pair.raw.sentences) {
    for (auto& t : s.tokens) t.gold_tag.reset();
  }
  pair.raw.language_code = pair.raw_reference.language_code = pair.gold.language_code = "syn";
  pair.high_resource.language_code = "shr";
  return pair;
}

}  // namespace lrtag
