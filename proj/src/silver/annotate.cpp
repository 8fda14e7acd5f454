#include "lrtag/silver/annotate.hpp"

#include <algorithm>

namespace lrtag {

std::string supervision_to_string(const Supervision& s) {
  if (std::holds_alternative<Masked>(s)) return "MASK";
  if (const auto* single = std::get_if<Single>(&s)) return std::string(tag_name(single->tag));
  return std::get<Ambiguous>(s).tags.to_string();
}

std::size_t SilverCorpus::token_count() const {
  std::size_t n = 0;
  for (const auto& s : sentences) n += s.tokens.size();
  return n;
}

Supervision freq_tag(std::string_view word, const BilingualDictionary& bilingual,
                     const PosStats& stats) {
  const auto* translations = bilingual.translations(word);
  if (translations == nullptr) return Masked{};

  TagCounts summed{};
  bool attested = false;
  for (const auto& translation : *translations) {
    if (const TagCounts* counts = stats.counts(translation)) {
      attested = true;
      for (std::size_t i = 0; i < kTagCount; ++i) summed[i] += (*counts)[i];
    }
  }
  if (!attested) return Masked{};

  // max_element returns the first maximum, which is the lowest PosTag.
  const auto best = std::max_element(summed.begin(), summed.end());
  return Single{tag_at(static_cast<std::size_t>(best - summed.begin()))};
}

TagSet amb_tagset(std::string_view word, const BilingualDictionary& bilingual,
                  const PosStats& stats, const MonolingualTagDictionary* monolingual) {
  TagSet tags;
  if (const auto* translations = bilingual.translations(word)) {
    for (const auto& translation : *translations) tags |= stats.attested(translation);
  }
  if (monolingual != nullptr) tags |= monolingual->tags(word);
  return tags.empty() ? TagSet::all() : tags;
}

SilverCorpus annotate_freq(const Corpus& corpus, const BilingualDictionary& bilingual,
                           const PosStats& stats) {
  SilverCorpus out;
  out.mode = SilverMode::Freq;
  for (const auto& sentence : corpus.sentences) {
    SilverSentence silver;
    bool any_tagged = false;
    for (const auto& token : sentence.tokens) {
      Supervision s = freq_tag(token.surface, bilingual, stats);
      any_tagged = any_tagged || !std::holds_alternative<Masked>(s);
      silver.tokens.push_back(SilverToken{token.surface, s});
    }
    if (any_tagged) out.sentences.push_back(std::move(silver));
  }
  return out;
}

SilverCorpus annotate_amb(const Corpus& corpus, const BilingualDictionary& bilingual,
                          const PosStats& stats, const MonolingualTagDictionary* monolingual) {
  SilverCorpus out;
  out.mode = SilverMode::Amb;
  for (const auto& sentence : corpus.sentences) {
    SilverSentence silver;
    bool informative = false;
    for (const auto& token : sentence.tokens) {
      const TagSet tags = amb_tagset(token.surface, bilingual, stats, monolingual);
      informative = informative || !tags.is_full();
      silver.tokens.push_back(SilverToken{token.surface, Ambiguous{tags}});
    }
    if (informative) out.sentences.push_back(std::move(silver));
  }
  return out;
}

}  // namespace lrtag
