#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lrtag/corpus/corpus.hpp"
#include "lrtag/corpus/dictionary.hpp"
#include "lrtag/silver/pos_stats.hpp"

namespace lrtag {

// Per-token supervision for silver training data.
struct Masked {
  friend bool operator==(Masked, Masked) { return true; }
};
struct Single {
  PosTag tag;
  friend bool operator==(Single, Single) = default;
};
struct Ambiguous {
  TagSet tags;  // non-empty; the full inventory is distinct from Masked
  friend bool operator==(Ambiguous, Ambiguous) = default;
};
using Supervision = std::variant<Masked, Single, Ambiguous>;

std::string supervision_to_string(const Supervision& s);

struct SilverToken {
  std::string surface;
  Supervision supervision;

  friend bool operator==(const SilverToken&, const SilverToken&) = default;
};

struct SilverSentence {
  std::vector<SilverToken> tokens;
  // Next-word log-frequency buckets, one per token, or empty.
  std::vector<int> logfreq;

  friend bool operator==(const SilverSentence&, const SilverSentence&) = default;
};

enum class SilverMode { Freq, Amb };

struct SilverCorpus {
  SilverMode mode = SilverMode::Freq;
  std::vector<SilverSentence> sentences;

  std::size_t token_count() const;
};

// Most frequent tag over all translations of `word` (counts summed across
// translations, ties by PosTag order). Masked when the word has no entry in
// the dictionary or none of its translations occur in the stats.
Supervision freq_tag(std::string_view word, const BilingualDictionary& bilingual,
                     const PosStats& stats);

// Union of attested translation tags and monolingual tags. Words without
// any evidence get the full inventory.
TagSet amb_tagset(std::string_view word, const BilingualDictionary& bilingual,
                  const PosStats& stats, const MonolingualTagDictionary* monolingual);

// Drops sentences whose tokens are all Masked.
SilverCorpus annotate_freq(const Corpus& corpus, const BilingualDictionary& bilingual,
                           const PosStats& stats);

// Drops sentences whose tokens all received the full inventory.
SilverCorpus annotate_amb(const Corpus& corpus, const BilingualDictionary& bilingual,
                          const PosStats& stats, const MonolingualTagDictionary* monolingual);

}  // namespace lrtag
