#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "lrtag/corpus/corpus.hpp"
#include "lrtag/corpus/pos_tag.hpp"

namespace lrtag {

using TagCounts = std::array<std::uint64_t, kTagCount>;

// (word, tag) token counts from gold high-resource data. Keys use
// dictionary_key so they line up with BilingualDictionary translations.
class PosStats {
 public:
  void add(std::string_view word, PosTag tag, std::uint64_t count = 1);

  // nullptr when the word was never seen.
  const TagCounts* counts(std::string_view folded_word) const;
  TagSet attested(std::string_view folded_word) const;

  std::uint64_t total() const { return total_; }
  std::size_t size() const { return counts_.size(); }
  const std::map<std::string, TagCounts, std::less<>>& entries() const { return counts_; }

 private:
  std::map<std::string, TagCounts, std::less<>> counts_;
  std::uint64_t total_ = 0;
};

// Throws DataError naming the sentence index when a token is untagged.
PosStats compute_pos_stats(const Corpus& high_resource);

}  // namespace lrtag
