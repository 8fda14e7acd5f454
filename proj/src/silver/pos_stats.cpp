#include "lrtag/silver/pos_stats.hpp"

#include "lrtag/corpus/dictionary.hpp"
#include "lrtag/error.hpp"

namespace lrtag {

void PosStats::add(std::string_view word, PosTag tag, std::uint64_t count) {
  auto [it, inserted] = counts_.try_emplace(dictionary_key(word));
  if (inserted) it->second.fill(0);
  it->second[index_of(tag)] += count;
  total_ += count;
}

const TagCounts* PosStats::counts(std::string_view folded_word) const {
  auto it = counts_.find(folded_word);
  return it == counts_.end() ? nullptr : &it->second;
}

TagSet PosStats::attested(std::string_view folded_word) const {
  TagSet out;
  if (const TagCounts* c = counts(folded_word)) {
    for (std::size_t i = 0; i < kTagCount; ++i) {
      if ((*c)[i] > 0) out.insert(tag_at(i));
    }
  }
  return out;
}

PosStats compute_pos_stats(const Corpus& high_resource) {
  PosStats stats;
  for (std::size_t s = 0; s < high_resource.sentences.size(); ++s) {
    const auto& tokens = high_resource.sentences[s].tokens;
    for (std::size_t t = 0; t < tokens.size(); ++t) {
      if (!tokens[t].gold_tag) {
        throw DataError("high-resource sentence " + std::to_string(s + 1) + ", token " +
                        std::to_string(t + 1) + " ('" + tokens[t].surface + "') has no gold tag");
      }
      stats.add(tokens[t].surface, *tokens[t].gold_tag);
    }
  }
  return stats;
}

}  // namespace lrtag
