#pragma once

#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <string_view>

#include "lrtag/corpus/pos_tag.hpp"

namespace lrtag {

// Lookup key used by every dictionary and by PosStats: Unicode default case
// folding. Corpus surfaces are never rewritten, only their lookup keys.
std::string dictionary_key(std::string_view word);

// Low-resource word -> set of high-resource translations (both sides folded).
class BilingualDictionary {
 public:
  void add(std::string_view low_resource_word, std::string_view high_resource_word);

  // nullptr when the word has no entry.
  const std::set<std::string>* translations(std::string_view word) const;
  bool contains(std::string_view word) const { return translations(word) != nullptr; }

  std::size_t size() const { return entries_.size(); }
  const std::map<std::string, std::set<std::string>>& entries() const { return entries_; }

 private:
  std::map<std::string, std::set<std::string>> entries_;
};

class MonolingualTagDictionary {
 public:
  void add(std::string_view word, PosTag tag);

  // Empty set when the word has no entry.
  TagSet tags(std::string_view word) const;
  bool contains(std::string_view word) const;

  std::size_t size() const { return entries_.size(); }
  const std::map<std::string, TagSet>& entries() const { return entries_; }

 private:
  std::map<std::string, TagSet> entries_;
};

enum class TagScheme { Ud, Unimorph };

TagScheme parse_tag_scheme(std::string_view name);

// Unimorph POS (N, V, ADJ, ADV) -> UD. Throws DataError otherwise.
PosTag map_unimorph_tag(std::string_view name);

// `low<TAB>high` lines, '#' comments and blank lines ignored.
BilingualDictionary load_bilingual_dictionary(std::istream& in);
BilingualDictionary load_bilingual_dictionary(std::string_view text);

// `word<TAB>tag` lines; multiple lines for one word union into one TagSet.
MonolingualTagDictionary load_monolingual_dictionary(std::istream& in, TagScheme scheme);
MonolingualTagDictionary load_monolingual_dictionary(std::string_view text, TagScheme scheme);

// Normalized dumps: one pair per line in key order, translations sorted.
void write_bilingual_dictionary(std::ostream& out, const BilingualDictionary& dict);
void write_monolingual_dictionary(std::ostream& out, const MonolingualTagDictionary& dict);

}  // namespace lrtag
