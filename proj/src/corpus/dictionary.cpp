#include "lrtag/corpus/dictionary.hpp"

#include <sstream>

#include "lrtag/corpus/text.hpp"
#include "lrtag/error.hpp"

namespace lrtag {

std::string dictionary_key(std::string_view word) { return text::fold_case(word); }

void BilingualDictionary::add(std::string_view low_resource_word,
                              std::string_view high_resource_word) {
  entries_[dictionary_key(low_resource_word)].insert(dictionary_key(high_resource_word));
}

const std::set<std::string>* BilingualDictionary::translations(std::string_view word) const {
  auto it = entries_.find(dictionary_key(word));
  return it == entries_.end() ? nullptr : &it->second;
}

void MonolingualTagDictionary::add(std::string_view word, PosTag tag) {
  entries_[dictionary_key(word)].insert(tag);
}

TagSet MonolingualTagDictionary::tags(std::string_view word) const {
  auto it = entries_.find(dictionary_key(word));
  return it == entries_.end() ? TagSet{} : it->second;
}

bool MonolingualTagDictionary::contains(std::string_view word) const {
  return entries_.count(dictionary_key(word)) != 0;
}

TagScheme parse_tag_scheme(std::string_view name) {
  if (name == "ud") return TagScheme::Ud;
  if (name == "unimorph") return TagScheme::Unimorph;
  throw UsageError("unknown tag scheme '" + std::string(name) + "' (expected ud or unimorph)");
}

PosTag map_unimorph_tag(std::string_view name) {
  if (name == "N") return PosTag::NOUN;
  if (name == "V") return PosTag::VERB;
  if (name == "ADJ") return PosTag::ADJ;
  if (name == "ADV") return PosTag::ADV;
  throw DataError("unknown Unimorph POS '" + std::string(name) + "'");
}

namespace {

// Calls fn(line_no, fields) for every content line with exactly two fields.
template <typename Fn>
void for_each_pair_line(std::istream& in, Fn&& fn) {
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = text::trim_line_end(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto fields = text::split(line, '\t');
    if (fields.size() != 2 || fields[0].empty() || fields[1].empty()) {
      throw ParseError(line_no, "expected exactly 2 non-empty tab-separated fields");
    }
    fn(line_no, fields[0], fields[1]);
  }
}

}  // namespace

BilingualDictionary load_bilingual_dictionary(std::istream& in) {
  BilingualDictionary dict;
  for_each_pair_line(in, [&](std::size_t, std::string_view low, std::string_view high) {
    dict.add(low, high);
  });
  return dict;
}

BilingualDictionary load_bilingual_dictionary(std::string_view text_in) {
  std::istringstream in{std::string(text_in)};
  return load_bilingual_dictionary(in);
}

MonolingualTagDictionary load_monolingual_dictionary(std::istream& in, TagScheme scheme) {
  MonolingualTagDictionary dict;
  for_each_pair_line(in, [&](std::size_t line_no, std::string_view word, std::string_view tag) {
    try {
      dict.add(word, scheme == TagScheme::Unimorph ? map_unimorph_tag(tag) : map_legacy_tag(tag));
    } catch (const ParseError&) {
      throw;
    } catch (const DataError& e) {
      throw ParseError(line_no, e.what());
    }
  });
  return dict;
}

MonolingualTagDictionary load_monolingual_dictionary(std::string_view text_in, TagScheme scheme) {
  std::istringstream in{std::string(text_in)};
  return load_monolingual_dictionary(in, scheme);
}

void write_bilingual_dictionary(std::ostream& out, const BilingualDictionary& dict) {
  for (const auto& [word, translations] : dict.entries()) {
    for (const auto& t : translations) out << word << '\t' << t << '\n';
  }
}

void write_monolingual_dictionary(std::ostream& out, const MonolingualTagDictionary& dict) {
  for (const auto& [word, tags] : dict.entries()) {
    for (PosTag t : tags.tags()) out << word << '\t' << tag_name(t) << '\n';
  }
}

}  // namespace lrtag
