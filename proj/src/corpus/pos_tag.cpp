#include "lrtag/corpus/pos_tag.hpp"

#include "lrtag/error.hpp"

namespace lrtag {
namespace {

constexpr std::array<std::string_view, kTagCount> kNames = {
    "ADJ", "ADP",  "ADV",  "AUX",  "CCONJ", "DET",   "INTJ", "NOUN", "NUM",
    "PART", "PRON", "PROPN", "PUNCT", "SCONJ", "SYM", "VERB", "X",
};

}  // namespace

std::string_view tag_name(PosTag tag) { return kNames[index_of(tag)]; }

std::optional<PosTag> parse_ud_tag(std::string_view name) {
  for (std::size_t i = 0; i < kTagCount; ++i) {
    if (kNames[i] == name) return tag_at(i);
  }
  return std::nullopt;
}

PosTag map_legacy_tag(std::string_view name) {
  if (auto tag = parse_ud_tag(name)) return *tag;
  if (name == "CONJ") return PosTag::CCONJ;
  if (name == ".") return PosTag::PUNCT;
  if (name == "PRT") return PosTag::PART;
  throw DataError("cannot map tag '" + std::string(name) + "' to a UD POS tag");
}

std::vector<PosTag> TagSet::tags() const {
  std::vector<PosTag> out;
  for (std::size_t i = 0; i < kTagCount; ++i) {
    if ((bits_ >> i) & 1u) out.push_back(tag_at(i));
  }
  return out;
}

std::string TagSet::to_string() const {
  std::string out;
  for (PosTag t : tags()) {
    if (!out.empty()) out += '|';
    out += tag_name(t);
  }
  return out;
}

}  // namespace lrtag
