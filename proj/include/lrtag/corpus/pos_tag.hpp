#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lrtag {

// The 17 Universal Dependencies POS categories. Enumerator order is
// alphabetical and doubles as the total order used for tie-breaking.
enum class PosTag : std::uint8_t {
  ADJ,
  ADP,
  ADV,
  AUX,
  CCONJ,
  DET,
  INTJ,
  NOUN,
  NUM,
  PART,
  PRON,
  PROPN,
  PUNCT,
  SCONJ,
  SYM,
  VERB,
  X,
};

inline constexpr std::size_t kTagCount = 17;

inline constexpr std::size_t index_of(PosTag tag) { return static_cast<std::size_t>(tag); }
inline constexpr PosTag tag_at(std::size_t index) { return static_cast<PosTag>(index); }

std::string_view tag_name(PosTag tag);

// Exact UD spelling only; legacy tags go through map_legacy_tag.
std::optional<PosTag> parse_ud_tag(std::string_view name);

// Petrov-style universal tags (CONJ, ".", PRT) and UD tags -> UD.
// Throws DataError naming the string when it maps to nothing.
PosTag map_legacy_tag(std::string_view name);

// A subset of the tag inventory, stored as a 17-bit mask.
class TagSet {
 public:
  constexpr TagSet() = default;
  constexpr TagSet(std::initializer_list<PosTag> tags) {
    for (PosTag t : tags) insert(t);
  }

  static constexpr TagSet all() {
    TagSet s;
    s.bits_ = (1u << kTagCount) - 1u;
    return s;
  }
  static constexpr TagSet from_bits(std::uint32_t bits) {
    TagSet s;
    s.bits_ = bits & ((1u << kTagCount) - 1u);
    return s;
  }

  constexpr void insert(PosTag t) { bits_ |= 1u << index_of(t); }
  constexpr bool contains(PosTag t) const { return (bits_ >> index_of(t)) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool is_full() const { return bits_ == all().bits_; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr std::uint32_t bits() const { return bits_; }

  constexpr TagSet& operator|=(TagSet other) {
    bits_ |= other.bits_;
    return *this;
  }
  friend constexpr TagSet operator|(TagSet a, TagSet b) { return a |= b; }
  friend constexpr bool operator==(TagSet, TagSet) = default;

  // Members in PosTag order.
  std::vector<PosTag> tags() const;

  // "NOUN|VERB" in PosTag order.
  std::string to_string() const;

 private:
  std::uint32_t bits_ = 0;
};

}  // namespace lrtag
