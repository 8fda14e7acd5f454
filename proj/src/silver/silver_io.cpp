#include "lrtag/silver/silver_io.hpp"

#include <charconv>
#include <sstream>

#include "lrtag/corpus/text.hpp"
#include "lrtag/error.hpp"

namespace lrtag {

void write_silver(std::ostream& out, const SilverCorpus& corpus) {
  for (const auto& sentence : corpus.sentences) {
    const bool with_labels = !sentence.logfreq.empty();
    for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
      const auto& token = sentence.tokens[i];
      out << token.surface << '\t' << supervision_to_string(token.supervision);
      if (with_labels) out << '\t' << sentence.logfreq[i];
      out << '\n';
    }
    out << '\n';
  }
}

std::string to_silver_text(const SilverCorpus& corpus) {
  std::ostringstream out;
  write_silver(out, corpus);
  return out.str();
}

namespace {

TagSet parse_tag_list(std::string_view field, std::size_t line_no) {
  TagSet tags;
  for (std::string_view name : text::split(field, '|')) {
    auto tag = parse_ud_tag(name);
    if (!tag) throw ParseError(line_no, "unknown tag '" + std::string(name) + "'");
    tags.insert(*tag);
  }
  return tags;
}

}  // namespace

SilverCorpus read_silver(std::istream& in, SilverMode mode) {
  SilverCorpus corpus;
  corpus.mode = mode;
  SilverSentence current;
  std::string raw;
  std::size_t line_no = 0;

  auto flush = [&](std::size_t at_line) {
    if (current.tokens.empty()) return;
    if (!current.logfreq.empty() && current.logfreq.size() != current.tokens.size()) {
      throw ParseError(at_line, "log-frequency column present on only some tokens of a sentence");
    }
    corpus.sentences.push_back(std::move(current));
    current = SilverSentence{};
  };

  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = text::trim_line_end(raw);
    if (line.empty()) {
      flush(line_no);
      continue;
    }
    const auto fields = text::split(line, '\t');
    if (fields.size() != 2 && fields.size() != 3) {
      throw ParseError(line_no, "expected 2 or 3 tab-separated fields");
    }
    if (fields[0].empty()) throw ParseError(line_no, "empty surface");

    SilverToken token{std::string(fields[0]), Masked{}};
    if (fields[1] == "MASK") {
      if (mode == SilverMode::Amb) throw ParseError(line_no, "MASK is not valid in amb mode");
    } else {
      const TagSet tags = parse_tag_list(fields[1], line_no);
      if (mode == SilverMode::Freq) {
        if (tags.size() != 1) throw ParseError(line_no, "freq mode allows one tag per token");
        token.supervision = Single{tags.tags().front()};
      } else {
        token.supervision = Ambiguous{tags};
      }
    }
    if (fields.size() == 3) {
      int bucket = 0;
      const auto [ptr, ec] = std::from_chars(fields[2].data(), fields[2].data() + fields[2].size(), bucket);
      if (ec != std::errc{} || ptr != fields[2].data() + fields[2].size() || bucket < 0) {
        throw ParseError(line_no, "bad log-frequency bucket '" + std::string(fields[2]) + "'");
      }
      if (current.logfreq.size() != current.tokens.size()) {
        throw ParseError(line_no, "log-frequency column present on only some tokens of a sentence");
      }
      current.logfreq.push_back(bucket);
    }
    current.tokens.push_back(std::move(token));
  }
  flush(line_no);
  return corpus;
}

SilverCorpus read_silver(std::string_view text_in, SilverMode mode) {
  std::istringstream in{std::string(text_in)};
  return read_silver(in, mode);
}

SilverMode parse_silver_mode(std::string_view name) {
  if (name == "freq") return SilverMode::Freq;
  if (name == "amb") return SilverMode::Amb;
  throw UsageError("unknown silver mode '" + std::string(name) + "' (expected freq or amb)");
}

}  // namespace lrtag
