#include <sstream>

#include "lrtag/corpus/corpus.hpp"
#include "lrtag/corpus/text.hpp"
#include "lrtag/error.hpp"

namespace lrtag {

std::size_t Corpus::token_count() const {
  std::size_t n = 0;
  for (const auto& s : sentences) n += s.tokens.size();
  return n;
}

bool Corpus::fully_tagged() const {
  for (const auto& s : sentences) {
    for (const auto& t : s.tokens) {
      if (!t.gold_tag) return false;
    }
  }
  return true;
}

Corpus parse_conllu(std::istream& in, std::string language_code) {
  Corpus corpus;
  corpus.language_code = std::move(language_code);
  Sentence current;
  std::string raw;
  std::size_t line_no = 0;

  auto flush = [&] {
    if (!current.tokens.empty()) corpus.sentences.push_back(std::move(current));
    current = Sentence{};
  };

  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = text::trim_line_end(raw);
    if (line.empty()) {
      flush();
      continue;
    }
    if (line.front() == '#') continue;

    const auto fields = text::split(line, '\t');
    if (fields.size() < 4 || fields.size() > 10) {
      throw ParseError(line_no, "expected 4 to 10 tab-separated columns, found " +
                                    std::to_string(fields.size()));
    }
    const std::string_view id = fields[0];
    if (id.find('-') != std::string_view::npos || id.find('.') != std::string_view::npos) continue;

    const std::string_view form = fields[1];
    if (form.empty()) throw ParseError(line_no, "empty FORM column");
    for (char32_t cp : text::decode_utf8(form)) {
      if (text::is_whitespace(cp)) throw ParseError(line_no, "FORM contains whitespace");
    }

    Token token;
    token.surface = std::string(form);
    const std::string_view upos = fields[3];
    if (upos != "_") {
      auto tag = parse_ud_tag(upos);
      if (!tag) throw ParseError(line_no, "unknown UPOS tag '" + std::string(upos) + "'");
      token.gold_tag = *tag;
    }
    current.tokens.push_back(std::move(token));
  }
  flush();
  return corpus;
}

Corpus parse_conllu(std::string_view text_in, std::string language_code) {
  std::istringstream in{std::string(text_in)};
  return parse_conllu(in, std::move(language_code));
}

void write_conllu(std::ostream& out, const Corpus& corpus) {
  for (const auto& sentence : corpus.sentences) {
    std::size_t id = 1;
    for (const auto& token : sentence.tokens) {
      out << id++ << '\t' << token.surface << "\t_\t"
          << (token.gold_tag ? tag_name(*token.gold_tag) : std::string_view("_"))
          << "\t_\t_\t_\t_\t_\t_\n";
    }
    out << '\n';
  }
}

std::string to_conllu(const Corpus& corpus) {
  std::ostringstream out;
  write_conllu(out, corpus);
  return out.str();
}

}  // namespace lrtag
