#include "lrtag/corpus/embeddings.hpp"

#include <spdlog/spdlog.h>

#include <charconv>
#include <sstream>

#include "lrtag/corpus/text.hpp"
#include "lrtag/error.hpp"

namespace lrtag {

const std::vector<double>* EmbeddingTable::find(std::string_view word) const {
  auto it = vectors.find(std::string(word));
  return it == vectors.end() ? nullptr : &it->second;
}

EmbeddingTable load_embeddings(std::istream& in) {
  EmbeddingTable table;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = text::trim_line_end(raw);
    if (line.empty()) continue;

    std::vector<std::string_view> fields;
    for (std::string_view f : text::split(line, ' ')) {
      if (!f.empty()) fields.push_back(f);
    }
    if (fields.size() < 2) throw ParseError(line_no, "embedding row has no values");

    std::vector<double> values;
    values.reserve(fields.size() - 1);
    for (std::size_t i = 1; i < fields.size(); ++i) {
      double v = 0.0;
      const auto [ptr, ec] = std::from_chars(fields[i].data(), fields[i].data() + fields[i].size(), v);
      if (ec != std::errc{} || ptr != fields[i].data() + fields[i].size()) {
        throw ParseError(line_no, "cannot parse value '" + std::string(fields[i]) + "'");
      }
      values.push_back(v);
    }

    if (table.dimension == 0) {
      table.dimension = values.size();
    } else if (values.size() != table.dimension) {
      throw ParseError(line_no, "expected " + std::to_string(table.dimension) + " values, found " +
                                    std::to_string(values.size()));
    }

    auto [it, inserted] = table.vectors.insert_or_assign(std::string(fields[0]), std::move(values));
    if (!inserted) {
      ++table.overwritten_rows;
      spdlog::warn("embeddings line {}: duplicate word '{}' replaces earlier row", line_no, it->first);
    }
  }
  if (table.dimension == 0) throw DataError("embedding file is empty; dimension undeterminable");
  return table;
}

EmbeddingTable load_embeddings(std::string_view text_in) {
  std::istringstream in{std::string(text_in)};
  return load_embeddings(in);
}

}  // namespace lrtag
