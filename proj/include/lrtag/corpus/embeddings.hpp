#pragma once

#include <cstddef>
#include <istream>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace lrtag {

// Pretrained word vectors keyed by the exact word form in the file.
struct EmbeddingTable {
  std::size_t dimension = 0;
  std::map<std::string, std::vector<double>> vectors;
  std::size_t overwritten_rows = 0;  // duplicate words seen while loading

  const std::vector<double>* find(std::string_view word) const;
};

// Space-separated `word v1 ... vd`. Later duplicates replace earlier rows
// (each one logged). Throws ParseError on inconsistent dimension and
// DataError on an empty stream.
EmbeddingTable load_embeddings(std::istream& in);
EmbeddingTable load_embeddings(std::string_view text);

}  // namespace lrtag
