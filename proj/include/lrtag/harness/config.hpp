#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "lrtag/corpus/cleaning.hpp"
#include "lrtag/corpus/dictionary.hpp"
#include "lrtag/neural/hyperparams.hpp"
#include "lrtag/silver/annotate.hpp"

namespace lrtag {

enum class Strategy { Freq, Amb, AmbAe, FreqAe, Pla16 };

// "freq", "amb", "amb+ae", "freq+ae", "pla16". Throws UsageError.
Strategy parse_strategy(std::string_view name);
std::string_view strategy_name(Strategy s);
SilverMode silver_mode(Strategy s);  // pla16 trains on AMB data
bool uses_autoencoder(Strategy s);
bool uses_logfreq(Strategy s);

struct ExperimentConfig {
  Strategy strategy = Strategy::Amb;

  std::string gold;           // CoNLL-U test corpus
  std::string raw;            // raw text, one paragraph per line
  std::string corpus;         // already tokenized CoNLL-U, used instead of raw
  std::string silver;         // pre-annotated silver file, skips annotation
  std::string bilingual;      // B
  std::string monolingual;    // M
  TagScheme mono_scheme = TagScheme::Ud;
  std::string high_resource;  // D, tagged CoNLL-U
  std::string embeddings;

  Hyperparams hyper;
  std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5};
  CleaningConfig cleaning;
  std::size_t max_words = 100000;

  // Assigns one key (underscored or dashed spelling). Throws UsageError on
  // an unknown key or a malformed value.
  void set(std::string_view key, std::string_view value);

  // Training inputs are either a silver file or a corpus plus B and D.
  void validate_for_training() const;

  static const std::vector<std::string>& keys();
};

// Flat `key = value` lines; '#' starts a comment. Throws ParseError on lines
// without '=' and wraps UsageError from set() with the line number.
void apply_config(ExperimentConfig& config, std::istream& in);
void apply_config_file(ExperimentConfig& config, const std::string& path);

// Every key in keys() order, readable by apply_config.
void write_config(std::ostream& out, const ExperimentConfig& config);

}  // namespace lrtag
