#include "lrtag/harness/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "lrtag/corpus/text.hpp"
#include "lrtag/error.hpp"

namespace lrtag {

Strategy parse_strategy(std::string_view name) {
  if (name == "freq") return Strategy::Freq;
  if (name == "amb") return Strategy::Amb;
  if (name == "amb+ae") return Strategy::AmbAe;
  if (name == "freq+ae") return Strategy::FreqAe;
  if (name == "pla16") return Strategy::Pla16;
  throw UsageError("unknown strategy '" + std::string(name) +
                   "' (expected freq, amb, amb+ae, freq+ae or pla16)");
}

std::string_view strategy_name(Strategy s) {
  switch (s) {
    case Strategy::Freq: return "freq";
    case Strategy::Amb: return "amb";
    case Strategy::AmbAe: return "amb+ae";
    case Strategy::FreqAe: return "freq+ae";
    case Strategy::Pla16: return "pla16";
  }
  return "?";
}

SilverMode silver_mode(Strategy s) {
  return (s == Strategy::Freq || s == Strategy::FreqAe) ? SilverMode::Freq : SilverMode::Amb;
}

bool uses_autoencoder(Strategy s) { return s == Strategy::AmbAe || s == Strategy::FreqAe; }
bool uses_logfreq(Strategy s) { return s == Strategy::Pla16; }

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

template <typename T>
T parse_number(std::string_view key, std::string_view value) {
  T v{};
  const auto r = std::from_chars(value.data(), value.data() + value.size(), v);
  if (r.ec != std::errc{} || r.ptr != value.data() + value.size() || value.empty()) {
    throw UsageError("invalid value '" + std::string(value) + "' for " + std::string(key));
  }
  return v;
}

std::vector<std::string> split_list(std::string_view value) {
  std::vector<std::string> out;
  for (auto piece : text::split(value, ',')) {
    std::string t = trim(piece);
    if (!t.empty()) out.push_back(std::move(t));
  }
  return out;
}

template <typename T>
std::string format_number(T v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? "," : "") + items[i];
  return out;
}

}  // namespace

const std::vector<std::string>& ExperimentConfig::keys() {
  static const std::vector<std::string> k = {
      "strategy",      "gold",         "raw",          "corpus",
      "silver",        "bilingual",    "monolingual",  "mono_scheme",
      "high_resource", "embeddings",   "seeds",        "scripts",
      "foreign_frac",  "symbol_frac",  "max_words",    "word_dim",
      "char_dim",      "hidden_dim",   "char_dropout", "word_noise",
      "learning_rate", "min_epochs",   "max_epochs",   "patience",
      "grad_clip",     "logfreq_buckets", "init_range",
  };
  return k;
}

void ExperimentConfig::set(std::string_view raw_key, std::string_view raw_value) {
  std::string key(raw_key);
  for (char& c : key) {
    if (c == '-') c = '_';
  }
  const std::string value = trim(raw_value);
  auto& h = hyper;

  if (key == "strategy") strategy = parse_strategy(value);
  else if (key == "gold") gold = value;
  else if (key == "raw") raw = value;
  else if (key == "corpus") corpus = value;
  else if (key == "silver") silver = value;
  else if (key == "bilingual") bilingual = value;
  else if (key == "monolingual") monolingual = value;
  else if (key == "mono_scheme") mono_scheme = parse_tag_scheme(value);
  else if (key == "high_resource") high_resource = value;
  else if (key == "embeddings") embeddings = value;
  else if (key == "seeds") {
    seeds.clear();
    for (const auto& s : split_list(value)) seeds.push_back(parse_number<std::uint64_t>(key, s));
    if (seeds.empty()) throw UsageError("seeds must list at least one seed");
  } else if (key == "scripts") cleaning.scripts = split_list(value);
  else if (key == "foreign_frac") cleaning.foreign_frac = parse_number<double>(key, value);
  else if (key == "symbol_frac") cleaning.symbol_frac = parse_number<double>(key, value);
  else if (key == "max_words") max_words = parse_number<std::size_t>(key, value);
  else if (key == "word_dim") h.word_dim = parse_number<std::size_t>(key, value);
  else if (key == "char_dim") h.char_dim = parse_number<std::size_t>(key, value);
  else if (key == "hidden_dim") h.hidden_dim = parse_number<std::size_t>(key, value);
  else if (key == "char_dropout") h.char_dropout_rate = parse_number<double>(key, value);
  else if (key == "word_noise") h.word_noise_sigma = parse_number<double>(key, value);
  else if (key == "learning_rate") h.learning_rate = parse_number<double>(key, value);
  else if (key == "min_epochs") h.min_epochs = parse_number<int>(key, value);
  else if (key == "max_epochs") h.max_epochs = parse_number<int>(key, value);
  else if (key == "patience") h.patience = parse_number<int>(key, value);
  else if (key == "grad_clip") h.grad_clip = parse_number<double>(key, value);
  else if (key == "logfreq_buckets") h.logfreq_buckets = parse_number<std::size_t>(key, value);
  else if (key == "init_range") h.init_range = parse_number<double>(key, value);
  else throw UsageError("unknown configuration key '" + std::string(raw_key) + "'");
}

void ExperimentConfig::validate_for_training() const {
  hyper.validate();
  if (seeds.empty()) throw UsageError("no seeds configured");
  if (!silver.empty()) return;
  if (raw.empty() && corpus.empty()) {
    throw UsageError("strategy " + std::string(strategy_name(strategy)) +
                     " needs --raw or --corpus (or a pre-annotated --silver file)");
  }
  if (bilingual.empty() || high_resource.empty()) {
    throw UsageError("strategy " + std::string(strategy_name(strategy)) +
                     " needs --bilingual and --high-resource");
  }
}

void apply_config(ExperimentConfig& config, std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = text::trim_line_end(raw);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(line_no, "expected key = value");
    try {
      config.set(trim(line.substr(0, eq)), line.substr(eq + 1));
    } catch (const UsageError& e) {
      throw ParseError(line_no, e.what());
    }
  }
}

void apply_config_file(ExperimentConfig& config, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open config file " + path);
  apply_config(config, in);
}

void write_config(std::ostream& out, const ExperimentConfig& c) {
  const auto& h = c.hyper;
  std::vector<std::string> seeds;
  for (auto s : c.seeds) seeds.push_back(format_number(s));
  out << "strategy = " << strategy_name(c.strategy) << '\n'
      << "gold = " << c.gold << '\n'
      << "raw = " << c.raw << '\n'
      << "corpus = " << c.corpus << '\n'
      << "silver = " << c.silver << '\n'
      << "bilingual = " << c.bilingual << '\n'
      << "monolingual = " << c.monolingual << '\n'
      << "mono_scheme = " << (c.mono_scheme == TagScheme::Ud ? "ud" : "unimorph") << '\n'
      << "high_resource = " << c.high_resource << '\n'
      << "embeddings = " << c.embeddings << '\n'
      << "seeds = " << join(seeds) << '\n'
      << "scripts = " << join(c.cleaning.scripts) << '\n'
      << "foreign_frac = " << format_number(c.cleaning.foreign_frac) << '\n'
      << "symbol_frac = " << format_number(c.cleaning.symbol_frac) << '\n'
      << "max_words = " << c.max_words << '\n'
      << "word_dim = " << h.word_dim << '\n'
      << "char_dim = " << h.char_dim << '\n'
      << "hidden_dim = " << h.hidden_dim << '\n'
      << "char_dropout = " << format_number(h.char_dropout_rate) << '\n'
      << "word_noise = " << format_number(h.word_noise_sigma) << '\n'
      << "learning_rate = " << format_number(h.learning_rate) << '\n'
      << "min_epochs = " << h.min_epochs << '\n'
      << "max_epochs = " << h.max_epochs << '\n'
      << "patience = " << h.patience << '\n'
      << "grad_clip = " << format_number(h.grad_clip) << '\n'
      << "logfreq_buckets = " << h.logfreq_buckets << '\n'
      << "init_range = " << format_number(h.init_range) << '\n';
}

}  // namespace lrtag
