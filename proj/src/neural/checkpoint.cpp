#include "lrtag/neural/checkpoint.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "lrtag/corpus/text.hpp"
#include "lrtag/error.hpp"

namespace lrtag {
namespace {

constexpr const char* kMagic = "lrtag-checkpoint";

void write_hex(std::ostream& out, double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::hex);
  out.write(buf, ptr - buf);
}

class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {}

  std::string line() {
    std::string raw;
    if (!std::getline(in_, raw)) throw ParseError(line_no_ + 1, "unexpected end of checkpoint");
    ++line_no_;
    return std::string(text::trim_line_end(raw));
  }

  // "key value" line with a fixed key.
  std::string value(const std::string& key) {
    const std::string l = line();
    if (l.rfind(key + " ", 0) != 0) fail("expected '" + key + "'");
    return l.substr(key.size() + 1);
  }

  template <typename T>
  T number(const std::string& key) {
    return parse<T>(value(key));
  }

  template <typename T>
  T parse(std::string_view s) {
    T v{};
    std::from_chars_result r{};
    if constexpr (std::is_floating_point_v<T>) {
      r = std::from_chars(s.data(), s.data() + s.size(), v, std::chars_format::hex);
    } else {
      r = std::from_chars(s.data(), s.data() + s.size(), v);
    }
    if (r.ec != std::errc{} || r.ptr != s.data() + s.size()) {
      fail("cannot parse number '" + std::string(s) + "'");
    }
    return v;
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_no_, msg); }

 private:
  std::istream& in_;
  std::size_t line_no_ = 0;
};

}  // namespace

void save_checkpoint(std::ostream& out, const TaggerModel& model) {
  const Hyperparams& h = model.hyperparams;
  out << kMagic << ' ' << kCheckpointVersion << '\n';
  out << "word_dim " << h.word_dim << '\n';
  out << "char_dim " << h.char_dim << '\n';
  out << "hidden_dim " << h.hidden_dim << '\n';
  out << "char_dropout_rate ";
  write_hex(out, h.char_dropout_rate);
  out << "\nword_noise_sigma ";
  write_hex(out, h.word_noise_sigma);
  out << "\nlearning_rate ";
  write_hex(out, h.learning_rate);
  out << "\nmin_epochs " << h.min_epochs << '\n';
  out << "max_epochs " << h.max_epochs << '\n';
  out << "patience " << h.patience << '\n';
  out << "grad_clip ";
  write_hex(out, h.grad_clip);
  out << "\nlogfreq_buckets " << h.logfreq_buckets << '\n';
  out << "init_range ";
  write_hex(out, h.init_range);
  out << "\nseed " << h.seed << '\n';

  out << "words " << model.vocab.words().size() << '\n';
  for (const auto& w : model.vocab.words()) out << w << '\n';
  out << "chars " << model.vocab.chars().size() << '\n';
  for (char32_t c : model.vocab.chars()) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "U+%04X", static_cast<unsigned>(c));
    out << buf << '\n';
  }

  for (std::size_t i = 0; i < kBlockCount; ++i) {
    const Block b = block_at(i);
    const Tensor& t = model.params[b];
    out << "block " << block_name(b) << ' ' << t.rows << ' ' << t.cols << '\n';
    for (std::size_t r = 0; r < t.rows; ++r) {
      const auto row = t.row(r);
      for (std::size_t c = 0; c < t.cols; ++c) {
        if (c) out << ' ';
        write_hex(out, row[c]);
      }
      out << '\n';
    }
  }
  out << "end\n";
}

TaggerModel load_checkpoint(std::istream& in) {
  Reader rd(in);
  const int version = rd.number<int>(kMagic);
  if (version != kCheckpointVersion) {
    rd.fail("unsupported checkpoint version " + std::to_string(version));
  }

  TaggerModel model;
  Hyperparams& h = model.hyperparams;
  h.word_dim = rd.number<std::size_t>("word_dim");
  h.char_dim = rd.number<std::size_t>("char_dim");
  h.hidden_dim = rd.number<std::size_t>("hidden_dim");
  h.char_dropout_rate = rd.number<double>("char_dropout_rate");
  h.word_noise_sigma = rd.number<double>("word_noise_sigma");
  h.learning_rate = rd.number<double>("learning_rate");
  h.min_epochs = rd.number<int>("min_epochs");
  h.max_epochs = rd.number<int>("max_epochs");
  h.patience = rd.number<int>("patience");
  h.grad_clip = rd.number<double>("grad_clip");
  h.logfreq_buckets = rd.number<std::size_t>("logfreq_buckets");
  h.init_range = rd.number<double>("init_range");
  h.seed = rd.number<std::uint64_t>("seed");

  std::vector<std::string> words(rd.number<std::size_t>("words"));
  for (auto& w : words) w = rd.line();
  std::vector<char32_t> chars(rd.number<std::size_t>("chars"));
  for (auto& c : chars) {
    const std::string l = rd.line();
    if (l.rfind("U+", 0) != 0) rd.fail("expected U+XXXX code point");
    unsigned cp = 0;
    const auto r = std::from_chars(l.data() + 2, l.data() + l.size(), cp, 16);
    if (r.ec != std::errc{} || r.ptr != l.data() + l.size()) rd.fail("bad code point '" + l + "'");
    c = static_cast<char32_t>(cp);
  }
  model.vocab = Vocabulary::from_lists(words, chars);
  model.params = ModelParams(ModelShape::from(h, model.vocab));

  for (std::size_t i = 0; i < kBlockCount; ++i) {
    const Block b = block_at(i);
    Tensor& t = model.params[b];
    std::istringstream header(rd.value("block"));
    std::string name;
    std::size_t rows = 0;
    std::size_t cols = 0;
    header >> name >> rows >> cols;
    if (name != block_name(b) || rows != t.rows || cols != t.cols) {
      rd.fail("block '" + name + "' does not match expected '" + std::string(block_name(b)) + "' " +
              std::to_string(t.rows) + "x" + std::to_string(t.cols));
    }
    for (std::size_t r = 0; r < rows; ++r) {
      const std::string l = rd.line();
      const auto fields = text::split(l, ' ');
      if (fields.size() != cols) rd.fail("expected " + std::to_string(cols) + " values");
      for (std::size_t c = 0; c < cols; ++c) t.row(r)[c] = rd.parse<double>(fields[c]);
    }
  }
  if (rd.line() != "end") rd.fail("expected 'end'");
  return model;
}

void save_checkpoint_file(const std::string& path, const TaggerModel& model) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write checkpoint '" + path + "'");
  save_checkpoint(out, model);
  if (!out) throw DataError("failed writing checkpoint '" + path + "'");
}

TaggerModel load_checkpoint_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open checkpoint '" + path + "'");
  return load_checkpoint(in);
}

}  // namespace lrtag
