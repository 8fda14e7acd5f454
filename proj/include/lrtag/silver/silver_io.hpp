#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <string_view>

#include "lrtag/silver/annotate.hpp"

namespace lrtag {

// One token per line, `surface<TAB>MASK|TAG|TAG1|TAG2...`, optionally followed
// by `<TAB>bucket` when log-frequency labels are attached. Sentences are
// separated by a blank line.
void write_silver(std::ostream& out, const SilverCorpus& corpus);
std::string to_silver_text(const SilverCorpus& corpus);

// The mode decides how a bare tag is read: Single for freq, a singleton
// Ambiguous set for amb. MASK is rejected in amb mode.
SilverCorpus read_silver(std::istream& in, SilverMode mode);
SilverCorpus read_silver(std::string_view text, SilverMode mode);

SilverMode parse_silver_mode(std::string_view name);

}  // namespace lrtag
