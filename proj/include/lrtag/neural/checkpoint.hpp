#pragma once

#include <istream>
#include <ostream>
#include <string>

#include "lrtag/corpus/vocabulary.hpp"
#include "lrtag/neural/hyperparams.hpp"
#include "lrtag/neural/params.hpp"

namespace lrtag {

// Everything needed to tag text after training.
struct TaggerModel {
  Hyperparams hyperparams;
  Vocabulary vocab;
  ModelParams params;
};

inline constexpr int kCheckpointVersion = 1;

// Portable text encoding: a versioned header, hyperparameters, the
// vocabulary (characters as U+XXXX), then each named block with its shape and
// values as C99 hex floats, so a reload is bit-exact on any platform.
void save_checkpoint(std::ostream& out, const TaggerModel& model);
TaggerModel load_checkpoint(std::istream& in);

void save_checkpoint_file(const std::string& path, const TaggerModel& model);
TaggerModel load_checkpoint_file(const std::string& path);

}  // namespace lrtag
