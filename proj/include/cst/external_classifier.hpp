#pragma once

#include <memory>
#include <string>

#include "cst/backend.hpp"

namespace cst {

// Runs an external classifier process (e.g. a transformer fine-tuning
// script) behind the standard backend contract. One child process is
// spawned per trained model via `/bin/sh -c <command>`.
//
// Protocol: newline-delimited JSON over the child's stdin/stdout, UTF-8.
//   parent -> {"op":"train","examples":[{"text":"...","label":"positive"},...]}
//   child  -> {"ok":true}
//   parent -> {"op":"predict","text":"..."}
//   child  -> {"probs":[p_positive,p_negative]}
// Probabilities must be finite, in [0,1], and sum to 1 within 1e-6. Any
// malformed or missing reply aborts the run.
class ExternalBackend : public ClassifierBackend {
 public:
  explicit ExternalBackend(std::string command) : command_(std::move(command)) {}

  std::unique_ptr<TrainedClassifier> train(
      std::span<const LabeledText> train_examples,
      std::span<const LabeledText> dev_examples, Provenance provenance,
      std::uint64_t seed) override;

 private:
  std::string command_;
};

}  // namespace cst
