#pragma once

#include <memory>
#include <span>
#include <string>

#include "cst/classifier.hpp"

namespace cst {

// A trained classifier handle. Implementations must be deterministic:
// repeated predict calls on the same text return the same Prediction.
class TrainedClassifier {
 public:
  virtual ~TrainedClassifier() = default;
  virtual Prediction predict(std::string_view text) const = 0;
  virtual Provenance provenance() const = 0;
  // Hash of the training inputs; identical inputs give identical digests.
  virtual std::string digest() const = 0;
};

// Factory for trained classifiers; this is the slot a transformer backend
// can occupy via the external adapter. `dev`, when non-empty, may be used
// for checkpoint selection; `seed` scopes the backend's randomness.
class ClassifierBackend {
 public:
  virtual ~ClassifierBackend() = default;
  virtual std::unique_ptr<TrainedClassifier> train(
      std::span<const LabeledText> train_examples,
      std::span<const LabeledText> dev_examples, Provenance provenance,
      std::uint64_t seed) = 0;
};

// The built-in hashed linear model. With a non-empty dev set, keeps the
// per-epoch checkpoint with the best dev macro-F1; otherwise the weights
// after the final epoch.
class LinearBackend : public ClassifierBackend {
 public:
  explicit LinearBackend(ClassifierSpec spec) : spec_(std::move(spec)) {}

  std::unique_ptr<TrainedClassifier> train(
      std::span<const LabeledText> train_examples,
      std::span<const LabeledText> dev_examples, Provenance provenance,
      std::uint64_t seed) override;

 private:
  ClassifierSpec spec_;
};

// Wraps an already-trained Model (used for report assembly and tests).
class LinearTrainedClassifier : public TrainedClassifier {
 public:
  explicit LinearTrainedClassifier(Model model) : model_(std::move(model)) {}
  Prediction predict(std::string_view text) const override;
  Provenance provenance() const override { return model_.provenance; }
  std::string digest() const override { return model_.training_digest; }
  const Model& model() const { return model_; }

 private:
  Model model_;
};

}  // namespace cst
