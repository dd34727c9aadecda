#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cst/corpus.hpp"

namespace cst {

// Configuration of the built-in hashed linear classifier. The defaults were
// tuned on the bundled synthetic benchmark; epochs defaults to 4 to match
// the run protocol's fixed-epoch training phase.
struct ClassifierSpec {
  std::uint32_t feature_dims = 1u << 15;
  std::vector<int> word_ngram_orders{1, 2};
  std::vector<int> char_ngram_orders{3};
  int epochs = 4;
  double learning_rate = 0.5;
  double l2 = 1e-4;
  int batch_size = 32;
  std::uint64_t seed = 0;

  // Throws on invalid training configuration (feature_dims must be a power
  // of two >= 1024, epochs >= 1, learning_rate > 0, l2 >= 0).
  void validate() const;

  // Canonical one-line rendering, used in digests.
  std::string canonical() const;

  bool operator==(const ClassifierSpec&) const = default;
};

struct Prediction {
  double p_positive = 0.5;
  double p_negative = 0.5;
  SentimentLabel label = SentimentLabel::Positive;
  double confidence = 0.5;
};

// Builds a Prediction from the positive-class probability; exact ties in
// probability resolve to Positive.
Prediction make_prediction(double p_positive);

// Sparse feature vector: (bucket, value) pairs sorted by bucket, unique.
struct FeatureVec {
  std::vector<std::pair<std::uint32_t, double>> entries;
};

// Hashed word and character n-grams, L2-normalized. The bucket of an n-gram
// is fnv1a64(tag) & (feature_dims - 1) where tag is "w<n>:" + tokens joined
// by 0x1f for word n-grams and "c<n>:" + the raw character window for
// character n-grams, both over the case-folded text.
FeatureVec featurize(std::string_view text, const ClassifierSpec& spec);

struct Provenance {
  enum Kind { Pretrained, Iteration };
  Kind kind = Pretrained;
  int iteration = 0;

  std::string str() const;
  bool operator==(const Provenance&) const = default;
};

struct LabeledText {
  std::string id;
  std::string text;
  SentimentLabel label = SentimentLabel::Positive;
};

struct Model {
  ClassifierSpec spec;
  // feature_dims weights followed by the bias term.
  std::vector<double> weights;
  Provenance provenance;
  std::string training_digest;
};

// Mini-batch gradient descent on the mean L2-regularized logistic loss for
// a fixed number of epochs. Deterministic in (example order, spec).
Model train(std::span<const LabeledText> examples, const ClassifierSpec& spec,
            Provenance provenance);

// Same optimization, but keeps the per-epoch checkpoint that maximizes
// `score` (ties keep the earlier epoch). Used for source pretraining.
Model train_with_checkpoint_selection(
    std::span<const LabeledText> examples, const ClassifierSpec& spec,
    Provenance provenance, const std::function<double(const Model&)>& score);

Prediction predict(const Model& model, std::string_view text);

// Mean regularized logistic loss over the batch and its exact gradient
// (length feature_dims + 1; the bias is not regularized).
std::pair<double, std::vector<double>> loss_and_gradient(
    const Model& model, std::span<const LabeledText> batch);

}  // namespace cst
