#include "cst/backend.hpp"

#include "cst/evaluation.hpp"

namespace cst {

namespace {

double dev_macro_f1(const Model& model, std::span<const LabeledText> dev) {
  ConfusionCounts counts;
  for (const auto& ex : dev) {
    Prediction p = predict(model, ex.text);
    counts.add(ex.label, p.label);
  }
  return f1_scores(counts).macro_f1;
}

}  // namespace

std::unique_ptr<TrainedClassifier> LinearBackend::train(
    std::span<const LabeledText> train_examples,
    std::span<const LabeledText> dev_examples, Provenance provenance,
    std::uint64_t seed) {
  ClassifierSpec spec = spec_;
  spec.seed = seed;
  Model model =
      dev_examples.empty()
          ? cst::train(train_examples, spec, provenance)
          : train_with_checkpoint_selection(
                train_examples, spec, provenance, [&](const Model& m) {
                  return dev_macro_f1(m, dev_examples);
                });
  return std::make_unique<LinearTrainedClassifier>(std::move(model));
}

Prediction LinearTrainedClassifier::predict(std::string_view text) const {
  return cst::predict(model_, text);
}

}  // namespace cst
