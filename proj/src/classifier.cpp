#include "cst/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cst/error.hpp"
#include "cst/hash.hpp"
#include "cst/rng.hpp"
#include "cst/text.hpp"

namespace cst {

namespace {

constexpr char kNgramSep = '\x1f';

bool is_power_of_two(std::uint32_t v) { return v != 0 && (v & (v - 1)) == 0; }

double sigmoid(double z) {
  if (z >= 0) {
    return 1.0 / (1.0 + std::exp(-z));
  }
  double e = std::exp(z);
  return e / (1.0 + e);
}

// log(1 + exp(-m)) without overflow for large |m|.
double log1p_exp_neg(double m) {
  if (m > 0) return std::log1p(std::exp(-m));
  return -m + std::log1p(std::exp(m));
}

double dot(const std::vector<double>& weights, const FeatureVec& x) {
  double z = weights.back();  // bias
  for (const auto& [idx, val] : x.entries) z += weights[idx] * val;
  return z;
}

std::vector<FeatureVec> featurize_all(std::span<const LabeledText> examples,
                                      const ClassifierSpec& spec) {
  std::vector<FeatureVec> out;
  out.reserve(examples.size());
  for (const auto& ex : examples) out.push_back(featurize(ex.text, spec));
  return out;
}

// One gradient step over examples[batch_begin, batch_end).
void step(std::vector<double>& weights, const ClassifierSpec& spec,
          std::span<const LabeledText> examples,
          const std::vector<FeatureVec>& features,
          const std::vector<std::size_t>& order, std::size_t batch_begin,
          std::size_t batch_end) {
  const double inv_b = 1.0 / static_cast<double>(batch_end - batch_begin);
  const double lr = spec.learning_rate;

  // L2 term first, then accumulate the data term sparsely.
  if (spec.l2 > 0.0) {
    const double decay = lr * spec.l2;
    for (std::uint32_t j = 0; j < spec.feature_dims; ++j) {
      weights[j] -= decay * weights[j];
    }
  }
  for (std::size_t b = batch_begin; b < batch_end; ++b) {
    std::size_t i = order[b];
    const FeatureVec& x = features[i];
    double y = examples[i].label == SentimentLabel::Positive ? 1.0 : -1.0;
    double z = dot(weights, x);
    double g = -y * sigmoid(-y * z) * inv_b;  // d(mean loss)/dz for this row
    for (const auto& [idx, val] : x.entries) weights[idx] -= lr * g * val;
    weights.back() -= lr * g;
  }
}

std::string digest_inputs(std::span<const LabeledText> examples,
                          const ClassifierSpec& spec, Provenance provenance) {
  Digest d;
  d.field(spec.canonical());
  d.field(provenance.str());
  for (const auto& ex : examples) {
    d.field(ex.id);
    d.field(ex.text);
    d.field(to_string(ex.label));
  }
  return d.hex();
}

void check_trainable(std::span<const LabeledText> examples) {
  if (examples.empty()) throw Error("classifier: no training examples");
  bool has_pos = false, has_neg = false;
  for (const auto& ex : examples) {
    (ex.label == SentimentLabel::Positive ? has_pos : has_neg) = true;
  }
  if (!has_pos || !has_neg)
    throw Error("classifier: training set has a single class");
}

void check_finite(const std::vector<double>& weights) {
  for (double w : weights) {
    if (!std::isfinite(w))
      throw Error(
          "classifier: non-finite weights (learning rate too large?)");
  }
}

// Trains for spec.epochs epochs; calls on_epoch after each one.
std::vector<double> run_epochs(
    std::span<const LabeledText> examples, const ClassifierSpec& spec,
    const std::function<void(int, const std::vector<double>&)>& on_epoch) {
  const auto features = featurize_all(examples, spec);
  std::vector<double> weights(spec.feature_dims + 1, 0.0);
  std::vector<std::size_t> order(examples.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;

  const std::size_t batch = static_cast<std::size_t>(spec.batch_size);
  for (int epoch = 0; epoch < spec.epochs; ++epoch) {
    Rng rng(derive_seed(spec.seed, "epoch/" + std::to_string(epoch)));
    rng.shuffle(order);
    for (std::size_t begin = 0; begin < order.size(); begin += batch) {
      std::size_t end = std::min(begin + batch, order.size());
      step(weights, spec, examples, features, order, begin, end);
    }
    check_finite(weights);
    if (on_epoch) on_epoch(epoch, weights);
  }
  return weights;
}

}  // namespace

void ClassifierSpec::validate() const {
  if (!is_power_of_two(feature_dims) || feature_dims < (1u << 10))
    throw Error("classifier: feature_dims must be a power of two >= 1024");
  if (epochs < 1) throw Error("classifier: epochs must be >= 1");
  if (!(learning_rate > 0.0))
    throw Error("classifier: learning_rate must be > 0");
  if (l2 < 0.0) throw Error("classifier: l2 must be >= 0");
  if (batch_size < 1) throw Error("classifier: batch_size must be >= 1");
}

std::string ClassifierSpec::canonical() const {
  std::ostringstream os;
  os << "dims=" << feature_dims << ";word=";
  for (std::size_t i = 0; i < word_ngram_orders.size(); ++i)
    os << (i ? "," : "") << word_ngram_orders[i];
  os << ";char=";
  for (std::size_t i = 0; i < char_ngram_orders.size(); ++i)
    os << (i ? "," : "") << char_ngram_orders[i];
  os << ";epochs=" << epochs << ";lr=" << learning_rate << ";l2=" << l2
     << ";batch=" << batch_size << ";seed=" << seed;
  return os.str();
}

Prediction make_prediction(double p_positive) {
  Prediction p;
  p.p_positive = p_positive;
  p.p_negative = 1.0 - p_positive;
  p.label = p.p_positive >= p.p_negative ? SentimentLabel::Positive
                                         : SentimentLabel::Negative;
  p.confidence = std::max(p.p_positive, p.p_negative);
  return p;
}

std::string Provenance::str() const {
  return kind == Pretrained ? "pretrained"
                            : "iteration_" + std::to_string(iteration);
}

FeatureVec featurize(std::string_view text, const ClassifierSpec& spec) {
  const std::uint32_t mask = spec.feature_dims - 1;
  std::vector<std::pair<std::uint32_t, double>> raw;
  const std::string folded = fold_case(text);
  auto add = [&](std::uint64_t h) {
    raw.emplace_back(static_cast<std::uint32_t>(h) & mask, 1.0);
  };

  if (!spec.word_ngram_orders.empty()) {
    const auto words = split_whitespace(folded);
    for (int n : spec.word_ngram_orders) {
      if (n < 1 || words.size() < static_cast<std::size_t>(n)) continue;
      for (std::size_t i = 0; i + static_cast<std::size_t>(n) <= words.size();
           ++i) {
        std::string key = "w" + std::to_string(n) + ":";
        for (int j = 0; j < n; ++j) {
          if (j) key.push_back(kNgramSep);
          key += words[i + static_cast<std::size_t>(j)];
        }
        add(fnv1a64(key));
      }
    }
  }
  for (int n : spec.char_ngram_orders) {
    if (n < 1 || folded.size() < static_cast<std::size_t>(n)) continue;
    // Windows are over bytes of the folded text; multi-byte codepoints
    // hash consistently because the window is a raw byte slice.
    std::string key = "c" + std::to_string(n) + ":";
    const std::size_t prefix = key.size();
    for (std::size_t i = 0; i + static_cast<std::size_t>(n) <= folded.size();
         ++i) {
      key.resize(prefix);
      key.append(folded, i, static_cast<std::size_t>(n));
      add(fnv1a64(key));
    }
  }

  std::sort(raw.begin(), raw.end());
  FeatureVec out;
  double norm_sq = 0.0;
  for (std::size_t i = 0; i < raw.size();) {
    std::size_t j = i;
    double count = 0.0;
    while (j < raw.size() && raw[j].first == raw[i].first) {
      count += raw[j].second;
      ++j;
    }
    out.entries.emplace_back(raw[i].first, count);
    norm_sq += count * count;
    i = j;
  }
  if (norm_sq > 0.0) {
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (auto& [idx, val] : out.entries) val *= inv;
  }
  return out;
}

Model train(std::span<const LabeledText> examples, const ClassifierSpec& spec,
            Provenance provenance) {
  spec.validate();
  check_trainable(examples);
  Model model;
  model.spec = spec;
  model.provenance = provenance;
  model.training_digest = digest_inputs(examples, spec, provenance);
  model.weights = run_epochs(examples, spec, nullptr);
  return model;
}

Model train_with_checkpoint_selection(
    std::span<const LabeledText> examples, const ClassifierSpec& spec,
    Provenance provenance, const std::function<double(const Model&)>& score) {
  spec.validate();
  check_trainable(examples);
  Model model;
  model.spec = spec;
  model.provenance = provenance;
  model.training_digest = digest_inputs(examples, spec, provenance);

  double best = -1.0;
  std::vector<double> best_weights;
  Model probe = model;
  run_epochs(examples, spec,
             [&](int /*epoch*/, const std::vector<double>& weights) {
               probe.weights = weights;
               double s = score(probe);
               if (s > best) {
                 best = s;
                 best_weights = weights;
               }
             });
  model.weights = std::move(best_weights);
  return model;
}

Prediction predict(const Model& model, std::string_view text) {
  FeatureVec x = featurize(text, model.spec);
  return make_prediction(sigmoid(dot(model.weights, x)));
}

std::pair<double, std::vector<double>> loss_and_gradient(
    const Model& model, std::span<const LabeledText> batch) {
  if (batch.empty()) throw Error("classifier: empty batch");
  const ClassifierSpec& spec = model.spec;
  std::vector<double> grad(spec.feature_dims + 1, 0.0);
  double loss = 0.0;
  const double inv_b = 1.0 / static_cast<double>(batch.size());
  for (const auto& ex : batch) {
    FeatureVec x = featurize(ex.text, spec);
    double y = ex.label == SentimentLabel::Positive ? 1.0 : -1.0;
    double z = dot(model.weights, x);
    loss += log1p_exp_neg(y * z) * inv_b;
    double g = -y * sigmoid(-y * z) * inv_b;
    for (const auto& [idx, val] : x.entries) grad[idx] += g * val;
    grad.back() += g;
  }
  double reg = 0.0;
  for (std::uint32_t j = 0; j < spec.feature_dims; ++j) {
    reg += model.weights[j] * model.weights[j];
    grad[j] += spec.l2 * model.weights[j];
  }
  loss += 0.5 * spec.l2 * reg;
  return {loss, std::move(grad)};
}

}  // namespace cst
