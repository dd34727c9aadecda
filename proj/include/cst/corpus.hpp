#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cst {

enum class SentimentLabel { Positive, Negative };

std::string_view to_string(SentimentLabel label);

// Accepts "positive"/"negative" and the "pos"/"neg" shorthands,
// case-insensitively. Anything else is not a label.
std::optional<SentimentLabel> parse_label(std::string_view raw);

struct Example {
  std::string id;
  std::string text;
  std::optional<SentimentLabel> gold;

  bool operator==(const Example&) const = default;
};

enum class DatasetKind { SourceLabeled, TargetUnlabeled, TargetWithHiddenGold };
enum class FileFormat { Tsv, Csv, Jsonl };

std::string_view to_string(DatasetKind kind);
FileFormat parse_format(std::string_view name);

struct Dataset {
  std::string name;
  DatasetKind kind = DatasetKind::SourceLabeled;
  std::vector<Example> examples;

  // counts[0] = positive, counts[1] = negative; examples without gold are
  // not counted.
  std::array<std::size_t, 2> class_counts() const;

  bool operator==(const Dataset&) const = default;
};

// Reads and validates a dataset file. Ids are synthesized as the 0-based row
// index when the file has no id column/field. Loading with kind
// TargetUnlabeled drops any label column so gold can never reach training
// code through that dataset.
Dataset load_dataset(const std::filesystem::path& path, FileFormat format,
                     DatasetKind kind);

// Inverse of load_dataset for round-tripping. TSV/CSV cannot carry embedded
// tabs/newlines (the writer rejects them); JSONL carries anything.
void save_dataset(const Dataset& d, const std::filesystem::path& path,
                  FileFormat format);

// Stratified split: per-class dev counts are round(dev_fraction * count),
// so each side's class ratio is within one example of the input's.
// Deterministic in (dataset order, seed).
std::pair<Dataset, Dataset> train_dev_split(const Dataset& d,
                                            double dev_fraction,
                                            std::uint64_t seed);

// Duplicates minority-class examples (sampled with replacement) until the
// class counts match. Duplicates keep the source text and get ids suffixed
// "#dup<n>". The majority class and the original rows are untouched.
Dataset upsample_minority(const Dataset& d, std::uint64_t seed);

}  // namespace cst
