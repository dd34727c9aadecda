#include "cst/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <unordered_map>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "cst/error.hpp"
#include "cst/rng.hpp"
#include "cst/text.hpp"

namespace cst {

namespace {

using nlohmann::json;

std::string lower_ascii(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c + 32);
  }
  return out;
}

[[noreturn]] void fail(const std::string& msg) { throw Error("corpus: " + msg); }

[[noreturn]] void fail_at(const std::filesystem::path& path, std::size_t line,
                          const std::string& msg) {
  fail(path.string() + ":" + std::to_string(line) + ": " + msg);
}

struct RawRow {
  std::optional<std::string> id;
  std::string text;
  std::optional<std::string> label;
  std::size_t line = 0;
};

// Splits one delimited record. For CSV, fields may be double-quoted with ""
// escaping; embedded newlines are not supported (records are lines).
std::vector<std::string> split_record(const std::string& line, char sep,
                                      bool quoted,
                                      const std::filesystem::path& path,
                                      std::size_t lineno) {
  std::vector<std::string> fields;
  std::string cur;
  bool in_quotes = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted && c == '"') {
      if (in_quotes && i + 1 < line.size() && line[i + 1] == '"') {
        cur.push_back('"');
        ++i;
      } else {
        in_quotes = !in_quotes;
      }
    } else if (c == sep && !in_quotes) {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (in_quotes) fail_at(path, lineno, "unterminated quoted field");
  fields.push_back(std::move(cur));
  return fields;
}

std::string escape_field(const std::string& value, char sep, bool quoted,
                         const std::filesystem::path& path) {
  if (value.find('\n') != std::string::npos ||
      value.find('\r') != std::string::npos) {
    fail(path.string() + ": field contains a newline; use jsonl");
  }
  if (!quoted) {
    if (value.find(sep) != std::string::npos) {
      fail(path.string() + ": field contains a tab; use csv or jsonl");
    }
    return value;
  }
  if (value.find(sep) == std::string::npos &&
      value.find('"') == std::string::npos) {
    return value;
  }
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out += "\"";
  return out;
}

std::vector<RawRow> read_delimited(const std::filesystem::path& path, char sep,
                                   bool quoted) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path.string());

  std::string line;
  std::size_t lineno = 0;
  if (!std::getline(in, line)) fail(path.string() + ": empty file");
  ++lineno;
  if (!line.empty() && line.back() == '\r') line.pop_back();

  auto header = split_record(line, sep, quoted, path, lineno);
  int id_col = -1, text_col = -1, label_col = -1;
  for (std::size_t c = 0; c < header.size(); ++c) {
    std::string name = lower_ascii(trim(header[c]));
    if (name == "id" && id_col < 0) id_col = static_cast<int>(c);
    else if (name == "text" && text_col < 0) text_col = static_cast<int>(c);
    else if (name == "label" && label_col < 0) label_col = static_cast<int>(c);
    else fail_at(path, lineno, "unknown or repeated column '" + header[c] + "'");
  }
  if (text_col < 0) fail_at(path, lineno, "missing required column 'text'");

  std::vector<RawRow> rows;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto fields = split_record(line, sep, quoted, path, lineno);
    if (fields.size() != header.size()) {
      fail_at(path, lineno, "expected " + std::to_string(header.size()) +
                                " fields, found " +
                                std::to_string(fields.size()));
    }
    RawRow row;
    row.line = lineno;
    if (id_col >= 0) row.id = fields[static_cast<std::size_t>(id_col)];
    row.text = fields[static_cast<std::size_t>(text_col)];
    if (label_col >= 0) {
      std::string raw = trim(fields[static_cast<std::size_t>(label_col)]);
      if (!raw.empty()) row.label = raw;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<RawRow> read_jsonl(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path.string());
  std::vector<RawRow> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::exception& e) {
      fail_at(path, lineno, std::string("invalid json: ") + e.what());
    }
    if (!obj.is_object()) fail_at(path, lineno, "expected a json object");
    RawRow row;
    row.line = lineno;
    for (const auto& [key, value] : obj.items()) {
      if (key == "id") {
        if (value.is_string()) row.id = value.get<std::string>();
        else if (value.is_number_integer())
          row.id = std::to_string(value.get<long long>());
        else fail_at(path, lineno, "'id' must be a string");
      } else if (key == "text") {
        if (!value.is_string()) fail_at(path, lineno, "'text' must be a string");
        row.text = value.get<std::string>();
      } else if (key == "label") {
        if (value.is_null()) continue;
        if (!value.is_string()) fail_at(path, lineno, "'label' must be a string");
        row.label = value.get<std::string>();
      } else {
        fail_at(path, lineno, "unknown key '" + key + "'");
      }
    }
    if (!obj.contains("text")) fail_at(path, lineno, "missing key 'text'");
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::string_view to_string(SentimentLabel label) {
  return label == SentimentLabel::Positive ? "positive" : "negative";
}

std::optional<SentimentLabel> parse_label(std::string_view raw) {
  std::string s = lower_ascii(trim(raw));
  if (s == "positive" || s == "pos") return SentimentLabel::Positive;
  if (s == "negative" || s == "neg") return SentimentLabel::Negative;
  return std::nullopt;
}

std::string_view to_string(DatasetKind kind) {
  switch (kind) {
    case DatasetKind::SourceLabeled:
      return "source_labeled";
    case DatasetKind::TargetUnlabeled:
      return "target_unlabeled";
    case DatasetKind::TargetWithHiddenGold:
      return "target_with_hidden_gold";
  }
  return "source_labeled";
}

FileFormat parse_format(std::string_view name) {
  std::string s = lower_ascii(name);
  if (s == "tsv") return FileFormat::Tsv;
  if (s == "csv") return FileFormat::Csv;
  if (s == "jsonl") return FileFormat::Jsonl;
  throw Error("corpus: unknown format '" + std::string(name) +
              "' (expected tsv, csv or jsonl)");
}

std::array<std::size_t, 2> Dataset::class_counts() const {
  std::array<std::size_t, 2> counts{0, 0};
  for (const auto& ex : examples) {
    if (ex.gold) ++counts[ex.gold == SentimentLabel::Positive ? 0 : 1];
  }
  return counts;
}

Dataset load_dataset(const std::filesystem::path& path, FileFormat format,
                     DatasetKind kind) {
  std::vector<RawRow> rows;
  switch (format) {
    case FileFormat::Tsv:
      rows = read_delimited(path, '\t', false);
      break;
    case FileFormat::Csv:
      rows = read_delimited(path, ',', true);
      break;
    case FileFormat::Jsonl:
      rows = read_jsonl(path);
      break;
  }
  if (rows.empty()) fail(path.string() + ": empty dataset");

  Dataset d;
  d.name = path.stem().string();
  d.kind = kind;
  d.examples.reserve(rows.size());
  std::unordered_set<std::string> seen;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const RawRow& row = rows[r];
    Example ex;
    ex.id = row.id ? *row.id : std::to_string(r);
    ex.text = row.text;
    if (trim(ex.text).empty())
      fail_at(path, row.line, "empty text for id '" + ex.id + "'");
    if (!seen.insert(ex.id).second)
      fail_at(path, row.line, "duplicate id '" + ex.id + "'");
    if (row.label && kind != DatasetKind::TargetUnlabeled) {
      auto label = parse_label(*row.label);
      if (!label)
        fail_at(path, row.line, "unknown label '" + *row.label + "'");
      ex.gold = *label;
    }
    if (kind == DatasetKind::SourceLabeled && !ex.gold)
      fail_at(path, row.line, "missing label for id '" + ex.id + "'");
    if (kind == DatasetKind::TargetWithHiddenGold && !ex.gold)
      fail_at(path, row.line, "missing gold label for id '" + ex.id + "'");
    d.examples.push_back(std::move(ex));
  }
  return d;
}

void save_dataset(const Dataset& d, const std::filesystem::path& path,
                  FileFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail("cannot write " + path.string());
  bool any_label =
      std::any_of(d.examples.begin(), d.examples.end(),
                  [](const Example& e) { return e.gold.has_value(); });
  if (format == FileFormat::Jsonl) {
    for (const auto& ex : d.examples) {
      json obj;
      obj["id"] = ex.id;
      obj["text"] = ex.text;
      if (ex.gold) obj["label"] = std::string(to_string(*ex.gold));
      out << obj.dump() << "\n";
    }
    return;
  }
  char sep = format == FileFormat::Tsv ? '\t' : ',';
  bool quoted = format == FileFormat::Csv;
  out << "id" << sep << "text";
  if (any_label) out << sep << "label";
  out << "\n";
  for (const auto& ex : d.examples) {
    out << escape_field(ex.id, sep, quoted, path) << sep
        << escape_field(ex.text, sep, quoted, path);
    if (any_label) {
      out << sep << (ex.gold ? std::string(to_string(*ex.gold)) : "");
    }
    out << "\n";
  }
}

std::pair<Dataset, Dataset> train_dev_split(const Dataset& d,
                                            double dev_fraction,
                                            std::uint64_t seed) {
  if (d.kind != DatasetKind::SourceLabeled)
    fail("train_dev_split requires a source-labeled dataset");
  if (!(dev_fraction > 0.0 && dev_fraction < 1.0))
    fail("dev_fraction must be in (0,1)");

  std::vector<std::size_t> by_class[2];
  for (std::size_t i = 0; i < d.examples.size(); ++i) {
    by_class[d.examples[i].gold == SentimentLabel::Positive ? 0 : 1].push_back(i);
  }

  std::vector<bool> in_dev(d.examples.size(), false);
  std::size_t dev_total = 0;
  for (int c = 0; c < 2; ++c) {
    auto& idx = by_class[c];
    if (idx.empty()) continue;
    std::size_t n_dev = static_cast<std::size_t>(
        std::floor(dev_fraction * static_cast<double>(idx.size()) + 0.5));
    n_dev = std::min(n_dev, idx.size());
    Rng rng(derive_seed(seed, c == 0 ? "split/positive" : "split/negative"));
    rng.shuffle(idx);
    for (std::size_t i = 0; i < n_dev; ++i) in_dev[idx[i]] = true;
    dev_total += n_dev;
  }
  if (dev_total == 0) fail("dev_fraction produces an empty dev split");
  if (dev_total == d.examples.size())
    fail("dev_fraction produces an empty train split");

  Dataset train{d.name + ".train", d.kind, {}};
  Dataset dev{d.name + ".dev", d.kind, {}};
  for (std::size_t i = 0; i < d.examples.size(); ++i) {
    (in_dev[i] ? dev : train).examples.push_back(d.examples[i]);
  }
  return {std::move(train), std::move(dev)};
}

Dataset upsample_minority(const Dataset& d, std::uint64_t seed) {
  for (const auto& ex : d.examples) {
    if (!ex.gold) fail("upsample_minority requires gold labels on every example");
  }
  auto counts = d.class_counts();
  if (counts[0] == 0 || counts[1] == 0)
    fail("upsample_minority: dataset has a single class");
  if (counts[0] == counts[1]) return d;

  SentimentLabel minority =
      counts[0] < counts[1] ? SentimentLabel::Positive : SentimentLabel::Negative;
  std::size_t deficit =
      counts[0] < counts[1] ? counts[1] - counts[0] : counts[0] - counts[1];

  std::vector<std::size_t> pool;
  for (std::size_t i = 0; i < d.examples.size(); ++i) {
    if (d.examples[i].gold == minority) pool.push_back(i);
  }

  Dataset out = d;
  Rng rng(derive_seed(seed, "upsample"));
  std::unordered_map<std::size_t, std::size_t> dup_counter;
  for (std::size_t n = 0; n < deficit; ++n) {
    std::size_t pick = pool[rng.bounded(pool.size())];
    Example dup = d.examples[pick];
    dup.id += "#dup" + std::to_string(++dup_counter[pick]);
    out.examples.push_back(std::move(dup));
  }
  return out;
}

}  // namespace cst
