#include "tsclust/ucr_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <set>

namespace tsclust {

namespace {

bool is_blank(std::string_view line) {
  return std::ranges::all_of(
      line, [](unsigned char c) { return std::isspace(c) != 0; });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split_fields(std::string_view line,
                                           bool comma_separated) {
  std::vector<std::string_view> fields;
  if (comma_separated) {
    std::size_t start = 0;
    while (start <= line.size()) {
      const std::size_t pos = line.find(',', start);
      const std::string_view raw =
          pos == std::string_view::npos
              ? line.substr(start)
              : line.substr(start, pos - start);
      fields.push_back(trim(raw));
      if (pos == std::string_view::npos) break;
      start = pos + 1;
    }
  } else {
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() &&
             std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
      }
      const std::size_t start = i;
      while (i < line.size() &&
             !std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
      }
      if (i > start) fields.push_back(line.substr(start, i - start));
    }
  }
  return fields;
}

double parse_sample(std::string_view field, std::size_t line_no) {
  double value = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw ParseError("line " + std::to_string(line_no) +
                         ": cannot parse sample '" + std::string(field) + "'",
                     line_no);
  }
  if (!std::isfinite(value)) {
    throw ParseError("line " + std::to_string(line_no) +
                         ": sample is not finite",
                     line_no);
  }
  return value;
}

}  // namespace

LabeledDataset load_ucr(std::istream& in, const UcrLoadOptions& options,
                        std::string_view source_name) {
  std::vector<TimeSeries> raw;
  std::vector<std::string> labels;

  std::string line;
  std::size_t line_no = 0;
  std::size_t expected_fields = 0;
  bool comma_separated = false;
  bool delimiter_known = false;

  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank(line)) continue;
    if (!delimiter_known) {
      comma_separated = line.find(',') != std::string::npos;
      delimiter_known = true;
    }
    const std::vector<std::string_view> fields =
        split_fields(line, comma_separated);
    if (fields.size() < 3) {
      throw ParseError("line " + std::to_string(line_no) +
                           ": need a label and at least 2 samples, got " +
                           std::to_string(fields.size()) + " field(s)",
                       line_no);
    }
    if (expected_fields == 0) {
      expected_fields = fields.size();
    } else if (fields.size() != expected_fields) {
      throw LengthMismatchError(
          "line " + std::to_string(line_no) + " has " +
          std::to_string(fields.size() - 1) + " samples, expected " +
          std::to_string(expected_fields - 1));
    }
    labels.emplace_back(fields[0]);
    std::vector<double> samples;
    samples.reserve(fields.size() - 1);
    for (std::size_t f = 1; f < fields.size(); ++f) {
      samples.push_back(parse_sample(fields[f], line_no));
    }
    raw.emplace_back(std::move(samples));
  }
  if (raw.empty()) {
    throw EmptyDatasetError("no data rows in " + std::string(source_name));
  }

  DatasetNormalization normalized = validate_and_normalize_dataset(
      raw, options.convention, options.drop_constant);

  LabeledDataset out{std::move(normalized.dataset), {}, 0,
                     std::move(normalized.dropped_rows)};
  std::vector<std::string> kept;
  kept.reserve(labels.size() - out.dropped_rows.size());
  std::size_t next_drop = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (next_drop < out.dropped_rows.size() &&
        out.dropped_rows[next_drop] == i) {
      ++next_drop;
      continue;
    }
    kept.push_back(std::move(labels[i]));
  }
  out.class_labels = std::move(kept);
  out.class_count =
      std::set<std::string>(out.class_labels.begin(), out.class_labels.end())
          .size();
  return out;
}

LabeledDataset load_ucr(const std::filesystem::path& path,
                        const UcrLoadOptions& options) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open " + path.string());
  }
  return load_ucr(in, options, path.string());
}

}  // namespace tsclust
