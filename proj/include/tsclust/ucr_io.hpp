#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "tsclust/series.hpp"

namespace tsclust {

struct UcrLoadOptions {
  NormalizationConvention convention = NormalizationConvention::UnitNorm;
  bool drop_constant = false;
};

struct LabeledDataset {
  Dataset dataset;
  std::vector<std::string> class_labels;  // one per retained row
  std::size_t class_count = 0;            // distinct labels among retained rows
  std::vector<std::size_t> dropped_rows;  // 0-based row indices in the file
};

/// Loads UCR-style text: one series per line, the first field the class
/// label, the remaining T fields real samples. Fields are separated by commas
/// or runs of whitespace, auto-detected per file from the first data line.
/// Rows are z-scored under the requested convention; constant rows follow the
/// drop_constant policy. Errors: ParseError (with 1-based line number),
/// LengthMismatchError naming the offending line, ConstantSeriesError listing
/// rows, EmptyDatasetError, IoError.
LabeledDataset load_ucr(const std::filesystem::path& path,
                        const UcrLoadOptions& options = {});
LabeledDataset load_ucr(std::istream& in, const UcrLoadOptions& options = {},
                        std::string_view source_name = "<stream>");

}  // namespace tsclust
