#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "tsclust/datagen.hpp"
#include "tsclust/evaluation.hpp"
#include "tsclust/kmeans.hpp"
#include "tsclust/ucr_io.hpp"

namespace tsclust {

// Three-clustering comparison protocol, per run r (1-based):
//   C1: standard k-Means, prototypes drawn with derive_seed(base, r, 0)
//   C2: Pearson-corrected k-Means from the SAME initial prototypes as C1,
//       each rescaled to unit norm
//   C3: standard k-Means, prototypes drawn with derive_seed(base, r, 1)
//   E_pear   = cross_entropy(C1, C2)
//   E_random = cross_entropy(C1, C3)
// E_pear isolates the effect of the prototype normalization; E_random shows
// the baseline instability under a different initialization.

struct ProtocolOptions {
  std::size_t runs = 5;
  std::uint64_t base_seed = 0;
  std::size_t k_override = 0;  // 0: use the number of classes
  std::size_t max_iters = 300;
  std::string dataset_name;
};

struct ProtocolRun {
  std::size_t run_index = 0;  // 1-based
  std::uint64_t seed = 0;     // C1/C2 initialization seed
  std::uint64_t alt_seed = 0; // C3 initialization seed
  bool ok = false;
  std::string error;
  double e_pear = 0.0;
  double e_random = 0.0;
  std::vector<double> standard_prototype_norms;  // C1's final prototypes
};

struct ProtocolReport {
  std::string dataset_name;
  std::size_t k = 0;
  std::size_t length = 0;  // T
  std::size_t size = 0;    // n
  std::uint64_t base_seed = 0;
  std::vector<ProtocolRun> runs;
  RunSummary e_pear_summary;    // over successful runs
  RunSummary e_random_summary;  // over successful runs
  std::size_t failed_runs = 0;
};

ProtocolReport run_protocol(const LabeledDataset& data,
                            const ProtocolOptions& options);

/// One variant by itself, with the same per-run seed derivation as the
/// protocol's C1, so `standard` runs reproduce C1 exactly.
struct VariantRun {
  std::size_t run_index = 0;
  std::uint64_t seed = 0;
  bool ok = false;
  std::string error;
  std::size_t iterations = 0;
  bool converged = false;
  double final_objective = 0.0;
  std::vector<double> prototype_norms;
};

struct VariantReport {
  std::string dataset_name;
  std::size_t k = 0;
  std::size_t length = 0;
  std::size_t size = 0;
  std::uint64_t base_seed = 0;
  KMeansVariant variant = KMeansVariant::StandardEuclidean;
  std::vector<VariantRun> runs;
  std::size_t failed_runs = 0;
};

VariantReport run_variant_experiment(const LabeledDataset& data,
                                     KMeansVariant variant,
                                     const ProtocolOptions& options);

/// Devil's-advocate benchmark: per run, a fresh dataset is generated with
/// seed derive_seed(config.seed, r, 2), then both variants run from the
/// template prototypes. Splits and norms are reported with the cluster
/// identity resolved against the increasing template.
struct DevilsAdvocateVariantRecord {
  ProbeSplit split;
  double norm_increasing = 0.0;
  double norm_decreasing = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
};

struct DevilsAdvocateRun {
  std::size_t run_index = 0;  // 1-based
  std::uint64_t dataset_seed = 0;
  bool ok = false;
  std::string error;
  DevilsAdvocateVariantRecord standard;
  DevilsAdvocateVariantRecord corrected;
};

struct DevilsAdvocateReport {
  DevilsAdvocateConfig config;
  std::vector<DevilsAdvocateRun> runs;
  double standard_mean_to_increasing = 0.0;
  double corrected_mean_to_increasing = 0.0;
  std::size_t failed_runs = 0;
};

DevilsAdvocateReport run_devils_advocate(const DevilsAdvocateConfig& config,
                                         std::size_t runs);

enum class ReportFormat { Csv, Markdown };

// Reports print numbers with 4 decimal places and '.' as the decimal
// separator; identical inputs and seeds produce byte-identical files.
void emit_report(const ProtocolReport& report, ReportFormat format,
                 std::ostream& out);
void emit_report(const ProtocolReport& report, ReportFormat format,
                 const std::filesystem::path& path);
void emit_report(const VariantReport& report, ReportFormat format,
                 std::ostream& out);
void emit_report(const VariantReport& report, ReportFormat format,
                 const std::filesystem::path& path);
void emit_report(const DevilsAdvocateReport& report, ReportFormat format,
                 std::ostream& out);
void emit_report(const DevilsAdvocateReport& report, ReportFormat format,
                 const std::filesystem::path& path);

}  // namespace tsclust
