// Acceptance suite: one check per shipped guarantee, one PASS/FAIL line each.
// Run directly (./acceptance) or through ctest. Exits nonzero if any check
// fails.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "tsclust/datagen.hpp"
#include "tsclust/distance.hpp"
#include "tsclust/evaluation.hpp"
#include "tsclust/kmeans.hpp"
#include "tsclust/protocol.hpp"
#include "tsclust/rng.hpp"
#include "tsclust/series.hpp"
#include "tsclust/ucr_io.hpp"

using namespace tsclust;

namespace {

struct Checker {
  int failures = 0;

  void run(int index, const std::string& name,
           const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    try {
      ok = body(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::printf("[%s] criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", index,
                name.c_str(), detail.empty() ? "" : " | ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
};

std::vector<double> random_series(SplitMix64& rng, std::size_t n) {
  std::vector<double> v(n);
  for (double& x : v) x = rng.next_unit() * 20.0 - 10.0;
  return v;
}

Dataset random_unit_dataset(SplitMix64& rng, std::size_t n, std::size_t t) {
  std::vector<NormalizedSeries> rows;
  rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (;;) {
      const std::vector<double> raw = random_series(rng, t);
      const SeriesStats stats = series_stats(raw);
      if (stats.sum_squared_diff == 0.0) continue;
      rows.push_back(zscore_normalize(raw, NormalizationConvention::UnitNorm));
      break;
    }
  }
  return Dataset::from_series(std::move(rows));
}

double naive_norm(std::span<const double> v) {
  double ss = 0.0;
  for (double x : v) ss += x * x;
  return std::sqrt(ss);
}

// 1. Squared Euclidean distance of z-scored pairs equals a fixed multiple of
//    the Pearson distance: factor 2T under population sigma, 2 under unit
//    norm.
bool criterion_equivalence(std::string& detail) {
  SplitMix64 rng(0xE9);
  std::size_t checked = 0;
  double worst_pop = 0.0;
  double worst_unit = 0.0;
  while (checked < 1200) {
    const std::size_t t = 2 + (checked % 127);  // T in {2, ..., 128}
    const std::vector<double> r = random_series(rng, t);
    const std::vector<double> s = random_series(rng, t);
    const SeriesStats stats_r = series_stats(r);
    const SeriesStats stats_s = series_stats(s);
    if (stats_r.sum_squared_diff == 0.0 || stats_s.sum_squared_diff == 0.0) {
      continue;
    }
    const double d_p = pearson_distance(r, s);

    const auto r_pop =
        zscore_normalize(r, NormalizationConvention::PopulationSigma);
    const auto s_pop =
        zscore_normalize(s, NormalizationConvention::PopulationSigma);
    const double gap_pop =
        std::abs(squared_euclidean(r_pop.samples, s_pop.samples) -
                 2.0 * static_cast<double>(t) * d_p);
    worst_pop = std::max(worst_pop, gap_pop / static_cast<double>(t));
    if (gap_pop > 1e-9 * static_cast<double>(t)) return false;

    const auto r_unit = zscore_normalize(r, NormalizationConvention::UnitNorm);
    const auto s_unit = zscore_normalize(s, NormalizationConvention::UnitNorm);
    const double gap_unit =
        std::abs(squared_euclidean(r_unit.samples, s_unit.samples) - 2.0 * d_p);
    worst_unit = std::max(worst_unit, gap_unit);
    if (gap_unit > 1e-9) return false;

    ++checked;
  }
  char buf[128];
  std::snprintf(buf, sizeof(buf),
                "%zu pairs, worst |gap|/T = %.2e (sigma), %.2e (unit)", checked,
                worst_pop, worst_unit);
  detail = buf;
  return true;
}

// 2. Every prototype of every Pearson-corrected iteration has unit norm
//    within 1e-12.
bool criterion_unit_norm(std::string& detail) {
  SplitMix64 rng(0x02);
  const struct {
    std::size_t n, t, k;
  } shapes[] = {{1000, 512, 7}, {300, 33, 5}, {64, 2, 3}, {50, 100, 10}};
  double worst = 0.0;
  std::size_t inspected = 0;
  for (const auto& shape : shapes) {
    const Dataset ds = random_unit_dataset(rng, shape.n, shape.t);
    bool ok = true;
    const IterationObserver observer = [&](std::size_t, const Memberships&,
                                           const Prototypes& protos) {
      for (std::size_t i = 0; i < protos.count(); ++i) {
        const double gap = std::abs(naive_norm(protos.row(i)) - 1.0);
        worst = std::max(worst, gap);
        if (gap > 1e-12) ok = false;
        ++inspected;
      }
    };
    KMeansConfig config{shape.k, 300, rng.next(),
                        KMeansVariant::PearsonCorrected, {}};
    run_kmeans(ds, config, observer);
    if (!ok) return false;
  }
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%zu prototypes inspected, worst | ||p||-1 | = %.2e",
                inspected, worst);
  detail = buf;
  return true;
}

// 3. The objective trace never increases (1e-9 slack) and every run converges
//    within 300 iterations, for both variants.
bool criterion_monotone(std::string& detail) {
  SplitMix64 rng(0x03);
  std::size_t runs = 0;
  std::size_t max_seen = 0;
  for (auto variant : {KMeansVariant::StandardEuclidean,
                       KMeansVariant::PearsonCorrected}) {
    for (int rep = 0; rep < 100; ++rep) {
      const std::size_t n = 30 + rng.next_below(40);
      const Dataset ds = random_unit_dataset(rng, n, 8 + rng.next_below(24));
      KMeansConfig config{1 + rng.next_below(7), 300, rng.next(), variant, {}};
      const ClusteringResult result = run_kmeans(ds, config);
      if (!result.converged) return false;
      for (std::size_t i = 1; i < result.objective_trace.size(); ++i) {
        if (result.objective_trace[i] >
            result.objective_trace[i - 1] + 1e-9) {
          return false;
        }
      }
      max_seen = std::max(max_seen, result.iterations);
      ++runs;
    }
  }
  detail = std::to_string(runs) + " runs, longest took " +
           std::to_string(max_seen) + " iterations";
  return true;
}

// 4. Exhaustive check that converged standard runs are 1-swap local minima of
//    J at the converged prototypes.
bool criterion_local_minimum(std::string& detail) {
  SplitMix64 rng(0x04);
  std::size_t instances = 0;
  std::size_t swaps = 0;
  while (instances < 50) {
    const std::size_t n = 4 + rng.next_below(7);  // n <= 10
    const Dataset ds = random_unit_dataset(rng, n, 2 + rng.next_below(6));
    KMeansConfig config{2, 300, rng.next(), KMeansVariant::StandardEuclidean,
                        {}};
    const ClusteringResult result = run_kmeans(ds, config);
    if (!result.converged) return false;
    if (assign_memberships(ds, result.prototypes) != result.memberships) {
      return false;
    }
    const double j0 = objective(ds, result.memberships, result.prototypes,
                                KMeansVariant::StandardEuclidean);
    for (std::size_t j = 0; j < n; ++j) {
      Memberships moved = result.memberships;
      moved.assignment[j] = 1 - moved.assignment[j];
      const double j1 = objective(ds, moved, result.prototypes,
                                  KMeansVariant::StandardEuclidean);
      if (j1 < j0 - 1e-12) return false;
      ++swaps;
    }
    ++instances;
  }
  detail = std::to_string(instances) + " instances, " + std::to_string(swaps) +
           " single-point reassignments enumerated";
  return true;
}

// 5. Devil's-advocate direction over 50 seeds with the default configuration:
//    (a) the corrected variant splits the probes roughly evenly,
//    (b) the standard variant is more biased toward the increasing cluster,
//    (c) the noisy cluster's prototype norm is smaller in >= 80% of runs.
bool criterion_devils_advocate(std::string& detail) {
  DevilsAdvocateConfig config;  // defaults: 100+100, 10 probes, sigma 30/10/10
  config.seed = 20240801;
  const DevilsAdvocateReport report = run_devils_advocate(config, 50);
  if (report.failed_runs != 0) return false;

  const double corrected = report.corrected_mean_to_increasing;
  const double standard = report.standard_mean_to_increasing;
  std::size_t norm_ordered = 0;
  for (const DevilsAdvocateRun& run : report.runs) {
    if (run.standard.norm_increasing < run.standard.norm_decreasing) {
      ++norm_ordered;
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "corrected mean %.2f, standard mean %.2f, noisy norm smaller "
                "in %zu/50 runs",
                corrected, standard, norm_ordered);
  detail = buf;
  return corrected >= 4.0 && corrected <= 6.0 && standard > corrected &&
         norm_ordered >= 40;
}

// 6. Cross-clustering entropy: exact analytic values and invariance under
//    relabeling.
bool criterion_entropy(std::string& detail) {
  const Memberships identical{{0, 1, 0, 1, 2}};
  if (std::abs(cross_entropy(identical, identical).entropy) > 1e-12) {
    return false;
  }
  const Memberships crossed_a{{0, 0, 1, 1}};
  const Memberships crossed_b{{0, 1, 0, 1}};
  if (std::abs(cross_entropy(crossed_a, crossed_b).entropy - 1.0) > 1e-12) {
    return false;
  }
  const Memberships lumped{{0, 0, 0, 0}};
  const Memberships singletons{{0, 1, 2, 3}};
  if (std::abs(cross_entropy(lumped, singletons).entropy - 2.0) > 1e-12) {
    return false;
  }

  SplitMix64 rng(0x06);
  for (int rep = 0; rep < 100; ++rep) {
    const std::size_t n = 10 + rng.next_below(60);
    const std::size_t ka = 2 + rng.next_below(5);
    const std::size_t kb = 2 + rng.next_below(5);
    Memberships clusters, labels;
    clusters.assignment.resize(n);
    labels.assignment.resize(n);
    for (auto& a : clusters.assignment) a = rng.next_below(ka);
    for (auto& a : labels.assignment) a = rng.next_below(kb);
    const double base = cross_entropy(clusters, labels).entropy;

    std::vector<std::size_t> perm(kb);
    for (std::size_t i = 0; i < kb; ++i) perm[i] = i;
    for (std::size_t i = kb; i > 1; --i) {
      std::swap(perm[i - 1], perm[rng.next_below(i)]);
    }
    Memberships relabeled = labels;
    for (auto& a : relabeled.assignment) a = perm[a];
    if (std::abs(cross_entropy(clusters, relabeled).entropy - base) > 1e-12) {
      return false;
    }
  }
  detail = "3 analytic values exact, 100 relabelings invariant";
  return true;
}

// 7. Protocol pattern on synthetic data: the same-initialization disagreement
//    E_pear stays below the natural instability E_random on noisy multi-
//    cluster datasets, and vanishes on perfectly correlated clusters.
bool criterion_protocol_pattern(std::string& detail) {
  SplitMix64 rng(0x07);

  const auto make_templates = [&](std::size_t groups, std::size_t t) {
    std::vector<std::vector<double>> templates(groups);
    for (auto& tmpl : templates) {
      tmpl.resize(t);
      double level = 0.0;
      for (double& v : tmpl) {
        level += rng.next_gaussian();
        v = level;
      }
    }
    return templates;
  };

  std::ostringstream summary;
  for (int d = 0; d < 5; ++d) {
    const std::size_t groups = 3 + static_cast<std::size_t>(d % 3);
    const std::size_t t = 24 + 8 * static_cast<std::size_t>(d);
    const std::size_t per_group = 20;
    const double noise = 0.8 + 0.3 * d;
    const auto templates = make_templates(groups, t);

    std::vector<NormalizedSeries> rows;
    std::vector<std::string> labels;
    for (std::size_t g = 0; g < groups; ++g) {
      for (std::size_t i = 0; i < per_group; ++i) {
        std::vector<double> raw(t);
        for (std::size_t s = 0; s < t; ++s) {
          raw[s] = templates[g][s] + noise * rng.next_gaussian();
        }
        rows.push_back(
            zscore_normalize(raw, NormalizationConvention::UnitNorm));
        labels.push_back("g" + std::to_string(g));
      }
    }
    LabeledDataset data{Dataset::from_series(std::move(rows)),
                        std::move(labels), groups, {}};

    ProtocolOptions options;
    options.runs = 5;
    options.base_seed = 1700 + static_cast<std::uint64_t>(d);
    options.dataset_name = "synthetic-" + std::to_string(d);
    const ProtocolReport report = run_protocol(data, options);
    if (report.failed_runs != 0) return false;
    if (report.e_pear_summary.mean > report.e_random_summary.mean) {
      return false;
    }
    summary << (d > 0 ? "; " : "") << report.dataset_name << " "
            << report.e_pear_summary.mean << " <= "
            << report.e_random_summary.mean;
  }

  // Perfectly correlated groups: every row is an exact normalized copy of
  // its group template (correlation exactly 1 within each group). Unequal
  // group sizes keep the empty-cluster repair off exact distance ties.
  for (int d = 0; d < 2; ++d) {
    const std::size_t groups = 3;
    const std::size_t t = 20 + 12 * static_cast<std::size_t>(d);
    const auto templates = make_templates(groups, t);
    std::vector<NormalizedSeries> rows;
    std::vector<std::string> labels;
    for (std::size_t g = 0; g < groups; ++g) {
      const NormalizedSeries normalized = zscore_normalize(
          templates[g], NormalizationConvention::UnitNorm);
      for (std::size_t i = 0; i < 15 + 5 * g; ++i) {
        rows.push_back(normalized);
        labels.push_back("g" + std::to_string(g));
      }
    }
    LabeledDataset data{Dataset::from_series(std::move(rows)),
                        std::move(labels), groups, {}};
    ProtocolOptions options;
    options.runs = 5;
    options.base_seed = 41 + static_cast<std::uint64_t>(d);
    const ProtocolReport report = run_protocol(data, options);
    if (report.failed_runs != 0) return false;
    if (report.e_pear_summary.max > 1e-12) return false;
  }

  detail = "mean E_pear <= mean E_random on 5 noisy datasets: " +
           summary.str() + "; E_pear = 0 on 2 correlated datasets";
  return true;
}

// 8. Byte-identical CLI reports for identical inputs and seeds.
bool criterion_cli_determinism(std::string& detail) {
#ifndef TSCLUST_CLI_PATH
  detail = "CLI path not configured";
  return false;
#else
  namespace fs = std::filesystem;
  const fs::path dir = fs::path("acceptance_tmp");
  fs::create_directories(dir);

  // A small UCR file produced by the generator keeps this self-contained.
  DevilsAdvocateConfig config;
  config.n_per_cluster = 20;
  config.n_probes = 5;
  config.seed = 99;
  write_ucr(generate_devils_advocate(config), dir / "input.txt");

  const auto read_file = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  };
  const auto run_cli = [&](const std::string& args) {
    const std::string cmd =
        std::string(TSCLUST_CLI_PATH) + " " + args + " 2> /dev/null";
    return std::system(cmd.c_str()) == 0;
  };

  const std::string protocol_args = "--data " + (dir / "input.txt").string() +
                                    " --runs 3 --seed 4242 --output ";
  if (!run_cli(protocol_args + (dir / "a.csv").string())) return false;
  if (!run_cli(protocol_args + (dir / "b.csv").string())) return false;
  const std::string a = read_file(dir / "a.csv");
  if (a.empty() || a != read_file(dir / "b.csv")) return false;

  const std::string devils_args =
      "devils-advocate --runs 3 --seed 7 --n-per-cluster 25 --n-probes 5 "
      "--output ";
  if (!run_cli(devils_args + (dir / "da_a.csv").string())) return false;
  if (!run_cli(devils_args + (dir / "da_b.csv").string())) return false;
  const std::string da = read_file(dir / "da_a.csv");
  if (da.empty() || da != read_file(dir / "da_b.csv")) return false;

  const std::string md_args = "--data " + (dir / "input.txt").string() +
                              " --runs 2 --seed 11 --format markdown "
                              "--variant standard --output ";
  if (!run_cli(md_args + (dir / "m_a.md").string())) return false;
  if (!run_cli(md_args + (dir / "m_b.md").string())) return false;
  if (read_file(dir / "m_a.md") != read_file(dir / "m_b.md")) return false;

  detail = "protocol CSV, devils-advocate CSV and markdown replays are "
           "byte-identical";
  return true;
#endif
}

}  // namespace

int main() {
  Checker checker;
  checker.run(1, "normalized Euclidean / Pearson equivalence",
              criterion_equivalence);
  checker.run(2, "unit-norm prototypes after every corrected update",
              criterion_unit_norm);
  checker.run(3, "monotone objective and convergence within 300 iterations",
              criterion_monotone);
  checker.run(4, "converged runs are 1-swap local minima (brute force)",
              criterion_local_minimum);
  checker.run(5, "devil's-advocate probe split and norm direction",
              criterion_devils_advocate);
  checker.run(6, "cross-clustering entropy analytic values and invariance",
              criterion_entropy);
  checker.run(7, "E_pear below E_random on synthetic protocol datasets",
              criterion_protocol_pattern);
  checker.run(8, "byte-identical CLI reports on repeated runs",
              criterion_cli_determinism);

  if (checker.failures > 0) {
    std::printf("%d criterion(s) failed\n", checker.failures);
    return 1;
  }
  std::printf("all 8 criteria passed\n");
  return 0;
}
