#include "tsclust/protocol.hpp"

#include <utility>

#include "tsclust/rng.hpp"

namespace tsclust {

namespace {

std::vector<std::vector<double>> rows_of(const Prototypes& p) {
  std::vector<std::vector<double>> rows;
  rows.reserve(p.count());
  for (std::size_t i = 0; i < p.count(); ++i) {
    const auto r = p.row(i);
    rows.emplace_back(r.begin(), r.end());
  }
  return rows;
}

std::size_t resolve_k(const LabeledDataset& data,
                      const ProtocolOptions& options) {
  const std::size_t k =
      options.k_override > 0 ? options.k_override : data.class_count;
  if (k == 0) throw Error("k must be at least 1");
  if (k > data.dataset.size()) {
    throw KTooLargeError("k = " + std::to_string(k) + " exceeds dataset size " +
                         std::to_string(data.dataset.size()));
  }
  return k;
}

DevilsAdvocateVariantRecord record_variant(const ClusteringResult& result,
                                           const TaggedDataset& tagged) {
  DevilsAdvocateVariantRecord rec;
  rec.split = probe_split(result, tagged);
  const std::size_t inc = increasing_cluster_index(result.prototypes);
  const std::vector<double> norms = prototype_norms(result.prototypes);
  rec.norm_increasing = norms[inc];
  rec.norm_decreasing = norms[1 - inc];
  rec.iterations = result.iterations;
  rec.converged = result.converged;
  return rec;
}

}  // namespace

ProtocolReport run_protocol(const LabeledDataset& data,
                            const ProtocolOptions& options) {
  if (options.runs == 0) throw Error("need at least one run");
  if (data.dataset.convention() != NormalizationConvention::UnitNorm) {
    throw ConventionMismatchError(
        "the protocol's corrected clustering requires unit-norm "
        "normalization");
  }
  const std::size_t k = resolve_k(data, options);

  ProtocolReport report;
  report.dataset_name = options.dataset_name;
  report.k = k;
  report.length = data.dataset.length();
  report.size = data.dataset.size();
  report.base_seed = options.base_seed;

  std::vector<double> pear_values;
  std::vector<double> random_values;
  for (std::size_t r = 1; r <= options.runs; ++r) {
    ProtocolRun run;
    run.run_index = r;
    run.seed = derive_seed(options.base_seed, r, 0);
    run.alt_seed = derive_seed(options.base_seed, r, 1);
    try {
      KMeansConfig c1_config{k, options.max_iters, run.seed,
                             KMeansVariant::StandardEuclidean,
                             PrototypeInit::random_draw()};
      const Prototypes shared_init = init_prototypes(data.dataset, c1_config);

      const ClusteringResult c1 = run_kmeans(data.dataset, c1_config);

      KMeansConfig c2_config{
          k, options.max_iters, run.seed, KMeansVariant::PearsonCorrected,
          PrototypeInit::explicit_vectors(rows_of(shared_init))};
      const ClusteringResult c2 = run_kmeans(data.dataset, c2_config);

      KMeansConfig c3_config{k, options.max_iters, run.alt_seed,
                             KMeansVariant::StandardEuclidean,
                             PrototypeInit::random_draw()};
      const ClusteringResult c3 = run_kmeans(data.dataset, c3_config);

      run.e_pear =
          cross_entropy(c1.memberships, c2.memberships, "C1", "C2").entropy;
      run.e_random =
          cross_entropy(c1.memberships, c3.memberships, "C1", "C3").entropy;
      run.standard_prototype_norms = prototype_norms(c1.prototypes);
      run.ok = true;
      pear_values.push_back(run.e_pear);
      random_values.push_back(run.e_random);
    } catch (const Error& e) {
      run.ok = false;
      run.error = e.what();
      ++report.failed_runs;
    }
    report.runs.push_back(std::move(run));
  }

  report.e_pear_summary = summarize_runs(pear_values);
  report.e_random_summary = summarize_runs(random_values);
  return report;
}

VariantReport run_variant_experiment(const LabeledDataset& data,
                                     KMeansVariant variant,
                                     const ProtocolOptions& options) {
  if (options.runs == 0) throw Error("need at least one run");
  if (variant == KMeansVariant::PearsonCorrected &&
      data.dataset.convention() != NormalizationConvention::UnitNorm) {
    throw ConventionMismatchError(
        "the pearson variant requires unit-norm normalization");
  }
  const std::size_t k = resolve_k(data, options);

  VariantReport report;
  report.dataset_name = options.dataset_name;
  report.k = k;
  report.length = data.dataset.length();
  report.size = data.dataset.size();
  report.base_seed = options.base_seed;
  report.variant = variant;

  for (std::size_t r = 1; r <= options.runs; ++r) {
    VariantRun run;
    run.run_index = r;
    run.seed = derive_seed(options.base_seed, r, 0);
    try {
      KMeansConfig config{k, options.max_iters, run.seed, variant,
                          PrototypeInit::random_draw()};
      const ClusteringResult result = run_kmeans(data.dataset, config);
      run.iterations = result.iterations;
      run.converged = result.converged;
      run.final_objective = result.objective_trace.empty()
                                ? 0.0
                                : result.objective_trace.back();
      run.prototype_norms = prototype_norms(result.prototypes);
      run.ok = true;
    } catch (const Error& e) {
      run.ok = false;
      run.error = e.what();
      ++report.failed_runs;
    }
    report.runs.push_back(std::move(run));
  }
  return report;
}

DevilsAdvocateReport run_devils_advocate(const DevilsAdvocateConfig& config,
                                         std::size_t runs) {
  if (runs == 0) throw Error("need at least one run");

  DevilsAdvocateReport report;
  report.config = config;

  double standard_total = 0.0;
  double corrected_total = 0.0;
  std::size_t ok_runs = 0;
  for (std::size_t r = 1; r <= runs; ++r) {
    DevilsAdvocateRun run;
    run.run_index = r;
    run.dataset_seed = derive_seed(config.seed, r, 2);
    try {
      DevilsAdvocateConfig run_config = config;
      run_config.seed = run.dataset_seed;
      const TaggedDataset tagged = generate_devils_advocate(run_config);

      const PrototypeInit init =
          PrototypeInit::explicit_vectors(template_prototypes());

      KMeansConfig standard{2, 300, run.dataset_seed,
                            KMeansVariant::StandardEuclidean, init};
      run.standard = record_variant(run_kmeans(tagged.dataset, standard),
                                    tagged);

      KMeansConfig corrected{2, 300, run.dataset_seed,
                             KMeansVariant::PearsonCorrected, init};
      run.corrected = record_variant(run_kmeans(tagged.dataset, corrected),
                                     tagged);

      standard_total += static_cast<double>(run.standard.split.to_increasing);
      corrected_total += static_cast<double>(run.corrected.split.to_increasing);
      ++ok_runs;
      run.ok = true;
    } catch (const Error& e) {
      run.ok = false;
      run.error = e.what();
      ++report.failed_runs;
    }
    report.runs.push_back(std::move(run));
  }

  if (ok_runs == 0) {
    throw Error("every devil's-advocate run failed: " +
                report.runs.front().error);
  }
  report.standard_mean_to_increasing =
      standard_total / static_cast<double>(ok_runs);
  report.corrected_mean_to_increasing =
      corrected_total / static_cast<double>(ok_runs);
  return report;
}

}  // namespace tsclust
