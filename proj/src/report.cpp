#include <cstdio>
#include <fstream>
#include <ostream>

#include "tsclust/protocol.hpp"

namespace tsclust {

namespace {

// 4 decimal places, '.' separator; snprintf under the "C" locale.
std::string fmt4(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

template <typename Report>
void write_to_path(const Report& report, ReportFormat format,
                   const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot open " + path.string() + " for writing");
  }
  emit_report(report, format, out);
  if (!out.good()) {
    throw IoError("failed while writing " + path.string());
  }
}

void protocol_csv(const ProtocolReport& r, std::ostream& out) {
  out << "dataset,k,T,n,run_index,seed,E_pear,E_random\n";
  if (r.runs.empty()) return;  // header-only
  for (const ProtocolRun& run : r.runs) {
    out << r.dataset_name << ',' << r.k << ',' << r.length << ',' << r.size
        << ',' << run.run_index << ',' << run.seed << ',';
    if (run.ok) {
      out << fmt4(run.e_pear) << ',' << fmt4(run.e_random);
    } else {
      out << ',';
    }
    out << '\n';
  }
  out << "# summary\n";
  out << "dataset,k,T,n,E_pear_min,E_pear_max,E_pear_mean,"
         "E_random_min,E_random_max,E_random_mean\n";
  out << r.dataset_name << ',' << r.k << ',' << r.length << ',' << r.size
      << ',' << fmt4(r.e_pear_summary.min) << ',' << fmt4(r.e_pear_summary.max)
      << ',' << fmt4(r.e_pear_summary.mean) << ','
      << fmt4(r.e_random_summary.min) << ',' << fmt4(r.e_random_summary.max)
      << ',' << fmt4(r.e_random_summary.mean) << '\n';
  out << "# entropies in bits (log2)\n";
}

void protocol_markdown(const ProtocolReport& r, std::ostream& out) {
  out << "# Protocol report: " << r.dataset_name << "\n\n";
  out << "k = " << r.k << ", T = " << r.length << ", n = " << r.size
      << ", base seed = " << r.base_seed << ", entropies in bits (log2)\n\n";
  out << "| run | seed | E_pear | E_random |\n";
  out << "|----:|-----:|-------:|---------:|\n";
  for (const ProtocolRun& run : r.runs) {
    out << "| " << run.run_index << " | " << run.seed << " | ";
    if (run.ok) {
      out << fmt4(run.e_pear) << " | " << fmt4(run.e_random) << " |\n";
    } else {
      out << "failed | failed |\n";
    }
  }
  out << "\n| metric | min | max | mean |\n";
  out << "|--------|----:|----:|-----:|\n";
  out << "| E_pear | " << fmt4(r.e_pear_summary.min) << " | "
      << fmt4(r.e_pear_summary.max) << " | " << fmt4(r.e_pear_summary.mean)
      << " |\n";
  out << "| E_random | " << fmt4(r.e_random_summary.min) << " | "
      << fmt4(r.e_random_summary.max) << " | "
      << fmt4(r.e_random_summary.mean) << " |\n";
}

void variant_csv(const VariantReport& r, std::ostream& out) {
  out << "dataset,k,T,n,variant,run_index,seed,iterations,converged,"
         "objective\n";
  for (const VariantRun& run : r.runs) {
    out << r.dataset_name << ',' << r.k << ',' << r.length << ',' << r.size
        << ',' << to_string(r.variant) << ',' << run.run_index << ','
        << run.seed << ',';
    if (run.ok) {
      out << run.iterations << ',' << (run.converged ? "yes" : "no") << ','
          << fmt4(run.final_objective);
    } else {
      out << ",,";
    }
    out << '\n';
  }
}

void variant_markdown(const VariantReport& r, std::ostream& out) {
  out << "# Clustering report: " << r.dataset_name << " ("
      << to_string(r.variant) << " variant)\n\n";
  out << "k = " << r.k << ", T = " << r.length << ", n = " << r.size
      << ", base seed = " << r.base_seed << "\n\n";
  out << "| run | seed | iterations | converged | objective |\n";
  out << "|----:|-----:|-----------:|-----------|----------:|\n";
  for (const VariantRun& run : r.runs) {
    out << "| " << run.run_index << " | " << run.seed << " | ";
    if (run.ok) {
      out << run.iterations << " | " << (run.converged ? "yes" : "no") << " | "
          << fmt4(run.final_objective) << " |\n";
    } else {
      out << "failed | failed | failed |\n";
    }
  }
}

void devils_csv(const DevilsAdvocateReport& r, std::ostream& out) {
  out << "variant,run_index,dataset_seed,to_increasing,to_decreasing,"
         "norm_increasing,norm_decreasing,iterations,converged\n";
  if (r.runs.empty()) return;  // header-only
  const auto row = [&](const char* variant, const DevilsAdvocateRun& run,
                       const DevilsAdvocateVariantRecord& rec) {
    out << variant << ',' << run.run_index << ',' << run.dataset_seed << ',';
    if (run.ok) {
      out << rec.split.to_increasing << ',' << rec.split.to_decreasing << ','
          << fmt4(rec.norm_increasing) << ',' << fmt4(rec.norm_decreasing)
          << ',' << rec.iterations << ',' << (rec.converged ? "yes" : "no");
    } else {
      out << ",,,,,";
    }
    out << '\n';
  };
  for (const DevilsAdvocateRun& run : r.runs) {
    row("standard", run, run.standard);
    row("corrected", run, run.corrected);
  }
  out << "# summary\n";
  out << "variant,mean_to_increasing,mean_to_decreasing\n";
  const double probes = static_cast<double>(r.config.n_probes);
  out << "standard," << fmt4(r.standard_mean_to_increasing) << ','
      << fmt4(probes - r.standard_mean_to_increasing) << '\n';
  out << "corrected," << fmt4(r.corrected_mean_to_increasing) << ','
      << fmt4(probes - r.corrected_mean_to_increasing) << '\n';
}

void devils_markdown(const DevilsAdvocateReport& r, std::ostream& out) {
  out << "# Devil's-advocate report\n\n";
  out << r.config.n_per_cluster << " series per trend cluster, "
      << r.config.n_probes << " probes, sigma "
      << fmt4(r.config.sigma_increasing) << '/'
      << fmt4(r.config.sigma_decreasing) << '/' << fmt4(r.config.sigma_probe)
      << ", base seed " << r.config.seed << "\n\n";
  out << "| run | variant | to incr. | to decr. | norm incr. | norm decr. |\n";
  out << "|----:|---------|---------:|---------:|-----------:|-----------:|\n";
  const auto row = [&](const char* variant, const DevilsAdvocateRun& run,
                       const DevilsAdvocateVariantRecord& rec) {
    out << "| " << run.run_index << " | " << variant << " | ";
    if (run.ok) {
      out << rec.split.to_increasing << " | " << rec.split.to_decreasing
          << " | " << fmt4(rec.norm_increasing) << " | "
          << fmt4(rec.norm_decreasing) << " |\n";
    } else {
      out << "failed | failed | failed | failed |\n";
    }
  };
  for (const DevilsAdvocateRun& run : r.runs) {
    row("standard", run, run.standard);
    row("corrected", run, run.corrected);
  }
  out << "\n| variant | mean to increasing |\n";
  out << "|---------|-------------------:|\n";
  out << "| standard | " << fmt4(r.standard_mean_to_increasing) << " |\n";
  out << "| corrected | " << fmt4(r.corrected_mean_to_increasing) << " |\n";
}

}  // namespace

void emit_report(const ProtocolReport& report, ReportFormat format,
                 std::ostream& out) {
  format == ReportFormat::Csv ? protocol_csv(report, out)
                              : protocol_markdown(report, out);
}

void emit_report(const VariantReport& report, ReportFormat format,
                 std::ostream& out) {
  format == ReportFormat::Csv ? variant_csv(report, out)
                              : variant_markdown(report, out);
}

void emit_report(const DevilsAdvocateReport& report, ReportFormat format,
                 std::ostream& out) {
  format == ReportFormat::Csv ? devils_csv(report, out)
                              : devils_markdown(report, out);
}

void emit_report(const ProtocolReport& report, ReportFormat format,
                 const std::filesystem::path& path) {
  write_to_path(report, format, path);
}

void emit_report(const VariantReport& report, ReportFormat format,
                 const std::filesystem::path& path) {
  write_to_path(report, format, path);
}

void emit_report(const DevilsAdvocateReport& report, ReportFormat format,
                 const std::filesystem::path& path) {
  write_to_path(report, format, path);
}

}  // namespace tsclust
