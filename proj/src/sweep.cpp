#include "ceis/sweep.hpp"

#include <cmath>
#include <fstream>
#include <limits>

#include "ceis/efficiency.hpp"
#include "ceis/rng.hpp"

namespace ceis {

RowSeeds row_seeds(std::uint64_t seed, std::size_t index) noexcept {
  const std::uint64_t row = derive_seed(seed, index);
  return {row, derive_seed(row, 1), derive_seed(row, 2), derive_seed(row, 3)};
}

SweepResult compute_sweep(const RunConfig& cfg, std::ostream* log) {
  cfg.validate();
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  SweepResult result;
  const auto& grid = cfg.scenario.thresholds_db;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const RowSeeds seeds = row_seeds(cfg.seed, k);
    SweepRow row;
    row.gamma_th_db = grid[k];
    row.gamma0 = threshold_linear(grid[k], cfg.scenario.snr_per_symbol_db);
    row.seed = seeds.row;

    CETrace trace;
    try {
      CEConfig ce = cfg.ce;
      ce.seed = seeds.ce;
      ce.workers = cfg.workers;
      CEResult opt = ce_optimize(cfg.scenario, row.gamma0, ce);
      row.ce_iterations = static_cast<int>(opt.trace.iterations.size());
      trace = std::move(opt.trace);
      const EstimateResult is =
          is_estimate(cfg.scenario, row.gamma0, opt.nu, cfg.n_production, seeds.production, cfg.workers);
      row.is_p_hat = is.p_hat;
      row.is_rel_err = relative_error(is, cfg.c);
      if (is.p_hat < 1.0) {
        const EfficiencyReport rep = make_report(is, cfg.eps0, cfg.c);
        row.runs_naive = rep.runs_naive;
        row.runs_is = rep.runs_is;
      } else {
        row.runs_naive = row.runs_is = nan;
      }
    } catch (const NoConvergence& e) {
      row.failed = true;
      row.failure = e.what();
      row.ce_iterations = cfg.ce.max_iter;
    } catch (const DegenerateUpdate& e) {
      row.failed = true;
      row.failure = e.what();
    } catch (const DegenerateEstimate& e) {
      row.failed = true;
      row.failure = e.what();
    }
    if (row.failed) {
      row.is_p_hat = row.is_rel_err = row.runs_naive = row.runs_is = nan;
      result.all_ok = false;
    }

    const EstimateResult naive =
        naive_mc(cfg.scenario, row.gamma0, cfg.n_naive, seeds.naive, cfg.workers);
    row.naive_p_hat = naive.p_hat;
    row.naive_rel_err = relative_error(naive, cfg.c);

    if (log) {
      *log << "gamma_th=" << format_double(row.gamma_th_db) << " dB  IS=" << format_double(row.is_p_hat)
           << "  naive=" << format_double(row.naive_p_hat) << "  CE iterations=" << row.ce_iterations;
      if (row.failed) *log << "  FAILED: " << row.failure;
      *log << '\n';
    }
    result.rows.push_back(std::move(row));
    result.traces.push_back(std::move(trace));
  }
  return result;
}

std::filesystem::path trace_path(const std::filesystem::path& output, double gamma_th_db) {
  std::filesystem::path p = output;
  p.replace_filename(output.stem().string() + ".trace_" + format_double(gamma_th_db) + "dB.csv");
  return p;
}

int run_sweep(const RunConfig& cfg, std::ostream& log) {
  const SweepResult sweep = compute_sweep(cfg, &log);
  try {
    write_csv(sweep.rows, cfg.output_path);
    if (cfg.emit_trace) {
      for (std::size_t k = 0; k < sweep.rows.size(); ++k) {
        write_trace(sweep.traces[k], trace_path(cfg.output_path, sweep.rows[k].gamma_th_db));
      }
    }
  } catch (const Error& e) {
    log << "error: " << e.what() << '\n';
    std::ofstream marker(cfg.output_path, std::ios::app);
    if (marker) marker << "# partial\n";
    return 2;
  }
  return sweep.all_ok ? 0 : 1;
}

}  // namespace ceis
