#pragma once

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <vector>

#include "ceis/config.hpp"
#include "ceis/csv.hpp"

namespace ceis {

struct SweepResult {
  std::vector<SweepRow> rows;
  std::vector<CETrace> traces;  ///< one per row; empty when the search failed
  bool all_ok = true;
};

/// Seeds used for row `index` of a sweep with master seed `seed`: the row
/// seed written to the CSV, and the cross-entropy, production and naive
/// stages derived from it.
struct RowSeeds {
  std::uint64_t row;
  std::uint64_t ce;
  std::uint64_t production;
  std::uint64_t naive;
};
RowSeeds row_seeds(std::uint64_t seed, std::size_t index) noexcept;

/// Runs the full threshold sweep without touching the filesystem. Thresholds
/// are processed in order; a failed search or degenerate estimate marks the
/// row and the sweep continues. Progress lines go to `log` when given.
SweepResult compute_sweep(const RunConfig& cfg, std::ostream* log = nullptr);

/// Companion trace file for one threshold, next to the CSV output.
std::filesystem::path trace_path(const std::filesystem::path& output, double gamma_th_db);

/// compute_sweep followed by CSV (and optional trace) output. Returns 0 on a
/// clean sweep, 1 if any row failed, 2 on an I/O error; after an I/O error a
/// "# partial" marker line is appended when the file is still writable.
int run_sweep(const RunConfig& cfg, std::ostream& log);

}  // namespace ceis
