#pragma once

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <span>
#include <string>

#include "ceis/ce.hpp"

namespace ceis {

/// One threshold of a sweep. Fields of a failed importance-sampling stage
/// hold NaN.
struct SweepRow {
  double gamma_th_db = 0.0;
  double gamma0 = 0.0;
  double is_p_hat = 0.0;
  double is_rel_err = 0.0;
  double naive_p_hat = 0.0;
  double naive_rel_err = 0.0;
  double runs_naive = 0.0;
  double runs_is = 0.0;
  int ce_iterations = 0;
  std::uint64_t seed = 0;
  bool failed = false;
  std::string failure;  ///< not written to the CSV
};

inline constexpr const char* kCsvHeader =
    "gamma_th_db,gamma0,is_p_hat,is_rel_err,naive_p_hat,naive_rel_err,runs_naive,runs_is,"
    "ce_iterations,seed";

/// Shortest decimal that round-trips; "inf", "-inf" and "nan" for
/// non-finite values.
std::string format_double(double v);

void write_csv(std::ostream& out, std::span<const SweepRow> rows);
/// Writes the CSV file; throws Error on I/O failure.
void write_csv(std::span<const SweepRow> rows, const std::filesystem::path& path);

/// Trace layout: t,gamma_hat,nu_1,...,nu_L.
void write_trace(std::ostream& out, const CETrace& trace);
void write_trace(const CETrace& trace, const std::filesystem::path& path);

}  // namespace ceis
