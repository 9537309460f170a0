#include "ceis/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>

namespace ceis {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void write_csv(std::ostream& out, std::span<const SweepRow> rows) {
  out << kCsvHeader << '\n';
  for (const auto& r : rows) {
    out << format_double(r.gamma_th_db) << ',' << format_double(r.gamma0) << ','
        << format_double(r.is_p_hat) << ',' << format_double(r.is_rel_err) << ','
        << format_double(r.naive_p_hat) << ',' << format_double(r.naive_rel_err) << ','
        << format_double(r.runs_naive) << ',' << format_double(r.runs_is) << ','
        << r.ce_iterations << ',' << r.seed << '\n';
  }
}

namespace {

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw Error("write to " + path.string() + " failed");
}

}  // namespace

void write_csv(std::span<const SweepRow> rows, const std::filesystem::path& path) {
  auto out = open_output(path);
  write_csv(out, rows);
  finish(out, path);
}

void write_trace(std::ostream& out, const CETrace& trace) {
  const std::size_t dim = trace.iterations.empty() ? 0 : trace.iterations.front().nu_hat.size();
  out << "t,gamma_hat";
  for (std::size_t l = 1; l <= dim; ++l) out << ",nu_" << l;
  out << '\n';
  for (const auto& it : trace.iterations) {
    out << it.t << ',' << format_double(it.gamma_hat);
    for (double v : it.nu_hat) out << ',' << format_double(v);
    out << '\n';
  }
}

void write_trace(const CETrace& trace, const std::filesystem::path& path) {
  auto out = open_output(path);
  write_trace(out, trace);
  finish(out, path);
}

}  // namespace ceis
