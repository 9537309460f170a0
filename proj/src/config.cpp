#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "ceis/config.hpp"

namespace ceis {

void RunConfig::validate() const {
  scenario.validate();
  if (scenario.thresholds_db.empty()) throw ValidationError("threshold grid is empty");
  ce.validate();
  if (n_production == 0) throw ValidationError("n_production must be at least 1");
  if (n_naive == 0) throw ValidationError("n_naive must be at least 1");
  if (!(eps0 > 0.0)) throw ValidationError("eps0 must be positive");
  if (!(c > 0.0)) throw ValidationError("confidence constant c must be positive");
  if (workers == 0) throw ValidationError("workers must be at least 1");
  if (output_path.empty()) throw ValidationError("output path is empty");
}

namespace {

struct Entry {
  std::string value;
  int line;
};

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) parts.push_back(trim(item));
  return parts;
}

class Reader {
 public:
  explicit Reader(std::map<std::string, Entry> entries) : entries_(std::move(entries)) {}

  bool has(const std::string& key) const { return entries_.count(key) != 0; }
  const Entry& at(const std::string& key) const { return entries_.at(key); }

  double number(const std::string& key, const std::string& text) const {
    const auto& e = at(key);
    double v = 0.0;
    const char* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc() || ptr != end || text.empty()) {
      throw ParseError("field '" + key + "': expected a number, got '" + text + "'", e.line, key);
    }
    return v;
  }

  double number(const std::string& key) const { return number(key, at(key).value); }

  std::uint64_t count(const std::string& key) const {
    const auto& e = at(key);
    // Accept 1e7-style counts as long as they are whole numbers.
    const double v = number(key);
    if (!(v >= 0.0) || v != std::floor(v) || v > 1.8e19) {
      throw ParseError("field '" + key + "': expected a nonnegative integer", e.line, key);
    }
    return static_cast<std::uint64_t>(v);
  }

  std::vector<double> list(const std::string& key) const {
    std::vector<double> out;
    for (const auto& item : split(at(key).value, ',')) out.push_back(number(key, item));
    return out;
  }

  std::uint64_t u64(const std::string& key) const {
    const auto& e = at(key);
    std::uint64_t v = 0;
    const char* end = e.value.data() + e.value.size();
    const auto [ptr, ec] = std::from_chars(e.value.data(), end, v);
    if (ec != std::errc() || ptr != end) {
      throw ParseError("field '" + key + "': expected an unsigned 64-bit integer", e.line, key);
    }
    return v;
  }

  bool flag(const std::string& key) const {
    const auto& e = at(key);
    if (e.value == "true" || e.value == "1" || e.value == "yes") return true;
    if (e.value == "false" || e.value == "0" || e.value == "no") return false;
    throw ParseError("field '" + key + "': expected true or false", e.line, key);
  }

 private:
  std::map<std::string, Entry> entries_;
};

const std::vector<std::string>& known_keys() {
  static const std::vector<std::string> keys{
      "preset", "model",   "omega",        "lambda",  "mu",      "sigma", "alpha",
      "beta",   "omega_gg", "snr_db",      "thresholds_db", "rho", "n_pilot",
      "max_iter", "n_production", "n_naive", "eps0",   "c",       "seed",  "workers",
      "output", "trace"};
  return keys;
}

std::map<std::string, Entry> tokenize(std::string_view text) {
  std::map<std::string, Entry> entries;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("expected 'key = value'", line_no, "");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const auto& keys = known_keys();
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
      throw ParseError("unknown field '" + key + "'", line_no, key);
    }
    if (value.empty()) throw ParseError("field '" + key + "' has no value", line_no, key);
    if (!entries.emplace(key, Entry{value, line_no}).second) {
      throw ParseError("field '" + key + "' given twice", line_no, key);
    }
  }
  return entries;
}

// "start:stop:step" or a comma-separated list.
std::vector<double> threshold_grid(const Reader& r) {
  const auto& e = r.at("thresholds_db");
  if (e.value.find(':') == std::string::npos) return r.list("thresholds_db");
  const auto parts = split(e.value, ':');
  if (parts.size() != 3) {
    throw ParseError("field 'thresholds_db': range must be start:stop:step", e.line, "thresholds_db");
  }
  const double start = r.number("thresholds_db", parts[0]);
  const double stop = r.number("thresholds_db", parts[1]);
  const double step = r.number("thresholds_db", parts[2]);
  if (!(step > 0.0)) throw ValidationError("thresholds_db: step must be positive");
  std::vector<double> grid;
  for (long k = 0;; ++k) {
    const double v = start + static_cast<double>(k) * step;
    if (v > stop + 1e-9 * step) break;
    grid.push_back(v);
  }
  return grid;
}

// Applies per-branch fields; a single value is broadcast to every branch.
void apply_branch_field(const Reader& r, const std::string& key, std::vector<BranchParams>& b,
                        double BranchParams::*field) {
  if (!r.has(key)) return;
  const auto values = r.list(key);
  if (values.size() != 1 && values.size() != b.size()) {
    throw ValidationError("field '" + key + "': expected 1 or " + std::to_string(b.size()) +
                          " values, got " + std::to_string(values.size()));
  }
  for (std::size_t l = 0; l < b.size(); ++l) b[l].*field = values.size() == 1 ? values[0] : values[l];
}

}  // namespace

RunConfig parse_config(std::string_view text) {
  const Reader r(tokenize(text));

  RunConfig cfg;
  if (r.has("preset")) {
    cfg = preset_config(r.at("preset").value);
  } else {
    if (!r.has("lambda")) throw ValidationError("configuration needs either 'preset' or 'lambda'");
    cfg.scenario.thresholds_db = default_threshold_grid();
  }

  auto& branches = cfg.scenario.branches;
  if (r.has("lambda")) {
    const auto lambdas = r.list("lambda");
    const BranchParams base = branches.empty() ? BranchParams{} : branches.front();
    branches.assign(lambdas.size(), base);
    for (std::size_t l = 0; l < lambdas.size(); ++l) branches[l].lambda = lambdas[l];
  }
  if (r.has("model")) {
    const auto& e = r.at("model");
    FadingModel m;
    if (e.value == "exp-ln") {
      m = FadingModel::ExpLogNormal;
    } else if (e.value == "exp-gg") {
      m = FadingModel::ExpGenGamma;
    } else {
      throw ParseError("field 'model': expected exp-ln or exp-gg", e.line, "model");
    }
    for (auto& b : branches) b.model = m;
  }
  apply_branch_field(r, "omega", branches, &BranchParams::omega);
  apply_branch_field(r, "mu", branches, &BranchParams::mu);
  apply_branch_field(r, "sigma", branches, &BranchParams::sigma);
  apply_branch_field(r, "alpha", branches, &BranchParams::alpha);
  apply_branch_field(r, "beta", branches, &BranchParams::beta);
  apply_branch_field(r, "omega_gg", branches, &BranchParams::omega_gg);

  if (r.has("snr_db")) cfg.scenario.snr_per_symbol_db = r.number("snr_db");
  if (r.has("thresholds_db")) cfg.scenario.thresholds_db = threshold_grid(r);
  if (r.has("rho")) cfg.ce.rho = r.number("rho");
  if (r.has("n_pilot")) cfg.ce.n_pilot = r.count("n_pilot");
  if (r.has("max_iter")) cfg.ce.max_iter = static_cast<int>(r.count("max_iter"));
  if (r.has("n_production")) cfg.n_production = r.count("n_production");
  if (r.has("n_naive")) cfg.n_naive = r.count("n_naive");
  if (r.has("eps0")) cfg.eps0 = r.number("eps0");
  if (r.has("c")) cfg.c = r.number("c");
  if (r.has("seed")) cfg.seed = r.u64("seed");
  if (r.has("workers")) cfg.workers = static_cast<unsigned>(r.count("workers"));
  if (r.has("output")) cfg.output_path = r.at("output").value;
  if (r.has("trace")) cfg.emit_trace = r.flag("trace");
  cfg.ce.workers = cfg.workers;

  cfg.validate();
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open configuration file " + path.string(), 0, "");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

}  // namespace ceis
