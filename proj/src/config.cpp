#include "aglab/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace aglab {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

const std::vector<Config::Entry>& schema_table() {
  static const std::vector<Config::Entry> kSchema = {
      {"data", "source", "gaussian_mixture", "cloud source: gaussian_mixture | uniform_square"},
      {"data", "n_points", "400", "cloud size for one-shot commands"},
      {"data", "mean_x", "1", "two-blob component means at (+-mean_x, 0)"},
      {"data", "variance", "0.7", "isotropic per-component variance"},
      {"data", "n_eval", "2000", "evaluation cloud size (downstream error, alpha)"},
      {"augmentation", "radius", "0.5", "disk augmentation radius r"},
      {"augmentation", "supersample", "8", "s: cell kernel mass uses s*s midpoints"},
      {"augmentation", "mc_samples", "100000", "Monte-Carlo samples per point for alpha"},
      {"graph", "cell_size", "0.05", "grid cell size h"},
      {"graph", "domain", "auto", "grid bounds: auto | \"x0 x1 y0 y1\""},
      {"graph", "max_nodes", "6000", "dense materialization cap"},
      {"graph", "threshold_eps", "0.05", "edge threshold for point graphs"},
      {"study", "master_seed", "1", "root seed; per-cell seeds derive from it"},
      {"study", "n_grid", "50 100 200 400", "data sizes for figure5"},
      {"study", "r_grid", "0.1 0.2 0.3 0.4 0.5 0.6 0.7 0.8 0.9 1.0",
       "augmentation strengths for figure5"},
      {"study", "k", "2", "embedding dimension; the bound uses lambda_{k+1}"},
      {"study", "alpha_method", "analytic", "alpha estimator: analytic | mc"},
      {"study", "alpha_source", "eval", "alpha over: eval (P_d) | train (P_t)"},
      {"study", "nested_sizes", "true", "smaller n reuse prefixes of the largest cloud"},
      {"study", "figure5_trials", "1", "independent cloud realizations per figure5 cell"},
      {"study", "trials", "5", "trials per sampling ratio (subsample study)"},
      {"study", "ratio_grid", "0.2 0.3 0.4 0.5 0.6 0.7 0.8 0.9 1.0",
       "vertex sampling ratios (subsample study)"},
      {"study", "subsample_n", "2000", "uniform-square cloud size (subsample study)"},
      {"study", "spectrum_count", "50", "eigenvalues reported per subgraph"},
      {"study", "chung_n", "300", "random geometric graph size (chung study)"},
      {"study", "chung_eps", "0.35", "geometric graph connection radius"},
      {"study", "chung_dmin", "20", "required minimum degree of the base graph"},
      {"study", "chung_p_grid", "0.3 0.4 0.5 0.6 0.7 0.8 0.9 1.0",
       "edge keep probabilities (chung study)"},
      {"study", "chung_trials", "10", "edge-subsample trials per p"},
      {"study", "replication_grid", "1 5 10", "real-data replication N (bound study)"},
      {"study", "delta_grid", "0 0.1 0.2 0.4", "generator mean shifts (bound study)"},
      {"study", "n_real", "80", "real cloud size (bound study)"},
      {"study", "n_gen", "240", "generated cloud size (bound study)"},
      {"study", "tv_trials", "100", "random triples (tv-identity study)"},
      {"study", "tv_atoms", "100", "atom count (tv-identity study)"},
      {"output", "directory", "out", "output directory for study files"},
      {"output", "svg", "false", "also render line-chart SVG panels"},
      {"output", "workers", "0", "thread count; 0 = AGLAB_WORKERS env or hardware"},
  };
  return kSchema;
}

const Config::Entry* find_entry(const std::string& key) {
  for (const auto& e : schema_table())
    if (e.key == key) return &e;
  return nullptr;
}

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

const std::vector<Config::Entry>& Config::schema() { return schema_table(); }

Config Config::defaults() {
  Config cfg;
  for (const auto& e : schema_table()) cfg.values_[e.key] = e.value;
  return cfg;
}

Config Config::from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config file not found: " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  Config cfg = defaults();
  cfg.parse_ini(buf.str());
  return cfg;
}

void Config::parse_ini(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::string section;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto comment = line.find_first_of(";#");
    if (comment != std::string::npos) line = line.substr(0, comment);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw ConfigError("config line " + std::to_string(lineno) + ": malformed section header");
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const Entry* entry = find_entry(key);
    if (entry == nullptr)
      throw ConfigError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    if (!section.empty() && section != entry->section)
      throw ConfigError("config line " + std::to_string(lineno) + ": key '" + key +
                        "' belongs to section [" + entry->section + "]");
    values_[key] = value;
  }
}

void Config::set(const std::string& key_in, const std::string& value) {
  // Accept both "key" and "section.key".
  std::string key = key_in;
  const auto dot = key.find('.');
  std::string section;
  if (dot != std::string::npos) {
    section = key.substr(0, dot);
    key = key.substr(dot + 1);
  }
  const Entry* entry = find_entry(key);
  if (entry == nullptr) throw ConfigError("unknown config key '" + key_in + "'");
  if (!section.empty() && section != entry->section)
    throw ConfigError("key '" + key + "' belongs to section [" + entry->section + "]");
  values_[key] = trim(value);
}

const std::string& Config::raw(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) throw ConfigError("unknown config key '" + key + "'");
  return it->second;
}

std::int64_t Config::integer(const std::string& key) const {
  const std::string& v = raw(key);
  std::int64_t out = 0;
  const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
  if (res.ec != std::errc() || res.ptr != v.data() + v.size())
    throw ConfigError("config key '" + key + "': expected an integer, got '" + v + "'");
  return out;
}

std::uint64_t Config::seed(const std::string& key) const {
  const std::string& v = raw(key);
  std::uint64_t out = 0;
  const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
  if (res.ec != std::errc() || res.ptr != v.data() + v.size())
    throw ConfigError("config key '" + key + "': expected a seed, got '" + v + "'");
  return out;
}

double Config::number(const std::string& key) const {
  const std::string& v = raw(key);
  try {
    std::size_t used = 0;
    const double out = std::stod(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return out;
  } catch (const std::exception&) {
    throw ConfigError("config key '" + key + "': expected a number, got '" + v + "'");
  }
}

bool Config::boolean(const std::string& key) const {
  const std::string& v = raw(key);
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ConfigError("config key '" + key + "': expected true/false, got '" + v + "'");
}

std::vector<double> Config::number_list(const std::string& key) const {
  std::istringstream is(raw(key));
  std::vector<double> out;
  std::string tok;
  while (is >> tok) {
    try {
      out.push_back(std::stod(tok));
    } catch (const std::exception&) {
      throw ConfigError("config key '" + key + "': bad list element '" + tok + "'");
    }
  }
  if (out.empty()) throw ConfigError("config key '" + key + "': empty list");
  return out;
}

std::vector<std::int64_t> Config::integer_list(const std::string& key) const {
  std::istringstream is(raw(key));
  std::vector<std::int64_t> out;
  std::string tok;
  while (is >> tok) {
    try {
      out.push_back(std::stoll(tok));
    } catch (const std::exception&) {
      throw ConfigError("config key '" + key + "': bad list element '" + tok + "'");
    }
  }
  if (out.empty()) throw ConfigError("config key '" + key + "': empty list");
  return out;
}

std::string Config::canonical() const {
  // The [output] section (directory, svg, workers) does not influence any
  // computed value, so it stays out of the hash: the hash identifies the
  // experiment, not where it was written or how many threads ran it.
  std::ostringstream os;
  for (const auto& e : schema_table())
    if (e.section != "output") os << e.section << "." << e.key << "=" << raw(e.key) << "\n";
  return os.str();
}

std::uint64_t Config::hash() const { return fnv1a64(canonical()); }

std::string Config::hash_hex() const {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash()));
  return buf;
}

nlohmann::ordered_json Config::echo() const {
  nlohmann::ordered_json j;
  for (const auto& e : schema_table()) j[e.section][e.key] = raw(e.key);
  return j;
}

}  // namespace aglab
