#include "aglab/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace aglab {

std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string format_sig6(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void CsvTable::add_row(std::vector<std::string> row) {
  if (row.size() != header_.size())
    throw std::invalid_argument("CsvTable: row width does not match header");
  rows_.push_back(std::move(row));
}

std::string CsvTable::to_string() const {
  std::ostringstream os;
  for (const auto& c : comments_) os << "# " << c << "\n";
  for (std::size_t i = 0; i < header_.size(); ++i)
    os << (i ? "," : "") << csv_escape(header_[i]);
  os << "\n";
  for (const auto& row : rows_) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_escape(row[i]);
    os << "\n";
  }
  return os.str();
}

void CsvTable::write(const std::filesystem::path& path) const {
  write_text_file(path, to_string());
}

CsvTable cloud_to_csv(const LabeledPointCloud& cloud) {
  CsvTable t({"x", "y", "label", "weight"});
  for (std::size_t i = 0; i < cloud.size(); ++i)
    t.add_row({format_double(cloud.points[i].x), format_double(cloud.points[i].y),
               std::to_string(cloud.labels[i]), format_double(cloud.weights[i])});
  return t;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  fields.push_back(cur);
  return fields;
}

}  // namespace

LabeledPointCloud cloud_from_csv(const std::string& text) {
  LabeledPointCloud cloud;
  std::istringstream is(text);
  std::string line;
  bool header_seen = false;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      header_seen = true;
      continue;
    }
    const auto f = split_csv_line(line);
    if (f.size() != 4) throw std::invalid_argument("cloud_from_csv: bad row");
    cloud.points.push_back({std::stod(f[0]), std::stod(f[1])});
    cloud.labels.push_back(std::stoi(f[2]));
    cloud.weights.push_back(std::stod(f[3]));
  }
  return cloud;
}

nlohmann::ordered_json cloud_summary(const LabeledPointCloud& cloud, double beta,
                                     const std::optional<Grid>& grid) {
  nlohmann::ordered_json j;
  j["count"] = cloud.size();
  std::map<int, std::int64_t> per_class;
  for (int lab : cloud.labels) ++per_class[lab];
  nlohmann::ordered_json classes;
  for (const auto& [cls, cnt] : per_class) classes[std::to_string(cls)] = cnt;
  j["count_per_class"] = classes;
  j["beta"] = beta;
  if (grid) {
    j["grid"] = {{"x0", grid->x0()},      {"y0", grid->y0()}, {"cell_size", grid->cell_size()},
                 {"nx", grid->nx()},      {"ny", grid->ny()}};
  }
  return j;
}

CsvTable distribution_to_csv(const DiscreteDistribution& d) {
  CsvTable t({"atom", "mass"});
  for (std::size_t i = 0; i < d.size(); ++i)
    t.add_row({std::to_string(d.atoms[i]), format_double(d.mass[i])});
  return t;
}

CsvTable graph_to_csv(const AugGraph& g) {
  CsvTable t({"i", "j", "weight"});
  for (int i = 0; i < g.size(); ++i)
    for (int j = i; j < g.size(); ++j)
      if (g.adjacency(i, j) != 0.0)
        t.add_row({std::to_string(g.ids[i]), std::to_string(g.ids[j]),
                   format_double(g.adjacency(i, j))});
  return t;
}

CsvTable spectrum_to_csv(const Eigen::VectorXd& eigenvalues, int max_count) {
  CsvTable t({"index", "eigenvalue"});
  const int n = max_count < 0 ? static_cast<int>(eigenvalues.size())
                              : std::min<int>(max_count, eigenvalues.size());
  for (int i = 0; i < n; ++i) t.add_row({std::to_string(i + 1), format_double(eigenvalues(i))});
  return t;
}

CsvTable embedding_to_csv(const std::vector<std::int64_t>& ids, const Eigen::MatrixXd& features) {
  std::vector<std::string> header{"node"};
  for (int j = 0; j < features.cols(); ++j) header.push_back("f" + std::to_string(j + 1));
  CsvTable t(header);
  for (int i = 0; i < features.rows(); ++i) {
    std::vector<std::string> row{std::to_string(ids[i])};
    for (int j = 0; j < features.cols(); ++j) row.push_back(format_double(features(i, j)));
    t.add_row(std::move(row));
  }
  return t;
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace aglab
