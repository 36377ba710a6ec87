#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "nlohmann/json.hpp"

#include "aglab/cloud.hpp"
#include "aglab/distribution.hpp"
#include "aglab/graph.hpp"
#include "aglab/spectral.hpp"

namespace aglab {

// Shortest round-trip decimal rendering (std::to_chars); infinities render
// as "inf"/"-inf". Used everywhere a number reaches a file so reruns are
// byte-identical.
std::string format_double(double v);
std::string format_sig6(double v);  // 6 significant digits, CLI output

// Minimal RFC-4180-style CSV: fields quoted only when they contain
// comma/quote/newline. Leading '#' comment lines carry provenance
// (config hash, master seed).
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

  void add_comment(const std::string& line) { comments_.push_back(line); }
  void add_row(std::vector<std::string> row);
  std::size_t rows() const { return rows_.size(); }
  const std::vector<std::string>& header() const { return header_; }

  std::string to_string() const;
  void write(const std::filesystem::path& path) const;

 private:
  std::vector<std::string> comments_;
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

std::string csv_escape(const std::string& field);

// Cloud serialization: columns x, y, label, weight.
CsvTable cloud_to_csv(const LabeledPointCloud& cloud);
LabeledPointCloud cloud_from_csv(const std::string& text);

// Companion JSON summary: counts per class, mixing ratio, grid metadata.
nlohmann::ordered_json cloud_summary(const LabeledPointCloud& cloud, double beta = 1.0,
                                     const std::optional<Grid>& grid = std::nullopt);

// Distribution serialization: columns atom, mass.
CsvTable distribution_to_csv(const DiscreteDistribution& d);

// Graph edge list: i, j, weight for the upper triangle (including loops).
CsvTable graph_to_csv(const AugGraph& g);

// Spectrum: index, eigenvalue.
CsvTable spectrum_to_csv(const Eigen::VectorXd& eigenvalues, int max_count = -1);

// Embedding: node id, f1..fk.
CsvTable embedding_to_csv(const std::vector<std::int64_t>& ids, const Eigen::MatrixXd& features);

void write_text_file(const std::filesystem::path& path, const std::string& content);

}  // namespace aglab
