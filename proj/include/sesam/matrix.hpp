#ifndef SESAM_MATRIX_HPP
#define SESAM_MATRIX_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace sesam {

// Dense article x session affinity scores for one edition year.
struct ScoreMatrix {
  int year = 0;
  std::vector<std::string> articles;  // row order
  std::vector<std::string> sessions;  // column order
  std::vector<double> values;         // row-major

  std::size_t rows() const { return articles.size(); }
  std::size_t cols() const { return sessions.size(); }

  double& at(std::size_t i, std::size_t j) { return values[i * cols() + j]; }
  double at(std::size_t i, std::size_t j) const { return values[i * cols() + j]; }

  static ScoreMatrix zeros(int year, std::vector<std::string> articles,
                           std::vector<std::string> sessions);

  bool same_shape(const ScoreMatrix& other) const;
};

// TSV exchange format, rows "year<TAB>article<TAB>session<TAB>score"; one
// file may carry several years. Row/column order follows first appearance.
std::vector<ScoreMatrix> read_matrices(const std::string& path);
void write_matrices(const std::vector<ScoreMatrix>& matrices, const std::string& path);

// Per-year gold or predicted labels: rows "year<TAB>article<TAB>session".
using LabelMap = std::map<int, std::map<std::string, std::string>>;
LabelMap read_labels(const std::string& path);
void write_labels(const LabelMap& labels, const std::string& path);

std::string format_score(double v);  // fixed 9-decimal, locale-independent

}  // namespace sesam

#endif
