#include "sesam/matrix.hpp"

#include <cstdio>
#include <fstream>
#include <map>

#include "sesam/error.hpp"

namespace sesam {

ScoreMatrix ScoreMatrix::zeros(int year, std::vector<std::string> articles,
                               std::vector<std::string> sessions) {
  ScoreMatrix m;
  m.year = year;
  m.articles = std::move(articles);
  m.sessions = std::move(sessions);
  m.values.assign(m.rows() * m.cols(), 0.0);
  return m;
}

bool ScoreMatrix::same_shape(const ScoreMatrix& other) const {
  return year == other.year && articles == other.articles &&
         sessions == other.sessions;
}

std::string format_score(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9f", v);
  return buf;
}

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == '\t') {
      fields.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  fields.push_back(cur);
  return fields;
}

}  // namespace

std::vector<ScoreMatrix> read_matrices(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(errc::io, "cannot open score file " + path);

  struct Builder {
    std::vector<std::string> articles, sessions;
    std::map<std::string, std::size_t> article_idx, session_idx;
    std::map<std::pair<std::size_t, std::size_t>, double> cells;
  };
  std::map<int, Builder> builders;

  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto fields = split_tabs(line);
    if (fields.size() != 4) {
      raise(errc::parse, path + ":" + std::to_string(lineno) +
                             ": expected year<TAB>article<TAB>session<TAB>score");
    }
    int year = 0;
    double score = 0.0;
    try {
      year = std::stoi(fields[0]);
      score = std::stod(fields[3]);
    } catch (const std::exception&) {
      raise(errc::parse, path + ":" + std::to_string(lineno) + ": malformed score row");
    }
    Builder& b = builders[year];
    auto [ait, anew] = b.article_idx.emplace(fields[1], b.articles.size());
    if (anew) b.articles.push_back(fields[1]);
    auto [sit, snew] = b.session_idx.emplace(fields[2], b.sessions.size());
    if (snew) b.sessions.push_back(fields[2]);
    b.cells[{ait->second, sit->second}] = score;
  }

  std::vector<ScoreMatrix> matrices;
  for (auto& [year, b] : builders) {
    ScoreMatrix m = ScoreMatrix::zeros(year, b.articles, b.sessions);
    std::size_t expected = m.rows() * m.cols();
    if (b.cells.size() != expected) {
      raise(errc::parse, path + ": year " + std::to_string(year) +
                             " is not a complete article x session grid");
    }
    for (const auto& [pos, v] : b.cells) m.at(pos.first, pos.second) = v;
    matrices.push_back(std::move(m));
  }
  return matrices;
}

void write_matrices(const std::vector<ScoreMatrix>& matrices, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) raise(errc::io, "cannot write score file " + path);
  for (const auto& m : matrices) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        f << m.year << '\t' << m.articles[i] << '\t' << m.sessions[j] << '\t'
          << format_score(m.at(i, j)) << '\n';
      }
    }
  }
}

LabelMap read_labels(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(errc::io, "cannot open label file " + path);
  LabelMap labels;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto fields = split_tabs(line);
    if (fields.size() != 3) {
      raise(errc::parse, path + ":" + std::to_string(lineno) +
                             ": expected year<TAB>article<TAB>session");
    }
    try {
      labels[std::stoi(fields[0])][fields[1]] = fields[2];
    } catch (const std::exception&) {
      raise(errc::parse, path + ":" + std::to_string(lineno) + ": malformed label row");
    }
  }
  return labels;
}

void write_labels(const LabelMap& labels, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) raise(errc::io, "cannot write label file " + path);
  for (const auto& [year, by_article] : labels) {
    for (const auto& [article, session] : by_article) {
      f << year << '\t' << article << '\t' << session << '\n';
    }
  }
}

}  // namespace sesam
