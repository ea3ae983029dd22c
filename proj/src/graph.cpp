#include "permsplit/graph.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace permsplit {

AdjacencyMatrix::AdjacencyMatrix(int vertex_count) : n_(vertex_count) {
  if (n_ < 1) throw std::invalid_argument("adjacency matrix: vertex count must be >= 1");
  bits_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), 0);
}

void AdjacencyMatrix::set_edge(int u, int v, bool present) {
  if (u < 0 || u >= n_ || v < 0 || v >= n_)
    throw std::invalid_argument("adjacency matrix: vertex out of range");
  if (u == v) throw std::invalid_argument("adjacency matrix: self-loops are not allowed");
  bits_[cell(u, v)] = present ? 1 : 0;
  bits_[cell(v, u)] = present ? 1 : 0;
}

int AdjacencyMatrix::edge_count() const {
  int total = 0;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v) total += edge(u, v) ? 1 : 0;
  return total;
}

std::string AdjacencyMatrix::encode_bits() const {
  std::string out((bits_.size() + 7) / 8, '\0');
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) out[i / 8] |= static_cast<char>(1 << (i % 8));
  return out;
}

namespace {

std::string strip_comment(const std::string& line) {
  const auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

bool blank(const std::string& line) {
  return line.find_first_not_of(" \t\r\n") == std::string::npos;
}

[[noreturn]] void fail(int line_no, const std::string& what) {
  throw GraphParseError("line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

AdjacencyMatrix AdjacencyMatrix::parse(std::istream& in) {
  std::string raw;
  int line_no = 0;
  int n = -1;
  AdjacencyMatrix graph(1);
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = strip_comment(raw);
    if (blank(line)) continue;
    std::istringstream fields(line);
    if (n < 0) {
      if (!(fields >> n) || n < 1) fail(line_no, "expected a positive vertex count");
      std::string extra;
      if (fields >> extra) fail(line_no, "unexpected token after the vertex count");
      graph = AdjacencyMatrix(n);
      continue;
    }
    int u = 0, v = 0;
    if (!(fields >> u >> v)) fail(line_no, "expected an edge \"u v\"");
    std::string extra;
    if (fields >> extra) fail(line_no, "unexpected token after the edge");
    if (u < 1 || u > n || v < 1 || v > n)
      fail(line_no, "vertex index outside 1.." + std::to_string(n));
    if (u == v) fail(line_no, "self-loop at vertex " + std::to_string(u));
    graph.set_edge(u - 1, v - 1, true);
  }
  if (n < 0) throw GraphParseError("line 1: missing vertex count");
  return graph;
}

AdjacencyMatrix AdjacencyMatrix::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphParseError("cannot open graph file: " + path);
  return parse(in);
}

void AdjacencyMatrix::write(std::ostream& out) const {
  out << n_ << '\n';
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (edge(u, v)) out << u + 1 << ' ' << v + 1 << '\n';
}

AdjacencyMatrix ConjugationAction::apply(const Permutation& g, const AdjacencyMatrix& m) const {
  if (g.degree() != m.vertex_count() || m.vertex_count() != n_)
    throw std::invalid_argument("conjugation action: dimension mismatch");
  AdjacencyMatrix out(n_);
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (m.edge(u, v)) out.set_edge(g.image_of(u), g.image_of(v), true);
  return out;
}

std::string ConjugationAction::encode(const AdjacencyMatrix& m) const {
  return m.encode_bits();
}

}  // namespace permsplit
