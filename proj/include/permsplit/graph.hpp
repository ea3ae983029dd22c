#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "permsplit/permutation.hpp"

namespace permsplit {

class GraphParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Simple undirected graph as a symmetric 0/1 adjacency matrix with a zero
// diagonal.
//
// File format: first data line is the vertex count, then one "u v" edge per
// line with 1-based endpoints; '#' starts a comment. Parse errors carry the
// offending line number.
class AdjacencyMatrix {
 public:
  explicit AdjacencyMatrix(int vertex_count);

  int vertex_count() const { return n_; }
  bool edge(int u, int v) const { return bits_[cell(u, v)] != 0; }
  void set_edge(int u, int v, bool present);
  int edge_count() const;

  // Row-major bit string packed eight cells per byte; injective for a fixed
  // vertex count.
  std::string encode_bits() const;

  static AdjacencyMatrix parse(std::istream& in);
  static AdjacencyMatrix load_file(const std::string& path);
  void write(std::ostream& out) const;

  bool operator==(const AdjacencyMatrix&) const = default;

 private:
  std::size_t cell(int u, int v) const {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(v);
  }
  int n_ = 0;
  std::vector<std::uint8_t> bits_;
};

// Conjugation action of S_n on adjacency matrices: relabeling vertices, so
// apply(g, M) has an edge {u^g, v^g} exactly where M has {u, v}.
class ConjugationAction {
 public:
  using State = AdjacencyMatrix;

  explicit ConjugationAction(int n) : n_(n) {}
  int degree() const { return n_; }
  AdjacencyMatrix apply(const Permutation& g, const AdjacencyMatrix& m) const;
  std::string encode(const AdjacencyMatrix& m) const;

 private:
  int n_ = 0;
};

}  // namespace permsplit
