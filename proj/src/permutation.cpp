#include "permsplit/permutation.hpp"

#include <sstream>
#include <stdexcept>

namespace permsplit {

namespace {

void check_images(const std::vector<int>& images) {
  const int n = static_cast<int>(images.size());
  if (n < 1) throw std::invalid_argument("permutation: degree must be >= 1");
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v : images) {
    if (v < 0 || v >= n)
      throw std::invalid_argument("permutation: value " + std::to_string(v + 1) +
                                  " outside 1.." + std::to_string(n));
    if (seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("permutation: value " + std::to_string(v + 1) +
                                  " appears more than once");
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

}  // namespace

Permutation::Permutation(std::vector<int> images) {
  check_images(images);
  images_ = std::move(images);
}

Permutation Permutation::identity(int degree) {
  if (degree < 1) throw std::invalid_argument("identity: degree must be >= 1");
  std::vector<int> images(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) images[static_cast<std::size_t>(i)] = i;
  return trusted(std::move(images));
}

Permutation Permutation::trusted(std::vector<int> images) {
  Permutation g;
  g.images_ = std::move(images);
  return g;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[static_cast<std::size_t>(i)] != i) return false;
  return true;
}

std::string Permutation::to_line() const {
  std::string out;
  for (int i = 0; i < degree(); ++i) {
    if (i) out += ' ';
    out += std::to_string(images_[static_cast<std::size_t>(i)] + 1);
  }
  return out;
}

Permutation Permutation::parse_line(const std::string& line) {
  std::istringstream in(line);
  std::vector<int> images;
  long long v = 0;
  while (in >> v) images.push_back(static_cast<int>(v - 1));
  if (!in.eof()) throw std::invalid_argument("permutation: non-numeric token in \"" + line + "\"");
  return Permutation(std::move(images));
}

Permutation compose(const Permutation& g, const Permutation& h) {
  if (g.degree() != h.degree())
    throw std::invalid_argument("compose: mismatched degrees " + std::to_string(g.degree()) +
                                " and " + std::to_string(h.degree()));
  std::vector<int> images(static_cast<std::size_t>(g.degree()));
  for (int i = 0; i < g.degree(); ++i)
    images[static_cast<std::size_t>(i)] = h.image_of(g.image_of(i));
  return Permutation::trusted(std::move(images));
}

Permutation invert(const Permutation& g) {
  std::vector<int> images(static_cast<std::size_t>(g.degree()));
  for (int i = 0; i < g.degree(); ++i)
    images[static_cast<std::size_t>(g.image_of(i))] = i;
  return Permutation::trusted(std::move(images));
}

std::size_t PermutationHash::operator()(const Permutation& g) const {
  // FNV-1a over the image vector
  std::size_t h = 1469598103934665603ull;
  for (int v : g.images()) {
    h ^= static_cast<std::size_t>(v);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace permsplit
