#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace permsplit {

// Element of the symmetric group on n points, stored as a 0-based image
// vector: images()[i] is the image of point i. Text I/O is 1-based
// ("2 3 1" maps 1->2, 2->3, 3->1).
//
// Composition convention used throughout the library: compose(g, h) applies
// g first, then h, so compose(g, h).image_of(i) == h.image_of(g.image_of(i)).
// The coset-minimality test, the transversal enumeration and the collision
// solver all depend on this orientation.
class Permutation {
 public:
  // Validates that `images` is a bijection on {0, ..., n-1}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);

  // Skips validation; for enumerators whose outputs are bijections by
  // construction.
  static Permutation trusted(std::vector<int> images);

  int degree() const { return static_cast<int>(images_.size()); }
  int image_of(int point) const { return images_[static_cast<std::size_t>(point)]; }
  const std::vector<int>& images() const { return images_; }
  bool is_identity() const;

  bool operator==(const Permutation&) const = default;

  // One line, space-separated 1-based images.
  std::string to_line() const;
  static Permutation parse_line(const std::string& line);

 private:
  Permutation() = default;
  std::vector<int> images_;
};

// g first, then h.
Permutation compose(const Permutation& g, const Permutation& h);
Permutation invert(const Permutation& g);

struct PermutationHash {
  std::size_t operator()(const Permutation& g) const;
};

}  // namespace permsplit
