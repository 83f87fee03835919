#ifndef CONFSPACE_PERMUTATION_HPP
#define CONFSPACE_PERMUTATION_HPP

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

namespace confspace {

/**
 * A bijection of {0, ..., n-1} in one-line notation: `p[i]` is the image of i.
 *
 * Indices are 0-based everywhere; the usual mathematical notation labels the
 * points 1..n.
 */
class Permutation
{
public:
  Permutation() = default;

  /// Throws InvalidPermutation unless `map` is a bijection.
  explicit Permutation(std::vector<int> map);

  static Permutation identity(std::size_t n);

  /// The transposition exchanging `i` and `j`.
  static Permutation transposition(std::size_t n, std::size_t i, std::size_t j);

  std::size_t size() const { return map_.size(); }
  int operator[](std::size_t i) const { return map_[i]; }
  const std::vector<int>& map() const { return map_; }

  bool is_identity() const;

  /// Smallest k >= 1 with p^k = identity.
  std::size_t order() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.map_ <=> b.map_; }

private:
  std::vector<int> map_;
};

/// r(i) = p(q(i)). Throws ArityMismatch when the sizes differ.
Permutation compose(const Permutation& p, const Permutation& q);

Permutation inverse(const Permutation& p);

/// "[1, 0, 2]"
std::string to_string(const Permutation& p);

std::ostream& operator<<(std::ostream& os, const Permutation& p);

} // namespace confspace

#endif // CONFSPACE_PERMUTATION_HPP
