#ifndef CONFSPACE_PERM_GROUP_HPP
#define CONFSPACE_PERM_GROUP_HPP

#include "confspace/configuration.hpp"
#include "confspace/permutation.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace confspace {

/// 8!, enough for every desk-scale configuration space while keeping the
/// brute-force quotient metric exact.
inline constexpr std::size_t kDefaultGroupCap = 40320;

/**
 * A finite subgroup of the symmetric group, stored by explicit enumeration.
 *
 * Elements are kept in breadth-first discovery order starting from the
 * identity; that order is the tie-breaking order for every brute-force
 * minimisation over the group.
 */
class PermGroup
{
public:
  std::size_t arity() const { return n_; }
  std::size_t order() const { return elements_.size(); }

  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  const Permutation& element(std::size_t k) const { return elements_[k]; }
  const Permutation& identity() const { return elements_.front(); }

  std::optional<std::size_t> index_of(const Permutation& p) const;
  bool contains(const Permutation& p) const { return index_of(p).has_value(); }

  /// True iff this is the full symmetric group on `arity()` points.
  bool is_full_symmetric() const;

  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

private:
  friend PermGroup generate_group(std::size_t, const std::vector<Permutation>&, std::size_t);

  std::size_t n_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::map<std::vector<int>, std::size_t> element_index_;
};

/// Breadth-first closure of `generators`. Throws ArityMismatch for a generator
/// of the wrong size and ClosureExceedsCap once more than `cap` elements appear.
PermGroup generate_group(std::size_t n, const std::vector<Permutation>& generators,
                         std::size_t cap = kDefaultGroupCap);

PermGroup trivial_group(std::size_t n);

/// Generated by the adjacent transpositions (0 1), (1 2), ...
PermGroup symmetric_group(std::size_t n, std::size_t cap = kDefaultGroupCap);

/// Generated by the n-cycle i -> i+1 mod n.
PermGroup cyclic_group(std::size_t n);

/// {act(g, x) : g in G}, in group element order.
std::vector<Configuration> orbit(const PermGroup& group, const Configuration& x);

} // namespace confspace

#endif // CONFSPACE_PERM_GROUP_HPP
