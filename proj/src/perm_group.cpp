#include "confspace/perm_group.hpp"

#include "confspace/errors.hpp"

#include <deque>

namespace confspace {

std::optional<std::size_t> PermGroup::index_of(const Permutation& p) const
{
  const auto it = element_index_.find(p.map());
  if (it == element_index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

bool PermGroup::is_full_symmetric() const
{
  std::size_t factorial = 1;
  for (std::size_t k = 2; k <= n_; ++k) {
    factorial *= k;
    if (factorial > elements_.size()) {
      return false;
    }
  }
  return factorial == elements_.size();
}

PermGroup generate_group(std::size_t n, const std::vector<Permutation>& generators,
                         std::size_t cap)
{
  if (cap < 1) {
    throw ClosureExceedsCap("group enumeration cap must be at least 1");
  }
  for (const auto& g : generators) {
    if (g.size() != n) {
      throw ArityMismatch("generator " + to_string(g) + " does not act on " + std::to_string(n) +
                          " points");
    }
  }

  PermGroup group;
  group.n_ = n;
  group.generators_ = generators;

  auto insert = [&](Permutation p) -> bool {
    if (group.element_index_.count(p.map()) != 0) {
      return false;
    }
    if (group.elements_.size() >= cap) {
      throw ClosureExceedsCap("group order exceeds cap " + std::to_string(cap));
    }
    group.element_index_.emplace(p.map(), group.elements_.size());
    group.elements_.push_back(std::move(p));
    return true;
  };

  insert(Permutation::identity(n));
  // Right-multiplying by generators reaches every element of a finite group,
  // inverses included, since g^{-1} = g^{order-1}.
  std::deque<std::size_t> frontier{0};
  while (!frontier.empty()) {
    const std::size_t k = frontier.front();
    frontier.pop_front();
    for (const auto& g : generators) {
      if (insert(compose(group.elements_[k], g))) {
        frontier.push_back(group.elements_.size() - 1);
      }
    }
  }
  return group;
}

PermGroup trivial_group(std::size_t n)
{
  return generate_group(n, {});
}

PermGroup symmetric_group(std::size_t n, std::size_t cap)
{
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    gens.push_back(Permutation::transposition(n, i, i + 1));
  }
  return generate_group(n, gens, cap);
}

PermGroup cyclic_group(std::size_t n)
{
  if (n < 2) {
    return trivial_group(n);
  }
  std::vector<int> map(n);
  for (std::size_t i = 0; i < n; ++i) {
    map[i] = static_cast<int>((i + 1) % n);
  }
  return generate_group(n, {Permutation(std::move(map))});
}

std::vector<Configuration> orbit(const PermGroup& group, const Configuration& x)
{
  std::vector<Configuration> result;
  result.reserve(group.order());
  for (const auto& g : group) {
    result.push_back(act(g, x));
  }
  return result;
}

} // namespace confspace
