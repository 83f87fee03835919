#include "confspace/permutation.hpp"

#include "confspace/errors.hpp"

#include <numeric>
#include <sstream>

namespace confspace {

Permutation::Permutation(std::vector<int> map) : map_(std::move(map))
{
  std::vector<bool> seen(map_.size(), false);
  for (int v : map_) {
    if (v < 0 || static_cast<std::size_t>(v) >= map_.size() || seen[v]) {
      throw InvalidPermutation("not a permutation: " + to_string(*this));
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n)
{
  std::vector<int> map(n);
  std::iota(map.begin(), map.end(), 0);
  return Permutation(std::move(map));
}

Permutation Permutation::transposition(std::size_t n, std::size_t i, std::size_t j)
{
  if (i >= n || j >= n) {
    throw InvalidPermutation("transposition index out of range");
  }
  std::vector<int> map(n);
  std::iota(map.begin(), map.end(), 0);
  std::swap(map[i], map[j]);
  return Permutation(std::move(map));
}

bool Permutation::is_identity() const
{
  for (std::size_t i = 0; i < map_.size(); ++i) {
    if (map_[i] != static_cast<int>(i)) {
      return false;
    }
  }
  return true;
}

std::size_t Permutation::order() const
{
  // lcm of cycle lengths
  std::vector<bool> visited(map_.size(), false);
  std::size_t result = 1;
  for (std::size_t start = 0; start < map_.size(); ++start) {
    if (visited[start]) {
      continue;
    }
    std::size_t length = 0;
    for (std::size_t i = start; !visited[i]; i = static_cast<std::size_t>(map_[i])) {
      visited[i] = true;
      ++length;
    }
    result = std::lcm(result, length);
  }
  return result;
}

Permutation compose(const Permutation& p, const Permutation& q)
{
  if (p.size() != q.size()) {
    throw ArityMismatch("compose: arity " + std::to_string(p.size()) + " vs " +
                        std::to_string(q.size()));
  }
  std::vector<int> map(p.size());
  for (std::size_t i = 0; i < map.size(); ++i) {
    map[i] = p[static_cast<std::size_t>(q[i])];
  }
  return Permutation(std::move(map));
}

Permutation inverse(const Permutation& p)
{
  std::vector<int> map(p.size());
  for (std::size_t i = 0; i < map.size(); ++i) {
    map[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  }
  return Permutation(std::move(map));
}

std::string to_string(const Permutation& p)
{
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i > 0) {
      os << ", ";
    }
    os << p[i];
  }
  os << ']';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Permutation& p)
{
  return os << to_string(p);
}

} // namespace confspace
