#include "confspace/demo_loops.hpp"

#include "confspace/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace confspace::demo {

namespace {

void check_parameters(std::size_t n, std::size_t d, std::size_t steps)
{
  if (n < 2) {
    throw ShapeMismatch("demo loops need at least 2 points");
  }
  if (d < 2) {
    throw ShapeMismatch("demo loops need dimension at least 2");
  }
  if (steps < kMinSteps) {
    throw ShapeMismatch("demo loops need at least " + std::to_string(kMinSteps) + " steps");
  }
}

Eigen::VectorXd axis(std::size_t d, std::size_t k)
{
  return Eigen::VectorXd::Unit(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(k));
}

/// Appends samples 1..steps of a rigid turn of the points in slots i and j
/// (slot -> point lookup in `at_slot`) about their midpoint.
void append_turn(PathSamples& path, const std::vector<std::size_t>& at_slot, std::size_t i,
                 std::size_t j, double total_angle, const Eigen::VectorXd& plane,
                 std::size_t steps)
{
  const Configuration start = path.back();
  const auto pi = static_cast<Eigen::Index>(at_slot[i]);
  const auto pj = static_cast<Eigen::Index>(at_slot[j]);
  const Eigen::VectorXd a = start.point(pi).transpose();
  const Eigen::VectorXd b = start.point(pj).transpose();
  const Eigen::VectorXd mid = (a + b) / 2.0;
  const Eigen::VectorXd arm = (a - b) / 2.0;
  const double r = arm.norm();
  const Eigen::VectorXd e0 = arm / r;
  for (std::size_t s = 1; s <= steps; ++s) {
    const double theta = total_angle * static_cast<double>(s) / static_cast<double>(steps);
    const Eigen::VectorXd offset = r * (std::cos(theta) * e0 + std::sin(theta) * plane);
    Configuration next = start;
    next.point(pi) = (mid + offset).transpose();
    next.point(pj) = (mid - offset).transpose();
    path.samples.push_back(std::move(next));
  }
}

} // namespace

Configuration line_configuration(std::size_t n, std::size_t d)
{
  Configuration x(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(d));
  for (std::size_t k = 0; k < n; ++k) {
    x.point(static_cast<Eigen::Index>(k))[0] = static_cast<double>(k);
  }
  return x;
}

PathSamples rigid_turn_loop(std::size_t n, std::size_t d, std::size_t steps, std::size_t i,
                            std::size_t j, std::size_t half_turns)
{
  check_parameters(n, d, steps);
  if (i >= n || j >= n || i == j) {
    throw BadIndices("turning pair must be two distinct point indices below n");
  }
  PathSamples path;
  path.closed = true;
  path.samples.push_back(line_configuration(n, d));
  std::vector<std::size_t> identity_slots(n);
  for (std::size_t k = 0; k < n; ++k) {
    identity_slots[k] = k;
  }
  append_turn(path, identity_slots, i, j, std::numbers::pi * static_cast<double>(half_turns),
              axis(d, 1), steps);
  return path;
}

PathSamples constant_loop(std::size_t n, std::size_t d, std::size_t steps)
{
  check_parameters(n, d, steps);
  PathSamples path;
  path.closed = true;
  path.samples.assign(steps + 1, line_configuration(n, d));
  return path;
}

namespace {

Eigen::RowVectorXd slot_position(std::size_t d, std::size_t slot)
{
  Eigen::RowVectorXd p = Eigen::RowVectorXd::Zero(static_cast<Eigen::Index>(d));
  p[0] = static_cast<double>(slot);
  return p;
}

PathSamples braid_path(std::size_t n, std::size_t d, const std::vector<BraidLetter>& word,
                       const std::vector<std::size_t>& steps)
{
  PathSamples path;
  path.closed = true;
  path.samples.push_back(line_configuration(n, d));
  // at_slot[s] is the point currently sitting at (s, 0, ..., 0).
  std::vector<std::size_t> at_slot(n);
  for (std::size_t k = 0; k < n; ++k) {
    at_slot[k] = k;
  }
  for (std::size_t k = 0; k < word.size(); ++k) {
    const BraidLetter& letter = word[k];
    if (letter.slot + 1 >= n) {
      throw BadIndices("braid letter slot " + std::to_string(letter.slot) + " out of range");
    }
    const Eigen::VectorXd plane = letter.plane.size() == 0 ? axis(d, 1) : letter.plane;
    if (plane.size() != static_cast<Eigen::Index>(d) || std::abs(plane[0]) > 1e-12 ||
        std::abs(plane.norm() - 1.0) > 1e-12) {
      throw ShapeMismatch("braid plane vector must be a unit vector orthogonal to the first axis");
    }
    const double angle = letter.positive ? std::numbers::pi : -std::numbers::pi;
    append_turn(path, at_slot, letter.slot, letter.slot + 1, angle, plane, steps[k]);
    // Snap the exchanged points onto their slots; the turn lands there up to
    // rounding, and exact slots make the loop close exactly.
    Configuration& end = path.samples.back();
    end.point(static_cast<Eigen::Index>(at_slot[letter.slot])) = slot_position(d, letter.slot + 1);
    end.point(static_cast<Eigen::Index>(at_slot[letter.slot + 1])) = slot_position(d, letter.slot);
    std::swap(at_slot[letter.slot], at_slot[letter.slot + 1]);
  }
  return path;
}

} // namespace

PathSamples braid_loop(std::size_t n, std::size_t d, const std::vector<BraidLetter>& word,
                       std::size_t steps_per_letter)
{
  check_parameters(n, d, steps_per_letter);
  if (word.empty()) {
    return constant_loop(n, d, steps_per_letter);
  }
  return braid_path(n, d, word, std::vector<std::size_t>(word.size(), steps_per_letter));
}

PathSamples random_braid(std::size_t n, std::size_t d, std::size_t steps, std::uint64_t seed)
{
  check_parameters(n, d, steps);
  std::mt19937_64 rng(seed);
  const std::size_t max_letters = std::min<std::size_t>(4, steps / kMinSteps);
  std::uniform_int_distribution<std::size_t> letter_count(1, max_letters);
  std::uniform_int_distribution<std::size_t> slot(0, n - 2);
  std::bernoulli_distribution sign(0.5);
  std::normal_distribution<double> normal(0.0, 1.0);

  std::vector<BraidLetter> word(letter_count(rng));
  for (auto& letter : word) {
    letter.slot = slot(rng);
    letter.positive = sign(rng);
    Eigen::VectorXd plane = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(d));
    do {
      for (std::size_t k = 1; k < d; ++k) {
        plane[static_cast<Eigen::Index>(k)] = normal(rng);
      }
    } while (plane.norm() < 1e-3);
    letter.plane = plane.normalized();
  }

  // Equal shares, remainder on the last letter.
  std::vector<std::size_t> schedule(word.size(), steps / word.size());
  schedule.back() += steps % word.size();
  return braid_path(n, d, word, schedule);
}

} // namespace confspace::demo
