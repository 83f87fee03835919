#include "confspace/json_io.hpp"

#include "confspace/errors.hpp"

#include <fstream>
#include <sstream>

namespace confspace::io {

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what)
{
  throw ParseError("field '" + field + "': " + what);
}

const Json& member(const Json& j, const std::string& key, const std::string& field)
{
  if (!j.is_object()) {
    fail(field, "expected an object");
  }
  const auto it = j.find(key);
  if (it == j.end()) {
    fail(field + "." + key, "missing");
  }
  return *it;
}

std::size_t size_from_json(const Json& j, const std::string& field)
{
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    fail(field, "expected a non-negative integer");
  }
  return j.get<std::size_t>();
}

double number_from_json(const Json& j, const std::string& field)
{
  if (!j.is_number()) {
    fail(field, "expected a number");
  }
  return j.get<double>();
}

Json vector_to_json(const Eigen::VectorXd& v)
{
  Json out = Json::array();
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    out.push_back(v[k]);
  }
  return out;
}

} // namespace

Json read_json_file(const std::string& path)
{
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open '" + path + "'");
  }
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& value)
{
  std::ofstream out(path);
  if (!out) {
    throw ParseError("cannot write '" + path + "'");
  }
  out << value.dump(2) << '\n';
}

Permutation permutation_from_json(const Json& j, const std::string& field)
{
  if (!j.is_array()) {
    fail(field, "expected an array of indices");
  }
  std::vector<int> map;
  for (std::size_t k = 0; k < j.size(); ++k) {
    if (!j[k].is_number_integer()) {
      fail(field + "[" + std::to_string(k) + "]", "expected an integer");
    }
    map.push_back(j[k].get<int>());
  }
  try {
    return Permutation(std::move(map));
  } catch (const InvalidPermutation& e) {
    fail(field, e.what());
  }
}

Json to_json(const Permutation& p)
{
  return Json(p.map());
}

PermGroup group_from_json(const Json& j)
{
  const std::size_t n = size_from_json(member(j, "n", "group"), "group.n");
  const Json& gens = member(j, "generators", "group");
  if (!gens.is_array()) {
    fail("group.generators", "expected an array of permutations");
  }
  std::vector<Permutation> generators;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const std::string field = "group.generators[" + std::to_string(k) + "]";
    Permutation g = permutation_from_json(gens[k], field);
    if (g.size() != n) {
      fail(field, "has arity " + std::to_string(g.size()) + ", expected " + std::to_string(n));
    }
    generators.push_back(std::move(g));
  }
  std::size_t cap = kDefaultGroupCap;
  if (j.contains("cap")) {
    cap = size_from_json(j["cap"], "group.cap");
  }
  return generate_group(n, generators, cap);
}

Json group_to_json(const PermGroup& group)
{
  Json gens = Json::array();
  for (const auto& g : group.generators()) {
    gens.push_back(to_json(g));
  }
  return Json{{"n", group.arity()}, {"generators", gens}};
}

Configuration configuration_from_json(const Json& j, const std::string& field)
{
  const std::size_t n = size_from_json(member(j, "n", field), field + ".n");
  const std::size_t d = size_from_json(member(j, "d", field), field + ".d");
  if (d < 1) {
    fail(field + ".d", "must be at least 1");
  }
  const Json& points = member(j, "points", field);
  if (!points.is_array() || points.size() != n) {
    fail(field + ".points", "expected an array of " + std::to_string(n) + " points");
  }
  Configuration x(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(d));
  for (std::size_t i = 0; i < n; ++i) {
    const std::string pf = field + ".points[" + std::to_string(i) + "]";
    if (!points[i].is_array() || points[i].size() != d) {
      fail(pf, "expected " + std::to_string(d) + " coordinates");
    }
    for (std::size_t k = 0; k < d; ++k) {
      x.point(static_cast<Eigen::Index>(i))[static_cast<Eigen::Index>(k)] =
          number_from_json(points[i][k], pf + "[" + std::to_string(k) + "]");
    }
  }
  return x;
}

Json to_json(const Configuration& x)
{
  Json points = Json::array();
  for (Eigen::Index i = 0; i < x.n(); ++i) {
    Json p = Json::array();
    for (Eigen::Index k = 0; k < x.d(); ++k) {
      p.push_back(x.point(i)[k]);
    }
    points.push_back(std::move(p));
  }
  return Json{{"n", x.n()}, {"d", x.d()}, {"points", points}};
}

PathSamples path_from_json(const Json& j)
{
  PathSamples path;
  const Json& closed = member(j, "closed", "loop");
  if (!closed.is_boolean()) {
    fail("loop.closed", "expected true or false");
  }
  path.closed = closed.get<bool>();
  const Json& samples = member(j, "samples", "loop");
  if (!samples.is_array() || samples.size() < 2) {
    fail("loop.samples", "expected an array of at least two configurations");
  }
  for (std::size_t k = 0; k < samples.size(); ++k) {
    const std::string field = "loop.samples[" + std::to_string(k) + "]";
    path.samples.push_back(configuration_from_json(samples[k], field));
    if (!path.samples.back().same_shape(path.samples.front())) {
      fail(field, "shape differs from samples[0]");
    }
  }
  return path;
}

Json to_json(const PathSamples& path)
{
  Json samples = Json::array();
  for (const auto& s : path.samples) {
    samples.push_back(to_json(s));
  }
  return Json{{"closed", path.closed}, {"samples", samples}};
}

Json to_json(const LiftResult& lift)
{
  Json out = to_json(lift.lift);
  out["deck"] = lift.deck ? to_json(*lift.deck) : Json(nullptr);
  return out;
}

Json to_json(const Polyline& polyline)
{
  Json vertices = Json::array();
  for (const auto& v : polyline.vertices) {
    vertices.push_back(vector_to_json(v));
  }
  return Json{{"closed", polyline.closed}, {"vertices", vertices}};
}

Json to_json(const ReductionTrace& trace)
{
  Json events = Json::array();
  for (const auto& e : trace.steps) {
    Json points = Json::array();
    for (const auto& p : e.points) {
      points.push_back(vector_to_json(p));
    }
    events.push_back(Json{{"kind", to_string(e.kind)},
                          {"indices", e.indices},
                          {"points", points},
                          {"vertex_count", e.polyline_after.size()},
                          {"clearance", e.clearance_after},
                          {"polyline", to_json(e.polyline_after)}});
  }
  return Json{{"initial", to_json(trace.initial)},
              {"events", events},
              {"final", to_json(trace.final)},
              {"collapses", trace.collapse_count()}};
}

ComplexTuple complex_tuple_from_json(const Json& j, const std::string& field)
{
  if (!j.is_array()) {
    fail(field, "expected an array of [re, im] pairs");
  }
  ComplexTuple values;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string ef = field + "[" + std::to_string(k) + "]";
    if (!j[k].is_array() || j[k].size() != 2) {
      fail(ef, "expected [re, im]");
    }
    values.emplace_back(number_from_json(j[k][0], ef + "[0]"), number_from_json(j[k][1], ef + "[1]"));
  }
  return values;
}

Json to_json(const ComplexTuple& values)
{
  Json out = Json::array();
  for (const auto& v : values) {
    out.push_back(Json::array({v.real(), v.imag()}));
  }
  return out;
}

} // namespace confspace::io
