// confspace: quotient distances, monodromy, loop contraction, demo loops,
// trajectory plots and the roots/coefficients map from the command line.
//
// Exit codes: 0 success, 2 input error, 3 ambiguous lift, 4 open loop,
// 5 nontrivial monodromy, 6 perturbation failure.

#include "confspace/covering.hpp"
#include "confspace/demo_loops.hpp"
#include "confspace/errors.hpp"
#include "confspace/homotopy.hpp"
#include "confspace/json_io.hpp"
#include "confspace/metric.hpp"
#include "confspace/svg_plot.hpp"
#include "confspace/vieta.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace confspace;
using io::Json;

enum ExitCode : int
{
  kOk = 0,
  kInputError = 2,
  kAmbiguousLift = 3,
  kOpenLoop = 4,
  kNontrivialMonodromy = 5,
  kPerturbationFailed = 6,
};

double global_tolerance()
{
  if (const char* env = std::getenv("CONFSPACE_TOL")) {
    try {
      const double tol = std::stod(env);
      if (tol > 0.0) {
        return tol;
      }
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring invalid CONFSPACE_TOL='" << env << "'\n";
  }
  return kDistinctTolerance;
}

LiftOptions lift_options()
{
  LiftOptions options;
  options.distinct_tol = global_tolerance();
  options.closure_tol = global_tolerance();
  return options;
}

std::string format_real(double v)
{
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

/// An argument that is either inline JSON or the path of a JSON file.
Json json_argument(const std::string& arg)
{
  const auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && (arg[first] == '[' || arg[first] == '{')) {
    try {
      return Json::parse(arg);
    } catch (const Json::parse_error& e) {
      throw ParseError(std::string("inline JSON: ") + e.what());
    }
  }
  return io::read_json_file(arg);
}

void write_output(const std::string& path, const std::string& text)
{
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw ParseError("cannot write '" + path + "'");
  }
  out << text;
}

PermGroup group_or_symmetric(const std::string& group_file, std::size_t n)
{
  if (!group_file.empty()) {
    PermGroup group = io::group_from_json(io::read_json_file(group_file));
    if (group.arity() != n) {
      throw ParseError("field 'group.n': group acts on " + std::to_string(group.arity()) +
                       " points, loop has " + std::to_string(n));
    }
    return group;
  }
  return symmetric_group(n);
}

/// Maps library errors onto the exit-code contract.
template <typename Fn>
int guarded(Fn&& fn)
{
  try {
    return fn();
  } catch (const AmbiguousLift& e) {
    std::cerr << "error: ambiguous lift: " << e.what() << "\n"
              << "hint: subdivide step " << e.step() << " into at least "
              << e.suggested_subdivision() << " pieces, or pass --auto-resample\n";
    return kAmbiguousLift;
  } catch (const OpenLoop& e) {
    std::cerr << "error: open loop: " << e.what() << "\n";
    return kOpenLoop;
  } catch (const PerturbationFailed& e) {
    std::cerr << "error: perturbation failed: " << e.what() << "\n";
    return kPerturbationFailed;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}

int cmd_dist(const std::string& group_file, const std::string& a_file, const std::string& b_file)
{
  const PermGroup group = io::group_from_json(io::read_json_file(group_file));
  const Configuration a = io::configuration_from_json(io::read_json_file(a_file), "a");
  const Configuration b = io::configuration_from_json(io::read_json_file(b_file), "b");
  if (!a.same_shape(b)) {
    throw ParseError("field 'b.n'/'b.d': shape " + std::to_string(b.n()) + "x" +
                     std::to_string(b.d()) + " differs from a's " + std::to_string(a.n()) + "x" +
                     std::to_string(a.d()));
  }
  if (static_cast<Eigen::Index>(group.arity()) != a.n()) {
    throw ParseError("field 'group.n': group acts on " + std::to_string(group.arity()) +
                     " points, configurations have " + std::to_string(a.n()));
  }
  const auto result = quotient_distance_auto(group, a, b);
  std::cout << "distance: " << format_real(result.value) << "\n"
            << "witness: " << to_string(result.witness) << "\n";
  return kOk;
}

struct MonodromyArgs
{
  std::string group_file;
  std::string loop_file;
  bool auto_resample = false;
  std::size_t max_subdiv = 8;
  std::string lift_out;
};

int cmd_monodromy(const MonodromyArgs& args)
{
  const PermGroup group = io::group_from_json(io::read_json_file(args.group_file));
  const PathSamples loop = io::path_from_json(io::read_json_file(args.loop_file));
  if (static_cast<Eigen::Index>(group.arity()) != loop.front().n()) {
    throw ParseError("field 'group.n': group acts on " + std::to_string(group.arity()) +
                     " points, loop samples have " + std::to_string(loop.front().n()));
  }
  if (!loop.closed) {
    throw OpenLoop("loop.closed is false");
  }
  const LiftResult lift =
      lift_path_resampled(group, loop, loop.front(), args.auto_resample ? args.max_subdiv : 0,
                          lift_options());
  if (!args.lift_out.empty()) {
    io::write_json_file(args.lift_out, io::to_json(lift));
  }
  std::cout << to_string(*lift.deck) << "\n";
  return kOk;
}

struct ContractArgs
{
  std::string loop_file;
  std::string group_file;
  std::string trace_out;
  std::size_t max_subdiv = 8;
};

int cmd_contract(const ContractArgs& args)
{
  const PathSamples loop = io::path_from_json(io::read_json_file(args.loop_file));
  const auto n = static_cast<std::size_t>(loop.front().n());
  const auto d = static_cast<std::size_t>(loop.front().d());
  const PermGroup group = group_or_symmetric(args.group_file, n);
  if (!loop.closed) {
    throw OpenLoop("loop.closed is false");
  }
  if (d < 3) {
    throw DimensionTooLow("field 'loop.samples[0].d': contraction needs d >= 3, got " +
                          std::to_string(d));
  }

  LiftResult lift = lift_path_resampled(group, loop, loop.front(), args.max_subdiv, lift_options());
  if (!lift.deck->is_identity()) {
    std::cout << to_string(*lift.deck) << "\n";
    std::cerr << "error: loop is not null-homotopic; its lift ends at "
              << to_string(*lift.deck) << " applied to the basepoint\n";
    return kNontrivialMonodromy;
  }
  // The lift closes up to the deck tolerance; close it exactly.
  lift.lift.samples.back() = lift.lift.samples.front();

  const CollisionSet collisions = collision_set(n, d);
  const Polyline polyline = polygonalize(lift.lift, collisions);
  const ReductionTrace trace = contract_loop(polyline, collisions);
  if (!args.trace_out.empty()) {
    io::write_json_file(args.trace_out, io::to_json(trace));
  }
  std::cout << "polygon vertices: " << polyline.size() << "\n"
            << "collapses: " << trace.collapse_count() << "\n"
            << "final vertices: " << trace.final.size() << "\n";
  return kOk;
}

struct DemoArgs
{
  std::string kind;
  std::size_t n = 2;
  std::size_t d = 3;
  std::size_t steps = 64;
  std::uint64_t seed = 0;
  std::vector<std::size_t> pair{0, 1};
  std::string out;
};

int cmd_demo(const DemoArgs& args)
{
  if (args.pair.size() != 2) {
    throw ParseError("field '--pair': expected two indices");
  }
  PathSamples loop;
  if (args.kind == "swap-loop") {
    loop = demo::swap_loop(args.n, args.d, args.steps, args.pair[0], args.pair[1]);
  } else if (args.kind == "rotation") {
    loop = demo::rotation_loop(args.n, args.d, args.steps, args.pair[0], args.pair[1]);
  } else if (args.kind == "random-braid") {
    loop = demo::random_braid(args.n, args.d, args.steps, args.seed);
  } else if (args.kind == "constant") {
    loop = demo::constant_loop(args.n, args.d, args.steps);
  } else {
    throw ParseError("field 'kind': unknown demo '" + args.kind + "'");
  }
  write_output(args.out, io::to_json(loop).dump(2) + "\n");
  return kOk;
}

struct PlotArgs
{
  std::string loop_file;
  std::string group_file;
  std::vector<int> proj{0, 1};
  bool pca = false;
  bool raw = false;
  std::size_t stride = 1;
  int width = 480;
  int height = 480;
  std::size_t max_subdiv = 8;
  std::string out;
};

int cmd_plot(const PlotArgs& args)
{
  const PathSamples loop = io::path_from_json(io::read_json_file(args.loop_file));
  if (args.proj.size() != 2) {
    throw BadIndices("--proj expects two coordinate indices");
  }
  PlotSpec spec;
  spec.projection = args.pca ? PlotSpec::Projection::Pca : PlotSpec::Projection::Axes;
  spec.axis_x = args.proj[0];
  spec.axis_y = args.proj[1];
  spec.stride = args.stride;
  spec.width = args.width;
  spec.height = args.height;
  projection_matrix(loop, spec);

  PathSamples drawn = loop;
  if (!args.raw) {
    const PermGroup group = group_or_symmetric(args.group_file, static_cast<std::size_t>(loop.front().n()));
    PathSamples open_path = loop;
    open_path.closed = false;
    drawn = lift_path_resampled(group, open_path, loop.front(), args.max_subdiv, lift_options()).lift;
  }
  write_output(args.out, render_svg(drawn, spec));
  return kOk;
}

struct VietaArgs
{
  std::string roots;
  std::string coeffs;
  bool roundtrip_error = false;
};

int cmd_vieta(const VietaArgs& args)
{
  if (args.roots.empty() == args.coeffs.empty()) {
    throw ParseError("field '--roots/--coeffs': give exactly one of them");
  }
  if (!args.roots.empty()) {
    const ComplexTuple roots = io::complex_tuple_from_json(json_argument(args.roots), "roots");
    const MonicCoefficients c = roots_to_coeffs(roots);
    std::cout << Json{{"coefficients", io::to_json(c.coeffs)}}.dump() << "\n";
    if (args.roundtrip_error) {
      std::cout << "roundtrip_error: " << format_real(vieta_roundtrip_error(roots)) << "\n";
    }
    return kOk;
  }
  MonicCoefficients c;
  c.coeffs = io::complex_tuple_from_json(json_argument(args.coeffs), "coeffs");
  const ComplexTuple roots = coeffs_to_roots(c);
  std::cout << Json{{"roots", io::to_json(roots)}, {"root_bound", root_bound(c)}}.dump() << "\n";
  return kOk;
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Quotient metrics, covering maps and loop contraction on configuration spaces"};
  app.require_subcommand(1);

  std::string group_file, a_file, b_file;
  auto* dist = app.add_subcommand("dist", "quotient distance between two configurations");
  dist->add_option("group", group_file, "group JSON")->required();
  dist->add_option("a", a_file, "configuration JSON")->required();
  dist->add_option("b", b_file, "configuration JSON")->required();

  MonodromyArgs mono;
  auto* monodromy_cmd = app.add_subcommand("monodromy", "deck permutation of a quotient loop");
  monodromy_cmd->add_option("group", mono.group_file, "group JSON")->required();
  monodromy_cmd->add_option("loop", mono.loop_file, "loop JSON")->required();
  monodromy_cmd->add_flag("--auto-resample", mono.auto_resample,
                          "halve steps while the lift is ambiguous");
  monodromy_cmd->add_option("--max-subdiv", mono.max_subdiv, "maximum halving rounds");
  monodromy_cmd->add_option("--lift", mono.lift_out, "write the lifted path JSON here");

  ContractArgs contract;
  auto* contract_cmd = app.add_subcommand("contract", "certify a loop null-homotopic");
  contract_cmd->add_option("loop", contract.loop_file, "loop JSON")->required();
  contract_cmd->add_option("--group", contract.group_file, "group JSON (default: symmetric)");
  contract_cmd->add_option("--trace", contract.trace_out, "write the reduction trace JSON here");
  contract_cmd->add_option("--max-subdiv", contract.max_subdiv, "maximum halving rounds");

  DemoArgs demo_args;
  auto* demo_cmd = app.add_subcommand("demo", "emit a demo loop JSON");
  demo_cmd->add_option("kind", demo_args.kind, "swap-loop | rotation | random-braid | constant")
      ->required();
  demo_cmd->add_option("--n", demo_args.n, "number of points");
  demo_cmd->add_option("--dim", demo_args.d, "ambient dimension");
  demo_cmd->add_option("--steps", demo_args.steps, "number of steps");
  demo_cmd->add_option("--seed", demo_args.seed, "random-braid seed");
  demo_cmd->add_option("--pair", demo_args.pair, "turning pair for swap-loop/rotation")
      ->delimiter(',');
  demo_cmd->add_option("-o,--output", demo_args.out, "output file (default stdout)");

  PlotArgs plot;
  auto* plot_cmd = app.add_subcommand("plot", "SVG drawing of a loop's point trajectories");
  plot_cmd->add_option("loop", plot.loop_file, "loop JSON")->required();
  plot_cmd->add_option("--group", plot.group_file, "group JSON used to lift (default: symmetric)");
  plot_cmd->add_option("--proj", plot.proj, "two ambient coordinates")->delimiter(',');
  plot_cmd->add_flag("--pca", plot.pca, "project onto the principal plane");
  plot_cmd->add_flag("--raw", plot.raw, "draw the samples as given, without lifting");
  plot_cmd->add_option("--stride", plot.stride, "sample stride");
  plot_cmd->add_option("--width", plot.width, "pixels");
  plot_cmd->add_option("--height", plot.height, "pixels");
  plot_cmd->add_option("-o,--output", plot.out, "output SVG (default stdout)");

  VietaArgs vieta;
  auto* vieta_cmd = app.add_subcommand("vieta", "roots <-> monic coefficients");
  vieta_cmd->add_option("--roots", vieta.roots, "[[re, im], ...] inline or file");
  vieta_cmd->add_option("--coeffs", vieta.coeffs, "[[re, im], ...] inline or file");
  vieta_cmd->add_flag("--roundtrip-error", vieta.roundtrip_error,
                      "also report the roots -> coefficients -> roots error");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  if (*dist) {
    return guarded([&] { return cmd_dist(group_file, a_file, b_file); });
  }
  if (*monodromy_cmd) {
    return guarded([&] { return cmd_monodromy(mono); });
  }
  if (*contract_cmd) {
    return guarded([&] { return cmd_contract(contract); });
  }
  if (*demo_cmd) {
    return guarded([&] { return cmd_demo(demo_args); });
  }
  if (*plot_cmd) {
    return guarded([&] { return cmd_plot(plot); });
  }
  if (*vieta_cmd) {
    return guarded([&] { return cmd_vieta(vieta); });
  }
  return kInputError;
}
