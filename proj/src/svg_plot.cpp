#include "confspace/svg_plot.hpp"

#include "confspace/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cstdio>
#include <limits>
#include <sstream>

namespace confspace {

namespace {

const std::vector<std::string> kPalette = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                           "#9467bd", "#8c564b", "#e377c2", "#17becf"};

std::string fmt(double v)
{
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  std::string s(buf);
  return s == "-0.00" ? "0.00" : s;
}

std::string label(std::size_t k)
{
  if (k < 26) {
    return std::string(1, static_cast<char>('A' + k));
  }
  return "P" + std::to_string(k);
}

} // namespace

Eigen::Matrix<double, 2, Eigen::Dynamic> projection_matrix(const PathSamples& path,
                                                           const PlotSpec& spec)
{
  if (path.samples.empty()) {
    throw ShapeMismatch("cannot plot an empty path");
  }
  const Eigen::Index d = path.front().d();
  Eigen::Matrix<double, 2, Eigen::Dynamic> proj = Eigen::MatrixXd::Zero(2, d);

  if (spec.projection == PlotSpec::Projection::Axes) {
    if (spec.axis_x < 0 || spec.axis_y < 0 || spec.axis_x >= d || spec.axis_y >= d ||
        spec.axis_x == spec.axis_y) {
      throw BadIndices("projection axes " + std::to_string(spec.axis_x) + "," +
                       std::to_string(spec.axis_y) + " invalid for dimension " +
                       std::to_string(d));
    }
    proj(0, spec.axis_x) = 1.0;
    proj(1, spec.axis_y) = 1.0;
    return proj;
  }

  if (d < 2) {
    throw BadIndices("a PCA plane needs dimension at least 2");
  }
  Eigen::VectorXd mean = Eigen::VectorXd::Zero(d);
  std::size_t count = 0;
  for (const auto& s : path.samples) {
    for (Eigen::Index i = 0; i < s.n(); ++i) {
      mean += s.point(i).transpose();
      ++count;
    }
  }
  mean /= static_cast<double>(count);
  Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(d, d);
  for (const auto& s : path.samples) {
    for (Eigen::Index i = 0; i < s.n(); ++i) {
      const Eigen::VectorXd c = s.point(i).transpose() - mean;
      cov += c * c.transpose();
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(cov);
  // Eigenvalues ascend; take the top two, sign fixed by the largest entry.
  for (int row = 0; row < 2; ++row) {
    Eigen::VectorXd v = eig.eigenvectors().col(d - 1 - row);
    Eigen::Index arg = 0;
    v.cwiseAbs().maxCoeff(&arg);
    if (v[arg] < 0.0) {
      v = -v;
    }
    proj.row(row) = v.transpose();
  }
  return proj;
}

std::string render_svg(const PathSamples& path, const PlotSpec& spec)
{
  const auto proj = projection_matrix(path, spec);
  const Eigen::Index n = path.front().n();
  const std::size_t stride = std::max<std::size_t>(1, spec.stride);
  const auto& palette = spec.strokes.empty() ? kPalette : spec.strokes;

  std::vector<std::size_t> picks;
  for (std::size_t k = 0; k < path.size(); k += stride) {
    picks.push_back(k);
  }
  if (picks.back() != path.size() - 1) {
    picks.push_back(path.size() - 1);
  }

  // tracks[i][m] = projected position of point i at the m-th picked sample
  std::vector<std::vector<Eigen::Vector2d>> tracks(static_cast<std::size_t>(n));
  double lo_x = std::numeric_limits<double>::infinity(), lo_y = lo_x;
  double hi_x = -lo_x, hi_y = -lo_x;
  for (std::size_t k : picks) {
    for (Eigen::Index i = 0; i < n; ++i) {
      const Eigen::Vector2d q = proj * path.samples[k].point(i).transpose();
      tracks[static_cast<std::size_t>(i)].push_back(q);
      lo_x = std::min(lo_x, q.x());
      hi_x = std::max(hi_x, q.x());
      lo_y = std::min(lo_y, q.y());
      hi_y = std::max(hi_y, q.y());
    }
  }
  const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
  const double margin = 40.0;
  const double scale =
      std::min(spec.width - 2 * margin, spec.height - 2 * margin) / span;
  const double cx = (lo_x + hi_x) / 2.0;
  const double cy = (lo_y + hi_y) / 2.0;
  auto px = [&](const Eigen::Vector2d& q) {
    return fmt(spec.width / 2.0 + (q.x() - cx) * scale);
  };
  auto py = [&](const Eigen::Vector2d& q) {
    return fmt(spec.height / 2.0 - (q.y() - cy) * scale);
  };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << spec.width
      << "\" height=\"" << spec.height << "\" viewBox=\"0 0 " << spec.width << ' '
      << spec.height << "\">\n"
      << "<defs>\n";
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& colour = palette[static_cast<std::size_t>(i) % palette.size()];
    svg << "<marker id=\"arrow" << i
        << "\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"8\" markerHeight=\"8\""
           " orient=\"auto\"><path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\""
        << colour << "\"/></marker>\n";
  }
  svg << "</defs>\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& track = tracks[static_cast<std::size_t>(i)];
    const auto& colour = palette[static_cast<std::size_t>(i) % palette.size()];
    bool moves = false;
    for (const auto& q : track) {
      moves = moves || (px(q) != px(track.front()) || py(q) != py(track.front()));
    }
    if (moves) {
      svg << "<polyline fill=\"none\" stroke=\"" << colour
          << "\" stroke-width=\"2\" marker-end=\"url(#arrow" << i << ")\" points=\"";
      for (std::size_t m = 0; m < track.size(); ++m) {
        svg << (m ? " " : "") << px(track[m]) << ',' << py(track[m]);
      }
      svg << "\"/>\n";
    }
    svg << "<circle cx=\"" << px(track.front()) << "\" cy=\"" << py(track.front())
        << "\" r=\"4\" fill=\"" << colour << "\"/>\n";
    svg << "<text x=\"" << px(track.front()) << "\" y=\"" << py(track.front())
        << "\" dx=\"6\" dy=\"-6\" font-family=\"sans-serif\" font-size=\"14\" fill=\"" << colour
        << "\">" << label(static_cast<std::size_t>(i)) << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

} // namespace confspace
