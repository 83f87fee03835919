#ifndef CONFSPACE_SVG_PLOT_HPP
#define CONFSPACE_SVG_PLOT_HPP

#include "confspace/covering.hpp"

#include <string>
#include <vector>

namespace confspace {

struct PlotSpec
{
  enum class Projection
  {
    Axes,
    Pca,
  };

  Projection projection = Projection::Axes;
  /// Ambient coordinates used by Projection::Axes.
  int axis_x = 0;
  int axis_y = 1;
  /// Plot every stride-th sample (the last one is always kept).
  std::size_t stride = 1;
  int width = 480;
  int height = 480;
  /// Stroke colour per point index; cycled, defaults to a fixed palette.
  std::vector<std::string> strokes;
};

/// The 2 x d projection matrix the spec selects for this path. Throws
/// BadIndices for axes outside [0, d).
Eigen::Matrix<double, 2, Eigen::Dynamic> projection_matrix(const PathSamples& path,
                                                           const PlotSpec& spec);

/**
 * SVG 1.1 drawing of a path in X^n: one polyline per point index in the
 * chosen plane, its start marked and labelled A, B, C, ... and an arrowhead
 * at its end. A point that never moves is drawn as a dot alone. Output is a
 * pure function of the inputs.
 */
std::string render_svg(const PathSamples& path, const PlotSpec& spec = {});

} // namespace confspace

#endif // CONFSPACE_SVG_PLOT_HPP
