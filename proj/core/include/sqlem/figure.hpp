#pragma once

// Deterministic SVG renderings of the squircle/lemniscate construction.
// Both variants draw the full squircle and both lemniscate lobes in a
// fixed y-up viewport [-1.3, 1.3]^2, shade the sector swept between O, B'
// and the x-axis (replicated through the eight-fold symmetry of the
// picture), and emphasize one arc in bold:
//   fig1 — the lemniscate arc from the vertex C = (1, 0) to P = (r(beta)
//          cos beta, r(beta) sin beta), i.e. theta in [0, beta(alpha)];
//   fig3 — the radial lemniscate arc from the origin O out to D, i.e.
//          r in [0, |OD|].
// Output is pure SVG 1.1 text, byte-identical across runs.

#include <string>

#include "sqlem/numerics.hpp"

namespace sqlem {

enum class FigureVariant { fig1, fig3 };

/// Parameters of a rendering; alpha must lie in [0, pi/4] and both pixel
/// dimensions must be at least 100.
struct FigureSpec {
  double alpha = 0.5;
  FigureVariant variant = FigureVariant::fig1;
  int width_px = 800;
  int height_px = 800;
};

/// Render the figure as an SVG document string; throws DomainError when
/// the spec is out of range.
std::string render_figure_svg(const FigureSpec& spec, ToleranceConfig tol = {});

}  // namespace sqlem
