#pragma once

#include <string>

#include "braidkit/braid.hpp"
#include "braidkit/loop.hpp"
#include "braidkit/properties.hpp"

namespace braidkit {

struct RenderSpec {
  PlotDir direction = PlotDir::bottom_top;
  bool over_under = true;  // sigma_i drawn with the left strand on top
  double width = 0;        // 0 picks a size from the content
  double height = 0;
  std::string stroke = "#1f3a93";
  double stroke_width = 3.0;

  static RenderSpec from_properties();
};

/// Braid diagram, one generator per time slot.  Each crossing is a
/// <g class="crossing" data-pos=".." data-sign=".."> group.
std::string render_braid_svg(const Braid& b, const RenderSpec& spec);

/// Loop drawn as arcs between the vertical lines through the punctures.
/// Puncture k sits at x = 100 k on the axis; every arc is one polyline, so
/// crossings with vertical lines can be read back from the document.
std::string render_loop_svg(const Loop& l, const RenderSpec& spec);

/// Writes text to path, throwing Error when the file cannot be written.
void write_file(const std::string& path, const std::string& text);

}  // namespace braidkit
