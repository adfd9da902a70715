#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace braidkit {

enum class LoopActDir { left_to_right, right_to_left };
enum class PlotDir { bottom_top, top_bottom, left_right, right_left };

// Process-wide conventions.  Mutate only while no computation is running.
struct Properties {
  int gen_rot_dir = 1;
  LoopActDir gen_loop_act_dir = LoopActDir::left_to_right;
  bool gen_plot_over_under = true;
  double braid_abs_tol = 1e-10;
  PlotDir braid_plot_dir = PlotDir::bottom_top;
  std::string loop_coords_base_point = "right";
};

Properties& props();
void reset_properties();

// Keys use the display names: GenRotDir, GenLoopActDir, GenPlotOverUnder,
// BraidAbsTol, BraidPlotDir, LoopCoordsBasePoint.
const std::vector<std::string>& property_keys();
std::string get_property(std::string_view key);
void set_property(std::string_view key, std::string_view value);

// Applies BRAIDKIT_<Key> environment variables, e.g. BRAIDKIT_BraidAbsTol.
void load_properties_from_env();

std::string to_string(PlotDir d);
PlotDir parse_plot_dir(std::string_view s);

}  // namespace braidkit
