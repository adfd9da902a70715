#include "braidkit/properties.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "braidkit/error.hpp"

namespace braidkit {

Properties& props() {
  static Properties p;
  return p;
}

void reset_properties() { props() = Properties{}; }

const std::vector<std::string>& property_keys() {
  static const std::vector<std::string> keys = {
      "GenRotDir",   "GenLoopActDir", "GenPlotOverUnder",
      "BraidAbsTol", "BraidPlotDir",  "LoopCoordsBasePoint"};
  return keys;
}

std::string to_string(PlotDir d) {
  switch (d) {
    case PlotDir::bottom_top: return "bt";
    case PlotDir::top_bottom: return "tb";
    case PlotDir::left_right: return "lr";
    case PlotDir::right_left: return "rl";
  }
  return "bt";
}

PlotDir parse_plot_dir(std::string_view s) {
  if (s == "bt") return PlotDir::bottom_top;
  if (s == "tb") return PlotDir::top_bottom;
  if (s == "lr") return PlotDir::left_right;
  if (s == "rl") return PlotDir::right_left;
  throw Error("BraidPlotDir must be one of bt, tb, lr, rl.");
}

namespace {

std::string format_tol(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

bool parse_bool(std::string_view s) {
  if (s == "1" || s == "true") return true;
  if (s == "0" || s == "false") return false;
  throw Error("Expected a boolean (0/1/true/false), got '" + std::string(s) +
              "'.");
}

}  // namespace

std::string get_property(std::string_view key) {
  const Properties& p = props();
  if (key == "GenRotDir") return std::to_string(p.gen_rot_dir);
  if (key == "GenLoopActDir")
    return p.gen_loop_act_dir == LoopActDir::left_to_right ? "lr" : "rl";
  if (key == "GenPlotOverUnder") return p.gen_plot_over_under ? "1" : "0";
  if (key == "BraidAbsTol") return format_tol(p.braid_abs_tol);
  if (key == "BraidPlotDir") return to_string(p.braid_plot_dir);
  if (key == "LoopCoordsBasePoint") return p.loop_coords_base_point;
  throw Error("Unknown property '" + std::string(key) + "'.");
}

void set_property(std::string_view key, std::string_view value) {
  Properties& p = props();
  if (key == "GenRotDir") {
    if (value == "1" || value == "+1") {
      p.gen_rot_dir = 1;
    } else if (value == "-1") {
      p.gen_rot_dir = -1;
    } else {
      throw Error("GenRotDir must be 1 or -1.");
    }
  } else if (key == "GenLoopActDir") {
    if (value == "lr") {
      p.gen_loop_act_dir = LoopActDir::left_to_right;
    } else if (value == "rl") {
      p.gen_loop_act_dir = LoopActDir::right_to_left;
    } else {
      throw Error("GenLoopActDir must be 'lr' or 'rl'.");
    }
  } else if (key == "GenPlotOverUnder") {
    p.gen_plot_over_under = parse_bool(value);
  } else if (key == "BraidAbsTol") {
    std::istringstream in{std::string(value)};
    double tol = -1;
    if (!(in >> tol) || !in.eof() || tol < 0)
      throw Error("BraidAbsTol must be a nonnegative number.");
    p.braid_abs_tol = tol;
  } else if (key == "BraidPlotDir") {
    p.braid_plot_dir = parse_plot_dir(value);
  } else if (key == "LoopCoordsBasePoint") {
    if (value != "right")
      throw Error("LoopCoordsBasePoint only supports 'right'.");
    p.loop_coords_base_point = "right";
  } else {
    throw Error("Unknown property '" + std::string(key) + "'.");
  }
}

void load_properties_from_env() {
  for (const auto& key : property_keys()) {
    const std::string var = "BRAIDKIT_" + key;
    if (const char* v = std::getenv(var.c_str())) set_property(key, v);
  }
}

}  // namespace braidkit
