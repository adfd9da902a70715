#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <regex>
#include <set>
#include <sstream>

#include "braidkit/action.hpp"
#include "braidkit/cli.hpp"
#include "braidkit/json_io.hpp"
#include "braidkit/loop.hpp"
#include "braidkit/properties.hpp"
#include "braidkit/render.hpp"
#include "support.hpp"

using namespace braidkit;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string squash(const std::string& s) {
  std::istringstream in(s);
  std::string tok, r;
  while (in >> tok) r += (r.empty() ? "" : " ") + tok;
  return r;
}

std::string golden(std::vector<std::string> args) {
  const Run r = run(std::move(args));
  CHECK(r.code == 0);
  return squash(r.out);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

using Pt = std::pair<double, double>;

std::vector<std::vector<Pt>> arcs_of(const std::string& svg) {
  std::vector<std::vector<Pt>> out;
  const std::regex re("<polyline points=\"([^\"]*)\" class=\"arc\"");
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), re); it != std::sregex_iterator(); ++it) {
    std::vector<Pt> pl;
    std::istringstream in((*it)[1].str());
    std::string xy;
    while (in >> xy) {
      const auto c = xy.find(',');
      pl.emplace_back(std::stod(xy.substr(0, c)), std::stod(xy.substr(c + 1)));
    }
    out.push_back(pl);
  }
  return out;
}

// Reads the intersection numbers back from a loop drawing: distinct
// crossing heights on the vertical line through each inner puncture, split
// by the axis, and strict crossings of the line halfway between punctures.
IntersectionNumbers read_back(const std::string& svg, int punctures, double axis) {
  const auto pls = arcs_of(svg);
  IntersectionNumbers in;
  for (int k = 2; k < punctures; ++k) {
    const double X = 100.0 * k;
    std::set<long> above, below;
    for (const auto& pl : pls)
      for (const auto& [x, y] : pl)
        if (std::abs(x - X) < 1e-9) (y < axis ? above : below).insert(std::lround(y * 1000));
    in.mu.emplace_back(static_cast<long>(above.size()));
    in.mu.emplace_back(static_cast<long>(below.size()));
  }
  for (int k = 1; k < punctures; ++k) {
    const double X = 100.0 * k + 50;
    long c = 0;
    for (const auto& pl : pls)
      for (std::size_t i = 0; i + 1 < pl.size(); ++i)
        if ((pl[i].first - X) * (pl[i + 1].first - X) < 0) ++c;
    in.nu.emplace_back(c);
  }
  return in;
}

double axis_of(const std::string& svg) {
  std::smatch m;
  REQUIRE(std::regex_search(svg, m, std::regex("<circle class=\"puncture[^\"]*\" cx=\"[^\"]*\" cy=\"([^\"]*)\"")));
  return std::stod(m[1].str());
}

}  // namespace

TEST_CASE("golden outputs") {
  CHECK(golden({"braid", "compact", "1 -2 2 -1"}) == "< e >");
  CHECK(golden({"entropy", "1 2 -3"}) == "0.8314");
  CHECK(golden({"prop", "get", "BraidAbsTol"}) == "1e-10");
  CHECK(golden({"braid", "make", "1 -2"}) == "< 1 -2 >");
  CHECK(golden({"braid", "mul", "1 -2", "1 2"}) == "< 1 -2 1 2 >");
  CHECK(golden({"braid", "inverse", "1 -2"}) == "< 2 -1 >");
  CHECK(golden({"braid", "power", "1 -2", "5"}) == "< 1 -2 1 -2 1 -2 1 -2 1 -2 >");
  CHECK(golden({"braid", "equals", "1 -2", "1 -2 2 1 2 -1 -2 -1"}) == "1");
  CHECK(golden({"braid", "istrivial", "1 -2 2 -1"}) == "1");
  CHECK(golden({"braid", "perm", "1 2 -3"}) == "2 3 4 1");
  CHECK(golden({"braid", "writhe", "1 2 -3"}) == "1");
  CHECK(golden({"braid", "subbraid", "1 2 -3", "--keep", "1 2 4"}) == "< 1 -2 >");
  CHECK(golden({"braid", "tensor", "1 2 -3", "1 -2"}) == "< 1 2 -3 5 -6 >");
  CHECK(golden({"braid", "halftwist", "--n", "5"}) == "< 4 3 2 1 4 3 2 4 3 4 >");
  CHECK(golden({"loop", "intersec", "-1 1 -2 0 -1 0"}) == "2 0 1 3 4 0 2 2 4 4");
  CHECK(golden({"loop", "minlength", "-1 1 -2 0; 1 -2 3 4"}) == "14 34");
  CHECK(golden({"loop", "intaxis", "-1 1 -2 0 -1 0"}) == "12");
  CHECK(golden({"loop", "canonical", "--n", "5"}) == "(( 0 0 0 0 -1 -1 -1 -1 ))*");
  CHECK(golden({"act", "-1", "-1 1 -2 0 -1 0"}) == "(( -1 1 -2 1 -1 0 ))");
  CHECK(golden({"act", "1 -2", "-1 1 -2 0; 1 -2 3 4"}) == "(( 2 1 -2 1 )) (( 5 -2 -3 11 ))");
  CHECK(golden({"act", "--matrix", "1 -2", "0 -1"}) == "(( 1 -1 )) 1 -1 0 1");
  CHECK(golden({"loopcoords", "1 2 3 -4"}) == "(( 0 0 3 -1 -1 -1 -4 3 ))*");
  CHECK(golden({"cycle", "1 2 3"}).starts_with("period = 4"));
  CHECK(golden({"cycle", "1 -2", "--loop", "1 1"}) == "period = 1 preperiod = 1 2 -1 -1 1");
  CHECK(golden({"charpoly", "2 -1; -1 1"}) == "x^2 - 3*x + 1");
  CHECK(golden({"entropy", "1 -2"}) == "0.9624");
  CHECK(golden({"entropy", "1 2 3 -4"}) == "0.7672");
  CHECK(golden({"entropy", "--annular", "1 -2"}) == "1.7627");
  for (const auto& [fx, h] : std::vector<std::pair<std::string, std::string>>{
           {"taffy3", "1.7627"}, {"taffy4", "1.7627"}, {"taffy6", "2.6339"}})
    CHECK(golden({"entropy", "--fixture", fx}) == h);
  CHECK(golden({"complexity", "1 -2"}) == "2.0000");
  CHECK(golden({"complexity", "1 2"}) == "1.5850");
  CHECK(golden({"burau", "1 -2", "--at", "-1"}) == "1 -1 -1 2");
  CHECK(golden({"burau", "1 -2", "--symbolic"}) == "[ - t^(+1), + t^(+1) ] [ - 1, + 1 - t^(-1) ]");
  CHECK(golden({"alexander", "1 1 1"}) == "+ z^(+2) - z^(+1) + 1");
  CHECK(golden({"alexander", "1 -2 1 -2"}) == "- 1 + 3*z^(-1) - z^(-2)");
  CHECK(golden({"alexander", "1 -2 1 -2", "--centered"}) == "- z^(+1) + 3 - z^(-1)");
  CHECK(golden({"alexander", "1 1"}) == "- z^(+1) + 1");
}

TEST_CASE("entropy warning and error messages") {
  const Run r = run({"entropy", "1 2"});
  CHECK(r.code == 0);
  CHECK(squash(r.out) == "0.0000");
  CHECK(r.err.find("Returning zero entropy") != std::string::npos);

  const Run hopf = run({"alexander", "1 1", "--centered"});
  CHECK(hopf.code == 1);
  CHECK(hopf.err.find("Polynomial with fractional powers.") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"braid", "power", "1 -2"}).code == 2);
  CHECK(run({"entropy", "1 2", "--maxit", "many"}).code == 2);
  CHECK(run({"braid", "make", "1 x"}).code == 1);
  CHECK(run({"act", "1 2 3 4 5 6", "0 -1"}).code == 1);
  CHECK(run({"cycle", "1 2 3", "--maxit", "2"}).code == 1);
  CHECK(run({"fromdata", "/nonexistent/file.csv"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("JSON output round-trips") {
  const auto parse = [](const std::vector<std::string>& args) {
    const Run r = run(args);
    REQUIRE(r.code == 0);
    return json::parse(r.out);
  };
  CHECK(lexeq(braid_from_json(parse({"--json", "braid", "make", "1 -2"})), Braid({1, -2})));
  CHECK(loop_from_json(parse({"--json", "loopcoords", "1 2 3 -4"})) == loopcoords(Braid({1, 2, 3, -4})));
  const auto acted = parse({"--json", "act", "--matrix", "1 -2", "0 -1"});
  CHECK(matrix_from_json(acted["matrix"]) == IntMatrix::from_rows({{1, -1}, {0, 1}}));
  CHECK(to_string(loop_from_json(acted["loop"])) == "(( 1 -1 ))");
  CHECK(laurent_from_json(parse({"--json", "alexander", "1 -2 1 -2"})) ==
        LaurentPoly::from_ints(-2, {-1, 3, -1}));
  const auto cyc = parse({"--json", "cycle", "1 -2", "--loop", "1 1"});
  CHECK(cyc["period"] == 1);
  CHECK(matrix_from_json(cyc["matrices"][0]) == IntMatrix::from_rows({{2, -1}, {-1, 1}}));
  const auto ent = parse({"--json", "entropy", "1 2 -3"});
  CHECK(ent["converged"] == true);
  CHECK(std::abs(ent["value"].get<double>() - 0.8314) <= 1e-3);

  // Library values survive a trip through JSON, including big integers.
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const Braid b(testsupport::random_word(rng, 5, 60), 5);
    const Loop l = act(power(b, 8), canonical_loop(5, true));
    CHECK(loop_from_json(json::parse(to_json(l).dump())) == l);
    CHECK(lexeq(braid_from_json(json::parse(to_json(b).dump())), b));
  }
  const Int big("123456789012345678901234567890");
  CHECK(int_from_json(int_to_json(big)) == big);
  CHECK(int_to_json(big).is_string());
  CHECK(int_to_json(Int(-7)).is_number_integer());

  const auto ts = testsupport::diagram_trajectories({1, -2}, 3);
  const auto ts2 = trajectories_from_json(json::parse(to_json(ts).dump()));
  CHECK(ts2.times == ts.times);
  CHECK(ts2.positions == ts.positions);
  const DataBraid db(Braid({1, -2}), {0.5, 1.5});
  CHECK(db_equals(databraid_from_json(json::parse(to_json(db).dump())), db));
  const auto ab = braid_from_json(to_json(AnnularBraid({1, -2})));
  CHECK(lexeq(ab, to_braid(AnnularBraid({1, -2}))));
}

TEST_CASE("trajectory commands") {
  const auto dir = std::filesystem::temp_directory_path() / "braidkit_cli_test";
  std::filesystem::create_directories(dir);
  const auto csv = dir / "swap.csv";
  {
    std::ofstream f(csv);
    write_trajectories_csv(f, testsupport::diagram_trajectories({1, 2, -1}, 3));
  }
  CHECK(golden({"fromdata", csv.string()}) == "< 1 2 -1 >");
  CHECK(golden({"fromdata", csv.string(), "--closure", "mindist"}) == "< 1 2 -1 >");
  CHECK(golden({"fromdata", csv.string(), "--threads", "4"}) == "< 1 2 -1 >");
  const Run db = run({"fromdata", csv.string(), "--databraid"});
  CHECK(db.code == 0);
  CHECK(db.out.find("tcross:") != std::string::npos);
  const Run bad = run({"fromdata", csv.string(), "--angle", "1.5707963267948966"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("have a coincident projection.  Try changing the projection angle.") !=
        std::string::npos);
  const Run f = run({"ftbe", "--word", "1 -2", "--tcross", "0.25 1.25"});
  CHECK(f.code == 0);
  CHECK(std::abs(std::stod(f.out) - std::log(4.0)) <= 5e-5);
  std::filesystem::remove_all(dir);
}

TEST_CASE("properties on the command line") {
  CHECK(golden({"--prop", "BraidAbsTol=1e-8", "prop", "get", "BraidAbsTol"}) == "1e-08");
  // Each invocation starts from the defaults again.
  CHECK(golden({"prop", "get", "BraidAbsTol"}) == "1e-10");
  const std::string lr = golden({"act", "1 2", "1 -2 3 4"});
  const std::string rl = golden({"--prop", "GenLoopActDir=rl", "act", "1 2", "1 -2 3 4"});
  CHECK(rl == golden({"act", "2 1", "1 -2 3 4"}));
  CHECK(lr != rl);
  CHECK(run({"--prop", "Nonsense=1", "prop", "list"}).code != 0);
  CHECK(run({"--prop", "GenRotDir=3", "prop", "list"}).code != 0);

  ::setenv("BRAIDKIT_BraidPlotDir", "lr", 1);
  CHECK(golden({"prop", "get", "BraidPlotDir"}) == "lr");
  CHECK(golden({"--prop", "BraidPlotDir=tb", "prop", "get", "BraidPlotDir"}) == "tb");
  ::unsetenv("BRAIDKIT_BraidPlotDir");
  CHECK(golden({"prop", "get", "BraidPlotDir"}) == "bt");
  reset_properties();
}

TEST_CASE("braid rendering") {
  const auto count = [](const std::string& svg, const std::string& needle) {
    std::size_t n = 0;
    for (auto p = svg.find(needle); p != std::string::npos; p = svg.find(needle, p + 1)) ++n;
    return n;
  };
  const RenderSpec spec;
  const std::string id = render_braid_svg(Braid::identity(4), spec);
  CHECK(count(id, "class=\"crossing\"") == 0);
  CHECK(count(id, "<polyline") == 4);

  const std::string two = render_braid_svg(Braid({1, -2}), spec);
  CHECK(count(two, "class=\"crossing\"") == 2);
  const auto first = two.find("data-pos=\"1\" data-sign=\"1\"");
  const auto second = two.find("data-pos=\"2\" data-sign=\"-1\"");
  CHECK(first != std::string::npos);
  CHECK(second != std::string::npos);
  CHECK(first < second);

  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 30; ++trial) {
    const Braid b(testsupport::random_word(rng, 5, rng() % 20), 5);
    for (auto d : {PlotDir::bottom_top, PlotDir::top_bottom, PlotDir::left_right, PlotDir::right_left}) {
      RenderSpec s;
      s.direction = d;
      const std::string svg = render_braid_svg(b, s);
      CHECK(count(svg, "class=\"crossing\"") == b.length());
      CHECK(svg == render_braid_svg(b, s));
    }
  }

  const auto dir = std::filesystem::temp_directory_path() / "braidkit_render_test";
  std::filesystem::create_directories(dir);
  const auto out = dir / "b.svg";
  CHECK(run({"render", "1 -2", "--out", out.string()}).code == 0);
  CHECK(slurp(out) == render_braid_svg(Braid({1, -2}), RenderSpec::from_properties()));
  CHECK(run({"render", "1 -2", "--out", (dir / "missing" / "b.svg").string()}).code == 1);
  std::filesystem::remove_all(dir);
}

TEST_CASE("loop rendering matches intersection numbers") {
  const RenderSpec spec;
  const Loop fix = testsupport::loop_of({-1, 1, -2, 0, -1, 0});
  const std::string svg = render_loop_svg(fix, spec);
  const auto back = read_back(svg, fix.totaln(), axis_of(svg));
  const auto want = intersec(fix);
  CHECK(back.mu == want.mu);
  CHECK(back.nu == want.nu);
  CHECK(svg == render_loop_svg(fix, spec));

  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 5);
    const Loop l = testsupport::random_loop(rng, n, trial % 2 ? 4 : 15);
    const std::string s = render_loop_svg(l, spec);
    const auto r = read_back(s, l.totaln(), axis_of(s));
    const auto w = intersec(l);
    CHECK(r.mu == w.mu);
    CHECK(r.nu == w.nu);
  }
  const Loop bp = canonical_loop(4, true);
  const std::string sb = render_loop_svg(bp, spec);
  CHECK(sb.find("puncture basepoint") != std::string::npos);
}
