#include "braidkit/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <random>
#include <ostream>
#include <sstream>

#include "braidkit/action.hpp"
#include "braidkit/burau.hpp"
#include "braidkit/error.hpp"
#include "braidkit/json_io.hpp"
#include "braidkit/properties.hpp"
#include "braidkit/render.hpp"
#include "braidkit/spectra.hpp"
#include "braidkit/trajectory.hpp"

namespace braidkit {

namespace {

const char* kEntropyWarning =
    "Warning: Failed to converge to requested tolerance; braid is likely "
    "finite-order or has low entropy.  Returning zero entropy.";

const std::map<std::string, std::pair<std::vector<int>, int>>& fixtures() {
  static const std::map<std::string, std::pair<std::vector<int>, int>> f = {
      {"taffy3", {{-2, 1, 1, -2}, 3}},
      {"taffy4", {{1, 3, 2, 2, 1, 3}, 4}},
      {"taffy6", {{3, 2, 1, 2, 4, 5, 4, 3, 3, 2, 1, 2, 5, 4, 5, 3}, 6}},
      {"taffy6bad", {{2, 1, 2, 4, 5, 4, 3, 3, 2, 1, 2, 4, 5, 4}, 6}},
  };
  return f;
}

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BraidArg {
  std::string word;
  int n = 0;
  bool annular = false;
  std::string fixture;

  void add(CLI::App* app, const std::string& name = "word",
           const std::string& nflag = "--n") {
    app->add_option(name, word, "Generator indices, e.g. \"1 -2\"");
    app->add_option(nflag, n, "Number of strands");
    app->add_flag("--annular", annular, "Read the word as an annular braid");
    app->add_option("--fixture", fixture, "taffy3, taffy4, taffy6 or taffy6bad");
  }

  bool given() const { return !fixture.empty() || !word.empty(); }

  Braid build(int default_n = 0) const {
    if (!fixture.empty()) {
      auto it = fixtures().find(fixture);
      if (it == fixtures().end())
        throw UsageError("Unknown fixture '" + fixture + "'.");
      return Braid(it->second.first, it->second.second);
    }
    const auto w = parse_word(word);
    if (annular)
      return to_braid(n > 0 ? AnnularBraid(w, n - 1) : AnnularBraid(w));
    if (n > 0) return Braid(w, n);
    if (default_n > 0) {
      Braid b(w);
      return Braid(w, std::max(default_n, b.n()));
    }
    return Braid(w);
  }
};

std::vector<Int> parse_ints(const std::string& s) {
  std::string t = s;
  for (char& c : t)
    if (c == ',' || c == '[' || c == ']' || c == '(' || c == ')') c = ' ';
  std::istringstream in(t);
  std::vector<Int> v;
  std::string tok;
  while (in >> tok) {
    Int x;
    if (x.set_str(tok[0] == '+' ? tok.substr(1) : tok, 10) != 0)
      throw Error("Cannot parse integer '" + tok + "'.");
    v.push_back(x);
  }
  return v;
}

// Rows separated by ';'.
std::vector<std::string> split_rows(const std::string& s) {
  std::vector<std::string> rows;
  std::stringstream ss(s);
  std::string row;
  while (std::getline(ss, row, ';'))
    if (row.find_first_not_of(" \t") != std::string::npos) rows.push_back(row);
  return rows;
}

std::vector<Loop> parse_loops(const std::string& s, bool basepoint) {
  std::vector<Loop> out;
  for (const auto& row : split_rows(s)) out.emplace_back(parse_ints(row), basepoint);
  if (out.empty()) throw Error("No loop coordinates given.");
  return out;
}

IntMatrix parse_matrix(const std::string& s) {
  std::vector<std::vector<Int>> rows;
  for (const auto& r : split_rows(s)) rows.push_back(parse_ints(r));
  const std::size_t d = rows.size();
  std::vector<Int> e;
  for (auto& r : rows) {
    if (r.size() != d) throw Error("Matrix must be square.");
    e.insert(e.end(), r.begin(), r.end());
  }
  return IntMatrix(d, std::move(e));
}

Rational parse_rational(const std::string& s) {
  const auto dot = s.find('.');
  const auto e = s.find_first_of("eE");
  if (e != std::string::npos) throw Error("Use a fraction or decimal for --at.");
  Rational r;
  try {
    if (dot == std::string::npos) {
      r = Rational(s);
    } else {
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      std::string den = "1" + std::string(s.size() - dot - 1, '0');
      r = Rational(Int(digits), Int(den));
    }
  } catch (const std::invalid_argument&) {
    throw Error("Cannot parse '" + s + "' as a number.");
  }
  r.canonicalize();
  if (sgn(r.get_den()) == 0) throw Error("Zero denominator.");
  return r;
}

std::string fixed4(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

std::string join(const std::vector<int>& v) {
  std::ostringstream os;
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? " " : "") << v[k];
  return os.str();
}

std::string join(const std::vector<Int>& v) {
  std::ostringstream os;
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? " " : "") << v[k];
  return os.str();
}

std::string poly_string(const std::vector<Int>& c) {
  const std::size_t deg = c.size() - 1;
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (sgn(c[k]) == 0) continue;
    const std::size_t e = deg - k;
    const Int mag = abs(c[k]);
    os << (first ? (sgn(c[k]) < 0 ? "-" : "") : (sgn(c[k]) < 0 ? " - " : " + "));
    first = false;
    if (e == 0 || mag != 1) os << mag << (e ? "*" : "");
    if (e > 0) os << 'x' << (e > 1 ? "^" + std::to_string(e) : "");
  }
  return first ? "0" : os.str();
}

bool ends_with(const std::string& s, const std::string& suf) {
  return s.size() >= suf.size() && s.compare(s.size() - suf.size(), suf.size(), suf) == 0;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("Cannot open '" + path + "'.");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error("Invalid JSON in '" + path + "': " + e.what());
  }
}

TrajectorySet read_trajectories(const std::string& path) {
  if (ends_with(path, ".json")) return trajectories_from_json(read_json_file(path));
  std::ifstream in(path);
  if (!in) throw Error("Cannot open '" + path + "'.");
  return load_trajectories_csv(in);
}

struct Cli {
  std::ostream& out;
  std::ostream& err;
  bool as_json = false;

  void emit(const json& j) { out << j.dump() << '\n'; }
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  Cli io{out, err};
  CLI::App app{"Braids, loops and their dynamics", "braidkit"};
  app.require_subcommand(1);
  std::vector<std::string> prop_overrides;
  app.add_flag("--json", io.as_json, "Structured output");
  app.add_option("--prop", prop_overrides, "Set a property for this run, KEY=VALUE")
      ->allow_extra_args(false);

  // braid ...
  auto* braid = app.add_subcommand("braid", "Braid algebra");
  braid->require_subcommand(1);
  BraidArg b1, b2;
  long power_k = 0;
  std::string keep;
  int rand_n = 0, rand_len = 0, twist_n = 0;
  std::uint64_t seed = 0;
  bool seed_given = false;

  auto* b_make = braid->add_subcommand("make", "Build and print a braid");
  b1.add(b_make);
  auto* b_mul = braid->add_subcommand("mul", "Product a*b");
  b_mul->add_option("a", b1.word)->required();
  b_mul->add_option("b", b2.word)->required();
  b_mul->add_option("--n", b1.n, "Number of strands");
  auto* b_inv = braid->add_subcommand("inverse", "Inverse");
  b1.add(b_inv);
  auto* b_pow = braid->add_subcommand("power", "Integer power");
  b_pow->add_option("word", b1.word)->required();
  b_pow->add_option("k", power_k)->required();
  b_pow->add_option("--n", b1.n, "Number of strands");
  auto* b_compact = braid->add_subcommand("compact", "Shorten the word");
  b1.add(b_compact);
  auto* b_eq = braid->add_subcommand("equals", "Group equality");
  b_eq->add_option("a", b1.word)->required();
  b_eq->add_option("b", b2.word)->required();
  b_eq->add_option("--n", b1.n, "Number of strands");
  auto* b_triv = braid->add_subcommand("istrivial", "Is the braid the identity");
  b1.add(b_triv);
  auto* b_perm = braid->add_subcommand("perm", "Permutation of the strands");
  b1.add(b_perm);
  auto* b_pure = braid->add_subcommand("ispure", "Is the permutation trivial");
  b1.add(b_pure);
  auto* b_writhe = braid->add_subcommand("writhe", "Sum of exponents");
  b1.add(b_writhe);
  auto* b_sub = braid->add_subcommand("subbraid", "Keep only some strands");
  b1.add(b_sub);
  b_sub->add_option("--keep", keep, "Strands to keep, e.g. \"1 2 4\"")->required();
  auto* b_tensor = braid->add_subcommand("tensor", "Side-by-side product");
  b_tensor->add_option("a", b1.word)->required();
  b_tensor->add_option("b", b2.word)->required();
  b_tensor->add_option("--na", b1.n, "Strands of a");
  b_tensor->add_option("--nb", b2.n, "Strands of b");
  auto* b_rand = braid->add_subcommand("random", "Random word");
  b_rand->add_option("--n", rand_n, "Number of strands")->required();
  b_rand->add_option("--length", rand_len, "Word length")->required();
  b_rand->add_option("--seed", seed, "PRNG seed");
  auto* b_half = braid->add_subcommand("halftwist", "Half twist");
  b_half->add_option("--n", twist_n, "Number of strands")->required();
  auto* b_full = braid->add_subcommand("fulltwist", "Full twist");
  b_full->add_option("--n", twist_n, "Number of strands")->required();
  auto* b_ann = braid->add_subcommand("annular", "Convert an annular braid");
  b_ann->add_option("word", b1.word)->required();
  int nann = 0;
  b_ann->add_option("--nann", nann, "Number of moving punctures");

  // loop ...
  auto* loop = app.add_subcommand("loop", "Loops in Dynnikov coordinates");
  loop->require_subcommand(1);
  std::string coords;
  bool basepoint = false, no_basepoint = false;
  int loop_n = 0;
  auto add_coords = [&](CLI::App* a) {
    a->add_option("coords", coords, "Coordinates a then b; rows separated by ';'")
        ->required();
    a->add_flag("--basepoint", basepoint, "Loop has a basepoint puncture");
  };
  auto* l_make = loop->add_subcommand("make", "Print a loop");
  add_coords(l_make);
  auto* l_can = loop->add_subcommand("canonical", "Canonical loop");
  l_can->add_option("--n", loop_n, "Number of punctures")->required();
  l_can->add_flag("--no-basepoint", no_basepoint, "Omit the basepoint");
  auto* l_int = loop->add_subcommand("intersec", "Intersection numbers");
  add_coords(l_int);
  auto* l_min = loop->add_subcommand("minlength", "Minimal length");
  add_coords(l_min);
  auto* l_ax = loop->add_subcommand("intaxis", "Crossings with the real axis");
  add_coords(l_ax);

  // act
  auto* act_cmd = app.add_subcommand("act", "Act on loops with a braid");
  b1.add(act_cmd);
  act_cmd->add_option("coords", coords, "Loop coordinates; rows separated by ';'")
      ->required();
  act_cmd->add_flag("--basepoint", basepoint, "Loop has a basepoint puncture");
  bool with_matrix = false;
  act_cmd->add_flag("--matrix", with_matrix, "Also print the effective linear action");

  auto* lc = app.add_subcommand("loopcoords", "Normal form of a braid");
  b1.add(lc);

  auto* cyc = app.add_subcommand("cycle", "Limit cycle of the effective action");
  b1.add(cyc);
  std::string cycle_loop;
  bool per_iter = false;
  int maxit = 1000;
  cyc->add_option("--loop", cycle_loop, "Initial loop (default: canonical basepoint loop)");
  cyc->add_flag("--basepoint", basepoint, "The --loop has a basepoint");
  cyc->add_flag("--iter", per_iter, "One matrix per iterate instead of the product");
  cyc->add_option("--maxit", maxit, "Iteration limit");

  auto* cp = app.add_subcommand("charpoly", "Characteristic polynomial");
  std::string matrix_text, matrix_file;
  cp->add_option("matrix", matrix_text, "Rows separated by ';', e.g. \"2 -1; -1 1\"");
  cp->add_option("--file", matrix_file, "Matrix JSON file");

  auto* ent = app.add_subcommand("entropy", "Topological entropy estimate");
  b1.add(ent);
  double tol = 1e-6;
  ent->add_option("--tol", tol, "Convergence tolerance");
  ent->add_option("--maxit", maxit, "Iteration limit");

  auto* cx = app.add_subcommand("complexity", "Geometric complexity");
  b1.add(cx);

  auto* bur = app.add_subcommand("burau", "Reduced Burau matrix");
  b1.add(bur);
  std::string at;
  bool symbolic = false;
  auto* at_opt = bur->add_option("--at", at, "Evaluate at t (integer, fraction or decimal)");
  bur->add_flag("--symbolic", symbolic, "Laurent polynomial entries (default)")
      ->excludes(at_opt);

  auto* alex = app.add_subcommand("alexander", "Alexander polynomial of the closure");
  b1.add(alex);
  bool centered = false;
  alex->add_flag("--centered", centered, "Symmetrize about z^0");

  auto* fd = app.add_subcommand("fromdata", "Braid from trajectory data (CSV or JSON)");
  std::string data_file, closure_name = "none";
  double angle = 0.0;
  bool as_databraid = false;
  unsigned threads = 1;
  fd->add_option("file", data_file, "t,id,x,y CSV or trajectory JSON")->required();
  fd->add_option("--angle", angle, "Projection angle in radians");
  fd->add_option("--closure", closure_name, "default, mindist or none")
      ->check(CLI::IsMember({"default", "mindist", "none"}));
  fd->add_flag("--databraid", as_databraid, "Include crossing times");
  fd->add_option("--threads", threads, "Threads for crossing detection");

  auto* ft = app.add_subcommand("ftbe", "Finite-time braiding exponent");
  std::string ft_file, ft_times, norm_name = "intaxis";
  double T = 0;
  ft->add_option("file", ft_file, "Databraid JSON, or trajectory CSV/JSON");
  b1.add(ft, "--word");
  ft->add_option("--tcross", ft_times, "Crossing times for --word");
  auto* T_opt = ft->add_option("--T", T, "Time span (default: first to last crossing)");
  ft->add_option("--norm", norm_name, "intaxis or minlength")
      ->check(CLI::IsMember({"intaxis", "minlength"}));
  ft->add_option("--angle", angle, "Projection angle for trajectory input");

  auto* rd = app.add_subcommand("render", "SVG of a braid diagram or a loop");
  b1.add(rd);
  std::string out_path, render_loop, dir;
  rd->add_option("--loop", render_loop, "Draw this loop instead of a braid");
  rd->add_flag("--basepoint", basepoint, "The --loop has a basepoint");
  rd->add_option("--out", out_path, "Output file (default: stdout)");
  rd->add_option("--dir", dir, "bt, tb, lr or rl")->check(CLI::IsMember({"bt", "tb", "lr", "rl"}));

  auto* pr = app.add_subcommand("prop", "Global properties");
  pr->require_subcommand(1);
  std::string key, value;
  auto* p_get = pr->add_subcommand("get", "Print one property");
  p_get->add_option("key", key)->required();
  auto* p_set = pr->add_subcommand("set", "Set a property for this process");
  p_set->add_option("key", key)->required();
  p_set->add_option("value", value)->required();
  auto* p_list = pr->add_subcommand("list", "Print every property");

  std::vector<std::string> argv_store{"braidkit"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  auto need_braid = [&](const BraidArg& b) {
    if (!b.given()) throw UsageError("A braid word or --fixture is required.");
  };
  auto print_braid = [&](const Braid& b) {
    if (io.as_json)
      io.emit(to_json(b));
    else
      out << to_string(b) << '\n';
  };
  auto print_bool = [&](bool v) {
    if (io.as_json)
      io.emit(v);
    else
      out << (v ? 1 : 0) << '\n';
  };
  auto print_loops = [&](const std::vector<Loop>& ls) {
    if (io.as_json) {
      json a = json::array();
      for (const auto& l : ls) a.push_back(to_json(l));
      io.emit(ls.size() == 1 ? a[0] : a);
    } else {
      for (const auto& l : ls) out << to_string(l) << '\n';
    }
  };
  auto print_ints = [&](const std::vector<Int>& v) {
    if (io.as_json) {
      json a = json::array();
      for (const auto& x : v) a.push_back(int_to_json(x));
      io.emit(a);
    } else {
      out << join(v) << '\n';
    }
  };
  try {
    reset_properties();
    load_properties_from_env();
    for (const auto& kv : prop_overrides) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) throw UsageError("--prop expects KEY=VALUE.");
      set_property(kv.substr(0, eq), kv.substr(eq + 1));
    }

    if (braid->parsed()) {
      if (b_make->parsed()) {
        need_braid(b1);
        if (b1.annular) {
          const auto w = parse_word(b1.word);
          const AnnularBraid ab = b1.n > 0 ? AnnularBraid(w, b1.n - 1) : AnnularBraid(w);
          if (io.as_json)
            io.emit(to_json(ab));
          else
            out << to_string(ab) << '\n';
        } else {
          print_braid(b1.build());
        }
      } else if (b_mul->parsed()) {
        Braid a = b1.build(), b = Braid(parse_word(b2.word));
        if (b1.n == 0) {
          const int n = std::max(a.n(), b.n());
          a = with_strands(a, n);
          b = with_strands(b, n);
        } else {
          b = Braid(b.word(), b1.n);
        }
        print_braid(a * b);
      } else if (b_inv->parsed()) {
        need_braid(b1);
        print_braid(inverse(b1.build()));
      } else if (b_pow->parsed()) {
        print_braid(power(b1.build(), power_k));
      } else if (b_compact->parsed()) {
        need_braid(b1);
        print_braid(compact(b1.build()));
      } else if (b_eq->parsed()) {
        Braid a = b1.build(), b = Braid(parse_word(b2.word));
        const int n = std::max({a.n(), b.n(), b1.n});
        print_bool(equals(with_strands(a, n), with_strands(b, n)));
      } else if (b_triv->parsed()) {
        need_braid(b1);
        print_bool(istrivial(b1.build()));
      } else if (b_perm->parsed()) {
        need_braid(b1);
        const auto p = perm(b1.build());
        if (io.as_json)
          io.emit(p);
        else
          out << join(p) << '\n';
      } else if (b_pure->parsed()) {
        need_braid(b1);
        print_bool(ispure(b1.build()));
      } else if (b_writhe->parsed()) {
        need_braid(b1);
        const long w = writhe(b1.build());
        if (io.as_json)
          io.emit(w);
        else
          out << w << '\n';
      } else if (b_sub->parsed()) {
        need_braid(b1);
        const auto k = parse_word(keep);
        print_braid(subbraid(b1.build(), k));
      } else if (b_tensor->parsed()) {
        const auto wa = parse_word(b1.word), wb = parse_word(b2.word);
        const Braid a = b1.n > 0 ? Braid(wa, b1.n) : Braid(wa);
        const Braid b = b2.n > 0 ? Braid(wb, b2.n) : Braid(wb);
        print_braid(tensor(a, b));
      } else if (b_rand->parsed()) {
        if (rand_len < 0) throw UsageError("--length must be nonnegative.");
        seed_given = b_rand->count("--seed") > 0;
        if (!seed_given) seed = std::random_device{}();
        print_braid(random_braid(rand_n, static_cast<std::size_t>(rand_len), seed));
      } else if (b_half->parsed()) {
        print_braid(halftwist(twist_n));
      } else if (b_full->parsed()) {
        print_braid(fulltwist(twist_n));
      } else if (b_ann->parsed()) {
        const auto w = parse_word(b1.word);
        print_braid(to_braid(nann > 0 ? AnnularBraid(w, nann) : AnnularBraid(w)));
      }
    } else if (loop->parsed()) {
      if (l_can->parsed()) {
        print_loops({canonical_loop(loop_n, !no_basepoint)});
        return 0;
      }
      const auto ls = parse_loops(coords, basepoint);
      if (l_make->parsed()) {
        print_loops(ls);
      } else if (l_int->parsed()) {
        json all = json::array();
        for (const auto& l : ls) {
          const auto in = intersec(l);
          if (io.as_json) {
            json mu = json::array(), nu = json::array();
            for (const auto& x : in.mu) mu.push_back(int_to_json(x));
            for (const auto& x : in.nu) nu.push_back(int_to_json(x));
            all.push_back({{"mu", mu}, {"nu", nu}});
          } else {
            out << join(in.mu) << ' ' << join(in.nu) << '\n';
          }
        }
        if (io.as_json) io.emit(ls.size() == 1 ? all[0] : all);
      } else {
        std::vector<Int> v;
        for (const auto& l : ls) v.push_back(l_min->parsed() ? minlength(l) : intaxis(l));
        print_ints(v);
      }
    } else if (act_cmd->parsed()) {
      need_braid(b1);
      const auto ls = parse_loops(coords, basepoint);
      const Braid b = b1.build(ls.front().n());
      if (with_matrix) {
        json all = json::array();
        for (const auto& l : ls) {
          auto [img, m] = act_with_matrix(b, l);
          if (io.as_json)
            all.push_back({{"loop", to_json(img)}, {"matrix", to_json(m)}});
          else
            out << to_string(img) << '\n' << to_string(m);
        }
        if (io.as_json) io.emit(ls.size() == 1 ? all[0] : all);
      } else {
        print_loops(act(b, std::span<const Loop>(ls)));
      }
    } else if (lc->parsed()) {
      need_braid(b1);
      print_loops({loopcoords(b1.build())});
    } else if (cyc->parsed()) {
      need_braid(b1);
      std::optional<Loop> l0;
      if (!cycle_loop.empty()) l0 = parse_loops(cycle_loop, basepoint).front();
      const Braid b = l0 ? b1.build(l0->n()) : b1.build();
      const auto r = cycle(b, l0, maxit,
                           per_iter ? CycleMode::per_iterate : CycleMode::product);
      if (io.as_json) {
        io.emit(to_json(r));
      } else {
        out << "period = " << r.period << "\npreperiod = " << r.preperiod << '\n';
        for (const auto& m : r.matrices) out << '\n' << to_string(m);
      }
    } else if (cp->parsed()) {
      IntMatrix m;
      if (!matrix_file.empty())
        m = matrix_from_json(read_json_file(matrix_file));
      else if (!matrix_text.empty())
        m = parse_matrix(matrix_text);
      else
        throw UsageError("Give a matrix or --file.");
      const auto c = charpoly(m);
      if (io.as_json) {
        json a = json::array();
        for (const auto& x : c) a.push_back(int_to_json(x));
        io.emit({{"coeffs", a}, {"spectral_radius", spectral_radius(m)}});
      } else {
        out << poly_string(c) << '\n';
      }
    } else if (ent->parsed()) {
      need_braid(b1);
      const auto r = entropy(b1.build(), tol, maxit);
      if (!r.converged) err << kEntropyWarning << '\n';
      if (io.as_json)
        io.emit({{"value", r.value}, {"converged", r.converged}, {"iterations", r.iterations}});
      else
        out << fixed4(r.value) << '\n';
    } else if (cx->parsed()) {
      need_braid(b1);
      const double c = complexity(b1.build());
      if (io.as_json)
        io.emit(c);
      else
        out << fixed4(c) << '\n';
    } else if (bur->parsed()) {
      need_braid(b1);
      const Braid b = b1.build();
      if (!at.empty()) {
        const auto m = burau_at(b, parse_rational(at));
        if (io.as_json) {
          json e = json::array();
          for (const auto& x : m.entries) e.push_back(x.get_str());
          io.emit({{"dim", m.dim}, {"entries", e}});
        } else {
          out << to_string(m);
        }
      } else {
        const auto m = burau(b);
        if (io.as_json) {
          json e = json::array();
          for (const auto& x : m.entries) e.push_back(to_json(x));
          io.emit({{"dim", m.dim}, {"entries", e}});
        } else {
          out << to_string(m, "t");
        }
      }
    } else if (alex->parsed()) {
      need_braid(b1);
      const auto p = alexander(b1.build(), centered);
      if (io.as_json)
        io.emit(to_json(p));
      else
        out << to_string(p, "z") << '\n';
    } else if (fd->parsed()) {
      TrajectorySet ts = read_trajectories(data_file);
      if (closure_name != "none")
        ts = closure(ts, closure_name == "mindist" ? ClosureMethod::mindist : ClosureMethod::rank);
      const DataBraid db = databraid_from_data(ts, angle, threads);
      if (as_databraid) {
        if (io.as_json)
          io.emit(to_json(db));
        else
          out << to_string(db) << '\n';
      } else {
        print_braid(db.braid());
      }
    } else if (ft->parsed()) {
      DataBraid db;
      if (!ft_file.empty()) {
        if (ends_with(ft_file, ".json")) {
          const json j = read_json_file(ft_file);
          db = j.contains("tcross") ? databraid_from_json(j)
                                    : databraid_from_data(trajectories_from_json(j), angle);
        } else {
          db = databraid_from_data(read_trajectories(ft_file), angle);
        }
      } else if (b1.given()) {
        std::vector<double> t;
        std::istringstream in(ft_times);
        for (double x; in >> x;) t.push_back(x);
        db = DataBraid(b1.build(), t);
      } else {
        throw UsageError("Give a data file or --word with --tcross.");
      }
      const double v = ftbe(db, T_opt->count() ? std::optional<double>(T) : std::nullopt,
                            norm_name == "minlength" ? LoopNorm::minlength : LoopNorm::intaxis);
      if (io.as_json)
        io.emit(v);
      else
        out << fixed4(v) << '\n';
    } else if (rd->parsed()) {
      RenderSpec spec = RenderSpec::from_properties();
      if (!dir.empty()) spec.direction = parse_plot_dir(dir);
      std::string svg;
      if (!render_loop.empty()) {
        svg = render_loop_svg(parse_loops(render_loop, basepoint).front(), spec);
      } else {
        need_braid(b1);
        svg = render_braid_svg(b1.build(), spec);
      }
      if (out_path.empty())
        out << svg;
      else
        write_file(out_path, svg);
    } else if (pr->parsed()) {
      if (p_get->parsed()) {
        const auto v = get_property(key);
        if (io.as_json)
          io.emit({{key, v}});
        else
          out << v << '\n';
      } else if (p_set->parsed()) {
        set_property(key, value);
        out << key << " = " << get_property(key) << '\n';
        err << "Properties last for one run; use --prop " << key << '=' << value
            << " or BRAIDKIT_" << key << " to keep the setting.\n";
      } else if (p_list->parsed()) {
        json j = json::object();
        for (const auto& k : property_keys()) {
          if (io.as_json)
            j[k] = get_property(k);
          else
            out << k << ": " << get_property(k) << '\n';
        }
        if (io.as_json) io.emit(j);
      }
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace braidkit
