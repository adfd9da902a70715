#include "braidkit/trajectory.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>
#include <thread>
#include <tuple>

#include "braidkit/action.hpp"
#include "braidkit/error.hpp"
#include "braidkit/properties.hpp"
#include "braidkit/wordops.hpp"

namespace braidkit {

void TrajectorySet::validate() const {
  if (times.size() != positions.size())
    throw Error("Trajectory times and positions have different lengths.");
  if (times.empty()) throw Error("Trajectory set has no samples.");
  const std::size_t p = positions.front().size();
  for (std::size_t s = 0; s < times.size(); ++s) {
    if (!std::isfinite(times[s])) throw Error("Non-finite sample time.");
    if (s > 0 && !(times[s] > times[s - 1]))
      throw Error("Sample times must be strictly increasing.");
    if (positions[s].size() != p)
      throw Error("Every sample must list the same particles.");
    for (const auto& xy : positions[s])
      if (!std::isfinite(xy[0]) || !std::isfinite(xy[1]))
        throw Error("Non-finite particle position.");
  }
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& tok) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(tok, &used);
  } catch (const std::exception&) {
    throw Error("Cannot parse number '" + tok + "'.");
  }
  if (used != tok.size()) throw Error("Cannot parse number '" + tok + "'.");
  if (!std::isfinite(v)) throw Error("Non-finite value '" + tok + "'.");
  return v;
}

}  // namespace

TrajectorySet load_trajectories_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw Error("Empty trajectory file.");
  std::string header;
  for (char ch : line)
    if (!std::isspace(static_cast<unsigned char>(ch))) header += ch;
  if (header != "t,id,x,y")
    throw Error("Trajectory CSV must start with the header t,id,x,y.");

  struct Row {
    double t;
    long id;
    double x, y;
  };
  std::vector<Row> rows;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string tok;
    while (std::getline(ss, tok, ',')) f.push_back(trim(tok));
    if (f.size() != 4)
      throw Error("Line " + std::to_string(lineno) + ": expected 4 fields.");
    const double id = parse_double(f[1]);
    if (id < 1 || id != std::floor(id))
      throw Error("Line " + std::to_string(lineno) +
                  ": particle ids are positive integers.");
    rows.push_back({parse_double(f[0]), static_cast<long>(id),
                    parse_double(f[2]), parse_double(f[3])});
  }
  if (rows.empty()) throw Error("Trajectory file has no data rows.");
  std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return std::tie(a.t, a.id) < std::tie(b.t, b.id);
  });

  TrajectorySet ts;
  std::size_t i = 0;
  while (i < rows.size()) {
    const double t = rows[i].t;
    std::vector<std::array<double, 2>> sample;
    for (; i < rows.size() && rows[i].t == t; ++i) {
      const long want = static_cast<long>(sample.size()) + 1;
      if (rows[i].id < want)
        throw Error("Duplicate sample for particle " +
                    std::to_string(rows[i].id) + " at t = " +
                    std::to_string(t) + ".");
      if (rows[i].id > want)
        throw Error("Missing sample for particle " + std::to_string(want) +
                    " at t = " + std::to_string(t) + ".");
      sample.push_back({rows[i].x, rows[i].y});
    }
    if (!ts.positions.empty() && sample.size() != ts.positions[0].size())
      throw Error("Particle count changes at t = " + std::to_string(t) + ".");
    ts.times.push_back(t);
    ts.positions.push_back(std::move(sample));
  }
  ts.validate();
  return ts;
}

void write_trajectories_csv(std::ostream& out, const TrajectorySet& ts) {
  out << "t,id,x,y\n";
  out.precision(17);
  for (std::size_t s = 0; s < ts.samples(); ++s)
    for (std::size_t p = 0; p < ts.particles(); ++p)
      out << ts.times[s] << ',' << p + 1 << ',' << ts.positions[s][p][0]
          << ',' << ts.positions[s][p][1] << '\n';
}

namespace {

struct PairCrossing {
  double t;
  int p, q;
  int sign;
};

struct Frame {
  std::vector<std::vector<double>> proj, orth;  // [sample][particle]
};

Frame project(const TrajectorySet& ts, double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  Frame f;
  f.proj.resize(ts.samples());
  f.orth.resize(ts.samples());
  for (std::size_t k = 0; k < ts.samples(); ++k)
    for (const auto& xy : ts.positions[k]) {
      f.proj[k].push_back(xy[0] * c + xy[1] * s);
      f.orth[k].push_back(-xy[0] * s + xy[1] * c);
    }
  return f;
}

std::vector<PairCrossing> pair_crossings(const TrajectorySet& ts,
                                         const Frame& f, int p, int q,
                                         double tol, int rot) {
  const std::size_t ns = ts.samples();
  const auto up = static_cast<std::size_t>(p), uq = static_cast<std::size_t>(q);
  auto diff = [&](std::size_t k) { return f.proj[k][up] - f.proj[k][uq]; };
  auto odiff = [&](std::size_t k) { return f.orth[k][up] - f.orth[k][uq]; };
  auto side = [&](std::size_t k) {
    const double d = diff(k);
    return std::abs(d) <= tol ? 0 : (d > 0 ? 1 : -1);
  };
  if (side(0) == 0 || side(ns - 1) == 0)
    throw CoincidentProjectionError(q + 1, p + 1);

  std::vector<PairCrossing> out;
  std::size_t k0 = 0;
  for (std::size_t k = 1; k < ns; ++k) {
    const int sk = side(k);
    if (sk == 0) {
      if (std::abs(odiff(k)) <= tol) throw CoincidentProjectionError(q + 1, p + 1);
      continue;
    }
    const int s0 = side(k0);
    if (sk != s0) {
      double tc = 0.0, oc = 0.0;
      if (k == k0 + 1) {
        const double d0 = diff(k0), d1 = diff(k);
        const double frac = d0 / (d0 - d1);
        tc = ts.times[k0] + frac * (ts.times[k] - ts.times[k0]);
        oc = odiff(k0) + frac * (odiff(k) - odiff(k0));
      } else {
        tc = ts.times[k0 + 1];
        oc = odiff(k0 + 1);
      }
      // With d = proj_p - proj_q < 0 beforehand, p is the left particle.
      const double left_minus_right = s0 < 0 ? oc : -oc;
      if (std::abs(left_minus_right) <= tol)
        throw CoincidentProjectionError(q + 1, p + 1);
      out.push_back({tc, p, q, (left_minus_right > 0 ? 1 : -1) * rot});
    }
    k0 = k;
  }
  return out;
}

}  // namespace

std::vector<Crossing> find_crossings(const TrajectorySet& ts, double angle,
                                     unsigned threads) {
  ts.validate();
  const int np = static_cast<int>(ts.particles());
  if (np < 2) return {};
  const double tol = props().braid_abs_tol;
  const int rot = props().gen_rot_dir;
  const Frame f = project(ts, angle);

  std::vector<std::pair<int, int>> pairs;
  for (int p = 0; p < np; ++p)
    for (int q = p + 1; q < np; ++q) pairs.emplace_back(p, q);
  std::vector<std::vector<PairCrossing>> found(pairs.size());
  auto work = [&](std::size_t k) {
    found[k] = pair_crossings(ts, f, pairs[k].first, pairs[k].second, tol, rot);
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(pairs.size())));
  if (threads == 1) {
    for (std::size_t k = 0; k < pairs.size(); ++k) work(k);
  } else {
    std::vector<std::exception_ptr> errs(threads);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        try {
          for (std::size_t k = t; k < pairs.size(); k += threads) work(k);
        } catch (...) {
          errs[t] = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    for (auto& e : errs)
      if (e) std::rethrow_exception(e);
  }

  std::vector<PairCrossing> all;
  for (auto& v : found) all.insert(all.end(), v.begin(), v.end());
  std::stable_sort(all.begin(), all.end(),
                   [](const PairCrossing& a, const PairCrossing& b) {
                     return a.t < b.t;
                   });

  std::vector<int> order(static_cast<std::size_t>(np));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return f.proj[0][static_cast<std::size_t>(a)] <
           f.proj[0][static_cast<std::size_t>(b)];
  });
  std::vector<int> at(static_cast<std::size_t>(np));
  for (int k = 0; k < np; ++k) at[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] = k;

  std::vector<Crossing> out;
  out.reserve(all.size());
  std::size_t i = 0;
  while (i < all.size()) {
    std::size_t j = i;
    while (j < all.size() && all[j].t == all[i].t) ++j;
    std::vector<std::pair<int, const PairCrossing*>> group;
    std::vector<bool> busy(static_cast<std::size_t>(np), false);
    for (std::size_t k = i; k < j; ++k) {
      const auto& c = all[k];
      const int a = at[static_cast<std::size_t>(c.p)], b = at[static_cast<std::size_t>(c.q)];
      if (std::abs(a - b) != 1)
        throw Error("Particles " + std::to_string(c.p + 1) + " and " +
                    std::to_string(c.q + 1) +
                    " exchange without being adjacent; the data is "
                    "undersampled.");
      for (int x : {c.p, c.q}) {
        if (busy[static_cast<std::size_t>(x)])
          throw Error("Particle " + std::to_string(x + 1) +
                      " takes part in two simultaneous crossings; the data "
                      "is undersampled.");
        busy[static_cast<std::size_t>(x)] = true;
      }
      group.emplace_back(std::min(a, b), &c);
    }
    std::sort(group.begin(), group.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    for (const auto& [lower, c] : group) {
      out.push_back({c->t, lower + 1, c->sign});
      std::swap(at[static_cast<std::size_t>(c->p)], at[static_cast<std::size_t>(c->q)]);
    }
    i = j;
  }
  return out;
}

DataBraid::DataBraid(Braid b, std::vector<double> tcross)
    : braid_(std::move(b)), tcross_(std::move(tcross)) {
  if (tcross_.size() != braid_.length())
    throw Error("A databraid needs exactly one crossing time per generator.");
  for (std::size_t k = 1; k < tcross_.size(); ++k)
    if (tcross_[k] < tcross_[k - 1])
      throw Error("Crossing times must be nondecreasing.");
}

DataBraid databraid_from_data(const TrajectorySet& ts, double angle,
                              unsigned threads) {
  const auto cr = find_crossings(ts, angle, threads);
  std::vector<int> w;
  std::vector<double> t;
  for (const auto& c : cr) {
    w.push_back(c.sign * c.pos);
    t.push_back(c.t);
  }
  const int n = std::max(2, static_cast<int>(ts.particles()));
  return {Braid(std::move(w), n), std::move(t)};
}

Braid braid_from_data(const TrajectorySet& ts, double angle, unsigned threads) {
  return databraid_from_data(ts, angle, threads).braid();
}

std::vector<int> min_assignment(const std::vector<std::vector<double>>& cost) {
  const std::size_t n = cost.size();
  for (const auto& row : cost)
    if (row.size() != n) throw Error("Assignment cost matrix must be square.");
  const double inf = std::numeric_limits<double>::infinity();
  // Potentials method, 1-based with a dummy column 0.
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = p[j0];
      double delta = inf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<int> result(n, -1);
  for (std::size_t j = 1; j <= n; ++j)
    if (p[j] != 0) result[p[j] - 1] = static_cast<int>(j - 1);
  return result;
}

TrajectorySet closure(const TrajectorySet& ts, ClosureMethod method) {
  ts.validate();
  const std::size_t np = ts.particles();
  const auto& first = ts.positions.front();
  const auto& last = ts.positions.back();
  std::vector<std::array<double, 2>> closing(np);
  if (method == ClosureMethod::rank) {
    auto by_x = [](const std::vector<std::array<double, 2>>& pts) {
      std::vector<std::size_t> idx(pts.size());
      std::iota(idx.begin(), idx.end(), 0);
      std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return pts[a][0] < pts[b][0];
      });
      return idx;
    };
    const auto fin = by_x(last), ini = by_x(first);
    for (std::size_t r = 0; r < np; ++r) closing[fin[r]] = first[ini[r]];
  } else {
    std::vector<std::vector<double>> cost(np, std::vector<double>(np));
    for (std::size_t i = 0; i < np; ++i)
      for (std::size_t j = 0; j < np; ++j)
        cost[i][j] = std::hypot(last[i][0] - first[j][0], last[i][1] - first[j][1]);
    const auto match = min_assignment(cost);
    for (std::size_t i = 0; i < np; ++i)
      closing[i] = first[static_cast<std::size_t>(match[i])];
  }
  TrajectorySet out = ts;
  const double step = ts.samples() > 1
                          ? (ts.times.back() - ts.times.front()) /
                                static_cast<double>(ts.samples() - 1)
                          : 1.0;
  out.times.push_back(ts.times.back() + step);
  out.positions.push_back(std::move(closing));
  return out;
}

DataBraid db_trunc(const DataBraid& db, double t0, double t1) {
  if (t0 > t1) throw Error("Truncation interval must have t0 <= t1.");
  std::vector<int> w;
  std::vector<double> t;
  for (std::size_t k = 0; k < db.length(); ++k) {
    const double tk = db.tcross()[k];
    if (tk >= t0 && tk <= t1) {
      w.push_back(db.braid().word()[k]);
      t.push_back(tk);
    }
  }
  return {Braid(std::move(w), db.n()), std::move(t)};
}

DataBraid db_mul(const DataBraid& a, const DataBraid& b) {
  if (!a.tcross().empty() && !b.tcross().empty() &&
      a.tcross().back() > b.tcross().front())
    throw Error("Databraid product is only defined when the first braid's "
                "crossings all precede the second's.");
  std::vector<double> t = a.tcross();
  t.insert(t.end(), b.tcross().begin(), b.tcross().end());
  return {a.braid() * b.braid(), std::move(t)};
}

bool db_equals(const DataBraid& a, const DataBraid& b) {
  return lexeq(a.braid(), b.braid()) && a.tcross() == b.tcross();
}

DataBraid db_compact(const DataBraid& db) {
  std::vector<int> w;
  std::vector<double> t;
  for (std::size_t k : cancel_indices(db.braid().word())) {
    w.push_back(db.braid().word()[k]);
    t.push_back(db.tcross()[k]);
  }
  return {Braid(std::move(w), db.n()), std::move(t)};
}

double ftbe(const DataBraid& db, std::optional<double> T, LoopNorm norm) {
  double span = 0.0;
  if (T) {
    span = *T;
  } else {
    if (db.length() < 2)
      throw Error("Need at least two crossings to infer the time span; "
                  "pass T explicitly.");
    span = db.tcross().back() - db.tcross().front();
  }
  if (!(span > 0)) throw Error("The time span T must be positive.");
  const Loop l = canonical_loop(db.n(), true);
  const Loop img = act(db.braid(), l);
  auto size = [norm](const Loop& x) {
    return norm == LoopNorm::intaxis ? intaxis(x) : minlength(x);
  };
  return (log_int(size(img)) - log_int(size(l))) / span;
}

std::string to_string(const DataBraid& db) {
  std::ostringstream os;
  os << to_string(db.braid()) << "\ntcross:";
  os.precision(10);
  for (double t : db.tcross()) os << ' ' << t;
  return os.str();
}

}  // namespace braidkit
