#include "braidkit/action.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <thread>

#include "braidkit/error.hpp"
#include "braidkit/properties.hpp"
#include "braidkit/update.hpp"

namespace braidkit {

namespace {

// A coordinate together with its expression as an integer combination of
// the starting coordinates.
struct Tracked {
  Int v;
  std::vector<Int> row;
};

Tracked combine(const Tracked& x, const Tracked& y, int s) {
  Tracked r{s > 0 ? Int(x.v + y.v) : Int(x.v - y.v), x.row};
  for (std::size_t k = 0; k < r.row.size(); ++k)
    if (s > 0)
      r.row[k] += y.row[k];
    else
      r.row[k] -= y.row[k];
  return r;
}

Tracked operator+(const Tracked& x, const Tracked& y) { return combine(x, y, 1); }
Tracked operator-(const Tracked& x, const Tracked& y) { return combine(x, y, -1); }

Tracked operator-(const Tracked& x) {
  Tracked r{-x.v, x.row};
  for (auto& e : r.row) e = -e;
  return r;
}

Tracked zero_like(const Tracked& x) {
  return {Int(0), std::vector<Int>(x.row.size(), Int(0))};
}

Tracked pos(const Tracked& x) { return sgn(x.v) > 0 ? x : zero_like(x); }
Tracked neg(const Tracked& x) { return sgn(x.v) < 0 ? x : zero_like(x); }

std::vector<int> action_order(const Braid& b, const Loop& l) {
  // Extra punctures on the right are carried along unbraided.
  if (b.n() > l.n())
    throw Error("Braid has " + std::to_string(b.n()) +
                " strands but the loop has only " + std::to_string(l.n()) +
                " punctures.");
  std::vector<int> w = b.word();
  if (props().gen_loop_act_dir == LoopActDir::right_to_left)
    std::reverse(w.begin(), w.end());
  return w;
}

void check_generator(const Loop& l, int g) {
  if (g == 0 || std::abs(g) > l.totaln() - 1)
    throw Error("Generator " + std::to_string(g) +
                " out of range for a loop on " + std::to_string(l.totaln()) +
                " punctures.");
}

}  // namespace

Loop apply_generator(const Loop& l, int g) {
  check_generator(l, g);
  std::vector<Int> c = l.coords();
  apply_update(c, g);
  return Loop(std::move(c), l.basepoint());
}

Loop act(const Braid& b, const Loop& l) {
  std::vector<Int> c = l.coords();
  for (int g : action_order(b, l)) apply_update(c, g);
  return Loop(std::move(c), l.basepoint());
}

std::vector<Loop> act(const Braid& b, std::span<const Loop> loops,
                      unsigned threads) {
  std::vector<Loop> out(loops.size());
  if (threads <= 1 || loops.size() < 2) {
    for (std::size_t k = 0; k < loops.size(); ++k) out[k] = act(b, loops[k]);
    return out;
  }
  threads = std::min<unsigned>(threads, static_cast<unsigned>(loops.size()));
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errs(threads);
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      try {
        for (std::size_t k = t; k < loops.size(); k += threads)
          out[k] = act(b, loops[k]);
      } catch (...) {
        errs[t] = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
  return out;
}

std::pair<Loop, LinearAction> act_with_matrix(const Braid& b, const Loop& l) {
  const auto word = action_order(b, l);
  const std::size_t d = l.coords().size();
  std::vector<Tracked> c;
  c.reserve(d);
  for (std::size_t k = 0; k < d; ++k) {
    Tracked t{l.coords()[k], std::vector<Int>(d, Int(0))};
    t.row[k] = 1;
    c.push_back(std::move(t));
  }
  for (int g : word) apply_update(c, g);
  std::vector<Int> vals, entries;
  vals.reserve(d);
  entries.reserve(d * d);
  for (auto& t : c) {
    vals.push_back(t.v);
    entries.insert(entries.end(), t.row.begin(), t.row.end());
  }
  return {Loop(std::move(vals), l.basepoint()), IntMatrix(d, std::move(entries))};
}

Loop loopcoords(const Braid& b) { return act(b, canonical_loop(b.n(), true)); }

namespace {

std::size_t matrix_hash(const IntMatrix& m) {
  std::size_t h = m.dim();
  for (const Int& e : m.entries())
    h = h * 1000003u ^ std::hash<long>{}(mpz_get_si(e.get_mpz_t()));
  return h;
}

}  // namespace

CycleResult cycle(const Braid& b, std::optional<Loop> l0, int maxit,
                  CycleMode mode) {
  Loop l = l0 ? *l0 : canonical_loop(b.n(), true);
  std::vector<LinearAction> ms;
  std::vector<std::size_t> hs;
  auto same = [&](std::size_t i, std::size_t j) {
    return hs[i] == hs[j] && ms[i] == ms[j];
  };
  for (int it = 0; it < maxit; ++it) {
    auto [next, m] = act_with_matrix(b, l);
    l = std::move(next);
    hs.push_back(matrix_hash(m));
    ms.push_back(std::move(m));
    const std::size_t last = ms.size() - 1;
    for (std::size_t p = 1; 3 * p <= last + 1; ++p) {
      const std::size_t from = last + 1 - 3 * p;
      bool ok = true;
      for (std::size_t j = from; j + p <= last && ok; ++j) ok = same(j, j + p);
      if (!ok) continue;
      std::size_t k = from;
      while (k > 0 && same(k - 1, k - 1 + p)) --k;
      CycleResult r;
      r.preperiod = static_cast<int>(k);
      r.period = static_cast<int>(p);
      if (mode == CycleMode::per_iterate) {
        r.matrices.assign(ms.begin() + static_cast<std::ptrdiff_t>(k),
                          ms.begin() + static_cast<std::ptrdiff_t>(k + p));
      } else {
        LinearAction prod = ms[k];
        for (std::size_t j = k + 1; j < k + p; ++j) prod = ms[j] * prod;
        r.matrices.push_back(std::move(prod));
      }
      return r;
    }
  }
  throw NoCycleError("No limit cycle found within " + std::to_string(maxit) +
                     " iterations.");
}

std::vector<Int> charpoly(const IntMatrix& a) {
  const std::size_t n = a.dim();
  std::vector<Int> poly{1};
  for (std::size_t r = 0; r < n; ++r) {
    // Leading (r+1)x(r+1) block: corner a(r,r), row R = a(r,0..r-1),
    // column S = a(0..r-1,r), and the r x r block above-left of it.
    std::vector<Int> toeplitz{1, -a(r, r)};
    std::vector<Int> v(r);
    for (std::size_t i = 0; i < r; ++i) v[i] = a(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      Int rs = 0;
      for (std::size_t i = 0; i < r; ++i) rs += a(r, i) * v[i];
      toeplitz.push_back(-rs);
      std::vector<Int> nv(r, Int(0));
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) nv[i] += a(i, j) * v[j];
      v = std::move(nv);
    }
    std::vector<Int> next(r + 2, Int(0));
    for (std::size_t k = 0; k < r + 2; ++k)
      for (std::size_t j = 0; j <= r && j <= k; ++j)
        next[k] += toeplitz[k - j] * poly[j];
    poly = std::move(next);
  }
  return poly;
}

double spectral_radius(const IntMatrix& m) {
  const auto d = static_cast<Eigen::Index>(m.dim());
  if (d == 0) return 0.0;
  Eigen::MatrixXd x(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j)
      x(i, j) = m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).get_d();
  Eigen::EigenSolver<Eigen::MatrixXd> es(x, false);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

}  // namespace braidkit
