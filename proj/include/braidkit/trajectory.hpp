#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "braidkit/braid.hpp"

namespace braidkit {

/// Sampled planar particle paths on a shared, strictly increasing time grid.
struct TrajectorySet {
  std::vector<double> times;
  // positions[s][p] is particle p at times[s].
  std::vector<std::vector<std::array<double, 2>>> positions;

  std::size_t samples() const { return times.size(); }
  std::size_t particles() const {
    return positions.empty() ? 0 : positions.front().size();
  }
  /// Throws on ragged data, non-finite values or non-increasing times.
  void validate() const;
};

/// Long format with header "t,id,x,y"; ids are 1-based.  Rows may come in
/// any order.
TrajectorySet load_trajectories_csv(std::istream& in);
void write_trajectories_csv(std::ostream& out, const TrajectorySet& ts);

struct Crossing {
  double t = 0.0;
  int pos = 0;   // strands at projected positions pos and pos+1 exchange
  int sign = 0;  // +1 when the left particle passes above
};

/// Crossings in time order.  Particle pairs are scanned on `threads`
/// threads; the result does not depend on the thread count.
std::vector<Crossing> find_crossings(const TrajectorySet& ts,
                                     double angle = 0.0, unsigned threads = 1);

/// A braid word together with the time of each generator.
class DataBraid {
 public:
  DataBraid() = default;
  DataBraid(Braid b, std::vector<double> tcross);

  const Braid& braid() const { return braid_; }
  const std::vector<double>& tcross() const { return tcross_; }
  int n() const { return braid_.n(); }
  std::size_t length() const { return braid_.length(); }

 private:
  Braid braid_;
  std::vector<double> tcross_;
};

Braid braid_from_data(const TrajectorySet& ts, double angle = 0.0,
                      unsigned threads = 1);
DataBraid databraid_from_data(const TrajectorySet& ts, double angle = 0.0,
                              unsigned threads = 1);

enum class ClosureMethod { rank, mindist };

/// Appends one sample, a mean time step after the last, that returns the
/// particles to the set of initial positions.  `rank` pairs final and
/// initial points by their order along x; `mindist` minimizes the summed
/// distance travelled.
TrajectorySet closure(const TrajectorySet& ts,
                      ClosureMethod method = ClosureMethod::rank);

/// Minimum-cost perfect matching: result[i] is the column given to row i.
std::vector<int> min_assignment(const std::vector<std::vector<double>>& cost);

DataBraid db_trunc(const DataBraid& db, double t0, double t1);
/// Requires every crossing of a to precede every crossing of b.
DataBraid db_mul(const DataBraid& a, const DataBraid& b);
bool db_equals(const DataBraid& a, const DataBraid& b);
/// Deletes cancelling pairs only; survivors keep their times and order.
DataBraid db_compact(const DataBraid& db);
inline const Braid& db_to_braid(const DataBraid& db) { return db.braid(); }

enum class LoopNorm { intaxis, minlength };

/// Finite-time braiding exponent: log growth of the canonical basepoint
/// loop under the whole braid, per unit time.  T defaults to the span of
/// the crossing times.
double ftbe(const DataBraid& db, std::optional<double> T = std::nullopt,
            LoopNorm norm = LoopNorm::intaxis);

std::string to_string(const DataBraid& db);

}  // namespace braidkit
