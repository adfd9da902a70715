#include "braidkit/json_io.hpp"

#include "braidkit/error.hpp"

namespace braidkit {

json int_to_json(const Int& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(j.get<long>());
  if (j.is_string()) {
    Int v;
    if (v.set_str(j.get<std::string>(), 10) != 0)
      throw Error("Invalid integer string in JSON.");
    return v;
  }
  throw Error("Expected an integer in JSON.");
}

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw Error(std::string("JSON object is missing \"") + key + "\".");
  return j.at(key);
}

json ints(const std::vector<Int>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(int_to_json(x));
  return a;
}

std::vector<Int> ints_from(const json& j) {
  if (!j.is_array()) throw Error("Expected a JSON array of integers.");
  std::vector<Int> v;
  for (const auto& x : j) v.push_back(int_from_json(x));
  return v;
}

}  // namespace

json to_json(const Braid& b) {
  return {{"n", b.n()}, {"word", b.word()}, {"annular", false}};
}

json to_json(const AnnularBraid& b) {
  return {{"n", b.n()}, {"word", b.word()}, {"annular", true}};
}

json to_json(const Loop& l) {
  return {{"coords", ints(l.coords())}, {"basepoint", l.basepoint()}};
}

json to_json(const IntMatrix& m) {
  return {{"dim", m.dim()}, {"entries", ints(m.entries())}};
}

json to_json(const LaurentPoly& p) {
  return {{"lowest", p.lowest()}, {"coeffs", ints(p.coeffs())}};
}

json to_json(const TrajectorySet& ts) {
  json pos = json::array();
  for (const auto& sample : ts.positions) {
    json row = json::array();
    for (const auto& xy : sample) row.push_back({xy[0], xy[1]});
    pos.push_back(std::move(row));
  }
  return {{"times", ts.times}, {"positions", std::move(pos)}};
}

json to_json(const DataBraid& db) {
  json j = to_json(db.braid());
  j["tcross"] = db.tcross();
  return j;
}

json to_json(const CycleResult& c) {
  json ms = json::array();
  for (const auto& m : c.matrices) ms.push_back(to_json(m));
  return {{"preperiod", c.preperiod}, {"period", c.period}, {"matrices", ms}};
}

Braid braid_from_json(const json& j) {
  const auto word = field(j, "word").get<std::vector<int>>();
  const bool annular = j.value("annular", false);
  if (annular) {
    if (j.contains("n"))
      return to_braid(AnnularBraid(word, j.at("n").get<int>() - 1));
    return to_braid(AnnularBraid(word));
  }
  if (j.contains("n")) return Braid(word, j.at("n").get<int>());
  return Braid(word);
}

Loop loop_from_json(const json& j) {
  return Loop(ints_from(field(j, "coords")), j.value("basepoint", false));
}

IntMatrix matrix_from_json(const json& j) {
  return IntMatrix(field(j, "dim").get<std::size_t>(),
                   ints_from(field(j, "entries")));
}

LaurentPoly laurent_from_json(const json& j) {
  return LaurentPoly(field(j, "lowest").get<long>(),
                     ints_from(field(j, "coeffs")));
}

TrajectorySet trajectories_from_json(const json& j) {
  TrajectorySet ts;
  try {
    ts.times = field(j, "times").get<std::vector<double>>();
    for (const auto& sample : field(j, "positions")) {
      std::vector<std::array<double, 2>> row;
      for (const auto& xy : sample) {
        if (!xy.is_array() || xy.size() != 2)
          throw Error("Each position must be an [x, y] pair.");
        row.push_back({xy[0].get<double>(), xy[1].get<double>()});
      }
      ts.positions.push_back(std::move(row));
    }
  } catch (const json::exception& e) {
    throw Error(std::string("Malformed trajectory JSON: ") + e.what());
  }
  ts.validate();
  return ts;
}

DataBraid databraid_from_json(const json& j) {
  return {braid_from_json(j), field(j, "tcross").get<std::vector<double>>()};
}

}  // namespace braidkit
