#ifndef BICONN_IO_HPP
#define BICONN_IO_HPP

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "biconn/clifford.hpp"
#include "biconn/connection.hpp"
#include "biconn/frame.hpp"
#include "biconn/holonomy.hpp"
#include "biconn/lie_algebra.hpp"

namespace biconn {

inline constexpr const char* kVersion = "0.1.0";

using json = nlohmann::json;

// Integers ride as decimal strings so arbitrary-precision values survive.

inline json to_json(const Multivector& x) {
  json terms = json::array();
  for (const auto& [b, c] : x.terms())
    terms.push_back({{"blade", blade_indices(b)}, {"num", num_str(c)}, {"den", den_str(c)}});
  return {{"signature", {x.signature().r, x.signature().s}}, {"terms", terms}};
}

inline Multivector multivector_from_json(const json& j) {
  Signature sig(j.at("signature").at(0).get<int>(), j.at("signature").at(1).get<int>());
  Multivector x(sig);
  for (const auto& t : j.at("terms")) {
    Blade b = blade_from_indices(t.at("blade").get<std::vector<int>>(), sig.dim());
    x.set(b, rational_from_strings(t.at("num").get<std::string>(),
                                   t.at("den").get<std::string>()));
  }
  return x;
}

inline json to_json(const LieElement& x) {
  json entries = json::array();
  for (int i = 0; i <= x.n; ++i)
    for (int j = 0; j <= x.n; ++j)
      entries.push_back({num_str(x.m(i, j)), den_str(x.m(i, j))});
  return {{"n", x.n}, {"entries", entries}};
}

inline LieElement lie_element_from_json(const json& j) {
  LieElement x(j.at("n").get<int>());
  const auto& e = j.at("entries");
  int m = x.n + 1;
  if (int(e.size()) != m * m) throw std::invalid_argument("entry count mismatch");
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < m; ++k) {
      const auto& pair = e[i * m + k];
      x.m(i, k) = rational_from_strings(pair.at(0).get<std::string>(),
                                        pair.at(1).get<std::string>());
    }
  return x;
}

inline json grid_to_json(const Grid& g) {
  return {{"n", g.n}, {"dims", g.dims}, {"spacing", g.spacing}};
}

inline Grid grid_from_json(const json& j) {
  return Grid(j.at("n").get<int>(), j.at("dims").get<std::vector<std::size_t>>(),
              j.at("spacing").get<std::vector<double>>());
}

// Field containers share one layout: header + payload arrays in
// (component, direction, grid-linear index) column order.

inline json field_payload(const ComponentField<double>& f) {
  json rows = json::array();
  for (std::size_t c = 0; c < f.comps; ++c) {
    json dirs = json::array();
    for (std::size_t mu = 0; mu < f.dirs; ++mu) {
      json pts = json::array();
      for (std::size_t p = 0; p < f.grid.npoints(); ++p) pts.push_back(f.at(c, mu, p));
      dirs.push_back(std::move(pts));
    }
    rows.push_back(std::move(dirs));
  }
  return rows;
}

inline void field_payload_from_json(const json& j, ComponentField<double>& f) {
  if (j.size() != f.comps) throw std::invalid_argument("component count mismatch");
  for (std::size_t c = 0; c < f.comps; ++c)
    for (std::size_t mu = 0; mu < f.dirs; ++mu)
      for (std::size_t p = 0; p < f.grid.npoints(); ++p)
        f.at(c, mu, p) = j.at(c).at(mu).at(p).get<double>();
}

inline json to_json(const SpinConnectionField<double>& om) {
  json j = grid_to_json(om.f.grid);
  j["kind"] = "omega";
  j["omega"] = field_payload(om.f);
  return j;
}

inline SpinConnectionField<double> omega_from_json(const json& j) {
  Grid g = grid_from_json(j);
  SpinConnectionField<double> om(g.n, g);
  field_payload_from_json(j.at("omega"), om.f);
  return om;
}

inline json to_json(const BIField<double>& bi) {
  json j = grid_to_json(bi.A.grid);
  j["kind"] = "bi";
  j["beta"] = bi.beta;
  j["A"] = field_payload(bi.A);
  j["K"] = field_payload(bi.K);
  return j;
}

inline BIField<double> bi_from_json(const json& j) {
  Grid g = grid_from_json(j);
  BIField<double> bi(g.n, j.at("beta").get<double>(), g);
  field_payload_from_json(j.at("A"), bi.A);
  field_payload_from_json(j.at("K"), bi.K);
  return bi;
}

inline json to_json(const FrameField& F) {
  json j = grid_to_json(F.coframe.grid);
  j["kind"] = "frame";
  j["layout"] = "coframe";
  j["coframe"] = field_payload(F.coframe);
  return j;
}

inline FrameField frame_from_json(const json& j) {
  Grid g = grid_from_json(j);
  FrameField F(g.n, g);
  field_payload_from_json(j.at("coframe"), F.coframe);
  F.finalize();
  return F;
}

inline json to_json(const LoopPath& loop) {
  json pts = json::array();
  for (const auto& p : loop.points) pts.push_back(p);
  return pts;
}

inline LoopPath loop_from_json(const json& j) {
  LoopPath loop;
  for (const auto& p : j) loop.points.push_back(p.get<std::vector<double>>());
  return loop;
}

inline json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  in >> j;
  return j;
}

inline void save_json(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

/// Bracket table rows "(a,b),(c,d) -> coordinates" as CSV, one row per
/// unordered pair of basis generators.
inline std::string bracket_table_csv(int n) {
  auto idx = basis_indices(n);
  std::vector<LieElement> gens;
  for (const auto& i : idx) gens.push_back(generator(n, i));
  std::ostringstream os;
  os << "pair1,pair2,decomposition\n";
  for (std::size_t p = 0; p < idx.size(); ++p)
    for (std::size_t q = p + 1; q < idx.size(); ++q) {
      auto c = t_coordinates(bracket(gens[p], gens[q]));
      os << "\"(" << idx[p].a << "," << idx[p].b << ")\",\"(" << idx[q].a << "," << idx[q].b
         << ")\",\"";
      bool first = true;
      for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 0) continue;
        if (!first) os << " + ";
        os << c[k] << "*(" << idx[k].a << "," << idx[k].b << ")";
        first = false;
      }
      if (first) os << "0";
      os << "\"\n";
    }
  return os.str();
}

}  // namespace biconn

#endif
