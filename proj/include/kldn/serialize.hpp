#pragma once

// JSON encodings. Decoders accept exactly what the encoders produce and
// rebuild validated values.

#include "kldn/circles.hpp"
#include "kldn/cups.hpp"
#include "kldn/hecke.hpp"
#include "kldn/laurent.hpp"
#include "kldn/tangles.hpp"
#include "kldn/weyl.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace kldn {

using json = nlohmann::json;

inline json encode(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

inline Integer decode_integer(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) return Integer(j.get<std::string>());
  throw std::invalid_argument("expected an integer or a decimal string");
}

/// [{exp, coeff}] in ascending exponent order.
inline json encode(const LaurentPoly& p) {
  json a = json::array();
  for (const auto& [e, c] : p.terms()) a.push_back({{"exp", e}, {"coeff", encode(c)}});
  return a;
}

inline LaurentPoly decode_laurent(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("Laurent polynomial: expected an array of terms");
  LaurentPoly p;
  for (const json& t : j) p += LaurentPoly::monomial(t.at("exp").get<int>(), decode_integer(t.at("coeff")));
  return p;
}

inline json encode(const PMSequence& w) { return w.to_string(); }
inline PMSequence decode_sequence(const json& j) { return PMSequence::parse(j.get<std::string>()); }

inline json encode(const KLTable& t) {
  json rows = json::array();
  for (const PMSequence& w : t.order) {
    json terms = json::array();
    for (const PMSequence& v : t.order)
      if (auto c = t.poly(v, w); !c.is_zero()) terms.push_back({{"wprime", encode(v)}, {"poly", encode(c)}});
    rows.push_back({{"w", encode(w)}, {"terms", terms}});
  }
  return {{"n", t.n}, {"rows", rows}};
}

inline json encode(const DecoratedCupDiagram& d) {
  json cups = json::array(), edges = json::array();
  for (const Cup& c : d.cups()) cups.push_back({{"from", c.from}, {"to", c.to}, {"dotted", c.dotted}});
  for (const Edge& e : d.edges()) edges.push_back({{"at", e.at}, {"dotted", e.dotted}});
  return {{"n", d.n()}, {"cups", cups}, {"edges", edges}};
}

inline DecoratedCupDiagram decode_cup_diagram(const json& j) {
  std::vector<Cup> cups;
  std::vector<Edge> edges;
  for (const json& c : j.at("cups")) cups.push_back({c.at("from").get<int>(), c.at("to").get<int>(), c.at("dotted").get<bool>()});
  for (const json& e : j.at("edges")) edges.push_back({e.at("at").get<int>(), e.at("dotted").get<bool>()});
  return DecoratedCupDiagram(j.at("n").get<int>(), std::move(cups), std::move(edges));
}

/// Boundary points are numbered 1..m along the bottom, then m+1..m+n along
/// the top, both left to right.
inline json encode(const DecoratedTangle& t) {
  const int m = t.bottom_size();
  auto number = [m](Endpoint e) { return e.side == Side::Bottom ? e.pos : m + e.pos; };
  json strands = json::array();
  for (const Strand& s : t.strands())
    strands.push_back({{"ends", {number(s.a), number(s.b)}}, {"dotted", s.dotted}});
  json out = {{"m", m}, {"n", t.top_size()}, {"strands", strands}};
  if (t.has_dotted_loop()) out["dotted_loop"] = true;
  return out;
}

inline DecoratedTangle decode_tangle(const json& j) {
  const int m = j.at("m").get<int>(), n = j.at("n").get<int>();
  auto endpoint = [m, n](int p) {
    if (p < 1 || p > m + n) throw std::invalid_argument("tangle: boundary point " + std::to_string(p) + " out of range");
    return p <= m ? Endpoint{Side::Bottom, p} : Endpoint{Side::Top, p - m};
  };
  std::vector<Strand> strands;
  for (const json& s : j.at("strands")) {
    const json& ends = s.at("ends");
    if (!ends.is_array() || ends.size() != 2) throw std::invalid_argument("tangle: a strand needs two ends");
    strands.push_back({endpoint(ends[0].get<int>()), endpoint(ends[1].get<int>()), s.at("dotted").get<bool>()});
  }
  return DecoratedTangle(m, n, strands, j.value("dotted_loop", false));
}

inline json encode(const ColoredCircleDiagram& d) {
  json circles = json::array();
  for (const Circle& c : d.circles)
    circles.push_back({{"color", color_name(c.color)},
                       {"upper_outer", c.upper_outer},
                       {"lower_outer", c.lower_outer},
                       {"linked_pairs", c.linked_pairs},
                       {"self_intersecting", c.self_intersecting},
                       {"points", c.points}});
  return {{"n", d.n}, {"w", encode(d.cup_element)}, {"wprime", encode(d.cap_element)}, {"circles", circles}};
}

inline CircleColor decode_color(const std::string& s) {
  if (s == "black") return CircleColor::Black;
  if (s == "red") return CircleColor::Red;
  if (s == "green") return CircleColor::Green;
  throw std::invalid_argument("unknown circle color '" + s + "'");
}

inline ColoredCircleDiagram decode_circle_diagram(const json& j) {
  ColoredCircleDiagram d{j.at("n").get<int>(), decode_sequence(j.at("wprime")), decode_sequence(j.at("w")), {}};
  for (const json& c : j.at("circles")) {
    Circle x;
    x.points = c.at("points").get<std::vector<int>>();
    x.upper_outer = c.at("upper_outer").get<int>();
    x.lower_outer = c.at("lower_outer").get<int>();
    x.linked_pairs = c.at("linked_pairs").get<int>();
    x.self_intersecting = c.at("self_intersecting").get<bool>();
    x.color = decode_color(c.at("color").get<std::string>());
    d.circles.push_back(std::move(x));
  }
  return d;
}

inline json hom_matrix_json(int n) {
  const std::vector<PMSequence> order = enumerate_wp(n);
  json dims = json::array();
  for (const PMSequence& w : order) {
    json row = json::array();
    for (const PMSequence& x : order) row.push_back(encode(hom_dim(w, x)));
    dims.push_back(row);
  }
  json o = json::array();
  for (const PMSequence& w : order) o.push_back(encode(w));
  return {{"n", n}, {"order", o}, {"dims", dims}};
}

inline json encode(const Matrix<LaurentPoly>& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(encode(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

} // namespace kldn
