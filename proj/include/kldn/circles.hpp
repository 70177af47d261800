#pragma once

// Circle diagrams: the cap diagram of w' glued on top of the cup diagram of
// w, the black/red/green colouring, and the Hom-space dimensions it yields.

#include "kldn/cups.hpp"
#include "kldn/laurent.hpp"
#include "kldn/weyl.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace kldn {

enum class CircleColor { Black, Red, Green };

inline std::string color_name(CircleColor c) {
  switch (c) {
  case CircleColor::Black: return "black";
  case CircleColor::Red: return "red";
  case CircleColor::Green: return "green";
  }
  return "?";
}

struct Circle {
  /// Points in traversal order, starting at the leftmost point and leaving
  /// it along its cup.
  std::vector<int> points;
  int upper_outer = 0;  // points > n
  int lower_outer = 0;  // points < -n
  /// Distinct linked pairs with at least one arc on the circle; cup pairs
  /// and cap pairs are counted separately.
  int linked_pairs = 0;
  /// Both arcs of some linked pair lie on this circle.
  bool self_intersecting = false;
  CircleColor color = CircleColor::Green;
  friend bool operator==(const Circle&, const Circle&) = default;
};

inline CircleColor classify(int upper_outer, int lower_outer, int linked_pairs) {
  if (upper_outer == 0 && lower_outer == 0 && linked_pairs % 2 == 0) return CircleColor::Black;
  if (upper_outer > 1 || lower_outer > 1 || linked_pairs % 2 != 0) return CircleColor::Red;
  return CircleColor::Green;
}

struct ColoredCircleDiagram {
  int n = 0;
  PMSequence cap_element;  // w', drawn as caps
  PMSequence cup_element;  // w, drawn as cups
  std::vector<Circle> circles;

  int count(CircleColor c) const {
    int k = 0;
    for (const Circle& x : circles) k += x.color == c;
    return k;
  }
  int black() const { return count(CircleColor::Black); }
  int red() const { return count(CircleColor::Red); }
  int green() const { return count(CircleColor::Green); }
  friend bool operator==(const ColoredCircleDiagram&, const ColoredCircleDiagram&) = default;
};

inline ColoredCircleDiagram circle_diagram(const PMSequence& wprime, const PMSequence& w) {
  if (wprime.size() != w.size()) throw std::invalid_argument("circle_diagram: size mismatch");
  const int n = w.size();
  const FullCupDiagram cups = cup_diagram(w), caps = cup_diagram(wprime);
  ColoredCircleDiagram out{n, wprime, w, {}};
  std::vector<char> seen(static_cast<std::size_t>(4 * n), 0);
  for (int start = 0; start < 4 * n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    Circle c;
    std::set<int> cup_links, cap_links;
    std::map<std::pair<int, int>, int> arcs_per_link;  // (0 cup / 1 cap, id) -> arcs on the circle
    int idx = start;
    do {
      seen[static_cast<std::size_t>(idx)] = 1;
      c.points.push_back(point_at(n, idx));
      const int next = cups.partner_index(idx);
      if (int id = cups.link_id_index(idx); id != -1) cup_links.insert(id), ++arcs_per_link[{0, id}];
      seen[static_cast<std::size_t>(next)] = 1;
      c.points.push_back(point_at(n, next));
      if (int id = caps.link_id_index(next); id != -1) cap_links.insert(id), ++arcs_per_link[{1, id}];
      idx = caps.partner_index(next);
    } while (idx != start);
    for (int p : c.points) {
      c.upper_outer += p > n;
      c.lower_outer += p < -n;
    }
    c.linked_pairs = static_cast<int>(cup_links.size() + cap_links.size());
    for (const auto& [key, arcs] : arcs_per_link) c.self_intersecting |= arcs == 2;
    c.color = classify(c.upper_outer, c.lower_outer, c.linked_pairs);
    out.circles.push_back(std::move(c));
  }
  return out;
}

/// 2^(bk/2) * 0^rd with 0^0 = 1.
inline Integer hom_dim(const PMSequence& w, const PMSequence& wprime) {
  const ColoredCircleDiagram d = circle_diagram(wprime, w);
  if (d.red() > 0) return 0;
  const int bk = d.black();
  if (bk % 2 != 0) throw std::logic_error("hom_dim: odd number of black circles");
  Integer r = 1;
  r <<= static_cast<unsigned>(bk / 2);
  return r;
}

/// Labellings of a single circle that alternate along it and respect the
/// frozen outer labels and antisymmetry among its own points.
inline int circle_orientation_count(int n, const Circle& c) {
  int count = 0;
  for (Label first : {Label::Down, Label::Up}) {
    std::map<int, Label> lab;
    Label l = first;
    for (int p : c.points) {
      lab[p] = l;
      l = opposite(l);
    }
    bool ok = true;
    for (const auto& [p, x] : lab) {
      if (p > n && x != Label::Up) ok = false;
      if (p < -n && x != Label::Down) ok = false;
      if (auto it = lab.find(-p); it != lab.end() && it->second == x) ok = false;
    }
    count += ok;
  }
  return count;
}

/// Core sign sequences (of any parity) whose weights orient both diagrams.
inline std::vector<std::vector<Sign>> orienting_sequences(const PMSequence& w, const PMSequence& wprime) {
  const int n = w.size();
  if (n > 20) throw std::invalid_argument("orienting_sequences: n too large");
  const FullCupDiagram a = cup_diagram(w), b = cup_diagram(wprime);
  std::vector<std::vector<Sign>> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    std::vector<Sign> core(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) core[static_cast<std::size_t>(i)] = (mask >> (n - 1 - i)) & 1u ? Sign::Minus : Sign::Plus;
    const Weight v(core);
    if (orient(v, a) && orient(v, b)) out.push_back(std::move(core));
  }
  return out;
}

struct OrientedCircleDiagram {
  PMSequence w;
  PMSequence wprime;
  PMSequence v;
  int degree;
};

/// One entry per weight orienting both C(w) and C(w'), with degree
/// (clockwise cups + clockwise caps) / 2.
inline std::vector<OrientedCircleDiagram> oriented_basis(const PMSequence& w, const PMSequence& wprime) {
  if (w.size() != wprime.size()) throw std::invalid_argument("oriented_basis: size mismatch");
  const FullCupDiagram a = cup_diagram(w), b = cup_diagram(wprime);
  std::vector<OrientedCircleDiagram> out;
  for (const PMSequence& v : enumerate_wp(w.size())) {
    const Weight wt(v);
    const auto x = orient(wt, a), y = orient(wt, b);
    if (!x || !y) continue;
    if ((*x + *y) % 2 != 0) throw std::logic_error("oriented_basis: odd clockwise count");
    out.push_back({w, wprime, v, (*x + *y) / 2});
  }
  return out;
}

inline LaurentPoly graded_poincare(const PMSequence& w) {
  LaurentPoly p;
  for (const PMSequence& x : enumerate_wp(w.size()))
    for (const OrientedCircleDiagram& o : oriented_basis(x, w)) p += LaurentPoly::monomial(o.degree);
  return p;
}

inline Integer dim_endomorphism_algebra(int n) {
  const std::vector<PMSequence> all = enumerate_wp(n);
  Integer total = 0;
  for (const PMSequence& w : all)
    for (const PMSequence& x : all) total += hom_dim(w, x);
  return total;
}

} // namespace kldn
