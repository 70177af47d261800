#pragma once

// Plain-text pictures. Point k sits in column 2(k-1); the column after a
// point holds '*' when the cup starting there, or the edge there, is dotted.

#include "kldn/circles.hpp"
#include "kldn/cups.hpp"
#include "kldn/tangles.hpp"
#include "kldn/weyl.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace kldn {

namespace detail {

inline std::string rtrim(std::string s) {
  s.erase(s.find_last_not_of(' ') + 1);
  return s;
}

inline std::string arc_row(int n, const std::vector<Cup>& cups, const std::vector<Edge>& edges) {
  std::string row(static_cast<std::size_t>(std::max(2 * n - 1, 0) + 1), ' ');
  auto col = [](int p) { return static_cast<std::size_t>(2 * (p - 1)); };
  for (const Cup& c : cups) {
    row[col(c.from)] = '(';
    row[col(c.to)] = ')';
    if (c.dotted) row[col(c.from) + 1] = '*';
  }
  for (const Edge& e : edges) {
    row[col(e.at)] = '|';
    if (e.dotted) row[col(e.at) + 1] = '*';
  }
  return rtrim(row);
}

} // namespace detail

/// Two rows: the signs of the corresponding sequence, then the arcs.
inline std::string render_cup(const DecoratedCupDiagram& d) {
  std::string labels;
  std::optional<PMSequence> w;
  try {
    w = sequence_of(d);
  } catch (const std::invalid_argument&) {
  }
  for (int p = 1; p <= d.n(); ++p) {
    if (p > 1) labels += ' ';
    labels += w ? sign_char(w->at(p)) : '.';
  }
  return labels + '\n' + detail::arc_row(d.n(), d.cups(), d.edges()) + '\n';
}

/// Top row shows cups and through strands, bottom row shows caps and
/// through strands, and a third line lists where each through strand goes.
inline std::string render_tangle(const DecoratedTangle& t) {
  std::vector<Cup> top_cups, bottom_caps;
  std::vector<Edge> top_edges, bottom_edges;
  std::ostringstream through;
  for (const Strand& s : t.strands()) {
    const int lo = std::min(s.a.pos, s.b.pos), hi = std::max(s.a.pos, s.b.pos);
    if (s.a.side == Side::Top && s.b.side == Side::Top) {
      top_cups.push_back({lo, hi, s.dotted});
    } else if (s.a.side == Side::Bottom && s.b.side == Side::Bottom) {
      bottom_caps.push_back({lo, hi, s.dotted});
    } else {
      top_edges.push_back({s.b.pos, s.dotted});
      bottom_edges.push_back({s.a.pos, false});
      through << ' ' << s.a.pos << '-' << s.b.pos;
    }
  }
  std::string out = "top    " + detail::arc_row(t.top_size(), top_cups, top_edges) + '\n';
  out += "bottom " + detail::arc_row(t.bottom_size(), bottom_caps, bottom_edges) + '\n';
  out += "through" + (through.str().empty() ? std::string(" none") : through.str()) + '\n';
  if (t.has_dotted_loop()) out += "dotted loop\n";
  return out;
}

inline std::string render_circles(const ColoredCircleDiagram& d) {
  std::ostringstream os;
  os << "caps " << d.cap_element << " over cups " << d.cup_element << '\n';
  int k = 0;
  for (const Circle& c : d.circles) {
    os << "circle " << ++k << ": " << color_name(c.color) << "  upper " << c.upper_outer << "  lower "
       << c.lower_outer << "  linked " << c.linked_pairs << (c.self_intersecting ? "  self-intersecting" : "")
       << "  points";
    for (int p : c.points) os << ' ' << p;
    os << '\n';
  }
  os << "black " << d.black() << "  red " << d.red() << "  green " << d.green() << '\n';
  return os.str();
}

inline std::string render_young(const SymYoungDiagram& y) {
  std::string out;
  for (int r : y.rows()) out += std::string(static_cast<std::size_t>(r), '#') + std::string(static_cast<std::size_t>(y.n() - r), '.') + '\n';
  return out;
}

} // namespace kldn
