#pragma once

// Symmetric cup diagrams on the 4n points -2n..-1, 1..2n, their cut form on
// n points, and the orientation formula for KL polynomials.

#include "kldn/laurent.hpp"
#include "kldn/weyl.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace kldn {

enum class Label : std::uint8_t { Down, Up };

inline Label opposite(Label l) { return l == Label::Up ? Label::Down : Label::Up; }
inline Label label_of(Sign s) { return s == Sign::Plus ? Label::Down : Label::Up; }

/// Points are -2n..-1, 1..2n; index 0..4n-1 runs left to right.
inline int point_index(int n, int p) {
  if (p == 0 || p < -2 * n || p > 2 * n) throw std::out_of_range("point " + std::to_string(p) + " out of range");
  return p < 0 ? p + 2 * n : p + 2 * n - 1;
}
inline int point_at(int n, int index) {
  if (index < 0 || index >= 4 * n) throw std::out_of_range("point index out of range");
  return index < 2 * n ? index - 2 * n : index - 2 * n + 1;
}

/// Up/Down labels on all 4n points: frozen Down on the far left, frozen Up
/// on the far right, antisymmetric in between.
class Weight {
public:
  explicit Weight(const PMSequence& core) : Weight(core.entries()) {}

  /// Any sign sequence, even or not; used to show that only even ones orient.
  explicit Weight(const std::vector<Sign>& core) : n_(static_cast<int>(core.size())) {
    if (n_ < 1) throw std::invalid_argument("Weight: n must be at least 1");
    labels_.resize(static_cast<std::size_t>(4 * n_));
    for (int i = 1; i <= 2 * n_; ++i) {
      const Label l = i > n_ ? Label::Up : label_of(core[static_cast<std::size_t>(i - 1)]);
      labels_[static_cast<std::size_t>(point_index(n_, i))] = l;
      labels_[static_cast<std::size_t>(point_index(n_, -i))] = opposite(l);
    }
  }

  int n() const { return n_; }
  Label at(int p) const { return labels_[static_cast<std::size_t>(point_index(n_, p))]; }
  Label at_index(int idx) const { return labels_[static_cast<std::size_t>(idx)]; }
  int up_count_core() const {
    int c = 0;
    for (int i = 1; i <= n_; ++i) c += at(i) == Label::Up;
    return c;
  }
  friend bool operator==(const Weight&, const Weight&) = default;

private:
  int n_;
  std::vector<Label> labels_;
};

/// Perfect matching on the 4n points; arcs are (left, right) point pairs.
struct Arc {
  int left;
  int right;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// The unique planar matching of the extended sequence in which every arc
/// joins a plus (left) to a minus (right).
inline std::vector<Arc> matching(const PMSequence& alpha) {
  const int n = alpha.size();
  std::vector<int> stack;
  std::vector<Arc> arcs;
  for (int idx = 0; idx < 4 * n; ++idx) {
    const int p = point_at(n, idx);
    Sign s;
    if (p < -n) s = Sign::Plus;
    else if (p > n) s = Sign::Minus;
    else if (p > 0) s = alpha.at(p);
    else s = opposite(alpha.at(-p));
    if (s == Sign::Plus) {
      stack.push_back(p);
    } else {
      if (stack.empty()) throw std::logic_error("matching: unbalanced extended sequence");
      arcs.push_back({stack.back(), p});
      stack.pop_back();
    }
  }
  if (!stack.empty()) throw std::logic_error("matching: unbalanced extended sequence");
  std::sort(arcs.begin(), arcs.end());
  return arcs;
}

/// Symmetric cup diagram. Linked pairs are recorded by id; the two arcs of
/// a pair are mirror images of each other and cross the middle.
class FullCupDiagram {
public:
  FullCupDiagram(int n, std::vector<Arc> arcs, std::vector<std::pair<Arc, Arc>> linked)
      : n_(n), arcs_(std::move(arcs)), linked_(std::move(linked)) {
    partner_.assign(static_cast<std::size_t>(4 * n_), -1);
    link_id_.assign(static_cast<std::size_t>(4 * n_), -1);
    for (const Arc& a : arcs_) {
      const int i = point_index(n_, a.left), j = point_index(n_, a.right);
      if (a.left >= a.right || partner_[i] != -1 || partner_[j] != -1)
        throw std::invalid_argument("FullCupDiagram: arcs do not form a matching");
      partner_[i] = j;
      partner_[j] = i;
    }
    for (int idx = 0; idx < 4 * n_; ++idx)
      if (partner_[static_cast<std::size_t>(idx)] == -1) throw std::invalid_argument("FullCupDiagram: unmatched point");
    for (std::size_t k = 0; k < linked_.size(); ++k)
      for (const Arc& a : {linked_[k].first, linked_[k].second}) {
        if (partner_[point_index(n_, a.left)] != point_index(n_, a.right))
          throw std::invalid_argument("FullCupDiagram: linked arc is not an arc");
        link_id_[point_index(n_, a.left)] = link_id_[point_index(n_, a.right)] = static_cast<int>(k);
      }
  }

  int n() const { return n_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const std::vector<std::pair<Arc, Arc>>& linked_pairs() const { return linked_; }
  /// Partner point of p.
  int partner(int p) const { return point_at(n_, partner_[static_cast<std::size_t>(point_index(n_, p))]); }
  int partner_index(int idx) const { return partner_[static_cast<std::size_t>(idx)]; }
  /// Linked-pair id of the arc through index idx, or -1.
  int link_id_index(int idx) const { return link_id_[static_cast<std::size_t>(idx)]; }

  friend bool operator==(const FullCupDiagram& a, const FullCupDiagram& b) {
    return a.n_ == b.n_ && a.arcs_ == b.arcs_ && a.linked_ == b.linked_;
  }

private:
  int n_;
  std::vector<Arc> arcs_;
  std::vector<std::pair<Arc, Arc>> linked_;
  std::vector<int> partner_;
  std::vector<int> link_id_;
};

/// Pairs the middle-crossing arcs from the inside out: inner (a,b) and
/// outer (c,d) become the linked arcs (c,b) and (a,d).
inline FullCupDiagram cup_diagram(const PMSequence& w) {
  const int n = w.size();
  std::vector<Arc> plain, crossing;
  for (const Arc& a : matching(w)) (a.left < 0 && a.right > 0 ? crossing : plain).push_back(a);
  if (crossing.size() % 2 != 0) throw std::logic_error("cup_diagram: odd number of middle-crossing arcs");
  std::sort(crossing.begin(), crossing.end(), [](const Arc& x, const Arc& y) { return x.right < y.right; });
  std::vector<std::pair<Arc, Arc>> linked;
  for (std::size_t k = 0; k < crossing.size(); k += 2) {
    const Arc inner = crossing[k], outer = crossing[k + 1];
    const Arc x{outer.left, inner.right}, y{inner.left, outer.right};
    plain.push_back(x);
    plain.push_back(y);
    linked.emplace_back(x, y);
  }
  std::sort(plain.begin(), plain.end());
  return FullCupDiagram(n, std::move(plain), std::move(linked));
}

struct Cup {
  int from;
  int to;
  bool dotted;
  friend auto operator<=>(const Cup&, const Cup&) = default;
};

struct Edge {
  int at;
  bool dotted;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Cups and vertical edges on the top points 1..n. The constructor checks
/// the planar structure only; `is_valid` adds the parity and dot rules.
class DecoratedCupDiagram {
public:
  DecoratedCupDiagram(int n, std::vector<Cup> cups, std::vector<Edge> edges)
      : n_(n), cups_(std::move(cups)), edges_(std::move(edges)) {
    if (n_ < 1) throw std::invalid_argument("DecoratedCupDiagram: n must be at least 1");
    std::sort(cups_.begin(), cups_.end());
    std::sort(edges_.begin(), edges_.end());
    std::vector<char> used(static_cast<std::size_t>(n_ + 1), 0);
    auto claim = [&](int p) {
      if (used[static_cast<std::size_t>(p)]) throw std::invalid_argument("DecoratedCupDiagram: point " + std::to_string(p) + " used twice");
      used[static_cast<std::size_t>(p)] = 1;
    };
    for (const Cup& c : cups_) {
      if (c.from < 1 || c.to > n_ || c.from >= c.to) throw std::invalid_argument("DecoratedCupDiagram: bad cup");
      claim(c.from);
      claim(c.to);
    }
    for (const Edge& e : edges_) {
      if (e.at < 1 || e.at > n_) throw std::invalid_argument("DecoratedCupDiagram: bad edge");
      claim(e.at);
    }
    for (int p = 1; p <= n_; ++p)
      if (!used[static_cast<std::size_t>(p)]) throw std::invalid_argument("DecoratedCupDiagram: point " + std::to_string(p) + " unused");
    for (const Cup& a : cups_) {
      for (const Cup& b : cups_)
        if (a.from < b.from && b.from < a.to && a.to < b.to) throw std::invalid_argument("DecoratedCupDiagram: crossing cups");
      for (const Edge& e : edges_)
        if (a.from < e.at && e.at < a.to) throw std::invalid_argument("DecoratedCupDiagram: edge under a cup");
    }
  }

  int n() const { return n_; }
  const std::vector<Cup>& cups() const { return cups_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  int plain_cup_count() const {
    return static_cast<int>(std::count_if(cups_.begin(), cups_.end(), [](const Cup& c) { return !c.dotted; }));
  }
  int dotted_edge_count() const {
    return static_cast<int>(std::count_if(edges_.begin(), edges_.end(), [](const Edge& e) { return e.dotted; }));
  }
  bool is_even() const { return (dotted_edge_count() + plain_cup_count()) % 2 == 0; }

  bool is_nested(const Cup& c) const {
    return std::any_of(cups_.begin(), cups_.end(), [&](const Cup& o) { return o.from < c.from && c.to < o.to; });
  }
  bool has_edge_left_of(int p) const {
    return std::any_of(edges_.begin(), edges_.end(), [&](const Edge& e) { return e.at < p; });
  }
  /// Every dot can be reached from the left wall.
  bool dots_accessible() const {
    for (const Cup& c : cups_)
      if (c.dotted && (is_nested(c) || has_edge_left_of(c.from))) return false;
    for (const Edge& e : edges_)
      if (e.dotted && has_edge_left_of(e.at)) return false;
    return true;
  }
  bool is_valid() const { return is_even() && dotted_edge_count() <= 1 && dots_accessible(); }

  friend bool operator==(const DecoratedCupDiagram& a, const DecoratedCupDiagram& b) {
    return a.n_ == b.n_ && a.cups_ == b.cups_ && a.edges_ == b.edges_;
  }
  friend bool operator<(const DecoratedCupDiagram& a, const DecoratedCupDiagram& b) {
    return std::tie(a.n_, a.cups_, a.edges_) < std::tie(b.n_, b.cups_, b.edges_);
  }

private:
  int n_;
  std::vector<Cup> cups_;
  std::vector<Edge> edges_;
};

/// Restricts a symmetric diagram to the points 1..n.
inline DecoratedCupDiagram cut(const FullCupDiagram& c) {
  const int n = c.n();
  std::vector<Cup> cups;
  std::vector<Edge> edges;
  auto inside = [n](int p) { return 1 <= p && p <= n; };
  for (const Arc& a : c.arcs()) {
    if (c.link_id_index(point_index(n, a.left)) != -1) continue;
    if (inside(a.left) && inside(a.right)) cups.push_back({a.left, a.right, false});
    else if (inside(a.left) && a.right > n) edges.push_back({a.left, false});
    else if (a.left > n)
      throw std::logic_error("cut: arc beyond the core");
  }
  for (const auto& [x, y] : c.linked_pairs()) {
    const int b = std::min(x.right, y.right), d = std::max(x.right, y.right);
    if (inside(b) && inside(d)) cups.push_back({b, d, true});
    else if (inside(b)) edges.push_back({b, true});
  }
  return DecoratedCupDiagram(n, std::move(cups), std::move(edges));
}

/// The same diagram straight from the sequence: plain cups on neighbouring
/// (+,-) pairs, then dotted cups on the remaining minuses from the left, then
/// edges (dotted on a leftover minus).
inline DecoratedCupDiagram decorated_cup(const PMSequence& w) {
  const int n = w.size();
  std::vector<Cup> cups;
  std::vector<Edge> edges;
  std::vector<int> open_plus, free_minus;
  for (int p = 1; p <= n; ++p) {
    if (w.at(p) == Sign::Plus) {
      open_plus.push_back(p);
    } else if (!open_plus.empty()) {
      cups.push_back({open_plus.back(), p, false});
      open_plus.pop_back();
    } else {
      free_minus.push_back(p);
    }
  }
  std::size_t k = 0;
  for (; k + 1 < free_minus.size(); k += 2) cups.push_back({free_minus[k], free_minus[k + 1], true});
  if (k < free_minus.size()) edges.push_back({free_minus[k], true});
  for (int p : open_plus) edges.push_back({p, false});
  return DecoratedCupDiagram(n, std::move(cups), std::move(edges));
}

/// Inverse of decorated_cup on valid diagrams: a plain cup is (+,-), a
/// dotted cup (-,-), an edge is + unless dotted.
inline PMSequence sequence_of(const DecoratedCupDiagram& d) {
  std::vector<Sign> e(static_cast<std::size_t>(d.n()), Sign::Plus);
  for (const Cup& c : d.cups()) {
    if (c.dotted) e[static_cast<std::size_t>(c.from - 1)] = Sign::Minus;
    e[static_cast<std::size_t>(c.to - 1)] = Sign::Minus;
  }
  for (const Edge& x : d.edges())
    if (x.dotted) e[static_cast<std::size_t>(x.at - 1)] = Sign::Minus;
  PMSequence w(std::move(e));
  if (!(decorated_cup(w) == d)) throw std::invalid_argument("sequence_of: diagram is not an even decorated cup diagram");
  return w;
}

namespace detail {

inline void enumerate_shapes(int n, int p, std::vector<int>& open, std::vector<Cup>& cups, std::vector<Edge>& edges,
                             std::vector<DecoratedCupDiagram>& out) {
  if (p > n) {
    if (open.empty()) out.emplace_back(n, cups, edges);
    return;
  }
  // Edges may not sit under an open cup.
  if (open.empty()) {
    edges.push_back({p, false});
    enumerate_shapes(n, p + 1, open, cups, edges, out);
    edges.pop_back();
  }
  open.push_back(p);
  enumerate_shapes(n, p + 1, open, cups, edges, out);
  open.pop_back();
  if (!open.empty()) {
    const int s = open.back();
    open.pop_back();
    cups.push_back({s, p, false});
    enumerate_shapes(n, p + 1, open, cups, edges, out);
    cups.pop_back();
    open.push_back(s);
  }
}

} // namespace detail

/// Undecorated planar cup-and-edge shapes on n points.
inline std::vector<DecoratedCupDiagram> enumerate_cup_shapes(int n) {
  std::vector<DecoratedCupDiagram> out;
  std::vector<int> open;
  std::vector<Cup> cups;
  std::vector<Edge> edges;
  detail::enumerate_shapes(n, 1, open, cups, edges, out);
  return out;
}

/// All diagrams satisfying the even decorated cup diagram rules, built from
/// the shapes by trying every dot assignment (independent of decorated_cup).
inline std::vector<DecoratedCupDiagram> enumerate_decorated_cup_diagrams(int n) {
  if (n < 1 || n > 16) throw std::invalid_argument("enumerate_decorated_cup_diagrams: n out of range");
  std::vector<DecoratedCupDiagram> out;
  for (const DecoratedCupDiagram& shape : enumerate_cup_shapes(n)) {
    const std::size_t parts = shape.cups().size() + shape.edges().size();
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << parts); ++mask) {
      std::vector<Cup> cups = shape.cups();
      std::vector<Edge> edges = shape.edges();
      std::size_t bit = 0;
      for (Cup& c : cups) c.dotted = (mask >> bit++) & 1u;
      for (Edge& e : edges) e.dotted = (mask >> bit++) & 1u;
      DecoratedCupDiagram d(n, std::move(cups), std::move(edges));
      if (d.is_valid()) out.push_back(std::move(d));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Number of clockwise arcs (Up on the left end) if every arc carries one Up
/// and one Down, otherwise nothing. Decorations play no role here.
inline std::optional<int> orient(const Weight& v, const FullCupDiagram& c) {
  if (v.n() != c.n()) throw std::invalid_argument("orient: size mismatch");
  int cl = 0;
  for (const Arc& a : c.arcs()) {
    const Label l = v.at(a.left), r = v.at(a.right);
    if (l == r) return std::nullopt;
    cl += l == Label::Up;
  }
  return cl;
}

/// n_{v,w} read off the cup diagram of w: q^(cl/2) or 0.
inline LaurentPoly kl_poly_diagrammatic(const PMSequence& v, const PMSequence& w) {
  if (v.size() != w.size()) throw std::invalid_argument("kl_poly_diagrammatic: size mismatch");
  const auto cl = orient(Weight(v), cup_diagram(w));
  if (!cl) return {};
  if (*cl % 2 != 0) throw std::logic_error("kl_poly_diagrammatic: odd clockwise count");
  return LaurentPoly::monomial(*cl / 2);
}

struct Orientation {
  PMSequence v;
  int cl;
};

inline std::vector<Orientation> orientations_of(const PMSequence& w) {
  const FullCupDiagram c = cup_diagram(w);
  std::vector<Orientation> out;
  for (const PMSequence& v : enumerate_wp(w.size()))
    if (auto cl = orient(Weight(v), c)) out.push_back({v, *cl});
  return out;
}

/// Degree of the cut diagram d oriented by the core labels of v, or nothing
/// if v does not orient it. Plain cups need different labels and count 1 when
/// Up is on the left; dotted cups need equal labels and count 1 when both are
/// Down; plain edges need Down, dotted edges Up.
inline std::optional<int> cut_degree(const PMSequence& v, const DecoratedCupDiagram& d) {
  if (v.size() != d.n()) throw std::invalid_argument("cut_degree: size mismatch");
  int deg = 0;
  for (const Cup& c : d.cups()) {
    const Label l = label_of(v.at(c.from)), r = label_of(v.at(c.to));
    if (c.dotted) {
      if (l != r) return std::nullopt;
      deg += l == Label::Down;
    } else {
      if (l == r) return std::nullopt;
      deg += l == Label::Up;
    }
  }
  for (const Edge& e : d.edges())
    if (label_of(v.at(e.at)) != (e.dotted ? Label::Up : Label::Down)) return std::nullopt;
  return deg;
}

} // namespace kldn
