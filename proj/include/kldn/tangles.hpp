#pragma once

// Decorated (m,n)-tangles: m points on the bottom edge, n on the top edge,
// strands may carry a dot if nothing separates them from the left wall.
// Only the dot parity of a strand matters, so the normal form is a planar
// pairing plus one bit per strand.

#include "kldn/cups.hpp"
#include "kldn/laurent.hpp"
#include "kldn/linalg.hpp"
#include "kldn/weyl.hpp"

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace kldn {

enum class Side : std::uint8_t { Bottom, Top };

struct Endpoint {
  Side side;
  int pos;  // 1-based along the edge, left to right
  friend auto operator<=>(const Endpoint&, const Endpoint&) = default;
};

struct Strand {
  Endpoint a;
  Endpoint b;
  bool dotted;
  friend auto operator<=>(const Strand&, const Strand&) = default;
};

enum class ReductionMode { TL, TLhat };

class DecoratedTangle {
public:
  /// Checks that the strands pair all m + n points without crossings and
  /// that every dot is reachable from the left wall. `dotted_loop` records a
  /// single surviving dotted loop (only produced in TL mode).
  DecoratedTangle(int m, int n, const std::vector<Strand>& strands, bool dotted_loop = false)
      : m_(m), n_(n), dotted_loop_(dotted_loop) {
    if (m_ < 0 || n_ < 0 || (m_ + n_) % 2 != 0) throw std::invalid_argument("DecoratedTangle: bad boundary sizes");
    partner_.assign(static_cast<std::size_t>(m_ + n_), -1);
    dot_.assign(static_cast<std::size_t>(m_ + n_), 0);
    for (const Strand& s : strands) {
      const int i = index(s.a), j = index(s.b);
      if (i == j || partner_[static_cast<std::size_t>(i)] != -1 || partner_[static_cast<std::size_t>(j)] != -1)
        throw std::invalid_argument("DecoratedTangle: endpoint used twice");
      link(i, j, s.dotted);
    }
    validate();
  }

  static DecoratedTangle identity(int n) {
    std::vector<Strand> s;
    for (int k = 1; k <= n; ++k) s.push_back({{Side::Bottom, k}, {Side::Top, k}, false});
    return DecoratedTangle(n, n, s);
  }

  int bottom_size() const { return m_; }
  int top_size() const { return n_; }
  bool has_dotted_loop() const { return dotted_loop_; }

  /// Index 0..m-1 for bottom points, m..m+n-1 for top points.
  int index(Endpoint e) const {
    const int size = e.side == Side::Bottom ? m_ : n_;
    if (e.pos < 1 || e.pos > size) throw std::out_of_range("DecoratedTangle: endpoint out of range");
    return e.side == Side::Bottom ? e.pos - 1 : m_ + e.pos - 1;
  }
  Endpoint endpoint(int idx) const {
    return idx < m_ ? Endpoint{Side::Bottom, idx + 1} : Endpoint{Side::Top, idx - m_ + 1};
  }
  int partner_index(int idx) const { return partner_[static_cast<std::size_t>(idx)]; }
  bool dotted_index(int idx) const { return dot_[static_cast<std::size_t>(idx)]; }
  Endpoint partner(Endpoint e) const { return endpoint(partner_index(index(e))); }

  /// Strands with a < b, sorted.
  std::vector<Strand> strands() const {
    std::vector<Strand> out;
    for (int i = 0; i < m_ + n_; ++i) {
      const int j = partner_index(i);
      if (i < j) out.push_back({endpoint(i), endpoint(j), dotted_index(i)});
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  int through_count() const {
    int c = 0;
    for (int i = 0; i < m_; ++i) c += partner_index(i) >= m_;
    return c;
  }
  int dot_count() const {
    int c = 0;
    for (int i = 0; i < m_ + n_; ++i) c += dot_[static_cast<std::size_t>(i)] && i < partner_index(i);
    return c + dotted_loop_;
  }
  /// Undotted strands with both ends on the top edge.
  int plain_top_cups() const { return plain_arcs_on(Side::Top); }
  int plain_bottom_caps() const { return plain_arcs_on(Side::Bottom); }

  /// Leftmost through strand as (bottom index, top index), if any.
  std::optional<std::pair<int, int>> leftmost_through() const {
    for (int i = 0; i < m_; ++i)
      if (partner_index(i) >= m_) return std::make_pair(i, partner_index(i));
    return std::nullopt;
  }

  /// Reflection in a horizontal line: bottom and top swap.
  DecoratedTangle star() const {
    std::vector<Strand> s;
    for (Strand x : strands()) {
      x.a.side = x.a.side == Side::Bottom ? Side::Top : Side::Bottom;
      x.b.side = x.b.side == Side::Bottom ? Side::Top : Side::Bottom;
      s.push_back(x);
    }
    return DecoratedTangle(n_, m_, s, dotted_loop_);
  }

  /// A basis element of the quotient algebra: no loops and an even number of dots.
  bool is_normal_form() const { return !dotted_loop_ && dot_count() % 2 == 0; }

  friend bool operator==(const DecoratedTangle&, const DecoratedTangle&) = default;
  friend auto operator<=>(const DecoratedTangle&, const DecoratedTangle&) = default;

private:
  friend DecoratedTangle tangle_from_pairing(int, int, std::vector<int>, std::vector<char>, bool);
  DecoratedTangle() = default;

  void link(int i, int j, bool dotted) {
    partner_[static_cast<std::size_t>(i)] = j;
    partner_[static_cast<std::size_t>(j)] = i;
    dot_[static_cast<std::size_t>(i)] = dot_[static_cast<std::size_t>(j)] = dotted;
  }

  /// Position on the boundary read from the left wall: bottom 1..m, then
  /// top n..1.
  int boundary_position(int idx) const { return idx < m_ ? idx : m_ + (n_ - 1 - (idx - m_)); }

  void validate() const {
    for (int i = 0; i < m_ + n_; ++i)
      if (partner_index(i) == -1) throw std::invalid_argument("DecoratedTangle: unpaired endpoint");
    std::vector<std::pair<int, int>> spans;
    for (int i = 0; i < m_ + n_; ++i) {
      int a = boundary_position(i), b = boundary_position(partner_index(i));
      if (a < b) spans.emplace_back(a, b);
    }
    for (const auto& [a, b] : spans)
      for (const auto& [c, d] : spans)
        if (a < c && c < b && b < d) throw std::invalid_argument("DecoratedTangle: strands cross");
    for (int i = 0; i < m_ + n_; ++i) {
      if (!dot_[static_cast<std::size_t>(i)]) continue;
      const int a = std::min(boundary_position(i), boundary_position(partner_index(i)));
      const int b = std::max(boundary_position(i), boundary_position(partner_index(i)));
      for (const auto& [c, d] : spans)
        if (c < a && b < d) throw std::invalid_argument("DecoratedTangle: dot not accessible from the left");
    }
  }

  int plain_arcs_on(Side side) const {
    int c = 0;
    for (int i = 0; i < m_ + n_; ++i) {
      const int j = partner_index(i);
      if (i < j && endpoint(i).side == side && endpoint(j).side == side && !dotted_index(i)) ++c;
    }
    return c;
  }

  int m_ = 0, n_ = 0;
  std::vector<int> partner_;
  std::vector<char> dot_;
  bool dotted_loop_ = false;
};

inline DecoratedTangle tangle_from_pairing(int m, int n, std::vector<int> partner, std::vector<char> dot,
                                             bool dotted_loop) {
  DecoratedTangle t;
  t.m_ = m;
  t.n_ = n;
  t.partner_ = std::move(partner);
  t.dot_ = std::move(dot);
  t.dotted_loop_ = dotted_loop;
  t.validate();
  return t;
}

/// A scalar multiple of a tangle, or zero.
struct TangleScalarPair {
  LaurentPoly coeff;
  std::optional<DecoratedTangle> tangle;
  bool is_zero() const { return !tangle; }
  static TangleScalarPair zero() { return {LaurentPoly(), std::nullopt}; }
};

/// e_i on n strands; e_0 is e_1 with a dot on its cup and on its cap.
inline DecoratedTangle generator(int n, GeneratorIndex i) {
  if (n < 2) throw std::invalid_argument("generator: n must be at least 2");
  i.check(n);
  const int a = i.value == 0 ? 1 : i.value;
  const bool dotted = i.value == 0;
  std::vector<Strand> s{{{Side::Bottom, a}, {Side::Bottom, a + 1}, dotted}, {{Side::Top, a}, {Side::Top, a + 1}, dotted}};
  for (int k = 1; k <= n; ++k)
    if (k != a && k != a + 1) s.push_back({{Side::Bottom, k}, {Side::Top, k}, false});
  return DecoratedTangle(n, n, s);
}

namespace detail {

struct Glued {
  DecoratedTangle tangle;  // loops removed
  int plain_loops = 0;
  int dotted_loops = 0;
};

/// Puts `upper` on top of `lower` and follows every strand through the
/// middle, adding up dots modulo 2.
inline Glued glue(const DecoratedTangle& lower, const DecoratedTangle& upper) {
  const int m = lower.bottom_size(), k = lower.top_size(), p = upper.top_size();
  if (upper.bottom_size() != k)
    throw std::invalid_argument("tangle composition: " + std::to_string(k) + " points meet " +
                                std::to_string(upper.bottom_size()));
  std::vector<int> partner(static_cast<std::size_t>(m + p), -1);
  std::vector<char> dot(static_cast<std::size_t>(m + p), 0);
  std::vector<char> middle_seen(static_cast<std::size_t>(k), 0);

  // Follows from a point of `lower` (in_lower) or `upper` at index idx, which
  // is an outer point; returns the outer end in result numbering.
  auto walk = [&](bool in_lower, int idx, bool& parity) {
    for (;;) {
      if (in_lower) {
        const int j = lower.partner_index(idx);
        parity ^= lower.dotted_index(idx);
        if (j < m) return j;
        middle_seen[static_cast<std::size_t>(j - m)] = 1;
        in_lower = false;
        idx = j - m;
      } else {
        const int j = upper.partner_index(idx);
        parity ^= upper.dotted_index(idx);
        if (j >= k) return m + (j - k);
        middle_seen[static_cast<std::size_t>(j)] = 1;
        in_lower = true;
        idx = m + j;
      }
    }
  };
  for (int r = 0; r < m + p; ++r) {
    if (partner[static_cast<std::size_t>(r)] != -1) continue;
    bool parity = false;
    const int end = r < m ? walk(true, r, parity) : walk(false, k + (r - m), parity);
    partner[static_cast<std::size_t>(r)] = end;
    partner[static_cast<std::size_t>(end)] = r;
    dot[static_cast<std::size_t>(r)] = dot[static_cast<std::size_t>(end)] = parity;
  }
  Glued g{tangle_from_pairing(m, p, std::move(partner), std::move(dot), false), 0, 0};
  for (int j = 0; j < k; ++j) {
    if (middle_seen[static_cast<std::size_t>(j)]) continue;
    // A closed loop through middle point j.
    bool parity = false;
    int cur = j;
    do {
      middle_seen[static_cast<std::size_t>(cur)] = 1;
      const int a = upper.partner_index(cur);
      parity ^= upper.dotted_index(cur);
      middle_seen[static_cast<std::size_t>(a)] = 1;
      const int b = lower.partner_index(m + a);
      parity ^= lower.dotted_index(m + a);
      cur = b - m;
    } while (cur != j);
    (parity ? g.dotted_loops : g.plain_loops) += 1;
  }
  g.dotted_loops += lower.has_dotted_loop() + upper.has_dotted_loop();
  return g;
}

inline LaurentPoly loop_power(int k) {
  LaurentPoly r = 1;
  for (int i = 0; i < k; ++i) r *= LaurentPoly::loop_value();
  return r;
}

inline DecoratedTangle strip_dots(const DecoratedTangle& t, bool dotted_loop) {
  std::vector<Strand> s = t.strands();
  for (Strand& x : s) x.dotted = false;
  return DecoratedTangle(t.bottom_size(), t.top_size(), s, dotted_loop);
}

/// Square tangle without through strands and with an odd number of plain
/// cups; for even n these span the ideal that acts by zero.
inline bool in_ideal_i(const DecoratedTangle& t) {
  return t.bottom_size() == t.top_size() && t.top_size() % 2 == 0 && t.through_count() == 0 &&
         t.plain_top_cups() % 2 == 1;
}

} // namespace detail

/// Puts b on top of a and reduces: a plain loop is q + q^-1, two dots on one
/// strand cancel. A loop with one dot is zero in TLhat mode; in TL mode one
/// such loop survives, erases every other dot, and further dotted loops
/// count as plain ones. TLhat mode also kills the even-n ideal spanned by
/// edgeless square tangles with an odd number of plain cups.
inline TangleScalarPair concat_reduce(const DecoratedTangle& a, const DecoratedTangle& b, ReductionMode mode) {
  detail::Glued g = detail::glue(a, b);
  if (g.dotted_loops > 0) {
    if (mode == ReductionMode::TLhat) return TangleScalarPair::zero();
    return {detail::loop_power(g.plain_loops + g.dotted_loops - 1), detail::strip_dots(g.tangle, true)};
  }
  if (mode == ReductionMode::TLhat && detail::in_ideal_i(g.tangle)) return TangleScalarPair::zero();
  return {detail::loop_power(g.plain_loops), std::move(g.tangle)};
}

/// Algebra product: x drawn on top of y.
inline TangleScalarPair multiply(const DecoratedTangle& x, const DecoratedTangle& y,
                                 ReductionMode mode = ReductionMode::TLhat) {
  return concat_reduce(y, x, mode);
}

/// A cup diagram with k edges as a (k,n) tangle: the j-th edge from the left
/// ends at bottom point j.
inline DecoratedTangle as_tangle(const DecoratedCupDiagram& d) {
  std::vector<Strand> s;
  for (const Cup& c : d.cups()) s.push_back({{Side::Top, c.from}, {Side::Top, c.to}, c.dotted});
  int j = 0;
  for (const Edge& e : d.edges()) s.push_back({{Side::Bottom, ++j}, {Side::Top, e.at}, e.dotted});
  return DecoratedTangle(d.edge_count(), d.n(), s);
}

/// Top half of a tangle with no caps, read back as a cup diagram.
inline DecoratedCupDiagram as_cup_diagram(const DecoratedTangle& t) {
  std::vector<Cup> cups;
  std::vector<Edge> edges;
  for (const Strand& s : t.strands()) {
    if (s.a.side == Side::Top && s.b.side == Side::Top)
      cups.push_back({std::min(s.a.pos, s.b.pos), std::max(s.a.pos, s.b.pos), s.dotted});
    else if (s.a.side == Side::Bottom && s.b.side == Side::Top)
      edges.push_back({s.b.pos, s.dotted});
    else
      throw std::invalid_argument("as_cup_diagram: tangle has caps");
  }
  return DecoratedCupDiagram(t.top_size(), std::move(cups), std::move(edges));
}

struct CupScalarPair {
  LaurentPoly coeff;
  std::optional<DecoratedCupDiagram> diagram;
  bool is_zero() const { return !diagram; }
};

/// t placed on top of d. Loops reduce as in TLhat; afterwards a plain cap
/// joining two edges gives zero and a dotted one is removed.
inline CupScalarPair act(const DecoratedTangle& t, const DecoratedCupDiagram& d) {
  if (t.bottom_size() != d.n()) throw std::invalid_argument("act: size mismatch");
  detail::Glued g = detail::glue(as_tangle(d), t);
  if (g.dotted_loops > 0) return {LaurentPoly(), std::nullopt};
  std::vector<Strand> kept;
  for (const Strand& s : g.tangle.strands()) {
    if (s.a.side == Side::Bottom && s.b.side == Side::Bottom) {
      if (!s.dotted) return {LaurentPoly(), std::nullopt};
      continue;
    }
    kept.push_back(s);
  }
  std::vector<Cup> cups;
  std::vector<Edge> edges;
  for (const Strand& s : kept) {
    if (s.a.side == Side::Top && s.b.side == Side::Top)
      cups.push_back({std::min(s.a.pos, s.b.pos), std::max(s.a.pos, s.b.pos), s.dotted});
    else
      edges.push_back({s.b.pos, s.dotted});
  }
  return {detail::loop_power(g.plain_loops), DecoratedCupDiagram(d.n(), std::move(cups), std::move(edges))};
}

namespace detail {

/// Non-crossing perfect matchings of the points lo..hi, as (left, right) pairs.
inline std::vector<std::vector<std::pair<int, int>>> noncrossing(int lo, int hi) {
  if (lo > hi) return {{}};
  std::vector<std::vector<std::pair<int, int>>> out;
  for (int j = lo + 1; j <= hi; j += 2)
    for (const auto& inner : noncrossing(lo + 1, j - 1))
      for (const auto& rest : noncrossing(j + 1, hi)) {
        auto m = inner;
        m.emplace_back(lo, j);
        m.insert(m.end(), rest.begin(), rest.end());
        out.push_back(std::move(m));
      }
  return out;
}

} // namespace detail

/// Undecorated planar (n,n) pairings, as tangles.
inline std::vector<DecoratedTangle> tl_diagrams(int n) {
  if (n < 1 || n > 10) throw std::invalid_argument("tl_diagrams: n out of range");
  // Boundary position b < n is bottom point b+1, otherwise top point 2n-b.
  auto at = [n](int b) { return b < n ? Endpoint{Side::Bottom, b + 1} : Endpoint{Side::Top, 2 * n - b}; };
  std::vector<DecoratedTangle> out;
  for (const auto& mt : detail::noncrossing(0, 2 * n - 1)) {
    std::vector<Strand> s;
    for (const auto& [x, y] : mt) s.push_back({at(x), at(y), false});
    out.emplace_back(n, n, s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Every way to put dots on a diagram: at most one per strand, only on
/// strands reachable from the left wall, evenly many in total.
inline std::vector<DecoratedTangle> even_decorations(const DecoratedTangle& shape) {
  const std::vector<Strand> base = shape.strands();
  std::vector<std::size_t> free;
  for (std::size_t k = 0; k < base.size(); ++k) {
    std::vector<Strand> s = base;
    s[k].dotted = true;
    try {
      DecoratedTangle(shape.bottom_size(), shape.top_size(), s);
      free.push_back(k);
    } catch (const std::invalid_argument&) {
    }
  }
  std::vector<DecoratedTangle> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << free.size()); ++mask) {
    if (__builtin_popcount(mask) % 2 != 0) continue;
    std::vector<Strand> s = base;
    for (std::size_t b = 0; b < free.size(); ++b) s[free[b]].dotted = (mask >> b) & 1u;
    out.emplace_back(shape.bottom_size(), shape.top_size(), s);
  }
  return out;
}

/// Basis of the quotient that acts faithfully on even decorated cup diagrams.
inline std::vector<DecoratedTangle> tlhat_basis(int n) {
  if (n < 3) throw std::invalid_argument("tlhat_basis: n must be at least 3");
  std::vector<DecoratedTangle> out;
  for (const DecoratedTangle& shape : tl_diagrams(n))
    for (DecoratedTangle& t : even_decorations(shape))
      if (!detail::in_ideal_i(t)) out.push_back(std::move(t));
  std::sort(out.begin(), out.end());
  return out;
}

/// The edgeless tangles with an odd number of plain cups (empty for odd n).
inline std::vector<DecoratedTangle> ideal_i_elements(int n) {
  if (n < 3) throw std::invalid_argument("ideal_i_elements: n must be at least 3");
  std::vector<DecoratedTangle> out;
  for (const DecoratedTangle& shape : tl_diagrams(n))
    for (DecoratedTangle& t : even_decorations(shape))
      if (detail::in_ideal_i(t)) out.push_back(std::move(t));
  return out;
}

/// L-linear combination of tangles.
using TLElement = std::map<DecoratedTangle, LaurentPoly>;

inline void accumulate(TLElement& x, const DecoratedTangle& t, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = x.try_emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) x.erase(it);
  }
}

inline TLElement multiply(const TLElement& x, const TLElement& y, ReductionMode mode = ReductionMode::TLhat) {
  TLElement out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) {
      TangleScalarPair r = multiply(a, b, mode);
      if (!r.is_zero()) accumulate(out, *r.tangle, ca * cb * r.coeff);
    }
  return out;
}

/// Graham-Lehrer cell datum: M(lambda) are the even decorated cup diagrams
/// with lambda edges, and C(lambda, alpha, beta) puts alpha on top of the
/// reflection of beta.
class CellDatum {
public:
  explicit CellDatum(int n) : n_(n) {
    if (n < 3) throw std::invalid_argument("CellDatum: n must be at least 3");
    for (const DecoratedCupDiagram& d : enumerate_decorated_cup_diagrams(n)) m_[d.edge_count()].push_back(d);
  }

  int n() const { return n_; }
  std::vector<int> lambdas() const {
    std::vector<int> out;
    for (const auto& [l, v] : m_) out.push_back(l);
    return out;
  }
  const std::vector<DecoratedCupDiagram>& M(int lambda) const {
    auto it = m_.find(lambda);
    if (it == m_.end()) throw std::out_of_range("CellDatum: no cell module for lambda = " + std::to_string(lambda));
    return it->second;
  }

  DecoratedTangle C(int lambda, const DecoratedCupDiagram& alpha, const DecoratedCupDiagram& beta) const {
    if (alpha.edge_count() != lambda || beta.edge_count() != lambda)
      throw std::invalid_argument("CellDatum::C: diagrams must have lambda edges");
    detail::Glued g = detail::glue(as_tangle(beta).star(), as_tangle(alpha));
    if (g.plain_loops || g.dotted_loops) throw std::logic_error("CellDatum::C: unexpected loop");
    return g.tangle;
  }

  struct Index {
    int lambda;
    DecoratedCupDiagram alpha;
    DecoratedCupDiagram beta;
    friend bool operator==(const Index&, const Index&) = default;
  };

  /// Splits a basis tangle into its two halves, moving the dot of the
  /// leftmost through strand so that both halves are even. Nothing for an
  /// edgeless tangle with an odd number of plain cups.
  std::optional<Index> decompose(const DecoratedTangle& t) const {
    if (t.bottom_size() != n_ || t.top_size() != n_) throw std::invalid_argument("decompose: size mismatch");
    std::vector<Cup> top_cups, bottom_cups;
    std::vector<Edge> top_edges, bottom_edges;
    const auto left = t.leftmost_through();
    for (const Strand& s : t.strands()) {
      if (s.a.side == Side::Top && s.b.side == Side::Top)
        top_cups.push_back({std::min(s.a.pos, s.b.pos), std::max(s.a.pos, s.b.pos), s.dotted});
      else if (s.a.side == Side::Bottom && s.b.side == Side::Bottom)
        bottom_cups.push_back({std::min(s.a.pos, s.b.pos), std::max(s.a.pos, s.b.pos), s.dotted});
      else {
        top_edges.push_back({s.b.pos, false});
        bottom_edges.push_back({s.a.pos, false});
      }
    }
    const bool a = t.plain_top_cups() % 2 == 1;
    if (!left) {
      if (a) return std::nullopt;
    } else {
      const bool d = t.dotted_index(left->first);
      std::sort(top_edges.begin(), top_edges.end());
      std::sort(bottom_edges.begin(), bottom_edges.end());
      top_edges.front().dotted = a;
      bottom_edges.front().dotted = a != d;
    }
    DecoratedCupDiagram alpha(n_, std::move(top_cups), std::move(top_edges));
    DecoratedCupDiagram beta(n_, std::move(bottom_cups), std::move(bottom_edges));
    if (!alpha.is_valid() || !beta.is_valid()) throw std::logic_error("decompose: halves are not even diagrams");
    return Index{t.through_count(), std::move(alpha), std::move(beta)};
  }

private:
  int n_;
  std::map<int, std::vector<DecoratedCupDiagram>> m_;
};

using CellVector = std::map<DecoratedCupDiagram, LaurentPoly>;

/// x acting on the cell module M(lambda) at alpha, computed through
/// x * C(lambda, alpha, beta) modulo tangles with fewer through strands.
inline CellVector cell_module_action(const CellDatum& cd, int lambda, const TLElement& x,
                                     const DecoratedCupDiagram& alpha, const DecoratedCupDiagram& beta) {
  const DecoratedTangle c = cd.C(lambda, alpha, beta);
  CellVector out;
  for (const auto& [t, coeff] : x) {
    const TangleScalarPair r = multiply(t, c);
    if (r.is_zero()) continue;
    const int k = r.tangle->through_count();
    if (k < lambda) continue;
    if (k > lambda) throw std::logic_error("cell_module_action: product gained through strands");
    const auto idx = cd.decompose(*r.tangle);
    if (!idx) throw std::logic_error("cell_module_action: product fell into the ideal");
    if (!(idx->beta == beta)) throw std::logic_error("cell_module_action: right index changed");
    auto [it, inserted] = out.try_emplace(idx->alpha, coeff * r.coeff);
    if (!inserted) {
      it->second += coeff * r.coeff;
      if (it->second.is_zero()) out.erase(it);
    }
  }
  return out;
}

inline CellVector cell_module_action(const CellDatum& cd, int lambda, const TLElement& x,
                                     const DecoratedCupDiagram& alpha) {
  return cell_module_action(cd, lambda, x, alpha, cd.M(lambda).front());
}

/// Matrix of x on the free module spanned by the even decorated cup
/// diagrams; rows and columns follow enumerate_wp through decorated_cup.
inline Matrix<LaurentPoly> representation_matrix(int n, const TLElement& x) {
  const std::vector<PMSequence> order = enumerate_wp(n);
  std::map<PMSequence, std::size_t> row_of;
  for (std::size_t k = 0; k < order.size(); ++k) row_of.emplace(order[k], k);
  Matrix<LaurentPoly> m(order.size(), order.size());
  for (std::size_t col = 0; col < order.size(); ++col) {
    const DecoratedCupDiagram d = decorated_cup(order[col]);
    for (const auto& [t, c] : x) {
      const CupScalarPair r = act(t, d);
      if (r.is_zero()) continue;
      m(row_of.at(sequence_of(*r.diagram)), col) += c * r.coeff;
    }
  }
  return m;
}

inline Matrix<LaurentPoly> representation_matrix(int n, const DecoratedTangle& t) {
  return representation_matrix(n, TLElement{{t, LaurentPoly(1)}});
}

} // namespace kldn
