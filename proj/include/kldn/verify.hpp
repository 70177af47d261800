#pragma once

// Cross-checks between the Hecke recursion, the cup and circle calculus and
// the tangle action. Each suite collects failures instead of stopping.

#include "kldn/circles.hpp"
#include "kldn/cups.hpp"
#include "kldn/hecke.hpp"
#include "kldn/linalg.hpp"
#include "kldn/tangles.hpp"
#include "kldn/weyl.hpp"

#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace kldn {

struct Report {
  std::string suite;
  int n = 0;
  std::size_t checks = 0;
  std::vector<std::string> notes;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
  void check(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
  void merge(const Report& o) {
    checks += o.checks;
    for (const auto& s : o.notes) notes.push_back(o.suite + ": " + s);
    for (const auto& s : o.failures) failures.push_back(o.suite + ": " + s);
  }
};

/// Suite names and the range of n each one accepts.
struct SuiteBounds {
  int min_n;
  int max_n;
};

inline const std::map<std::string, SuiteBounds>& suite_bounds() {
  static const std::map<std::string, SuiteBounds> b{{"kl", {1, 6}},       {"homdim", {1, 6}},   {"commute", {1, 6}},
                                                    {"cellular", {3, 5}}, {"faithful", {3, 5}}, {"all", {1, 5}}};
  return b;
}

/// Generic point for the rank screen.
inline Rational generic_q() { return Rational(97, 89); }

namespace detail {

inline std::string str(const NModElement& x) { return x.to_string(); }

inline std::string str(const std::map<PMSequence, LaurentPoly>& x) {
  if (x.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : x) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c << ")*" << w;
  }
  return os.str();
}

} // namespace detail

inline Report verify_kl(int n) {
  Report r{"kl", n, 0, {}, {}};
  const auto table = kl_table(n);
  for (const PMSequence& w : table->order) {
    const NModElement& row = table->row(w);
    r.check(cut(cup_diagram(w)) == decorated_cup(w), "cut form differs from direct rule at w=" + w.to_string());
    r.check(deodhar_product(w) == row, "Deodhar product differs at w=" + w.to_string() + ": " +
                                           detail::str(deodhar_product(w)) + " vs " + detail::str(row));
    for (const PMSequence& v : table->order) {
      const LaurentPoly oracle = row.coeff(v), diagram = kl_poly_diagrammatic(v, w);
      const std::string at = " at (v,w)=(" + v.to_string() + "," + w.to_string() + ")";
      r.check(oracle == diagram, "oracle " + oracle.to_string() + " vs diagram " + diagram.to_string() + at);
      r.check(oracle.is_monomial(), "not a monomial: " + oracle.to_string() + at);
      if (v == w) {
        r.check(oracle == LaurentPoly(1), "diagonal entry " + oracle.to_string() + at);
      } else if (!oracle.is_zero()) {
        bool ok = oracle.min_exponent() >= 1;
        for (const auto& [e, c] : oracle.terms()) ok = ok && c > 0;
        r.check(ok, "entry outside qN[q]: " + oracle.to_string() + at);
      }
    }
  }
  r.check(table->correction_terms == 0,
          "recursion needed " + std::to_string(table->correction_terms) + " correction terms");
  r.notes.push_back(std::to_string(table->order.size()) + " elements, " + std::to_string(table->correction_terms) +
                    " correction terms");
  return r;
}

inline Report verify_homdim(int n) {
  Report r{"homdim", n, 0, {}, {}};
  const auto table = kl_table(n);
  const std::vector<PMSequence> all = enumerate_wp(n);
  Integer total = 0;
  for (const PMSequence& w : all) {
    const DecoratedCupDiagram dw = decorated_cup(w);
    for (const PMSequence& x : all) {
      const std::string at = " at (w,w')=(" + w.to_string() + "," + x.to_string() + ")";
      const ColoredCircleDiagram d = circle_diagram(x, w);
      const Integer dim = hom_dim(w, x);
      total += dim;
      const auto weights = orienting_sequences(w, x);
      r.check(Integer(weights.size()) == dim,
              "brute force " + std::to_string(weights.size()) + " vs formula " + dim.get_str() + at);
      for (const auto& v : weights) {
        int minus = 0;
        for (Sign s : v) minus += s == Sign::Minus;
        r.check(minus % 2 == 0, "orienting weight with odd minus count" + at);
      }
      r.check(d.black() % 2 == 0, "odd black count" + at);
      for (const Circle& c : d.circles) {
        const int expect = c.color == CircleColor::Red ? 0 : c.color == CircleColor::Green ? 1 : 2;
        r.check(circle_orientation_count(n, c) == expect, "circle of color " + color_name(c.color) + " admits " +
                                                               std::to_string(circle_orientation_count(n, c)) +
                                                               " orientations" + at);
        if (c.self_intersecting) r.check(c.color == CircleColor::Red, "self-intersecting circle not red" + at);
      }
      r.check(dim == hom_dim(x, w), "hom_dim not symmetric" + at);
      Integer via_kl = 0;
      for (const PMSequence& v : all) via_kl += table->poly(v, w).at_one() * table->poly(v, x).at_one();
      r.check(via_kl == dim, "KL sum " + via_kl.get_str() + " vs circles " + dim.get_str() + at);
      const DecoratedCupDiagram dx = decorated_cup(x);
      for (const OrientedCircleDiagram& o : oriented_basis(w, x)) {
        const auto a = cut_degree(o.v, dw), b = cut_degree(o.v, dx);
        r.check(a && b && *a + *b == o.degree, "cut degree differs from cl/2 for v=" + o.v.to_string() + at);
      }
    }
  }
  r.notes.push_back("dim E = " + total.get_str());
  return r;
}

inline Report verify_commute(int n) {
  Report r{"commute", n, 0, {}, {}};
  if (n < 2) {
    r.notes.push_back("no generators act for n = 1");
    return r;
  }
  for (const PMSequence& w : enumerate_wp(n)) {
    const DecoratedCupDiagram d = decorated_cup(w);
    for (int i = 0; i < n; ++i) {
      const std::string at = " at (w,i)=(" + w.to_string() + "," + std::to_string(i) + ")";
      const CupScalarPair t = act(generator(n, GeneratorIndex(i)), d);
      std::map<PMSequence, LaurentPoly> lhs;
      if (!t.is_zero()) {
        r.check(t.diagram->is_valid(), "action left the even diagrams" + at);
        if (!t.diagram->is_valid()) continue;
        lhs.emplace(sequence_of(*t.diagram), t.coeff);
      }
      const auto rhs = to_kl_coordinates(cs_action(kl_basis(w), GeneratorIndex(i)));
      r.check(lhs == rhs, "tangle action " + detail::str(lhs) + " vs Hecke action " + detail::str(rhs) + at);
    }
  }
  return r;
}

inline Report verify_cellular(int n) {
  Report r{"cellular", n, 0, {}, {}};
  const CellDatum cd(n);
  const std::vector<DecoratedTangle> basis = tlhat_basis(n);
  const std::set<DecoratedTangle> basis_set(basis.begin(), basis.end());
  std::size_t sum = 0, squares = 0;
  std::set<DecoratedTangle> image;
  std::ostringstream dims;
  for (int l : cd.lambdas()) {
    const auto& m = cd.M(l);
    sum += m.size();
    squares += m.size() * m.size();
    dims << " M(" << l << ")=" << m.size();
    for (const auto& a : m)
      for (const auto& b : m) {
        const DecoratedTangle c = cd.C(l, a, b);
        image.insert(c);
        const auto idx = cd.decompose(c);
        r.check(idx && *idx == CellDatum::Index{l, a, b}, "decompose does not invert C");
        r.check(c.star() == cd.C(l, b, a), "star(C(a,b)) != C(b,a)");
      }
  }
  r.check(sum == (std::size_t{1} << (n - 1)), "sum of |M| is " + std::to_string(sum));
  r.check(squares == basis.size(), "sum of |M|^2 is " + std::to_string(squares) + ", basis has " + std::to_string(basis.size()));
  r.check(image == basis_set, "C is not a bijection onto the basis");
  r.notes.push_back("dims" + dims.str() + ", total " + std::to_string(squares));

  for (const auto& a : basis)
    for (const auto& b : basis) {
      const TangleScalarPair ab = multiply(a, b), ba = multiply(b.star(), a.star());
      const bool ok = ab.is_zero() ? ba.is_zero()
                                   : !ba.is_zero() && ab.coeff == ba.coeff && ab.tangle->star() == *ba.tangle;
      r.check(ok, "star is not an anti-automorphism on a basis pair");
    }

  for (int i = 0; i < n; ++i) {
    const TLElement x{{generator(n, GeneratorIndex(i)), LaurentPoly(1)}};
    for (int l : cd.lambdas()) {
      const auto& m = cd.M(l);
      for (const auto& a : m) {
        const CellVector first = cell_module_action(cd, l, x, a, m.front());
        for (const auto& b : m)
          r.check(cell_module_action(cd, l, x, a, b) == first,
                  "structure constants depend on the right index (e_" + std::to_string(i) + ", lambda " + std::to_string(l) + ")");
      }
    }
  }

  // Temperley-Lieb relations in the quotient.
  for (int i = 0; i < n; ++i) {
    const DecoratedTangle ei = generator(n, GeneratorIndex(i));
    const TangleScalarPair sq = multiply(ei, ei);
    r.check(!sq.is_zero() && *sq.tangle == ei && sq.coeff == LaurentPoly::loop_value(), "e_i^2 != (q+q^-1) e_i");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const DecoratedTangle ej = generator(n, GeneratorIndex(j));
      const TLElement xi{{ei, 1}}, xj{{ej, 1}};
      if (dynkin_adjacent(i, j)) {
        r.check(multiply(multiply(xi, xj), xi) == xi, "e_i e_j e_i != e_i for i=" + std::to_string(i) + ", j=" + std::to_string(j));
      } else {
        r.check(multiply(xi, xj) == multiply(xj, xi), "e_i e_j != e_j e_i for i=" + std::to_string(i) + ", j=" + std::to_string(j));
      }
    }
  }
  return r;
}

inline Report verify_faithful(int n) {
  Report r{"faithful", n, 0, {}, {}};
  const std::vector<DecoratedTangle> basis = tlhat_basis(n);
  Matrix<LaurentPoly> stacked;
  for (const DecoratedTangle& t : basis) stacked.append_row(representation_matrix(n, t).data());
  std::size_t rk = rank(evaluate(stacked, generic_q()));
  std::string how = "rank at q = " + generic_q().get_str();
  if (rk < basis.size()) {
    rk = rank(stacked);
    how = "exact rank over Z[q,q^-1]";
  }
  r.check(rk == basis.size(), how + " is " + std::to_string(rk) + ", basis has " + std::to_string(basis.size()));
  r.notes.push_back(how + ": " + std::to_string(rk) + " of " + std::to_string(basis.size()));
  if (n % 2 == 0) {
    const auto ideal = ideal_i_elements(n);
    for (const DecoratedTangle& t : ideal)
      for (const DecoratedCupDiagram& d : enumerate_decorated_cup_diagrams(n))
        r.check(act(t, d).is_zero(), "an element of the ideal acts by a nonzero map");
    r.notes.push_back(std::to_string(ideal.size()) + " ideal elements act by zero");
  }
  return r;
}

inline Report verify(const std::string& suite, int n) {
  const auto it = suite_bounds().find(suite);
  if (it == suite_bounds().end()) throw std::invalid_argument("unknown suite '" + suite + "'");
  if (n < it->second.min_n || n > it->second.max_n)
    throw std::out_of_range("suite '" + suite + "' needs " + std::to_string(it->second.min_n) + " <= n <= " +
                            std::to_string(it->second.max_n) + "; larger n grows as 4^(n-1) and is not supported");
  if (suite == "kl") return verify_kl(n);
  if (suite == "homdim") return verify_homdim(n);
  if (suite == "commute") return verify_commute(n);
  if (suite == "cellular") return verify_cellular(n);
  if (suite == "faithful") return verify_faithful(n);
  Report all{"all", n, 0, {}, {}};
  all.merge(verify_kl(n));
  all.merge(verify_homdim(n));
  all.merge(verify_commute(n));
  if (n >= 3) {
    all.merge(verify_cellular(n));
    all.merge(verify_faithful(n));
  }
  return all;
}

} // namespace kldn
