#pragma once

// The parabolic Hecke module N with standard basis {N_w : w in W^p} and its
// Kazhdan-Lusztig basis, computed by the inductive recursion.

#include "kldn/laurent.hpp"
#include "kldn/weyl.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace kldn {

/// A finite L-linear combination of standard basis vectors N_w, all of rank n.
class NModElement {
public:
  using CoeffMap = std::map<PMSequence, LaurentPoly>;

  explicit NModElement(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("NModElement: n must be at least 1");
  }
  static NModElement basis(const PMSequence& w) {
    NModElement x(w.size());
    x.add(w, 1);
    return x;
  }

  int rank() const { return n_; }
  const CoeffMap& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  LaurentPoly coeff(const PMSequence& w) const {
    auto it = coeffs_.find(w);
    return it == coeffs_.end() ? LaurentPoly() : it->second;
  }

  void add(const PMSequence& w, const LaurentPoly& c) {
    if (w.size() != n_) throw std::invalid_argument("NModElement: rank mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
  }

  NModElement& operator+=(const NModElement& o) {
    check_rank(o);
    for (const auto& [w, c] : o.coeffs_) add(w, c);
    return *this;
  }
  NModElement& operator-=(const NModElement& o) {
    check_rank(o);
    for (const auto& [w, c] : o.coeffs_) add(w, -c);
    return *this;
  }
  friend NModElement operator+(NModElement a, const NModElement& b) { return a += b; }
  friend NModElement operator-(NModElement a, const NModElement& b) { return a -= b; }
  friend NModElement operator*(const LaurentPoly& s, const NModElement& x) {
    NModElement out(x.n_);
    for (const auto& [w, c] : x.coeffs_) out.add(w, s * c);
    return out;
  }
  friend bool operator==(const NModElement& a, const NModElement& b) {
    return a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
  }

  std::string to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : coeffs_) {
      if (!first) os << " + ";
      first = false;
      if (c != LaurentPoly(1)) os << '(' << c << ")*";
      os << "N[" << w.to_string() << ']';
    }
    return os.str();
  }

private:
  void check_rank(const NModElement& o) const {
    if (o.n_ != n_) throw std::invalid_argument("NModElement: rank mismatch");
  }
  int n_;
  CoeffMap coeffs_;
};

/// Right action of C_{s_i} = H_{s_i} + q on N, extended linearly.
inline NModElement cs_action(const NModElement& x, GeneratorIndex i) {
  i.check(x.rank());
  NModElement out(x.rank());
  for (const auto& [w, c] : x.coeffs()) {
    const Move m = apply_generator(w, i);
    switch (m.kind) {
    case MoveKind::Longer:
      out.add(*m.target, c);
      out.add(w, LaurentPoly::q() * c);
      break;
    case MoveKind::Shorter:
      out.add(*m.target, c);
      out.add(w, LaurentPoly::q_inverse() * c);
      break;
    case MoveKind::NotInQuotient: break;
    }
  }
  return out;
}

/// KL basis for one rank. rows[w] is the expansion of the KL basis element
/// indexed by w in the standard basis.
struct KLTable {
  int n = 0;
  std::vector<PMSequence> order;  // enumerate_wp order
  std::map<PMSequence, NModElement> rows;
  /// Number of correction terms the recursion had to subtract.
  std::size_t correction_terms = 0;

  const NModElement& row(const PMSequence& w) const {
    auto it = rows.find(w);
    if (it == rows.end()) throw std::out_of_range("KLTable: no row for " + w.to_string());
    return it->second;
  }
  /// The KL polynomial n_{v,w}: coefficient of N_v in the basis element of w.
  LaurentPoly poly(const PMSequence& v, const PMSequence& w) const { return row(w).coeff(v); }
};

inline std::vector<int> descents(const PMSequence& w) {
  std::vector<int> out;
  for (int i = 0; i < w.size(); ++i)
    if (apply_generator(w, GeneratorIndex(i)).kind == MoveKind::Shorter) out.push_back(i);
  return out;
}

/// One step of the recursion for w using descent i: take the basis element
/// of w s_i times C_{s_i}, then subtract m_z(0) times the basis element of z
/// for every z != w whose coefficient has a nonzero constant term.
/// `known` must already contain every element shorter than w.
/// `corrections`, when given, is incremented per subtracted term.
inline NModElement kl_step(const std::map<PMSequence, NModElement>& known, const PMSequence& w, int i,
                           std::size_t* corrections = nullptr) {
  const Move m = apply_generator(w, GeneratorIndex(i));
  if (m.kind != MoveKind::Shorter)
    throw std::invalid_argument("kl_step: s_" + std::to_string(i) + " is not a descent of " + w.to_string());
  auto lower = known.find(*m.target);
  if (lower == known.end()) throw std::logic_error("kl_step: lower basis element not yet known");
  NModElement x = cs_action(lower->second, GeneratorIndex(i));
  std::vector<std::pair<PMSequence, Integer>> subtract;
  for (const auto& [z, c] : x.coeffs()) {
    if (z == w) continue;
    const Integer c0 = c.coeff(0);
    if (c0 != 0) subtract.emplace_back(z, c0);
  }
  for (const auto& [z, c0] : subtract) {
    auto zt = known.find(z);
    if (zt == known.end()) throw std::logic_error("kl_step: correction term for unknown element " + z.to_string());
    x -= LaurentPoly::monomial(0, c0) * zt->second;
    if (corrections) ++*corrections;
  }
  return x;
}

/// Builds the whole table in order of increasing length, always using the
/// smallest descent.
inline KLTable build_kl_table(int n) {
  KLTable t;
  t.n = n;
  t.order = enumerate_wp(n);
  std::vector<PMSequence> by_length = t.order;
  std::stable_sort(by_length.begin(), by_length.end(),
                   [](const PMSequence& a, const PMSequence& b) { return length(a) < length(b); });
  for (const PMSequence& w : by_length) {
    if (w.is_identity()) {
      t.rows.emplace(w, NModElement::basis(w));
      continue;
    }
    const std::vector<int> d = descents(w);
    if (d.empty()) throw std::logic_error("build_kl_table: non-identity element without descent");
    t.rows.emplace(w, kl_step(t.rows, w, d.front(), &t.correction_terms));
  }
  return t;
}

/// Memoized per n; the returned table is immutable and shareable.
inline std::shared_ptr<const KLTable> kl_table(int n) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const KLTable>> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  auto table = std::make_shared<const KLTable>(build_kl_table(n));
  std::lock_guard lock(mutex);
  return cache.try_emplace(n, std::move(table)).first->second;
}

inline NModElement kl_basis(const PMSequence& w) { return kl_table(w.size())->row(w); }

inline NModElement deodhar_product_along(int n, const std::vector<int>& word) {
  NModElement x = NModElement::basis(PMSequence::identity(n));
  for (int i : word) x = cs_action(x, GeneratorIndex(i));
  return x;
}

/// N_e C_{i1} ... C_{ik} along reduced_word(w).
inline NModElement deodhar_product(const PMSequence& w) {
  return deodhar_product_along(w.size(), reduced_word(w));
}

/// Coordinates of x in the KL basis. The change of basis is unitriangular
/// with respect to length, so peel off the longest support element first.
inline std::map<PMSequence, LaurentPoly> to_kl_coordinates(const NModElement& x) {
  const auto table = kl_table(x.rank());
  NModElement rest = x;
  std::map<PMSequence, LaurentPoly> out;
  while (!rest.is_zero()) {
    auto top = std::max_element(rest.coeffs().begin(), rest.coeffs().end(), [](const auto& a, const auto& b) {
      const int la = length(a.first), lb = length(b.first);
      return la != lb ? la < lb : a.first < b.first;
    });
    const PMSequence w = top->first;
    const LaurentPoly c = top->second;
    out.emplace(w, c);
    rest -= c * table->row(w);
  }
  return out;
}

} // namespace kldn
