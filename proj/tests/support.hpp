#pragma once

#include "kldn/kldn.hpp"

#include <random>
#include <vector>

namespace kldn::testing {

inline std::mt19937& rng() {
  static std::mt19937 gen(20240611u);
  return gen;
}

inline LaurentPoly random_poly(int max_terms = 4, int exp_range = 3, int coeff_range = 5) {
  std::uniform_int_distribution<int> terms(0, max_terms), e(-exp_range, exp_range), c(-coeff_range, coeff_range);
  LaurentPoly p;
  for (int k = terms(rng()); k > 0; --k) p += LaurentPoly::monomial(e(rng()), c(rng()));
  return p;
}

inline PMSequence random_element(int n) {
  const auto all = enumerate_wp(n);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  return all[pick(rng())];
}

inline PMSequence seq(const char* s) { return PMSequence::parse(s); }

/// Every reduced word of w: all chains of length-increasing moves from the
/// identity that end at w.
inline void all_reduced_words(const PMSequence& cur, std::vector<int>& word, int target_len,
                              const PMSequence& target, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(word.size()) == target_len) {
    if (cur == target) out.push_back(word);
    return;
  }
  for (int i = 0; i < cur.size(); ++i) {
    const Move m = apply_generator(cur, GeneratorIndex(i));
    if (m.kind != MoveKind::Longer) continue;
    word.push_back(i);
    all_reduced_words(*m.target, word, target_len, target, out);
    word.pop_back();
  }
}

inline std::vector<std::vector<int>> all_reduced_words(const PMSequence& w) {
  std::vector<std::vector<int>> out;
  std::vector<int> word;
  all_reduced_words(PMSequence::identity(w.size()), word, length(w), w, out);
  return out;
}

} // namespace kldn::testing
