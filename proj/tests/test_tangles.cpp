#include "support.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace kldn;
using kldn::testing::rng;
using kldn::testing::seq;

namespace {

const LaurentPoly loop = LaurentPoly::loop_value();

DecoratedTangle e(int n, int i) { return generator(n, GeneratorIndex(i)); }

DecoratedCupDiagram dc(const char* s) { return decorated_cup(seq(s)); }

const DecoratedTangle& pick(const std::vector<DecoratedTangle>& v) {
  std::uniform_int_distribution<std::size_t> d(0, v.size() - 1);
  return v[d(rng())];
}

// act extended linearly to a vector of diagrams.
CellVector act_on(const DecoratedTangle& t, const CellVector& v) {
  CellVector out;
  for (const auto& [d, c] : v) {
    const CupScalarPair r = act(t, d);
    if (r.is_zero()) continue;
    out[*r.diagram] += c * r.coeff;
    if (out[*r.diagram].is_zero()) out.erase(*r.diagram);
  }
  return out;
}

} // namespace

TEST(Tangles, GeneratorShapes) {
  const DecoratedTangle e2 = e(4, 2);
  EXPECT_EQ(e2.through_count(), 2);
  EXPECT_EQ(e2.partner({Side::Top, 2}), (Endpoint{Side::Top, 3}));
  EXPECT_EQ(e2.partner({Side::Bottom, 2}), (Endpoint{Side::Bottom, 3}));
  EXPECT_EQ(e2.partner({Side::Bottom, 1}), (Endpoint{Side::Top, 1}));
  EXPECT_EQ(e2.dot_count(), 0);
  const DecoratedTangle e0 = e(4, 0);
  EXPECT_EQ(e0.partner({Side::Top, 1}), (Endpoint{Side::Top, 2}));
  EXPECT_EQ(e0.dot_count(), 2);
  EXPECT_EQ(e0.plain_top_cups(), 0);
  EXPECT_EQ(e(4, 1).plain_top_cups(), 1);
  EXPECT_THROW(e(4, 4), std::out_of_range);
}

TEST(Tangles, ConstructorRejectsCrossingsAndHiddenDots) {
  using S = Side;
  EXPECT_THROW(DecoratedTangle(2, 2, {{{S::Bottom, 1}, {S::Top, 2}, false}, {{S::Bottom, 2}, {S::Top, 1}, false}}),
               std::invalid_argument);
  EXPECT_THROW(DecoratedTangle(2, 2, {{{S::Bottom, 1}, {S::Top, 1}, false}, {{S::Bottom, 2}, {S::Top, 2}, true}}),
               std::invalid_argument);
  EXPECT_THROW(DecoratedTangle(1, 2, {}), std::invalid_argument);
  EXPECT_NO_THROW(DecoratedTangle(2, 2, {{{S::Bottom, 1}, {S::Top, 1}, true}, {{S::Bottom, 2}, {S::Top, 2}, false}}));
}

TEST(Tangles, LoopRelations) {
  TangleScalarPair r = concat_reduce(e(4, 1), e(4, 1), ReductionMode::TLhat);
  ASSERT_FALSE(r.is_zero());
  EXPECT_EQ(r.coeff, loop);
  EXPECT_EQ(*r.tangle, e(4, 1));

  r = concat_reduce(e(4, 0), e(4, 0), ReductionMode::TLhat);
  ASSERT_FALSE(r.is_zero());
  EXPECT_EQ(r.coeff, loop);
  EXPECT_EQ(*r.tangle, e(4, 0));

  EXPECT_TRUE(concat_reduce(e(4, 1), e(4, 0), ReductionMode::TLhat).is_zero());
  EXPECT_TRUE(multiply(e(4, 0), e(4, 1)).is_zero());

  r = multiply(e(4, 0), e(4, 1), ReductionMode::TL);
  ASSERT_FALSE(r.is_zero());
  EXPECT_EQ(r.coeff, LaurentPoly(1));
  EXPECT_TRUE(r.tangle->has_dotted_loop());
  EXPECT_EQ(r.tangle->dot_count(), 1);
  for (const Strand& x : r.tangle->strands()) EXPECT_FALSE(x.dotted);
}

TEST(Tangles, IdentityIsNeutral) {
  for (int n = 3; n <= 5; ++n)
    for (const DecoratedTangle& t : tlhat_basis(n)) {
      const TangleScalarPair l = multiply(DecoratedTangle::identity(n), t), r = multiply(t, DecoratedTangle::identity(n));
      ASSERT_FALSE(l.is_zero());
      EXPECT_EQ(*l.tangle, t);
      EXPECT_EQ(l.coeff, LaurentPoly(1));
      EXPECT_EQ(*r.tangle, t);
    }
}

TEST(Tangles, TemperleyLiebRelations) {
  for (int n = 3; n <= 6; ++n)
    for (int i = 0; i < n; ++i) {
      const TLElement xi{{e(n, i), 1}};
      EXPECT_EQ(multiply(xi, xi), (TLElement{{e(n, i), loop}}));
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        const TLElement xj{{e(n, j), 1}};
        if (dynkin_adjacent(i, j))
          EXPECT_EQ(multiply(multiply(xi, xj), xi), xi) << n << ' ' << i << ' ' << j;
        else
          EXPECT_EQ(multiply(xi, xj), multiply(xj, xi)) << n << ' ' << i << ' ' << j;
      }
    }
}

TEST(Tangles, ProductIsAssociative) {
  for (int n = 3; n <= 5; ++n) {
    const auto basis = tlhat_basis(n);
    for (int trial = 0; trial < 200; ++trial) {
      const TLElement a{{pick(basis), 1}}, b{{pick(basis), 1}}, c{{pick(basis), 1}};
      for (ReductionMode mode : {ReductionMode::TL, ReductionMode::TLhat})
        EXPECT_EQ(multiply(multiply(a, b, mode), c, mode), multiply(a, multiply(b, c, mode), mode));
    }
  }
}

TEST(Tangles, StarIsAnAntiAutomorphism) {
  for (int n = 3; n <= 4; ++n) {
    const auto basis = tlhat_basis(n);
    for (const DecoratedTangle& a : basis) {
      EXPECT_EQ(a.star().star(), a);
      for (const DecoratedTangle& b : basis) {
        const TangleScalarPair ab = multiply(a, b), ba = multiply(b.star(), a.star());
        ASSERT_EQ(ab.is_zero(), ba.is_zero());
        if (ab.is_zero()) continue;
        EXPECT_EQ(ab.coeff, ba.coeff);
        EXPECT_EQ(ab.tangle->star(), *ba.tangle);
      }
    }
  }
}

TEST(Tangles, BasisSizes) {
  EXPECT_EQ(tlhat_basis(3).size(), 10u);
  EXPECT_EQ(tlhat_basis(4).size(), 26u);
  EXPECT_EQ(tlhat_basis(5).size(), 126u);
  EXPECT_EQ(ideal_i_elements(4).size(), 9u);
  EXPECT_TRUE(ideal_i_elements(5).empty());
  EXPECT_THROW(tlhat_basis(2), std::invalid_argument);
  for (int n = 3; n <= 6; ++n) {
    const auto basis = tlhat_basis(n);
    const std::set<DecoratedTangle> s(basis.begin(), basis.end());
    EXPECT_EQ(s.size(), basis.size());
    for (const DecoratedTangle& t : basis) EXPECT_TRUE(t.is_normal_form());
  }
}

TEST(Tangles, BasisOfThreeContainsTheGenerators) {
  const auto basis = tlhat_basis(3);
  const std::set<DecoratedTangle> s(basis.begin(), basis.end());
  EXPECT_TRUE(s.count(DecoratedTangle::identity(3)));
  for (int i = 0; i < 3; ++i) EXPECT_TRUE(s.count(e(3, i))) << i;
}

TEST(Tangles, ActionExamples) {
  CupScalarPair r = act(e(4, 0), dc("++++"));
  ASSERT_FALSE(r.is_zero());
  EXPECT_EQ(*r.diagram, dc("--++"));
  EXPECT_EQ(r.coeff, LaurentPoly(1));

  EXPECT_TRUE(act(e(4, 1), dc("++++")).is_zero());

  r = act(e(4, 0), dc("--++"));
  ASSERT_FALSE(r.is_zero());
  EXPECT_EQ(*r.diagram, dc("--++"));
  EXPECT_EQ(r.coeff, loop);
}

TEST(Tangles, ActionPreservesEvenDiagrams) {
  for (int n = 3; n <= 6; ++n)
    for (int i = 0; i < n; ++i)
      for (const PMSequence& w : enumerate_wp(n)) {
        const CupScalarPair r = act(e(n, i), decorated_cup(w));
        if (r.is_zero()) continue;
        EXPECT_TRUE(r.diagram->is_valid()) << w << " e_" << i;
        EXPECT_TRUE(is_monomial(r.coeff) || r.coeff == loop);
      }
}

TEST(Tangles, ActionIsCompatibleWithTheProduct) {
  for (int n = 3; n <= 5; ++n) {
    const auto basis = tlhat_basis(n);
    const auto diagrams = enumerate_decorated_cup_diagrams(n);
    for (int trial = 0; trial < 150; ++trial) {
      const DecoratedTangle &a = pick(basis), &b = pick(basis);
      for (const DecoratedCupDiagram& d : diagrams) {
        const CellVector lhs = act_on(a, act_on(b, CellVector{{d, 1}}));
        CellVector rhs;
        if (const TangleScalarPair ab = multiply(a, b); !ab.is_zero()) {
          for (const auto& [x, c] : act_on(*ab.tangle, CellVector{{d, 1}})) rhs[x] = c * ab.coeff;
        }
        EXPECT_EQ(lhs, rhs);
      }
    }
  }
}

TEST(Tangles, ActionCommutesWithTheHeckeModule) {
  for (int n = 2; n <= 6; ++n)
    for (const PMSequence& w : enumerate_wp(n))
      for (int i = 0; i < n; ++i) {
        std::map<PMSequence, LaurentPoly> lhs;
        if (const CupScalarPair r = act(e(n, i), decorated_cup(w)); !r.is_zero())
          lhs.emplace(sequence_of(*r.diagram), r.coeff);
        EXPECT_EQ(lhs, to_kl_coordinates(cs_action(kl_basis(w), GeneratorIndex(i)))) << w << " e_" << i;
      }
}

TEST(Tangles, IdealActsByZero) {
  const auto diagrams = enumerate_decorated_cup_diagrams(4);
  for (const DecoratedTangle& t : ideal_i_elements(4)) {
    EXPECT_EQ(t.through_count(), 0);
    for (const DecoratedCupDiagram& d : diagrams) EXPECT_TRUE(act(t, d).is_zero());
  }
}

TEST(Tangles, RepresentationMatrices) {
  for (int n = 3; n <= 5; ++n)
    EXPECT_EQ(representation_matrix(n, DecoratedTangle::identity(n)), Matrix<LaurentPoly>::identity(std::size_t{1} << (n - 1)));
  const Matrix<LaurentPoly> m = representation_matrix(4, e(4, 0));
  const auto order = enumerate_wp(4);
  auto at = [&](const char* row, const char* col) {
    const auto r = std::find(order.begin(), order.end(), seq(row)) - order.begin();
    const auto c = std::find(order.begin(), order.end(), seq(col)) - order.begin();
    return m(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
  };
  EXPECT_EQ(at("--++", "++++"), LaurentPoly(1));
  EXPECT_EQ(at("--++", "--++"), loop);
  EXPECT_TRUE(at("++++", "++++").is_zero());
}

TEST(Tangles, Faithfulness) {
  for (int n = 3; n <= 4; ++n) {
    const auto basis = tlhat_basis(n);
    Matrix<LaurentPoly> stacked;
    for (const DecoratedTangle& t : basis) stacked.append_row(representation_matrix(n, t).data());
    EXPECT_EQ(rank(evaluate(stacked, Rational(97, 89))), basis.size());
    EXPECT_EQ(rank(stacked), basis.size());
  }
}

TEST(Tangles, CupDiagramsAsTangles) {
  for (int n = 1; n <= 6; ++n)
    for (const DecoratedCupDiagram& d : enumerate_decorated_cup_diagrams(n)) {
      const DecoratedTangle t = as_tangle(d);
      EXPECT_EQ(t.bottom_size(), d.edge_count());
      EXPECT_EQ(as_cup_diagram(t), d);
    }
}

TEST(CellDatum, ModulesForThree) {
  const CellDatum cd(3);
  EXPECT_EQ(cd.lambdas(), (std::vector<int>{1, 3}));
  ASSERT_EQ(cd.M(3).size(), 1u);
  EXPECT_EQ(cd.M(3).front(), dc("+++"));
  EXPECT_EQ(cd.M(1).size(), 3u);
  EXPECT_THROW(cd.M(2), std::out_of_range);
}

TEST(CellDatum, ModuleCounts) {
  const std::map<int, std::vector<std::size_t>> expected{{3, {3, 1}}, {4, {3, 4, 1}}, {5, {10, 5, 1}}};
  for (const auto& [n, sizes] : expected) {
    const CellDatum cd(n);
    std::vector<std::size_t> got;
    std::size_t sum = 0, squares = 0;
    for (int l : cd.lambdas()) {
      got.push_back(cd.M(l).size());
      sum += cd.M(l).size();
      squares += cd.M(l).size() * cd.M(l).size();
      for (const auto& d : cd.M(l)) EXPECT_EQ(d.edge_count(), l);
    }
    EXPECT_EQ(got, sizes);
    EXPECT_EQ(sum, std::size_t{1} << (n - 1));
    EXPECT_EQ(squares, tlhat_basis(n).size());
  }
}

TEST(CellDatum, CIsABijectionInvertedByDecompose) {
  for (int n = 3; n <= 5; ++n) {
    const CellDatum cd(n);
    const auto basis = tlhat_basis(n);
    std::set<DecoratedTangle> image;
    for (int l : cd.lambdas())
      for (const auto& a : cd.M(l))
        for (const auto& b : cd.M(l)) {
          const DecoratedTangle c = cd.C(l, a, b);
          EXPECT_TRUE(image.insert(c).second);
          EXPECT_EQ(c.through_count(), l);
          EXPECT_EQ(c.star(), cd.C(l, b, a));
          const auto idx = cd.decompose(c);
          ASSERT_TRUE(idx);
          EXPECT_EQ(*idx, (CellDatum::Index{l, a, b}));
        }
    EXPECT_EQ(image, std::set<DecoratedTangle>(basis.begin(), basis.end()));
  }
}

TEST(CellDatum, ModuleActionExamples) {
  const CellDatum cd(3);
  const DecoratedCupDiagram alpha(3, {{1, 2, true}}, {{3, false}});
  const CellVector v = cell_module_action(cd, 1, TLElement{{e(3, 0), 1}}, alpha);
  EXPECT_EQ(v, (CellVector{{alpha, loop}}));
  for (int l : cd.lambdas())
    for (const auto& a : cd.M(l))
      EXPECT_EQ(cell_module_action(cd, l, TLElement{{DecoratedTangle::identity(3), 1}}, a), (CellVector{{a, 1}}));
}

TEST(CellDatum, CellModuleIsTheTopLayerOfTheDiagramAction) {
  for (int n = 3; n <= 5; ++n) {
    const CellDatum cd(n);
    for (int i = 0; i < n; ++i)
      for (int l : cd.lambdas())
        for (const auto& a : cd.M(l)) {
          CellVector expected;
          if (const CupScalarPair r = act(e(n, i), a); !r.is_zero() && r.diagram->edge_count() == l)
            expected.emplace(*r.diagram, r.coeff);
          EXPECT_EQ(cell_module_action(cd, l, TLElement{{e(n, i), 1}}, a), expected);
        }
  }
}

TEST(CellDatum, StructureConstantsDoNotDependOnTheRightIndex) {
  for (int n = 3; n <= 4; ++n) {
    const CellDatum cd(n);
    const auto basis = tlhat_basis(n);
    for (const DecoratedTangle& t : basis) {
      const TLElement x{{t, 1}};
      for (int l : cd.lambdas())
        for (const auto& a : cd.M(l)) {
          const CellVector first = cell_module_action(cd, l, x, a, cd.M(l).front());
          for (const auto& b : cd.M(l)) EXPECT_EQ(cell_module_action(cd, l, x, a, b), first);
        }
    }
  }
}
