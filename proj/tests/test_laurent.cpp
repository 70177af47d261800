#include "support.hpp"

#include <gtest/gtest.h>

using namespace kldn;
using kldn::testing::random_poly;

namespace {

const LaurentPoly q = LaurentPoly::q();
const LaurentPoly qi = LaurentPoly::q_inverse();

// Evaluation straight from the term map, without the library's power routine.
Rational naive_eval(const LaurentPoly& p, const Rational& x) {
  Rational sum = 0;
  for (const auto& [e, c] : p.terms()) {
    Rational t = Rational(c);
    for (int k = 0; k < (e < 0 ? -e : e); ++k) t = e < 0 ? Rational(t / x) : Rational(t * x);
    sum += t;
  }
  return sum;
}

} // namespace

TEST(Laurent, AddExamples) {
  EXPECT_EQ(add(q, qi), LaurentPoly::loop_value());
  EXPECT_EQ(add(1 + q, -q), LaurentPoly(1));
  const LaurentPoly p = random_poly();
  EXPECT_EQ(add(LaurentPoly(), p), p);
}

TEST(Laurent, MulExamples) {
  EXPECT_EQ(mul(q + qi, q), LaurentPoly::monomial(2) + 1);
  const LaurentPoly p = random_poly();
  EXPECT_EQ(mul(1, p), p);
  EXPECT_EQ(mul(q + qi, q + qi), LaurentPoly::monomial(2) + 2 + LaurentPoly::monomial(-2));
}

TEST(Laurent, EvalExamples) {
  const LaurentPoly p = 1 + 4 * q + 3 * LaurentPoly::monomial(2) + LaurentPoly::monomial(3);
  EXPECT_EQ(eval_rational(p, 1), 9);
  EXPECT_EQ(eval_rational(q + qi, 1), 2);
  EXPECT_EQ(eval_rational(q, Rational(7, 3)), Rational(7, 3));
  EXPECT_THROW(eval_rational(q, 0), std::domain_error);
}

TEST(Laurent, MonomialExamples) {
  EXPECT_TRUE(is_monomial(LaurentPoly::monomial(2)));
  EXPECT_FALSE(is_monomial(1 + q));
  EXPECT_TRUE(is_monomial(LaurentPoly()));
}

TEST(Laurent, ZeroIsEmptyAndCancellationNormalises) {
  LaurentPoly p = 3 * q;
  p -= 3 * q;
  EXPECT_TRUE(p.is_zero());
  EXPECT_TRUE(p.terms().empty());
  EXPECT_EQ(p, LaurentPoly());
}

TEST(Laurent, TextForm) {
  EXPECT_EQ((qi + 2 + q).to_string(), "q^-1 + 2 + q");
  EXPECT_EQ((1 + 4 * q + 3 * LaurentPoly::monomial(2) + LaurentPoly::monomial(3)).to_string(), "1 + 4q + 3q^2 + q^3");
  EXPECT_EQ(LaurentPoly().to_string(), "0");
  EXPECT_EQ((q - 2 * LaurentPoly::monomial(3)).to_string(), "q - 2q^3");
  EXPECT_EQ((-qi).to_string(), "-q^-1");
}

TEST(Laurent, BigCoefficientsDoNotOverflow) {
  LaurentPoly p = 1 + q;
  for (int k = 0; k < 7; ++k) p = p * p;  // (1+q)^128
  EXPECT_EQ(p.coeff(64), Integer("23951146041928082866135587776380551750"));
  EXPECT_EQ(p.at_one(), Integer(1) << 128);
}

TEST(Laurent, RingAxiomsOnRandomInputs) {
  for (int trial = 0; trial < 300; ++trial) {
    const LaurentPoly a = random_poly(), b = random_poly(), c = random_poly();
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, LaurentPoly());
  }
}

TEST(Laurent, EvaluationIsARingHomomorphism) {
  const Rational points[] = {Rational(1), Rational(-2), Rational(97, 89), Rational(-3, 7)};
  for (int trial = 0; trial < 200; ++trial) {
    const LaurentPoly a = random_poly(), b = random_poly();
    for (const Rational& x : points) {
      EXPECT_EQ((a * b).eval(x), a.eval(x) * b.eval(x));
      EXPECT_EQ((a + b).eval(x), a.eval(x) + b.eval(x));
      EXPECT_EQ(a.eval(x), naive_eval(a, x));
    }
  }
}

TEST(Laurent, ExactDivision) {
  for (int trial = 0; trial < 200; ++trial) {
    const LaurentPoly a = random_poly(), b = random_poly();
    if (b.is_zero()) continue;
    EXPECT_EQ(divide_exact(a * b, b), a);
  }
  EXPECT_THROW(divide_exact(1 + q, 1 - q), std::domain_error);
  EXPECT_THROW(divide_exact(q, LaurentPoly()), std::domain_error);
}
