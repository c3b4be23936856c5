#include "rigid/trace_polynomial.hpp"

#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "rigid/graded_map.hpp"
#include "rigid/group_algebra.hpp"
#include "rigid/permutation.hpp"
#include "rigid/power_object.hpp"
#include "rigid/rational.hpp"
#include "rigid/super_space.hpp"

using rigid::antisymmetrizer;
using rigid::closure_trace;
using rigid::dim_power_poly;
using rigid::falling_binomial;
using rigid::GroupAlgebraElement;
using rigid::Integer;
using rigid::Mode;
using rigid::Permutation;
using rigid::Rational;
using rigid::rising_binomial;
using rigid::solve_dimension_equation;
using rigid::symmetrizer;
using rigid::TracePolynomial;

namespace {

TEST(TracePolynomial, CanonicalForm) {
  EXPECT_TRUE(TracePolynomial().is_zero());
  EXPECT_TRUE(TracePolynomial({Rational(0), Rational(0)}).is_zero());
  EXPECT_EQ(TracePolynomial({Rational(1), Rational(0)}).degree(), 0);
  EXPECT_EQ(TracePolynomial::monomial(3).degree(), 3);
}

TEST(TracePolynomial, HornerEvaluation) {
  EXPECT_EQ(TracePolynomial::monomial(4).eval_at(Rational(1)), Rational(1));
  EXPECT_EQ(TracePolynomial::monomial(3).eval_at(Rational(-2)), Rational(-8));
  const TracePolynomial p({Rational(1), Rational(-2), Rational(1)});  // (t-1)^2
  EXPECT_EQ(p.eval_at(Rational(5)), Rational(16));
  EXPECT_EQ(p.eval_at(Rational(1, 2)), Rational(1, 4));
}

TEST(ClosureTrace, BasicDiagrams) {
  // The identity of S_n closes to n loops.
  for (int n = 1; n <= 5; ++n)
    EXPECT_EQ(closure_trace(GroupAlgebraElement::identity(n)), TracePolynomial::monomial(n));

  // One transposition in S_2 closes to a single loop.
  EXPECT_EQ(closure_trace(GroupAlgebraElement::basis(Permutation::transposition(2, 0, 1))),
            TracePolynomial::monomial(1));

  // e_2 closes to (t² - t)/2.
  EXPECT_EQ(closure_trace(antisymmetrizer(2)),
            TracePolynomial({Rational(0), Rational(-1, 2), Rational(1, 2)}));
}

TEST(ClosureTrace, LinearAndTracial) {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    GroupAlgebraElement a(n), b(n);
    for (int k = 0; k < 3; ++k) {
      std::vector<int> im(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) im[static_cast<std::size_t>(i)] = i;
      std::shuffle(im.begin(), im.end(), rng);
      a.add_term(Permutation(im), Rational(static_cast<int>(rng() % 7) - 3));
      std::shuffle(im.begin(), im.end(), rng);
      b.add_term(Permutation(im), Rational(static_cast<int>(rng() % 7) - 3));
    }
    EXPECT_EQ(closure_trace(a + b), closure_trace(a) + closure_trace(b));
    EXPECT_EQ(closure_trace(a * b), closure_trace(b * a));
  }
}

TEST(DimensionPolynomial, FallingBinomialMatchesTraceUpToSix) {
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(closure_trace(antisymmetrizer(n)), falling_binomial(n)) << n;
    EXPECT_EQ(dim_power_poly(n, Mode::bosonic), falling_binomial(n)) << n;
  }
}

TEST(DimensionPolynomial, RisingBinomialMatchesTraceUpToSix) {
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(closure_trace(symmetrizer(n)), rising_binomial(n)) << n;
    EXPECT_EQ(dim_power_poly(n, Mode::fermionic), rising_binomial(n)) << n;
  }
}

TEST(DimensionPolynomial, SmallClosedForms) {
  EXPECT_EQ(dim_power_poly(1, Mode::bosonic), TracePolynomial::variable());
  // n=3: (t³ - 3t² + 2t)/6.
  EXPECT_EQ(dim_power_poly(3, Mode::bosonic),
            TracePolynomial({Rational(0), Rational(1, 3), Rational(-1, 2), Rational(1, 6)}));
}

TEST(DimensionPolynomial, VanishingAtTheSubdimensionThreshold) {
  // The (n+1)-st exterior power of an object of dimension n vanishes.
  for (int n = 1; n <= 6; ++n)
    EXPECT_EQ(falling_binomial(n + 1).eval_at(Rational(n)), Rational(0)) << n;
}

TEST(DimensionPolynomial, EvalAtSpecialPoints) {
  for (int n = 2; n <= 6; ++n) {
    EXPECT_EQ(falling_binomial(n).eval_at(Rational(n)), Rational(1)) << n;
    EXPECT_EQ(falling_binomial(n).eval_at(Rational(-1)), Rational(n % 2 == 0 ? 1 : -1)) << n;
  }
}

// Cross-backend oracle: the polynomial evaluated at the super dimension
// of the space equals the categorical dimension of the power object
// computed by the tensor backend.
TEST(CrossBackend, EvenSpacesMatchExteriorPowers) {
  for (int d = 1; d <= 4; ++d)
    for (int n = 1; n <= 4; ++n) {
      const auto p = rigid::power_object(rigid::SuperSpace::even_space(static_cast<std::size_t>(d)),
                                         n, Mode::bosonic);
      EXPECT_EQ(dim_power_poly(n, Mode::bosonic).eval_at(Rational(d)),
                rigid::categorical_dimension(p.part.summand))
          << d << " " << n;
    }
}

TEST(CrossBackend, OddSpacesMatchSignTwistedInterpolation) {
  for (int q = 1; q <= 2; ++q)
    for (int n = 1; n <= 3; ++n) {
      const auto p = rigid::power_object(rigid::SuperSpace::odd_space(static_cast<std::size_t>(q)),
                                         n, Mode::bosonic);
      EXPECT_EQ(dim_power_poly(n, Mode::bosonic).eval_at(Rational(-q)),
                rigid::categorical_dimension(p.part.summand))
          << q << " " << n;
    }
}

// The fermionic closed form was fixed by this oracle: the rising
// binomial at -q equals the super dimension of the n-th symmetric power
// of a purely odd space.
TEST(CrossBackend, FermionicClosedFormOracle) {
  for (int q = 1; q <= 3; ++q)
    for (int n = 1; n <= 3; ++n) {
      const auto p = rigid::power_object(rigid::SuperSpace::odd_space(static_cast<std::size_t>(q)),
                                         n, Mode::fermionic);
      EXPECT_EQ(rising_binomial(n).eval_at(Rational(-q)),
                rigid::categorical_dimension(p.part.summand))
          << q << " " << n;
    }
}

TEST(DimensionEquation, DichotomySmall) {
  const std::vector<Integer> three = solve_dimension_equation(3, 1000);
  ASSERT_EQ(three.size(), 2u);
  EXPECT_EQ(three[0], 3);
  EXPECT_EQ(three[1], -1);

  const std::vector<Integer> two = solve_dimension_equation(2, 1000);
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0], 2);
  EXPECT_EQ(two[1], -1);
}

TEST(DimensionEquation, DichotomyUpToTwenty) {
  for (int n = 2; n <= 20; ++n) {
    const std::vector<Integer> sols = solve_dimension_equation(n, 10000);
    ASSERT_EQ(sols.size(), 2u) << n;
    EXPECT_EQ(sols[0], n) << n;
    EXPECT_EQ(sols[1], -1) << n;
  }
}

TEST(DimensionEquation, Preconditions) {
  EXPECT_THROW(solve_dimension_equation(1, 100), std::invalid_argument);
  EXPECT_THROW(solve_dimension_equation(5, 3), std::invalid_argument);
}

}  // namespace
