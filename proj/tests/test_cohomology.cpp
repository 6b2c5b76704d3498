#include <gtest/gtest.h>

#include "spq/cohomology.hpp"
#include "support.hpp"

namespace spq {
namespace {

using testing::Rng;

HomogeneousForm form(int p, std::vector<std::int64_t> c) { return HomogeneousForm(Prime(p), c); }

CohomRingModel squares_model() { return build_model({form(5, {1, 0, 0}), form(5, {0, 0, 1})}, Prime(5), 2); }

// h lies in the ideal in degree d iff u f + v g = h for some forms u, v of
// degree d - n; checked by enumerating every (u, v).
bool in_ideal_by_search(const KInvariant& k, int n, const HomogeneousForm& h) {
  const int p = k.prime();
  const int m = h.degree() - n;
  if (m < 0) return h.is_zero();
  const auto len = static_cast<std::size_t>(m + 1);
  std::size_t total = 1;
  for (std::size_t i = 0; i < 2 * len; ++i) total *= static_cast<std::size_t>(p);
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<std::int64_t> u(len), v(len);
    std::size_t c = code;
    for (auto& x : u) x = static_cast<std::int64_t>(c % static_cast<std::size_t>(p)), c /= static_cast<std::size_t>(p);
    for (auto& x : v) x = static_cast<std::int64_t>(c % static_cast<std::size_t>(p)), c /= static_cast<std::size_t>(p);
    if (HomogeneousForm(Prime(p), u) * k.first + HomogeneousForm(Prime(p), v) * k.second == h) return true;
  }
  return false;
}

KInvariant random_k(Rng& rng, Prime p, int n) { return k_invariant(testing::random_free_space(rng, p, n)); }

TEST(BuildModel, SquaresExample) {
  const auto model = squares_model();
  EXPECT_EQ(model.max_degree(), 3);
  EXPECT_EQ(model.ideal_rank(0), 0U);
  EXPECT_EQ(model.ideal_rank(1), 0U);
  EXPECT_EQ(model.ideal_basis(2), FpMatrix::from_rows(Prime(5), {{1, 0, 0}, {0, 0, 1}}));
  EXPECT_EQ(model.ideal_basis(3), FpMatrix::identity(Prime(5), 4));
}

TEST(BuildModel, RejectsDegenerateOrMismatchedInput) {
  EXPECT_THROW(build_model({form(5, {0, 0, 0}), form(5, {0, 0, 1})}, Prime(5), 2), DomainError);
  EXPECT_THROW(build_model({form(5, {1, 0, 0}), form(5, {0, 0, 1})}, Prime(5), 3), DomainError);
  EXPECT_THROW(build_model({form(5, {1, 0, 0}), form(5, {0, 0, 1})}, Prime(7), 2), DomainError);
}

TEST(Reduce, Examples) {
  const auto model = squares_model();
  EXPECT_EQ(reduce(model, form(5, {1, 1, 0})), form(5, {0, 1, 0}));
  EXPECT_EQ(reduce(model, form(5, {3, 2, 4})), form(5, {0, 2, 0}));
  EXPECT_EQ(reduce(model, form(5, {0, 1, 0})), form(5, {0, 1, 0}));
  EXPECT_EQ(reduce(model, HomogeneousForm::zero(Prime(5), 2)), HomogeneousForm::zero(Prime(5), 2));
  EXPECT_TRUE(reduce(model, form(5, {4, 0, 2})).is_zero());
  EXPECT_THROW(reduce(model, HomogeneousForm::zero(Prime(5), 4)), DomainError);
  EXPECT_THROW(reduce(model, form(7, {1, 0, 0})), DomainError);
}

TEST(InIdeal, Examples) {
  const auto model = squares_model();
  EXPECT_TRUE(in_ideal(model, form(5, {1, 0, 0})));
  EXPECT_FALSE(in_ideal(model, form(5, {0, 1, 0})));
  // a^2 b^2 has degree 4, above the truncation 2n - 1 = 3 of this model.
  EXPECT_THROW(in_ideal(model, HomogeneousForm::monomial(Prime(5), 2, 2)), DomainError);
  // The same multiple-of-a-generator membership one degree lower in n = 3.
  const auto cubes = build_model({form(7, {1, 0, 0, 0}), form(7, {0, 0, 0, 1})}, Prime(7), 3);
  EXPECT_TRUE(in_ideal(cubes, HomogeneousForm::monomial(Prime(7), 3, 2)));
  EXPECT_FALSE(in_ideal(cubes, HomogeneousForm::monomial(Prime(7), 2, 2)));
}

TEST(EqualInQuotient, Examples) {
  const auto model = squares_model();
  const TotalClass one{5, 2, {}};
  const TotalClass squares{5, 2, {{4, form(5, {1, 0, 1})}}};
  const TotalClass mixed{5, 2, {{4, form(5, {0, 1, 0})}}};
  EXPECT_TRUE(equal_in_quotient(model, squares, squares));
  EXPECT_TRUE(equal_in_quotient(model, squares, one));
  EXPECT_FALSE(equal_in_quotient(model, mixed, one));
  EXPECT_TRUE(equal_in_quotient(model, form(5, {0, 1, 0}), form(5, {2, 1, 3})));
  EXPECT_FALSE(equal_in_quotient(model, form(5, {0, 1, 0}), HomogeneousForm::zero(Prime(5), 2)));
  EXPECT_THROW(equal_in_quotient(model, TotalClass{5, 3, {}}, one), DomainError);
}

TEST(InIdeal, MatchesMultiplierSearch) {
  Rng rng(29);
  for (int trial = 0; trial < 120; ++trial) {
    const Prime p(trial % 2 == 0 ? 5 : 7);
    const auto k = random_k(rng, p, 2);
    const auto model = build_model(k, p, 2);
    for (int d = 0; d <= model.max_degree(); ++d) {
      // Random forms are rarely in the ideal; bias half the probes into it.
      auto h = testing::random_form(rng, p, d);
      if (d >= 2 && trial % 2 == 0) {
        h = testing::random_form(rng, p, d - 2) * k.first + testing::random_form(rng, p, d - 2) * k.second;
      }
      ASSERT_EQ(in_ideal(model, h), in_ideal_by_search(k, 2, h)) << to_string(h);
    }
  }
}

TEST(Reduce, LinearIdempotentAndRankBounded) {
  Rng rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const Prime p{std::array{5, 7, 11}[static_cast<std::size_t>(trial % 3)]};
    const int n = testing::uniform(rng, 2, 3);
    const auto k = random_k(rng, p, n);
    const auto model = build_model(k, p, n);
    for (int d = 0; d <= model.max_degree(); ++d) {
      const auto bound = d < n ? 0U : std::min<std::size_t>(d + 1, 2 * static_cast<std::size_t>(d - n + 1));
      EXPECT_LE(model.ideal_rank(d), bound);
      const auto u = testing::random_form(rng, p, d);
      const auto v = testing::random_form(rng, p, d);
      const Fp alpha(testing::uniform(rng, 0, p - 1), p), beta(testing::uniform(rng, 0, p - 1), p);
      EXPECT_EQ(reduce(model, u * alpha + v * beta), reduce(model, u) * alpha + reduce(model, v) * beta);
      EXPECT_EQ(reduce(model, reduce(model, u)), reduce(model, u));
      EXPECT_TRUE(in_ideal(model, u - reduce(model, u)));
    }
  }
}

TEST(Ideal, SubstitutionEquivariant) {
  Rng rng(37);
  for (int trial = 0; trial < 200; ++trial) {
    const Prime p(trial % 2 == 0 ? 5 : 7);
    const int n = testing::uniform(rng, 2, 3);
    const auto k = random_k(rng, p, n);
    const Mat2 A = testing::random_invertible(rng, p);
    const auto model = build_model(k, p, n);
    const auto moved = build_model(substitute(k, A), p, n);
    for (int d = n; d <= model.max_degree(); ++d) {
      auto h = testing::random_form(rng, p, d);
      if (trial % 2 == 0) h = h - reduce(model, h);
      EXPECT_EQ(in_ideal(model, h), in_ideal(moved, substitute(h, A)));
    }
  }
}

TEST(Ideal, DependsOnlyOnTheSpan) {
  Rng rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const Prime p(trial % 2 == 0 ? 5 : 7);
    const int n = testing::uniform(rng, 2, 3);
    const auto k = random_k(rng, p, n);
    const Mat2 M = testing::random_invertible(rng, p);
    const KInvariant recombined{k.first * M.at(0, 0) + k.second * M.at(0, 1),
                                k.first * M.at(1, 0) + k.second * M.at(1, 1)};
    if (recombined.first.is_zero() || recombined.second.is_zero()) continue;
    const auto model = build_model(k, p, n);
    const auto other = build_model(recombined, p, n);
    for (int d = 0; d <= model.max_degree(); ++d) {
      EXPECT_EQ(model.ideal_basis(d), other.ideal_basis(d));
      const auto h = testing::random_form(rng, p, d);
      EXPECT_EQ(reduce(model, h), reduce(other, h));
    }
  }
}

TEST(TotalClass, ReduceAndSubstitute) {
  const auto model = squares_model();
  const TotalClass cls{5, 2, {{4, form(5, {3, 2, 4})}}};
  const auto reduced = reduce(model, cls);
  EXPECT_EQ(reduced.components.at(4), form(5, {0, 2, 0}));
  EXPECT_EQ(reduce(model, reduced), reduced);
  const auto swapped = substitute(cls, Mat2::swap(Prime(5)));
  EXPECT_EQ(swapped.components.at(4), form(5, {4, 2, 3}));
  EXPECT_FALSE(reduced.is_trivial());
  EXPECT_TRUE(reduce(model, TotalClass{5, 2, {{4, form(5, {1, 0, 1})}}}).is_trivial());
}

}  // namespace
}  // namespace spq
