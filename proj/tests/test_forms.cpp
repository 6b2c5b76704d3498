#include <gtest/gtest.h>

#include "spq/forms.hpp"
#include "support.hpp"

namespace spq {
namespace {

using testing::Rng;

HomogeneousForm form(int p, std::vector<std::int64_t> c) { return HomogeneousForm(Prime(p), c); }

std::vector<std::pair<Fp, Fp>> pairs(int p, std::initializer_list<std::pair<int, int>> list) {
  std::vector<std::pair<Fp, Fp>> out;
  for (auto [r, q] : list) out.emplace_back(Fp(r, Prime(p)), Fp(q, Prime(p)));
  return out;
}

// Pointwise oracle for a form of degree d < p, which is determined by its
// values on F_p^2.
bool same_function(const HomogeneousForm& f, const std::function<int(int, int)>& g) {
  const int p = f.prime();
  for (int a = 0; a < p; ++a) {
    for (int b = 0; b < p; ++b) {
      if (f.evaluate(a, b) != g(a, b)) return false;
    }
  }
  return true;
}

TEST(ProductOfLinearForms, Examples) {
  const auto empty = product_of_linear_forms(Prime(5), {});
  EXPECT_EQ(empty.degree(), 0);
  EXPECT_EQ(empty, HomogeneousForm::one(Prime(5)));
  EXPECT_EQ(product_of_linear_forms(Prime(5), pairs(5, {{1, 0}, {1, 0}})), form(5, {1, 0, 0}));
  const auto f = product_of_linear_forms(Prime(7), pairs(7, {{1, 1}, {2, 1}}));
  EXPECT_EQ(f, form(7, {2, 3, 1}));
  EXPECT_EQ(to_string(f), "2a^2+3ab+b^2 (mod 7)");
}

TEST(ProductOfLinearForms, MixedModuliThrow) {
  std::vector<std::pair<Fp, Fp>> mixed{{Fp(1, Prime(5)), Fp(1, Prime(5))}, {Fp(1, Prime(7)), Fp(0, Prime(7))}};
  EXPECT_THROW(product_of_linear_forms(Prime(5), mixed), DomainError);
  EXPECT_THROW(form(5, {1, 1}) * form(7, {1, 1}), DomainError);
}

TEST(ProductOfLinearForms, MatchesEvaluationAndIsMultiplicative) {
  Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const int p = std::array{5, 7, 11}[static_cast<std::size_t>(trial % 3)];
    const Prime prime(p);
    const int m1 = testing::uniform(rng, 0, 2), m2 = testing::uniform(rng, 0, 2);
    std::vector<std::pair<Fp, Fp>> x, y;
    for (int k = 0; k < m1; ++k) x.emplace_back(Fp(testing::uniform(rng, 0, p - 1), prime), Fp(testing::uniform(rng, 0, p - 1), prime));
    for (int k = 0; k < m2; ++k) y.emplace_back(Fp(testing::uniform(rng, 0, p - 1), prime), Fp(testing::uniform(rng, 0, p - 1), prime));
    std::vector<std::pair<Fp, Fp>> xy = x;
    xy.insert(xy.end(), y.begin(), y.end());
    const auto fxy = product_of_linear_forms(prime, xy);
    EXPECT_EQ(fxy, product_of_linear_forms(prime, x) * product_of_linear_forms(prime, y));
    EXPECT_TRUE(same_function(fxy, [&](int a, int b) {
      int v = 1;
      for (auto [r, q] : xy) v = v * ((r.value() * a + q.value() * b) % p) % p;
      return v;
    }));
  }
}

TEST(Substitute, Examples) {
  Rng rng(5);
  const auto f = testing::random_form(rng, Prime(7), 3);
  EXPECT_EQ(substitute(f, Mat2::identity(Prime(7))), f);
  EXPECT_EQ(substitute(form(5, {1, 0, 0}), Mat2::diagonal(Prime(5), 2, 1)), form(5, {4, 0, 0}));
  EXPECT_EQ(substitute(form(7, {0, 1, 0}), Mat2::swap(Prime(7))), form(7, {0, 1, 0}));
  EXPECT_THROW(substitute(f, Mat2(Prime(7), 1, 2, 2, 4)), DomainError);
  EXPECT_THROW(substitute(f, Mat2::identity(Prime(5))), DomainError);
}

// Convention: a -> A11 a + A12 b, b -> A21 a + A22 b.
TEST(Substitute, MatchesEvaluationOracle) {
  Rng rng(9);
  for (int trial = 0; trial < 300; ++trial) {
    const int p = std::array{5, 7, 11}[static_cast<std::size_t>(trial % 3)];
    const Prime prime(p);
    const auto f = testing::random_form(rng, prime, testing::uniform(rng, 0, p - 1));
    const Mat2 A = testing::random_invertible(rng, prime);
    const auto g = substitute(f, A);
    EXPECT_EQ(g.degree(), f.degree());
    EXPECT_TRUE(same_function(g, [&](int a, int b) {
      return f.evaluate((A(0, 0) * a + A(0, 1) * b) % p, (A(1, 0) * a + A(1, 1) * b) % p);
    }));
  }
}

TEST(Substitute, CompositionLawAndProducts) {
  Rng rng(13);
  for (int trial = 0; trial < 500; ++trial) {
    const int p = std::array{3, 5, 7, 11, 13}[static_cast<std::size_t>(trial % 5)];
    const Prime prime(p);
    const auto f = testing::random_form(rng, prime, testing::uniform(rng, 0, 6));
    const auto g = testing::random_form(rng, prime, testing::uniform(rng, 0, 6));
    const Mat2 A = testing::random_invertible(rng, prime);
    const Mat2 A2 = testing::random_invertible(rng, prime);
    EXPECT_EQ(substitute(substitute(f, A), A2), substitute(f, A * A2));
    EXPECT_EQ(substitute(f * g, A), substitute(f, A) * substitute(g, A));
    EXPECT_EQ(substitute(substitute(f, A), A.inverse()), f);
  }
}

RotationData space(int p, int n, std::vector<std::int64_t> R, std::vector<std::int64_t> Q) {
  return validate(RawRotationData{p, n, std::move(R), std::move(Q)});
}

TEST(KInvariant, Examples) {
  const auto k1 = k_invariant(space(5, 2, {1, 1, 0, 0}, {0, 0, 1, 1}));
  EXPECT_EQ(k1.first, form(5, {1, 0, 0}));
  EXPECT_EQ(k1.second, form(5, {0, 0, 1}));

  const auto k2 = k_invariant(space(7, 2, {1, 2, 3, 4}, {1, 1, 1, 1}));
  EXPECT_EQ(k2.first, form(7, {2, 3, 1}));
  EXPECT_EQ(k2.second, form(7, {5, 0, 1}));

  const std::vector<std::int64_t> r{1, 2}, rp{1, 3};
  const auto k3 = k_invariant(product_of_lens_spaces(Prime(5), r, rp));
  EXPECT_EQ(k3.first, form(5, {2, 0, 0}));
  EXPECT_EQ(k3.second, form(5, {0, 0, 3}));
}

TEST(KInvariant, RequiresPGreaterThanN) {
  EXPECT_THROW(k_invariant(space(3, 3, {1, 1, 1, 0, 0, 0}, {0, 0, 0, 1, 1, 1})), HypothesisViolation);
  EXPECT_NO_THROW(k_invariant(space(3, 2, {1, 1, 0, 0}, {0, 0, 1, 1})));
}

TEST(KInvariant, BlockStructureOfLensProducts) {
  Rng rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const int p = std::array{5, 7, 11}[static_cast<std::size_t>(trial % 3)];
    const auto n = static_cast<std::size_t>(testing::uniform(rng, 2, 4));
    const auto r = testing::random_vector(rng, p, n, 1);
    const auto rp = testing::random_vector(rng, p, n, 1);
    const auto k = k_invariant(product_of_lens_spaces(Prime(p), r, rp));
    std::int64_t pr = 1, prp = 1;
    for (std::size_t i = 0; i < n; ++i) pr = pr * r[i] % p, prp = prp * rp[i] % p;
    std::vector<std::int64_t> first(n + 1, 0), second(n + 1, 0);
    first[0] = pr;
    second[n] = prp;
    EXPECT_EQ(k.first, form(p, first));
    EXPECT_EQ(k.second, form(p, second));
  }
}

TEST(KInvariant, ComponentsOfFreeSpacesAreNonzero) {
  Rng rng(19);
  for (int trial = 0; trial < 300; ++trial) {
    const int p = std::array{5, 7}[static_cast<std::size_t>(trial % 2)];
    const auto X = testing::random_free_space(rng, Prime(p), testing::uniform(rng, 2, 3));
    const auto k = k_invariant(X);
    EXPECT_EQ(k.degree(), X.n());
    EXPECT_FALSE(k.first.is_zero());
    EXPECT_FALSE(k.second.is_zero());
  }
}

TEST(KInvariant, CoefficientMapMixesComponents) {
  const auto k = k_invariant(space(7, 2, {1, 2, 3, 4}, {1, 1, 1, 1}));
  const auto swapped = apply_coefficient_map(Mat2::swap(Prime(7)), k);
  EXPECT_EQ(swapped.first, k.second);
  EXPECT_EQ(swapped.second, k.first);
  const auto mixed = apply_coefficient_map(Mat2(Prime(7), 1, 1, 0, 1), k);
  EXPECT_EQ(mixed.first, k.first + k.second);
  EXPECT_EQ(mixed.second, k.second);
}

}  // namespace
}  // namespace spq
