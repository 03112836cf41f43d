#include "helpers.hpp"

using namespace skew;
using namespace skew::test;

template <RingContext R>
void expect_laws(const std::shared_ptr<const TwistConfig<R>>& tw) {
  const auto report = validate_laws(*tw, 200);
  for (const auto& v : report.violations) ADD_FAILURE() << tw->describe() << ": " << v.law << " " << v.witness;
  EXPECT_TRUE(report.ok());
}

TEST(Twist, BuiltInConfigurationsSatisfyLaws) {
  expect_laws(gf_frobenius(7, 2, 2));
  expect_laws(gf_frobenius(7, 2, 2, true));
  expect_laws(gaussian_conjugation(1));
  expect_laws(gaussian_conjugation(2, true));
  expect_laws(quaternion_identity(2));
  expect_laws(quaternion_inner(2));
  expect_laws(TwistConfig<RationalRing>::trivial(RationalRing{}, 3));
  expect_laws(gf_triangular(true, true));
}

TEST(Twist, BrokenDerivationIsReported) {
  using T = TwistConfig<GaussianRing>;
  // a -> a^2 is not additive and breaks the Leibniz rule.
  auto bad = T::diagonal(GaussianRing{}, {conjugation()}, T::Delta::plugin([](std::size_t, const GQ& a) { return a * a; }));
  const auto report = validate_laws(*bad, 50);
  EXPECT_FALSE(report.ok());
}

TEST(Twist, BrokenMorphismIsReported) {
  using T = TwistConfig<GaussianRing>;
  // Off-diagonal copy of a: sigma(ab) != sigma(a) sigma(b).
  auto bad = T::plugin(GaussianRing{}, 2, [](std::size_t, std::size_t, const GQ& a) { return a; }, std::nullopt);
  EXPECT_FALSE(validate_laws(*bad, 50).ok());
}

TEST(Twist, SamplingIsDeterministic) {
  using T = TwistConfig<GaussianRing>;
  auto bad = T::diagonal(GaussianRing{}, {conjugation()}, T::Delta::plugin([](std::size_t, const GQ& a) { return a * a; }));
  const auto a = validate_laws(*bad, 30, 7), b = validate_laws(*bad, 30, 7);
  ASSERT_EQ(a.violations.size(), b.violations.size());
  for (std::size_t i = 0; i < a.violations.size(); ++i) EXPECT_EQ(a.violations[i].witness, b.violations[i].witness);
}

template <RingContext R>
void tilde_laws(const std::shared_ptr<const TwistConfig<R>>& tw, std::mt19937_64& g) {
  using S = typename R::Scalar;
  const std::size_t n = tw->n();
  for (int t = 0; t < 100; ++t) {
    const S lambda = tw->ring().random(g), mu = tw->ring().random(g);
    const auto sl = tw->tilde_sigma(lambda), sm = tw->tilde_sigma(mu), smu_l = tw->tilde_sigma(mu * lambda);
    const auto dl = tw->tilde_delta(lambda), dm = tw->tilde_delta(mu), dmu_l = tw->tilde_delta(mu * lambda);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        S prod = tw->zero();
        for (std::size_t j = 0; j < n; ++j) prod += sm[i][j] * sl[j][k];
        EXPECT_EQ(smu_l[i][k], prod);
      }
      // Row vector dm times matrix sl, plus mu dl.
      S rhs = mu * dl[i];
      for (std::size_t j = 0; j < n; ++j) rhs += dm[j] * sl[j][i];
      EXPECT_EQ(dmu_l[i], rhs);
    }
    // lambda x_k = sum_i x_i tilde_sigma(lambda)_ik + tilde_delta(lambda)_k as polynomials.
    using P = Polynomial<R>;
    for (std::size_t k = 0; k < n; ++k) {
      P lhs = P::constant(tw, lambda) * P::variable(tw, k);
      P rhs = P::constant(tw, dl[k]);
      for (std::size_t i = 0; i < n; ++i) rhs += P::variable(tw, i) * P::constant(tw, sl[i][k]);
      EXPECT_TRUE(same(lhs, rhs));
    }
    std::vector<S> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(tw->ring().random(g));
    EXPECT_EQ(tw->phi(tw->phi_inv(v)), v);
    EXPECT_EQ(tw->phi_inv(tw->phi(v)), v);
  }
}

TEST(Twist, RightwardRewritingLaws) {
  std::mt19937_64 g(11);
  tilde_laws(gf_frobenius(7, 2, 2, true), g);
  tilde_laws(gaussian_conjugation(2, true), g);
  tilde_laws(quaternion_inner(2), g);
  tilde_laws(gf_triangular(true, true), g);
}

TEST(Twist, LeftCapability) {
  EXPECT_TRUE(gf_triangular(true, false)->left_capable());
  auto right_only = gf_triangular(false, false);
  EXPECT_FALSE(right_only->left_capable());
  EXPECT_THROW(right_only->phi_inv({right_only->one(), right_only->zero()}), NotLeftCapable);
  EXPECT_THROW(right_only->tilde_sigma(right_only->one()), NotLeftCapable);
}

TEST(Twist, InnerDerivationClosedForm) {
  auto tw = gaussian_conjugation(2, true);
  const auto& v = tw->delta_spec().v;
  std::mt19937_64 g(12);
  for (int t = 0; t < 50; ++t) {
    const auto a = tw->ring().random(g);
    for (std::size_t i = 0; i < 2; ++i) EXPECT_EQ(tw->delta(i, a), a.conj() * v[i] - v[i] * a);
  }
}

TEST(Twist, CatalogInverses) {
  GFRing ring(7, 2);
  const auto f = frobenius(ring, 1);
  std::mt19937_64 g(13);
  for (int t = 0; t < 50; ++t) {
    const auto a = ring.random(g);
    EXPECT_EQ(f.inverse(f(a)), a);
  }
  const auto c = inner_automorphism(Q::j(), "j");
  EXPECT_EQ(c(Q::i()), -Q::i());
  EXPECT_EQ(c.inverse(c(Q::k())), Q::k());
  EXPECT_THROW(inner_automorphism(Q(0), "0"), std::invalid_argument);
}
