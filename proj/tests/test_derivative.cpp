#include "helpers.hpp"

using namespace skew;
using namespace skew::test;

namespace {

// x1^2 x2 with sigma = Id, delta = 0 over the quaternions.
struct MixedPartials : ::testing::Test {
  std::shared_ptr<const TwistConfig<QuaternionRing>> tw = quaternion_identity(2);
  using P = Polynomial<QuaternionRing>;
  P f = P::monomial(tw, Monomial({0, 0, 1}));
  Point<QuaternionRing> a{Q(1, 2, 0, -1), Q(0, 1, 3, 2)};
};

}  // namespace

TEST_F(MixedPartials, FirstOrder) {
  EXPECT_TRUE(same(partial_right(f, a, 0), a[1] * P::variable(tw, 0) + P::constant(tw, a[1] * a[0])));
  EXPECT_TRUE(same(partial_right(f, a, 1), P::monomial(tw, Monomial({0, 0}))));
  EXPECT_TRUE(same(partial_left(f, a, 0), P::monomial(tw, Monomial({0, 1})) + a[0] * P::variable(tw, 1)));
}

TEST_F(MixedPartials, ChainOrderMatters) {
  const auto [d12, v12] = partial_chain(f, a, Monomial({0, 1}), Side::right);
  EXPECT_EQ(v12, a[0] + a[0]);
  const auto [d21, v21] = partial_chain(f, a, Monomial({1, 0}), Side::right);
  EXPECT_TRUE(d21.is_zero());
  EXPECT_EQ(v21, Q(0));
  const auto [d0, v0] = partial_chain(f, a, Monomial(), Side::right);
  EXPECT_TRUE(same(d0, f));
  EXPECT_EQ(v0, right_eval(f, a));
}

TEST(Derivative, ConstantsHaveZeroPartials) {
  auto tw = gaussian_conjugation(2, true);
  const auto c = Polynomial<GaussianRing>::constant(tw, gq(3, -2));
  for (Side side : {Side::right, Side::left}) {
    for (std::size_t i = 0; i < 2; ++i) EXPECT_TRUE(partial(c, {gq(1), gq(0, 1)}, i, side).is_zero());
  }
  EXPECT_THROW(partial(c, {gq(1), gq(1)}, 2, Side::right), std::out_of_range);
}

TEST(Derivative, HermiteFixtureValues) {
  auto tw = gaussian_conjugation(1);
  const auto f = parse_polynomial(tw, "(3+i)*x^4 - (4+2i)*x^3 - (8-3i)*x^2 + (5+2i)*x + 5-5i");
  EXPECT_EQ(chain_values(f, {gq(0, 1)}, Monomial({0, 0}), Side::right), (std::vector<GQ>{gq(0), gq(1), gq(0, 1)}));
  EXPECT_EQ(chain_values(f, {gq(1, 1)}, Monomial({0}), Side::right), (std::vector<GQ>{gq(0), gq(1)}));
}

TEST(Derivative, ChainWords) {
  const Monomial m({0, 1, 2});
  EXPECT_EQ(chain_words(m, Side::right), (std::vector<Monomial>{Monomial(), Monomial({2}), Monomial({1, 2}), m}));
  EXPECT_EQ(chain_words(m, Side::left), (std::vector<Monomial>{Monomial(), Monomial({0}), Monomial({0, 1}), m}));
}

TEST(Derivative, TaylorWitnessOfDegreeTwo) {
  auto tw = quaternion_identity(2);
  using P = Polynomial<QuaternionRing>;
  const Point<QuaternionRing> a{Q::i(), Q(2, 0, 1, 0)};
  const Q alpha(1), beta = Q::j(), gamma(0, 1, 1, 0), delta = Q::k(), eps(2, 0, 0, 1);
  const P l1 = P::linear(tw, 0, a[0]), l2 = P::linear(tw, 1, a[1]);
  const P f = eps * (l1 * l2) + delta * (l1 * l1) + gamma * l2 + beta * l1 + P::constant(tw, alpha);
  const auto table = taylor(f, a, Side::right);
  EXPECT_EQ(table.entries.at(Monomial()), alpha);
  EXPECT_EQ(table.entries.at(Monomial({0})), beta);
  EXPECT_EQ(table.entries.at(Monomial({1})), gamma);
  EXPECT_EQ(table.entries.at(Monomial({0, 0})), delta);
  EXPECT_EQ(table.entries.at(Monomial({0, 1})), eps);
  EXPECT_EQ(table.entries.at(Monomial({1, 0})), Q(0));
  EXPECT_EQ(table.entries.at(Monomial({1, 1})), Q(0));
  EXPECT_TRUE(same(taylor_reconstruct(table), f));
}

TEST(Derivative, TaylorOfConstants) {
  auto tw = gaussian_conjugation(1);
  using P = Polynomial<GaussianRing>;
  for (const auto& f : {P::constant(tw, gq(2, 3)), P(tw)}) {
    for (Side side : {Side::right, Side::left}) {
      const auto table = taylor(f, {gq(1, 1)}, side);
      ASSERT_EQ(table.entries.size(), 1u);
      EXPECT_TRUE(same(taylor_reconstruct(table), f));
    }
  }
}

template <RingContext R>
void derivative_properties(const std::shared_ptr<const TwistConfig<R>>& tw, std::mt19937_64& g, int trials) {
  using P = Polynomial<R>;
  for (int t = 0; t < trials; ++t) {
    const auto f = random_polynomial(tw, g, 3, 4), h = random_polynomial(tw, g, 3, 4);
    const auto a = random_point(*tw, g);
    const auto l = tw->ring().random(g);
    const auto m = random_word(tw->n(), 3, g);
    // Linearity.
    EXPECT_TRUE(same(partial_chain(l * f + h, a, m, Side::right).first,
                     l * partial_chain(f, a, m, Side::right).first + partial_chain(h, a, m, Side::right).first));
    EXPECT_TRUE(same(partial_chain(f * l + h, a, m, Side::left).first,
                     partial_chain(f, a, m, Side::left).first * l + partial_chain(h, a, m, Side::left).first));

    // Right product formula: the words x_{i1}..x_{ik} and x_{i(k+1)}..x_{is} split m.
    const std::size_t s = m.degree();
    P rhs = f * partial_chain(h, a, m, Side::right).first;
    for (std::size_t k = 1; k <= s; ++k) {
      const auto inner = partial_chain(h, a, m.suffix(s - k), Side::right).second;
      rhs += partial_chain(f * inner, a, m.prefix(k), Side::right).first;
    }
    EXPECT_TRUE(same(partial_chain(f * h, a, m, Side::right).first, rhs));

    // Left product formula, with the left chain applying the first letter first.
    P lhs_rhs = partial_chain(f, a, m, Side::left).first * h;
    for (std::size_t k = 0; k < s; ++k) {
      const auto inner = partial_chain(f, a, m.prefix(k), Side::left).second;
      lhs_rhs += partial_chain(inner * h, a, m.suffix(s - k), Side::left).first;
    }
    EXPECT_TRUE(same(partial_chain(f * h, a, m, Side::left).first, lhs_rhs));

    // Taylor round trip.
    for (Side side : {Side::right, Side::left}) EXPECT_TRUE(same(taylor_reconstruct(taylor(f, a, side)), f));
  }
}

TEST(Derivative, Properties) {
  std::mt19937_64 g(51);
  derivative_properties(gf_frobenius(3, 2, 2, true), g, 100);
  derivative_properties(gaussian_conjugation(2, true), g, 60);
  derivative_properties(quaternion_inner(2), g, 60);
  derivative_properties(gf_triangular(true, true), g, 60);
}

TEST(Derivative, ClassicalLeibnizRule) {
  auto tw = TwistConfig<RationalRing>::trivial(RationalRing{}, 2);
  std::mt19937_64 g(52);
  for (int t = 0; t < 100; ++t) {
    const auto f = random_polynomial(tw, g, 3, 4), h = random_polynomial(tw, g, 3, 4);
    const auto a = random_point(*tw, g);
    for (std::size_t i = 0; i < 2; ++i) {
      for (Side side : {Side::right, Side::left}) {
        const auto lhs = evaluate(partial(f * h, a, i, side), a, side);
        const auto rhs = evaluate(f, a, side) * evaluate(partial(h, a, i, side), a, side) +
                         evaluate(partial(f, a, i, side), a, side) * evaluate(h, a, side);
        EXPECT_EQ(lhs, rhs);
      }
    }
  }
}
