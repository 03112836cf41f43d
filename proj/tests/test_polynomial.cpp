#include "helpers.hpp"

using namespace skew;
using namespace skew::test;

TEST(Polynomial, ConjugationProducts) {
  auto tw = gaussian_conjugation(1);
  const auto xi = parse_polynomial(tw, "x + i");
  EXPECT_TRUE(same(xi * xi, parse_polynomial(tw, "x^2 - 1")));
  using P = Polynomial<GaussianRing>;
  EXPECT_TRUE(same(P::variable(tw, 0) * P::constant(tw, gq(0, 1)), P::monomial(tw, Monomial({0}), gq(0, -1))));
  EXPECT_TRUE(same(parse_polynomial(tw, "(x + i) + (x - i)"), parse_polynomial(tw, "2*x")));
}

TEST(Polynomial, QuaternionConstantsCommuteWithVariables) {
  auto tw = quaternion_identity(2);
  using P = Polynomial<QuaternionRing>;
  const Q b(1, 2, -3, 1);
  EXPECT_TRUE(same(P::variable(tw, 0) * P::constant(tw, b), P::monomial(tw, Monomial({0}), b)));
  // Constants still do not commute with each other.
  EXPECT_FALSE(P::constant(tw, Q::i()) * P::constant(tw, Q::j()) == P::constant(tw, Q::j()) * P::constant(tw, Q::i()));
}

TEST(Polynomial, AdditiveBasics) {
  auto tw = gf_frobenius(7, 2, 2);
  std::mt19937_64 g(31);
  using P = Polynomial<GFRing>;
  for (int t = 0; t < 100; ++t) {
    const auto f = random_polynomial(tw, g, 4, 5), h = random_polynomial(tw, g, 4, 5);
    EXPECT_TRUE(same(f + P(tw), f));
    EXPECT_TRUE((f + (-f)).is_zero());
    EXPECT_LE(f + h == P(tw) ? Degree::neg_inf() : (f + h).degree(), std::max(f.degree(), h.degree()));
  }
  EXPECT_TRUE(P(tw).degree().is_neg_inf());
  EXPECT_THROW(P(tw).leading(), ZeroPolynomial);
  EXPECT_THROW(P(tw).degree().value(), ZeroPolynomial);
}

TEST(Polynomial, TwistMismatchIsRejected) {
  auto a = gaussian_conjugation(1), b = gaussian_conjugation(1);
  using P = Polynomial<GaussianRing>;
  EXPECT_THROW(P::variable(a, 0) + P::variable(b, 0), TwistMismatch);
  EXPECT_THROW(P::variable(a, 0) * P::variable(b, 0), TwistMismatch);
}

TEST(Polynomial, LeadingMonomial) {
  auto tw = gaussian_conjugation(2);
  const auto f = parse_polynomial(tw, "x1^2*x2 + x1");
  EXPECT_EQ(f.leading().first, Monomial({0, 0, 1}));
  EXPECT_EQ(f.leading(Side::left).first, Monomial({0, 0, 1}));
  const auto c = parse_polynomial(tw, "3/2+1/2i");
  EXPECT_EQ(c.leading().first, Monomial());
  EXPECT_EQ(c.leading().second, gq(Rational(3, 2), Rational(1, 2)));
  // Equal degree: the right order reads from the end, the left from the start.
  const auto tie = parse_polynomial(tw, "x1*x2 + 5*x2*x1");
  EXPECT_EQ(tie.leading(Side::right).first, Monomial({0, 1}));
  EXPECT_EQ(tie.leading(Side::left).first, Monomial({1, 0}));
}

namespace {

// Degree first, then the reading-direction string compared lexicographically.
bool brute_less(const Monomial& a, const Monomial& b, Side side) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  std::string sa, sb;
  for (std::size_t k = 0; k < a.degree(); ++k) {
    const std::size_t idx = side == Side::right ? a.degree() - 1 - k : k;
    sa += static_cast<char>('a' + a[idx]);
    sb += static_cast<char>('a' + b[idx]);
  }
  return sa < sb;
}

}  // namespace

TEST(Polynomial, OrdersMatchBruteForce) {
  std::vector<Monomial> words;
  for (std::size_t d = 0; d <= 3; ++d) {
    for (const auto& w : words_of_degree(2, d, Side::right)) words.push_back(w);
  }
  ASSERT_EQ(words.size(), 15u);
  for (Side side : {Side::right, Side::left}) {
    for (const auto& a : words) {
      for (const auto& b : words) {
        EXPECT_EQ(compare_grlex(a, b, side) < 0, brute_less(a, b, side));
      }
    }
    const auto sorted = words_below(2, 4, side);
    for (std::size_t t = 1; t < sorted.size(); ++t) EXPECT_TRUE(brute_less(sorted[t - 1], sorted[t], side));
  }
}

template <RingContext R>
void ring_laws(const std::shared_ptr<const TwistConfig<R>>& tw, std::mt19937_64& g, int trials) {
  using P = Polynomial<R>;
  const P one = P::constant(tw, tw->one());
  for (int t = 0; t < trials; ++t) {
    const auto f = random_polynomial(tw, g, 4, 3), h = random_polynomial(tw, g, 4, 3), k = random_polynomial(tw, g, 4, 3);
    ASSERT_TRUE(same((f * h) * k, f * (h * k))) << tw->describe();
    ASSERT_TRUE(same(f * (h + k), f * h + f * k));
    ASSERT_TRUE(same((f + h) * k, f * k + h * k));
    ASSERT_TRUE(same(one * f, f));
    ASSERT_TRUE(same(f * one, f));
    if (!f.is_zero() && !h.is_zero()) {
      ASSERT_EQ((f * h).degree(), Degree(f.degree().value() + h.degree().value()));
    }
  }
}

TEST(Polynomial, RingLaws) {
  std::mt19937_64 g(32);
  ring_laws(gf_frobenius(7, 2, 2, true), g, 200);
  ring_laws(gaussian_conjugation(2, true), g, 200);
  ring_laws(quaternion_inner(2), g, 200);
  ring_laws(gf_triangular(false, true), g, 100);
}

TEST(Polynomial, ScalarActions) {
  auto tw = quaternion_inner(2);
  std::mt19937_64 g(33);
  using P = Polynomial<QuaternionRing>;
  for (int t = 0; t < 100; ++t) {
    const auto f = random_polynomial(tw, g, 3, 4);
    const auto l = QuaternionRing{}.random(g), m = QuaternionRing{}.random(g);
    EXPECT_TRUE(same(l * (m * f), (l * m) * f));
    EXPECT_TRUE(same((f * l) * m, f * (l * m)));
    EXPECT_TRUE(same(l * f, P::constant(tw, l) * f));
    EXPECT_TRUE(same(f * l, f * P::constant(tw, l)));
  }
}

template <RingContext R>
void right_coefficient_round_trip(const std::shared_ptr<const TwistConfig<R>>& tw, std::mt19937_64& g) {
  using P = Polynomial<R>;
  for (int t = 0; t < 100; ++t) {
    const auto f = random_polynomial(tw, g, 4, 5);
    const auto right = f.right_coefficients();
    EXPECT_TRUE(same(P::from_right_coefficients(tw, right), f));
    // Direct check: the sum of m * c over right coefficients.
    P sum(tw);
    for (const auto& [m, c] : right) sum += P::monomial(tw, m) * P::constant(tw, c);
    EXPECT_TRUE(same(sum, f));
  }
}

TEST(Polynomial, RightCoefficients) {
  std::mt19937_64 g(34);
  right_coefficient_round_trip(gf_frobenius(7, 2, 2, true), g);
  right_coefficient_round_trip(gaussian_conjugation(1, true), g);
  right_coefficient_round_trip(quaternion_inner(2), g);
  right_coefficient_round_trip(gf_triangular(true, true), g);

  auto conj = gaussian_conjugation(1);
  const auto ix = parse_polynomial(conj, "i*x");
  const auto right = ix.right_coefficients();
  ASSERT_EQ(right.size(), 1u);
  EXPECT_EQ(right.begin()->second, gq(0, -1));

  auto id = quaternion_identity(2);
  const auto f = random_polynomial(id, g, 3, 5);
  EXPECT_EQ(f.right_coefficients(), f.terms());

  EXPECT_THROW(Polynomial<GFRing>::variable(gf_triangular(false, false), 0).right_coefficients(), NotLeftCapable);
}

template <RingContext R>
void print_parse_round_trip(const std::shared_ptr<const TwistConfig<R>>& tw, std::mt19937_64& g) {
  for (int t = 0; t < 100; ++t) {
    const auto f = random_polynomial(tw, g, 4, 5);
    const std::string text = to_string(f);
    EXPECT_TRUE(same(parse_polynomial(tw, text), f)) << text;
    EXPECT_EQ(to_string(parse_polynomial(tw, text)), text);
  }
}

TEST(Polynomial, CanonicalTextRoundTrip) {
  std::mt19937_64 g(35);
  print_parse_round_trip(gf_frobenius(7, 2, 2), g);
  print_parse_round_trip(gaussian_conjugation(1), g);
  print_parse_round_trip(gaussian_conjugation(3), g);
  print_parse_round_trip(quaternion_identity(2), g);
  print_parse_round_trip(TwistConfig<RationalRing>::trivial(RationalRing{}, 2), g);
}

TEST(Polynomial, CanonicalText) {
  auto tw = gaussian_conjugation(1);
  EXPECT_EQ(to_string(parse_polynomial(tw, "(3+i)*x^4 + 5-5i")), "(3+i)*x^4 + (5-5i)");
  EXPECT_EQ(to_string(parse_polynomial(tw, "(3+i)*x^4 - (4+2i)*x^3 - (8-3i)*x^2 + (5+2i)*x + 5-5i")),
            "(3+i)*x^4 - (4+2i)*x^3 - (8-3i)*x^2 + (5+2i)*x + (5-5i)");
  EXPECT_EQ(to_string(parse_polynomial(tw, "-x^2 - i*x - 1")), "-x^2 - i*x - 1");
  EXPECT_EQ(to_string(Polynomial<GaussianRing>(tw)), "0");
  EXPECT_EQ(to_string(parse_polynomial(quaternion_identity(2), "q(0,1,0,0)*x2*x1")), "q(0,1,0,0)*x2*x1");
  EXPECT_THROW(parse_polynomial(tw, "x +"), ParseError);
  EXPECT_THROW(parse_polynomial(tw, "x2"), ParseError);
}
