// Acceptance checks: one PASS/FAIL line per criterion, exit status 0 only
// when every criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "skew/sampling.hpp"

using namespace skew;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

using GQ = GaussianRational;

GQ gq(long re, long im) { return GQ(Rational(re), Rational(im)); }

template <RingContext R>
Polynomial<R> linear_factor(const std::shared_ptr<const TwistConfig<R>>& tw, std::size_t i, const typename R::Scalar& c) {
  return Polynomial<R>::linear(tw, i, c);
}

// 1. Hermite fixture over Q(i) with conjugation.
Outcome hermite_fixture() {
  Outcome out;
  auto tw = gaussian_conjugation(1);
  const GQ i = gq(0, 1);
  std::vector<Point<GaussianRing>> pts{{i}, {gq(1, 1)}};
  std::vector<Monomial> chains{Monomial({0, 0}), Monomial({0})};
  std::vector<std::vector<GQ>> targets{{gq(0, 0), gq(1, 0), i}, {gq(0, 0), gq(1, 0)}};
  const auto f = parse_polynomial(tw, "(3+i)*x^4 - (4+2i)*x^3 - (8-3i)*x^2 + (5+2i)*x + 5-5i");
  const auto g = parse_polynomial(tw, "(3+i)*x^4 - (4-2i)*x^3 - (8-3i)*x^2 + (5-2i)*x + 5-5i");
  for (Side side : {Side::right, Side::left}) {
    InterpProblem<GaussianRing> problem(ConstraintSpec<GaussianRing>(tw, pts, chains, side), targets);
    const auto sol = hermite_solve(problem);
    const auto& expect = side == Side::right ? f : g;
    if (!(sol.vandermonde == expect)) out.fail(std::string(side_name(side)) + " result " + to_string(sol.vandermonde));
    if (!sol.dual_basis || !(*sol.dual_basis == expect)) out.fail(std::string(side_name(side)) + " dual-basis result differs");
  }
  out.detail = out.pass ? "right and left interpolants equal the expected polynomials" : out.detail;
  return out;
}

// 2. Right and left values of (x1 - i) j x2 over the quaternions.
Outcome dual_evaluation() {
  Outcome out;
  auto tw = quaternion_identity(2);
  using P = Polynomial<QuaternionRing>;
  const Quaternion i = Quaternion::i(), j = Quaternion::j();
  const P f = linear_factor(tw, 0, i) * P::constant(tw, j) * P::variable(tw, 1);
  const Point<QuaternionRing> a{i, Quaternion(1)};
  const auto right = right_eval(f, a);
  const auto left = left_eval(f, a);
  if (!(right == j * i - i * j)) out.fail("right value " + to_string(right));
  if (!(right == Quaternion(0, 0, 0, -2))) out.fail("right value is not -2k");
  if (!left.is_zero()) out.fail("left value " + to_string(left));
  if (!(right_divide(f, a).remainder == right) || !(left_divide(f, a).remainder == left)) out.fail("division remainder mismatch");
  if (out.pass) out.detail = "F(i,1) = ji - ij = -2k and F_L(i,1) = 0";
  return out;
}

// 3. Independence fixtures over Q(i) with conjugation.
Outcome independence_fixture() {
  Outcome out;
  auto tw = gaussian_conjugation(1);
  using CS = ConstraintSpec<GaussianRing>;
  const Point<GaussianRing> one{gq(1, 0)}, minus_i{gq(0, -1)};
  const Point<GaussianRing> unit{GQ(Rational(3, 5), Rational(4, 5))};
  for (Side side : {Side::right, Side::left}) {
    const CS p_spec(tw, {one, minus_i}, {Monomial(), Monomial()}, side);
    if (!is_dp_independent(p_spec)) out.fail("{1,-i} should be P-independent");
    for (std::size_t m2 = 1; m2 <= 2; ++m2) {
      const CS spec(tw, {one, minus_i}, {Monomial(), Monomial(std::vector<std::uint16_t>(m2, 0))}, side);
      if (is_dp_independent(spec)) out.fail("{1,-i} reported independent of type (0," + std::to_string(m2) + ")");
      if (dp_independent_by_witness(spec)) out.fail("witness search disagrees for m2=" + std::to_string(m2));
    }
    const CS good(tw, {one, unit}, {Monomial(), Monomial({0})}, side);
    if (!is_dp_independent(good)) out.fail("{1,(3+4i)/5} should be independent of type (0,1)");
    if (!dp_independent_by_witness(good)) out.fail("witness search disagrees for {1,(3+4i)/5}");
  }
  if (out.pass) out.detail = "{1,-i}: P-independent, not of type (0,1) or (0,2); {1,(3+4i)/5}: type (0,1)";
  return out;
}

// 4. Product rule on both sides with planted zeros.
template <RingContext R>
void product_rule(const std::shared_ptr<const TwistConfig<R>>& tw, std::mt19937_64& g, std::size_t trials, Outcome& out) {
  using P = Polynomial<R>;
  std::uniform_int_distribution<std::size_t> pick(0, tw->n() - 1);
  for (std::size_t t = 0; t < trials && out.pass; ++t) {
    const auto a = random_point(*tw, g);
    P f = random_polynomial(tw, g, 2, 4);
    P h = random_polynomial(tw, g, 2, 3);
    const bool planted = t % 4 == 0;
    const std::size_t l = pick(g);
    // Right: G vanishes at a when it ends in (x_l - a_l). Left: when it starts with it.
    const P gr = planted ? h * P::linear(tw, l, a[l]) : h;
    const P gl = planted ? P::linear(tw, l, a[l]) * h : h;

    const auto gv = right_eval(gr, a);
    const auto fg = right_eval(f * gr, a);
    if (planted && !gv.is_zero()) out.fail("planted right zero is not a zero");
    const auto expect = gv.is_zero() ? tw->zero() : right_eval(f, conjugate_right(*tw, a, gv)) * gv;
    if (!(fg == expect)) out.fail(tw->ring().name() + ": right product rule, F=" + to_string(f) + " G=" + to_string(gr));

    const auto gvl = left_eval(gl, a);
    const auto gf = left_eval(gl * f, a);
    if (planted && !gvl.is_zero()) out.fail("planted left zero is not a zero");
    const auto expect_l = gvl.is_zero() ? tw->zero() : gvl * left_eval(f, conjugate_left(*tw, a, gvl));
    if (!(gf == expect_l)) out.fail(tw->ring().name() + ": left product rule, F=" + to_string(f) + " G=" + to_string(gl));
  }
}

Outcome product_rule_suite() {
  Outcome out;
  std::mt19937_64 g(4);
  product_rule(gf_frobenius(7, 2, 2), g, 1000, out);
  product_rule(gaussian_conjugation(1), g, 1000, out);
  product_rule(quaternion_identity(2), g, 1000, out);
  if (out.pass) out.detail = "3000 triples over GF(49), Q(i), quaternions";
  return out;
}

// 5. Taylor reconstruction.
template <RingContext R>
void taylor_round_trip(const std::shared_ptr<const TwistConfig<R>>& tw, std::mt19937_64& g, std::size_t trials, Outcome& out) {
  for (std::size_t t = 0; t < trials && out.pass; ++t) {
    const auto f = random_polynomial(tw, g, 4, 6);
    const auto a = random_point(*tw, g);
    for (Side side : {Side::right, Side::left}) {
      const auto table = taylor(f, a, side);
      if (!(taylor_reconstruct(table) == f)) out.fail(tw->ring().name() + " " + side_name(side) + ": " + to_string(f));
    }
  }
}

Outcome taylor_suite() {
  Outcome out;
  std::mt19937_64 g(5);
  taylor_round_trip(gf_frobenius(3, 2, 2, true), g, 100, out);
  taylor_round_trip(gaussian_conjugation(2, true), g, 100, out);
  taylor_round_trip(quaternion_inner(1), g, 100, out);
  if (out.pass) out.detail = "300 polynomials reconstructed on both sides";
  return out;
}

// 6. Division reassembly, remainders versus fundamental functions.
template <RingContext R>
void division_checks(const std::shared_ptr<const TwistConfig<R>>& tw, std::mt19937_64& g, std::size_t trials, Outcome& out) {
  using P = Polynomial<R>;
  for (std::size_t t = 0; t < trials && out.pass; ++t) {
    const auto f = random_polynomial(tw, g, 4, 6);
    const auto a = random_point(*tw, g);
    const auto rd = right_divide(f, a);
    P sum = P::constant(tw, rd.remainder);
    for (std::size_t i = 0; i < tw->n(); ++i) sum += rd.quotients[i] * P::linear(tw, i, a[i]);
    if (!(sum == f)) out.fail("right reassembly: " + to_string(f));
    auto via_n = tw->zero();
    for (const auto& [m, c] : f.terms()) via_n += c * fundamental_N(*tw, m, a);
    if (!(via_n == rd.remainder)) out.fail("right remainder differs from fundamental functions");

    const auto ld = left_divide(f, a);
    P lsum = P::constant(tw, ld.remainder);
    for (std::size_t i = 0; i < tw->n(); ++i) lsum += P::linear(tw, i, a[i]) * ld.quotients[i];
    if (!(lsum == f)) out.fail("left reassembly: " + to_string(f));
    auto via_m = tw->zero();
    for (const auto& [m, c] : f.right_coefficients()) via_m += fundamental_M(*tw, m, a) * c;
    if (!(via_m == ld.remainder)) out.fail("left remainder differs from fundamental functions");
  }
}

Outcome division_suite() {
  Outcome out;
  std::mt19937_64 g(6);
  division_checks(gf_frobenius(7, 2, 2, true), g, 200, out);
  division_checks(gaussian_conjugation(2, true), g, 150, out);
  division_checks(quaternion_inner(2), g, 150, out);
  // Exhaustive fundamental-function check over GF(9), two variables.
  auto tw = gf_frobenius(3, 2, 2, true);
  std::size_t words = 0;
  for (std::size_t p = 0; p < 20 && out.pass; ++p) {
    const auto a = random_point(*tw, g);
    for (std::size_t d = 0; d <= 4; ++d) {
      for (const auto& m : words_of_degree(2, d, Side::right)) {
        const auto f = Polynomial<GFRing>::monomial(tw, m);
        if (!(fundamental_N(*tw, m, a) == right_divide(f, a).remainder)) out.fail("N mismatch at " + to_string(m, 2));
        if (!(fundamental_M(*tw, m, a) == left_divide(f, a).remainder)) out.fail("M mismatch at " + to_string(m, 2));
        ++words;
      }
    }
  }
  if (out.pass) out.detail = "500 divisions per side; " + std::to_string(words) + " word/point pairs over GF(9)";
  return out;
}

// 7. Algorithm postconditions.
template <RingContext R>
void algorithm_checks(const std::shared_ptr<const TwistConfig<R>>& tw, std::mt19937_64& g, std::size_t trials, Outcome& out) {
  std::uniform_int_distribution<std::size_t> kdist(1, 3);
  for (std::size_t t = 0; t < trials && out.pass; ++t) {
    const Side side = t % 2 == 0 ? Side::right : Side::left;
    const auto spec = random_spec(tw, g, kdist(g), 2, side);
    const std::size_t total = spec.total();
    std::vector<std::uint16_t> letters(total);
    std::uniform_int_distribution<std::uint16_t> letter(0, static_cast<std::uint16_t>(tw->n() - 1));
    for (auto& l : letters) l = letter(g);
    const Monomial target(letters);
    const auto f1 = algorithm1(spec, target);
    if (!(f1.degree() == static_cast<long>(total))) out.fail("algorithm1 degree");
    if (!(f1.leading(side).first == target)) out.fail("algorithm1 leading monomial");
    if (!(f1.leading(side).second == tw->one())) out.fail("algorithm1 leading coefficient");
    if (!ideal_member(f1, spec)) out.fail("algorithm1 output outside the ideal");
    const auto f2 = algorithm2(spec, letter(g));
    if (f2.degree() > static_cast<long>(total)) out.fail("algorithm2 degree");
    if (!ideal_member(f2, spec)) out.fail("algorithm2 output outside the ideal");
  }
}

Outcome algorithm_suite() {
  Outcome out;
  std::mt19937_64 g(7);
  algorithm_checks(gf_frobenius(7, 2, 2, true), g, 70, out);
  algorithm_checks(gaussian_conjugation(1, true), g, 35, out);
  algorithm_checks(gaussian_conjugation(2), g, 35, out);
  algorithm_checks(quaternion_inner(1), g, 30, out);
  algorithm_checks(quaternion_identity(2), g, 30, out);
  if (out.pass) out.detail = "200 random constraint sets, both sides";
  return out;
}

// 8. Conjugation laws.
template <RingContext R>
void conjugacy_checks(const std::shared_ptr<const TwistConfig<R>>& tw, std::mt19937_64& g, std::size_t trials, Outcome& out) {
  const auto one = tw->one();
  for (std::size_t t = 0; t < trials && out.pass; ++t) {
    const auto a = random_point(*tw, g);
    const auto c = random_nonzero(tw->ring(), g);
    const auto d = random_nonzero(tw->ring(), g);
    if (!(conjugate_right(*tw, a, one) == a)) out.fail("a^1 != a");
    if (!(conjugate_left(*tw, a, one) == a)) out.fail("1a != a");
    if (!(conjugate_right(*tw, conjugate_right(*tw, a, c), d) == conjugate_right(*tw, a, d * c))) out.fail(tw->ring().name() + ": (a^c)^d != a^(dc)");
    if (!(conjugate_left(*tw, conjugate_left(*tw, a, c), d) == conjugate_left(*tw, a, c * d))) out.fail(tw->ring().name() + ": d(c a) != (cd)a");
  }
}

Outcome conjugacy_suite() {
  Outcome out;
  std::mt19937_64 g(8);
  conjugacy_checks(gf_frobenius(7, 2, 2, true), g, 500, out);
  conjugacy_checks(gaussian_conjugation(2, true), g, 500, out);
  conjugacy_checks(quaternion_inner(2), g, 500, out);
  if (out.pass) out.detail = "1500 triples";
  return out;
}

// 9. Dimension identities and the square-form remark.
std::size_t power(std::size_t n, std::size_t e) {
  std::size_t r = 1;
  while (e-- > 0) r *= n;
  return r;
}

template <RingContext R>
void dimension_checks(const std::shared_ptr<const TwistConfig<R>>& tw, std::mt19937_64& g, std::size_t trials, Outcome& out) {
  const std::size_t n = tw->n();
  for (std::size_t t = 0; t < trials && out.pass; ++t) {
    const Side side = t % 2 == 0 ? Side::right : Side::left;
    const auto spec = random_spec(tw, g, 2, 2, side);
    const std::size_t total = spec.total();
    std::size_t prev = 0, prev_layer = 0;
    for (std::size_t d = 0; d <= total; ++d) {
      const std::size_t whole = dim_V(spec, d);
      const std::size_t layer = dim_V_exact(spec, d);
      if (whole != layer + prev) out.fail("additivity at degree " + std::to_string(d));
      if (d > 0 && (n * prev_layer > layer || layer > power(n, d))) out.fail("layer bounds at degree " + std::to_string(d));
      prev = whole;
      prev_layer = layer;
    }
    for (std::size_t j = 0; j < spec.size(); ++j) {
      const auto rest = spec.without(j);
      const std::size_t nj = rest.total();
      std::size_t block = 0;
      for (std::size_t s = 0; s <= spec.chains()[j].degree(); ++s) block += power(n, s);
      if (dim_V(rest, total) != power(n, nj + 1) * block + dim_V(rest, nj)) out.fail("block formula at point " + std::to_string(j + 1));
    }
    const auto v = build_vandermonde(spec, total);
    const bool square = v.matrix.rows() == v.matrix.cols();
    if (square != (n == 1 || total <= 1)) out.fail("square-form rule");
  }
}

template <RingContext R>
void square_form_checks(const std::shared_ptr<const TwistConfig<R>>& tw, std::mt19937_64& g, Outcome& out) {
  for (std::size_t k = 0; k <= 2; ++k) {
    for (Side side : {Side::right, Side::left}) {
      const auto spec = random_spec(tw, g, k, k == 1 ? 0 : 2, side);
      const auto v = build_vandermonde(spec, spec.total());
      const bool square = v.matrix.rows() == v.matrix.cols();
      if (square != (tw->n() == 1 || spec.total() <= 1)) out.fail("square-form rule, n=" + std::to_string(tw->n()));
    }
  }
}

Outcome dimension_suite() {
  Outcome out;
  std::mt19937_64 g(9);
  dimension_checks(gf_frobenius(7, 2, 2, true), g, 25, out);
  dimension_checks(gaussian_conjugation(2), g, 15, out);
  dimension_checks(quaternion_inner(2), g, 10, out);
  square_form_checks(gaussian_conjugation(1), g, out);
  square_form_checks(gf_frobenius(3, 2, 2), g, out);
  square_form_checks(quaternion_identity(3), g, out);
  if (out.pass) out.detail = "50 random two-point sets with n = 2; square-form rule for n = 1, 2, 3";
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "Hermite interpolation fixture", hermite_fixture},
      {2, "right and left evaluation fixture", dual_evaluation},
      {3, "independence fixtures", independence_fixture},
      {4, "product rule properties", product_rule_suite},
      {5, "Taylor reconstruction properties", taylor_suite},
      {6, "division properties", division_suite},
      {7, "algorithm postconditions", algorithm_suite},
      {8, "conjugation laws", conjugacy_suite},
      {9, "dimension identities", dimension_suite},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << timing << ") "
              << o.detail << "\n";
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
