#pragma once

#include <random>

#include "skew/interpolation.hpp"

// Seeded generators for property checks.
namespace skew {

inline Monomial random_word(std::size_t n, std::size_t max_degree, std::mt19937_64& g) {
  std::uniform_int_distribution<std::size_t> len(0, max_degree), letter(0, n - 1);
  std::vector<std::uint16_t> w(len(g));
  for (auto& l : w) l = static_cast<std::uint16_t>(letter(g));
  return Monomial(std::move(w));
}

template <RingContext R>
Polynomial<R> random_polynomial(const std::shared_ptr<const TwistConfig<R>>& tw, std::mt19937_64& g,
                                std::size_t max_degree, std::size_t max_terms) {
  std::uniform_int_distribution<std::size_t> count(0, max_terms);
  TermMap<typename R::Scalar> terms;
  for (std::size_t t = count(g); t > 0; --t) {
    detail::accumulate(terms, random_word(tw->n(), max_degree, g), tw->ring().random(g));
  }
  return Polynomial<R>(tw, std::move(terms));
}

template <RingContext R>
Point<R> random_point(const TwistConfig<R>& tw, std::mt19937_64& g) {
  Point<R> a;
  for (std::size_t i = 0; i < tw.n(); ++i) a.push_back(tw.ring().random(g));
  return a;
}

// k distinct points with chain words of degree <= max_chain.
template <RingContext R>
ConstraintSpec<R> random_spec(const std::shared_ptr<const TwistConfig<R>>& tw, std::mt19937_64& g, std::size_t k,
                              std::size_t max_chain, Side side) {
  std::vector<Point<R>> points;
  std::vector<Monomial> chains;
  while (points.size() < k) {
    auto a = random_point(*tw, g);
    bool fresh = true;
    for (const auto& p : points) fresh = fresh && p != a;
    if (!fresh) continue;
    points.push_back(std::move(a));
    chains.push_back(random_word(tw->n(), max_chain, g));
  }
  return ConstraintSpec<R>(tw, std::move(points), std::move(chains), side);
}

// Standard configurations used across the checks.
inline std::shared_ptr<const TwistConfig<GFRing>> gf_frobenius(std::uint32_t p, std::uint32_t m, std::size_t n,
                                                               bool inner_delta = false) {
  GFRing ring(p, m);
  std::vector<Automorphism<GFElement>> sigma;
  for (std::size_t i = 0; i < n; ++i) sigma.push_back(frobenius(ring, static_cast<std::uint32_t>(1 + i)));
  using T = TwistConfig<GFRing>;
  if (!inner_delta) return T::diagonal(ring, std::move(sigma));
  std::vector<GFElement> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(ring.gen() + ring.from_int(static_cast<long>(i)));
  return T::diagonal(ring, std::move(sigma), T::Delta::inner(std::move(v)));
}

inline std::shared_ptr<const TwistConfig<GaussianRing>> gaussian_conjugation(std::size_t n, bool inner_delta = false) {
  using T = TwistConfig<GaussianRing>;
  std::vector<Automorphism<GaussianRational>> sigma(n, conjugation());
  if (!inner_delta) return T::diagonal(GaussianRing{}, std::move(sigma));
  std::vector<GaussianRational> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(GaussianRational(Rational(static_cast<long>(i + 1)), Rational(1)));
  return T::diagonal(GaussianRing{}, std::move(sigma), T::Delta::inner(std::move(v)));
}

inline std::shared_ptr<const TwistConfig<QuaternionRing>> quaternion_identity(std::size_t n) {
  return TwistConfig<QuaternionRing>::trivial(QuaternionRing{}, n);
}

// Conjugation by j on one variable and the identity on the others, with an
// inner derivation: a genuinely twisted quaternion case.
inline std::shared_ptr<const TwistConfig<QuaternionRing>> quaternion_inner(std::size_t n) {
  using T = TwistConfig<QuaternionRing>;
  std::vector<Automorphism<Quaternion>> sigma(n, identity_automorphism<Quaternion>());
  sigma[0] = inner_automorphism(Quaternion::j(), "j");
  std::vector<Quaternion> v(n, Quaternion::i());
  return T::diagonal(QuaternionRing{}, std::move(sigma), T::Delta::inner(std::move(v)));
}

}  // namespace skew
