#pragma once

#include <gtest/gtest.h>

#include "skew/sampling.hpp"
#include "skew/validate.hpp"

namespace skew::test {

using GQ = GaussianRational;
using Q = Quaternion;

inline GQ gq(long re, long im = 0) { return GQ(Rational(re), Rational(im)); }
inline GQ gq(const Rational& re, const Rational& im) { return GQ(re, im); }

template <RingContext R>
::testing::AssertionResult same(const Polynomial<R>& a, const Polynomial<R>& b) {
  if (a == b) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << to_string(a) << " != " << to_string(b);
}

}  // namespace skew::test

namespace skew::test {

// sigma(a) = T diag(a, a^7) T^-1 with T = [[1,1],[0,1]] over GF(49): a
// non-diagonal matrix morphism with explicit phi^-1.
inline std::shared_ptr<const TwistConfig<GFRing>> gf_triangular(bool with_phi_inverse, bool inner_delta) {
  using T = TwistConfig<GFRing>;
  GFRing ring(7, 2);
  auto sigma = [](std::size_t i, std::size_t j, const GFElement& a) -> GFElement {
    if (i == 0 && j == 0) return a;
    if (i == 0 && j == 1) return a.frobenius(1) - a;
    if (i == 1 && j == 1) return a.frobenius(1);
    return a - a;
  };
  std::optional<T::PhiInverse> inv;
  if (with_phi_inverse) {
    inv = [](const T::Vec& g) { return T::Vec{g[0], (g[0] + g[1]).frobenius(1) - g[0]}; };
  }
  T::Delta delta = inner_delta ? T::Delta::inner({ring.gen(), ring.one()}) : T::Delta::zero();
  return T::plugin(ring, 2, sigma, inv, delta);
}

}  // namespace skew::test
