#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "skew/twist.hpp"

namespace skew {

struct LawViolation {
  std::string law;
  std::string witness;
};

struct LawReport {
  std::size_t samples = 0;
  std::vector<LawViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Checks the matrix-morphism and derivation laws, and the phi round trip when
// the twist is left capable, on seeded random samples. Violations are
// reported, never thrown; at most one witness is kept per law.
template <RingContext R>
LawReport validate_laws(const TwistConfig<R>& cfg, std::size_t sample_count,
                        std::uint64_t seed = 0x5eed) {
  using S = typename R::Scalar;
  using Vec = std::vector<S>;
  const R& ring = cfg.ring();
  const std::size_t n = cfg.n();
  std::mt19937_64 rng(seed);
  LawReport report;
  report.samples = sample_count;

  auto fail = [&](const std::string& law, const std::string& witness) {
    for (const auto& v : report.violations) {
      if (v.law == law) return;
    }
    report.violations.push_back({law, witness});
  };
  auto show = [&](const S& a) { return ring.format(a); };

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const S expect = i == j ? ring.one() : ring.zero();
      if (!(cfg.sigma(i, j, ring.one()) == expect)) {
        fail("sigma(1) = I", "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!cfg.delta(i, ring.one()).is_zero()) fail("delta(1) = 0", "component " + std::to_string(i + 1));
    if (!cfg.delta(i, ring.zero()).is_zero()) fail("delta(0) = 0", "component " + std::to_string(i + 1));
  }

  for (std::size_t s = 0; s < sample_count; ++s) {
    const S a = ring.random(rng);
    const S b = ring.random(rng);
    const std::string wit = "a=" + show(a) + ", b=" + show(b);
    const S ab = a * b;

    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        // sigma(ab)_ij = sum_l sigma(a)_il sigma(b)_lj
        S prod = ring.zero();
        for (std::size_t l = 0; l < n; ++l) prod += cfg.sigma(i, l, a) * cfg.sigma(l, j, b);
        if (!(cfg.sigma(i, j, ab) == prod)) fail("sigma(ab) = sigma(a)sigma(b)", wit);
        if (!(cfg.sigma(i, j, a + b) == cfg.sigma(i, j, a) + cfg.sigma(i, j, b))) {
          fail("sigma(a+b) = sigma(a)+sigma(b)", wit);
        }
      }
      // delta(ab)_i = sum_l sigma(a)_il delta(b)_l + delta(a)_i b
      S rhs = cfg.delta(i, a) * b;
      for (std::size_t l = 0; l < n; ++l) rhs += cfg.sigma(i, l, a) * cfg.delta(l, b);
      if (!(cfg.delta(i, ab) == rhs)) fail("delta(ab) = sigma(a)delta(b) + delta(a)b", wit);
      if (!(cfg.delta(i, a + b) == cfg.delta(i, a) + cfg.delta(i, b))) {
        fail("delta(a+b) = delta(a)+delta(b)", wit);
      }
      if (cfg.delta_spec().kind == TwistConfig<R>::DeltaKind::inner) {
        const Vec& v = cfg.delta_spec().v;
        S closed = -(v[i] * a);
        for (std::size_t l = 0; l < n; ++l) closed += cfg.sigma(i, l, a) * v[l];
        if (!(cfg.delta(i, a) == closed)) fail("delta(a) = sigma(a)v - va", wit);
      }
    }

    if (cfg.is_diagonal()) {
      for (const auto& f : cfg.diagonal_entries()) {
        if (!(f.inverse(f(a)) == a) || !(f(f.inverse(a)) == a)) {
          fail("inverse of " + f.name + " is two-sided", "a=" + show(a));
        }
      }
    }

    if (cfg.left_capable()) {
      Vec g(n);
      for (auto& x : g) x = ring.random(rng);
      if (!(cfg.phi_inv(cfg.phi(g)) == g) || !(cfg.phi(cfg.phi_inv(g)) == g)) {
        std::string gw = "gamma=(";
        for (std::size_t i = 0; i < n; ++i) gw += (i ? "," : "") + show(g[i]);
        fail("phi^-1 is a two-sided inverse of phi", gw + ")");
      }
    }
  }
  return report;
}

}  // namespace skew
