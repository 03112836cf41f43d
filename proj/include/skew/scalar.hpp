#pragma once

#include <concepts>
#include <memory>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "skew/galois_field.hpp"
#include "skew/gaussian.hpp"
#include "skew/quaternion.hpp"
#include "skew/rational.hpp"

namespace skew {

template <class S>
concept DivisionRingElement = std::regular<S> && requires(S a, const S& b) {
  { a + b } -> std::same_as<S>;
  { a - b } -> std::same_as<S>;
  { a * b } -> std::same_as<S>;
  { -a } -> std::same_as<S>;
  { b.inverse() } -> std::same_as<S>;
  { b.is_zero() } -> std::same_as<bool>;
};

// A ring context knows how to build, sample, parse and print its scalars.
// Scalar{} is always the zero element.
template <class R>
concept RingContext = requires(const R& r, std::mt19937_64& g, std::string_view s,
                               const typename R::Scalar& a) {
  requires DivisionRingElement<typename R::Scalar>;
  { r.zero() } -> std::same_as<typename R::Scalar>;
  { r.one() } -> std::same_as<typename R::Scalar>;
  { r.from_int(1L) } -> std::same_as<typename R::Scalar>;
  { r.random(g) } -> std::same_as<typename R::Scalar>;
  { r.parse(s) } -> std::same_as<typename R::Scalar>;
  { r.format(a) } -> std::same_as<std::string>;
  { r.generators() } -> std::same_as<std::vector<typename R::Scalar>>;
  { r.name() } -> std::same_as<std::string>;
};

namespace detail {
inline Rational small_rational(std::mt19937_64& g) {
  std::uniform_int_distribution<long> num(-4, 4), den(1, 3);
  return Rational(num(g), den(g));
}
}  // namespace detail

template <RingContext R>
typename R::Scalar random_nonzero(const R& ring, std::mt19937_64& g) {
  for (;;) {
    auto a = ring.random(g);
    if (!a.is_zero()) return a;
  }
}

struct RationalRing {
  using Scalar = Rational;
  Scalar zero() const { return {}; }
  Scalar one() const { return Rational(1); }
  Scalar from_int(long v) const { return Rational(v); }
  Scalar random(std::mt19937_64& g) const { return detail::small_rational(g); }
  Scalar parse(std::string_view s) const { return Rational::parse(s); }
  std::string format(const Scalar& a) const { return to_string(a); }
  // Q has no generators over its prime field.
  std::vector<Scalar> generators() const { return {}; }
  std::string name() const { return "rationals"; }
};

struct GaussianRing {
  using Scalar = GaussianRational;
  Scalar zero() const { return {}; }
  Scalar one() const { return GaussianRational(1); }
  Scalar from_int(long v) const { return GaussianRational(v); }
  Scalar random(std::mt19937_64& g) const {
    return {detail::small_rational(g), detail::small_rational(g)};
  }
  Scalar parse(std::string_view s) const { return GaussianRational::parse(s); }
  std::string format(const Scalar& a) const { return to_string(a); }
  std::vector<Scalar> generators() const { return {GaussianRational::unit_i()}; }
  std::string name() const { return "gaussian_rationals"; }
};

struct QuaternionRing {
  using Scalar = Quaternion;
  Scalar zero() const { return {}; }
  Scalar one() const { return Quaternion(1); }
  Scalar from_int(long v) const { return Quaternion(v); }
  Scalar random(std::mt19937_64& g) const {
    return {detail::small_rational(g), detail::small_rational(g), detail::small_rational(g),
            detail::small_rational(g)};
  }
  Scalar parse(std::string_view s) const {
    if (s == "i") return Quaternion::i();
    if (s == "j") return Quaternion::j();
    if (s == "k") return Quaternion::k();
    return Quaternion::parse(s);
  }
  std::string format(const Scalar& a) const { return to_string(a); }
  std::vector<Scalar> generators() const { return {Quaternion::i(), Quaternion::j()}; }
  std::string name() const { return "quaternions"; }
};

struct GFRing {
  using Scalar = GFElement;
  std::shared_ptr<const GFField> field;

  explicit GFRing(std::shared_ptr<const GFField> f) : field(std::move(f)) {}
  GFRing(std::uint32_t p, std::uint32_t m) : field(std::make_shared<GFField>(p, m)) {}

  Scalar zero() const { return {field, 0}; }
  Scalar one() const { return {field, 1}; }
  Scalar from_int(long v) const { return {field, field->from_integer(v)}; }
  Scalar random(std::mt19937_64& g) const {
    std::uniform_int_distribution<std::uint32_t> d(0, field->order() - 1);
    return {field, d(g)};
  }
  Scalar parse(std::string_view s) const { return GFElement::parse(field, s); }
  std::string format(const Scalar& a) const { return to_string(a); }
  std::vector<Scalar> generators() const { return {Scalar(field, field->generator())}; }
  std::string name() const {
    return "gf(" + std::to_string(field->characteristic()) + "^" + std::to_string(field->degree()) + ")";
  }
  Scalar gen() const { return {field, field->generator()}; }
};

}  // namespace skew
