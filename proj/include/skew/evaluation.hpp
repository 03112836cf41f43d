#pragma once

#include <vector>

#include "skew/polynomial.hpp"

namespace skew {

template <RingContext R>
using Point = std::vector<typename R::Scalar>;

template <RingContext R>
struct DivisionResult {
  std::vector<Polynomial<R>> quotients;
  typename R::Scalar remainder;
  Side side = Side::right;
};

namespace detail {

template <RingContext R>
void check_point(const TwistConfig<R>& tw, const Point<R>& a) {
  if (a.size() != tw.n()) throw std::invalid_argument("point dimension differs from variable count");
}

template <RingContext R>
void require_left(const TwistConfig<R>& tw) {
  if (!tw.left_capable()) throw NotLeftCapable("left-sided operation needs an invertible phi");
}

}  // namespace detail

// F = sum_i G_i (x_i - a_i) + b, peeling the last letter of the largest word.
template <RingContext R>
DivisionResult<R> right_divide(const Polynomial<R>& f, const Point<R>& a) {
  using S = typename R::Scalar;
  const auto& tw = f.twist();
  detail::check_point(*tw, a);
  const std::size_t n = tw->n();
  std::vector<TermMap<S>> q(n);
  TermMap<S> work = f.terms();
  while (!work.empty()) {
    auto top = std::prev(work.end());
    if (top->first.is_one()) break;
    const Monomial w = top->first.without_last();
    const std::size_t j = top->first.last();
    const S c = top->second;
    work.erase(top);
    detail::accumulate(q[j], w, c);
    for (const auto& [s, d] : word_times_scalar(*tw, w, a[j])) detail::accumulate(work, s, c * d);
  }
  DivisionResult<R> out;
  out.side = Side::right;
  out.remainder = work.empty() ? tw->zero() : work.begin()->second;
  for (auto& g : q) out.quotients.emplace_back(tw, std::move(g));
  return out;
}

// F = sum_i (x_i - a_i) G_i + b, peeling the first letter in the
// right-coefficient form.
template <RingContext R>
DivisionResult<R> left_divide(const Polynomial<R>& f, const Point<R>& a) {
  using S = typename R::Scalar;
  const auto& tw = f.twist();
  detail::check_point(*tw, a);
  detail::require_left(*tw);
  const std::size_t n = tw->n();
  std::vector<TermMap<S>> q(n);
  TermMap<S> work = f.right_coefficients();
  // Largest word first in the left order keeps the loop strictly decreasing in degree.
  while (!work.empty()) {
    auto top = std::prev(work.end());
    if (top->first.is_one()) break;
    const Monomial w = top->first.without_first();
    const std::size_t j = top->first.first();
    const S c = top->second;
    work.erase(top);
    detail::accumulate(q[j], w, c);
    for (const auto& [s, d] : scalar_times_word(*tw, a[j], w)) detail::accumulate(work, s, d * c);
  }
  DivisionResult<R> out;
  out.side = Side::left;
  out.remainder = work.empty() ? tw->zero() : work.begin()->second;
  for (auto& g : q) out.quotients.push_back(Polynomial<R>::from_right_coefficients(tw, g));
  return out;
}

template <RingContext R>
DivisionResult<R> divide(const Polynomial<R>& f, const Point<R>& a, Side side) {
  return side == Side::right ? right_divide(f, a) : left_divide(f, a);
}

// N_m(a): the right value of the bare word m.
template <RingContext R>
typename R::Scalar fundamental_N(const TwistConfig<R>& tw, const Monomial& m, const Point<R>& a) {
  detail::check_point(tw, a);
  const std::size_t n = tw.n();
  auto val = tw.one();
  for (std::size_t k = m.degree(); k-- > 0;) {
    const std::size_t l = m[k];
    auto next = tw.delta(l, val);
    if (tw.is_diagonal()) {
      next += tw.sigma(l, l, val) * a[l];
    } else {
      for (std::size_t j = 0; j < n; ++j) next += tw.sigma(l, j, val) * a[j];
    }
    val = std::move(next);
  }
  return val;
}

// M_m(a): the left value of the bare word m.
template <RingContext R>
typename R::Scalar fundamental_M(const TwistConfig<R>& tw, const Monomial& m, const Point<R>& a) {
  detail::check_point(tw, a);
  detail::require_left(tw);
  const std::size_t n = tw.n();
  auto val = tw.one();
  for (std::size_t k = 0; k < m.degree(); ++k) {
    const std::size_t l = m[k];
    auto next = tw.tilde_delta(l, val);
    if (tw.is_diagonal()) {
      next += a[l] * tw.tilde_sigma(l, l, val);
    } else {
      const auto ts = tw.tilde_sigma(val);
      for (std::size_t j = 0; j < n; ++j) next += a[j] * ts[j][l];
    }
    val = std::move(next);
  }
  return val;
}

template <RingContext R>
typename R::Scalar right_eval(const Polynomial<R>& f, const Point<R>& a) {
  auto out = f.twist() ? f.twist()->zero() : typename R::Scalar{};
  for (const auto& [m, c] : f.terms()) out += c * fundamental_N(*f.twist(), m, a);
  return out;
}

template <RingContext R>
typename R::Scalar left_eval(const Polynomial<R>& f, const Point<R>& a) {
  auto out = f.twist() ? f.twist()->zero() : typename R::Scalar{};
  if (f.is_zero()) return out;
  detail::require_left(*f.twist());
  for (const auto& [m, c] : f.right_coefficients()) out += fundamental_M(*f.twist(), m, a) * c;
  return out;
}

template <RingContext R>
typename R::Scalar evaluate(const Polynomial<R>& f, const Point<R>& a, Side side) {
  return side == Side::right ? right_eval(f, a) : left_eval(f, a);
}

// a^c with components (sum_j sigma_ij(c) a_j + delta_i(c)) c^-1.
template <RingContext R>
Point<R> conjugate_right(const TwistConfig<R>& tw, const Point<R>& a, const typename R::Scalar& c) {
  detail::check_point(tw, a);
  if (c.is_zero()) throw ZeroConjugator("conjugation by zero");
  const auto ci = c.inverse();
  Point<R> out(tw.n());
  for (std::size_t i = 0; i < tw.n(); ++i) {
    auto s = tw.delta(i, c);
    for (std::size_t j = 0; j < tw.n(); ++j) {
      if (tw.is_diagonal() && i != j) continue;
      s += tw.sigma(i, j, c) * a[j];
    }
    out[i] = s * ci;
  }
  return out;
}

// ^c a with components c^-1 (sum_j a_j tilde_sigma(c)_ji + tilde_delta(c)_i).
template <RingContext R>
Point<R> conjugate_left(const TwistConfig<R>& tw, const Point<R>& a, const typename R::Scalar& c) {
  detail::check_point(tw, a);
  detail::require_left(tw);
  if (c.is_zero()) throw ZeroConjugator("conjugation by zero");
  const auto ci = c.inverse();
  Point<R> out(tw.n());
  for (std::size_t i = 0; i < tw.n(); ++i) {
    auto s = tw.tilde_delta(i, c);
    for (std::size_t j = 0; j < tw.n(); ++j) {
      if (tw.is_diagonal() && i != j) continue;
      s += a[j] * tw.tilde_sigma(j, i, c);
    }
    out[i] = ci * s;
  }
  return out;
}

template <RingContext R>
Point<R> conjugate(const TwistConfig<R>& tw, const Point<R>& a, const typename R::Scalar& c, Side side) {
  return side == Side::right ? conjugate_right(tw, a, c) : conjugate_left(tw, a, c);
}

}  // namespace skew
