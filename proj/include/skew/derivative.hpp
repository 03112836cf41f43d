#pragma once

#include <utility>
#include <vector>

#include "skew/evaluation.hpp"

namespace skew {

// Quotient i of the division of F at a, 0-based variable index.
template <RingContext R>
Polynomial<R> partial(const Polynomial<R>& f, const Point<R>& a, std::size_t i, Side side) {
  if (i >= f.twist()->n()) throw std::out_of_range("variable index out of range");
  return divide(f, a, side).quotients[i];
}

template <RingContext R>
Polynomial<R> partial_right(const Polynomial<R>& f, const Point<R>& a, std::size_t i) {
  return partial(f, a, i, Side::right);
}

template <RingContext R>
Polynomial<R> partial_left(const Polynomial<R>& f, const Point<R>& a, std::size_t i) {
  return partial(f, a, i, Side::left);
}

// Order in which the letters of m are applied: the last letter first on the
// right, the first letter first on the left.
inline std::vector<std::size_t> chain_letters(const Monomial& m, Side side) {
  std::vector<std::size_t> out(m.degree());
  for (std::size_t t = 0; t < m.degree(); ++t) {
    out[t] = side == Side::right ? m[m.degree() - 1 - t] : m[t];
  }
  return out;
}

// The words whose derivatives form the chain of m: suffixes of m on the
// right, prefixes on the left, shortest first.
inline std::vector<Monomial> chain_words(const Monomial& m, Side side) {
  std::vector<Monomial> out;
  for (std::size_t t = 0; t <= m.degree(); ++t) {
    out.push_back(side == Side::right ? m.suffix(t) : m.prefix(t));
  }
  return out;
}

template <RingContext R>
std::pair<Polynomial<R>, typename R::Scalar> partial_chain(const Polynomial<R>& f, const Point<R>& a,
                                                          const Monomial& m, Side side) {
  Polynomial<R> cur = f;
  for (std::size_t l : chain_letters(m, side)) cur = divide(cur, a, side).quotients[l];
  auto value = evaluate(cur, a, side);
  return {std::move(cur), std::move(value)};
}

// Values of the derivatives along the whole chain of m, one per chain word.
template <RingContext R>
std::vector<typename R::Scalar> chain_values(const Polynomial<R>& f, const Point<R>& a,
                                             const Monomial& m, Side side) {
  std::vector<typename R::Scalar> out;
  out.reserve(m.degree() + 1);
  Polynomial<R> cur = f;
  for (std::size_t l : chain_letters(m, side)) {
    auto d = divide(cur, a, side);
    out.push_back(d.remainder);
    cur = std::move(d.quotients[l]);
  }
  out.push_back(evaluate(cur, a, side));
  return out;
}

template <RingContext R>
struct TaylorTable {
  Point<R> center;
  Side side = Side::right;
  std::shared_ptr<const TwistConfig<R>> twist;
  // Value of the chain derivative for every word of degree <= deg F.
  std::map<Monomial, typename R::Scalar> entries;
};

template <RingContext R>
TaylorTable<R> taylor(const Polynomial<R>& f, const Point<R>& a, Side side) {
  TaylorTable<R> table;
  table.center = a;
  table.side = side;
  table.twist = f.twist();
  const std::size_t n = f.twist()->n();
  if (f.is_zero()) {
    table.entries.emplace(Monomial(), f.twist()->zero());
    return table;
  }
  const std::size_t deg = static_cast<std::size_t>(f.degree().value());
  std::vector<std::pair<Monomial, Polynomial<R>>> level{{Monomial(), f}};
  for (std::size_t d = 0; d <= deg; ++d) {
    std::vector<std::pair<Monomial, Polynomial<R>>> next;
    for (auto& [w, p] : level) {
      auto div = divide(p, a, side);
      table.entries.emplace(w, div.remainder);
      if (d == deg) continue;
      for (std::size_t i = 0; i < n; ++i) {
        Monomial grown = side == Side::right ? Monomial::variable(i) * w : w * Monomial::variable(i);
        next.emplace_back(std::move(grown), std::move(div.quotients[i]));
      }
    }
    level = std::move(next);
  }
  return table;
}

// Right: sum_w c_w (x_{w1}-a_{w1})...(x_{ws}-a_{ws}).
// Left:  sum_w (x_{w1}-a_{w1})...(x_{ws}-a_{ws}) c_w.
template <RingContext R>
Polynomial<R> taylor_reconstruct(const TaylorTable<R>& table) {
  using P = Polynomial<R>;
  const auto& tw = table.twist;
  P out(tw);
  for (const auto& [w, c] : table.entries) {
    if (c.is_zero()) continue;
    P prod = P::constant(tw, tw->one());
    for (std::size_t k = 0; k < w.degree(); ++k) prod = prod * P::linear(tw, w[k], table.center[w[k]]);
    out += table.side == Side::right ? c * prod : prod * c;
  }
  return out;
}

}  // namespace skew
