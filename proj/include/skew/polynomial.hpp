#pragma once

#include <cctype>
#include <compare>
#include <limits>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "skew/error.hpp"
#include "skew/monomial.hpp"
#include "skew/twist.hpp"

namespace skew {

// Degree of a polynomial; the zero polynomial has the distinct value -infinity.
class Degree {
 public:
  constexpr Degree() = default;
  constexpr explicit Degree(long v) : v_(v), finite_(true) {}
  static constexpr Degree neg_inf() { return Degree(); }

  constexpr bool is_neg_inf() const { return !finite_; }
  long value() const {
    if (!finite_) throw ZeroPolynomial("degree of the zero polynomial is -infinity");
    return v_;
  }

  friend constexpr bool operator==(Degree a, Degree b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.v_ == b.v_);
  }
  friend constexpr std::strong_ordering operator<=>(Degree a, Degree b) {
    if (!a.finite_ || !b.finite_) return a.finite_ <=> b.finite_;
    return a.v_ <=> b.v_;
  }
  friend constexpr bool operator==(Degree a, long b) { return a == Degree(b); }
  friend constexpr std::strong_ordering operator<=>(Degree a, long b) { return a <=> Degree(b); }

 private:
  long v_ = 0;
  bool finite_ = false;
};

inline std::string to_string(Degree d) {
  return d.is_neg_inf() ? std::string("-inf") : std::to_string(d.value());
}

template <RingContext R>
class Polynomial;

// Coefficients indexed by words, ordered by the right grlex order.
template <class S>
using TermMap = std::map<Monomial, S, RightGrlex>;

namespace detail {

template <class S>
void accumulate(TermMap<S>& t, const Monomial& m, const S& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
  }
}

}  // namespace detail

// Left-coefficient expansion of the ring product w * c.
template <RingContext R>
TermMap<typename R::Scalar> word_times_scalar(const TwistConfig<R>& tw, const Monomial& w,
                                              const typename R::Scalar& c) {
  using S = typename R::Scalar;
  // state holds sum over s of (w[0..k)) * d_s * s
  TermMap<S> state;
  detail::accumulate(state, Monomial(), c);
  const std::size_t n = tw.n();
  for (std::size_t k = w.degree(); k-- > 0;) {
    const std::size_t l = w[k];
    TermMap<S> next;
    for (const auto& [s, d] : state) {
      if (tw.is_diagonal()) {
        detail::accumulate(next, Monomial::variable(l) * s, tw.sigma(l, l, d));
      } else {
        for (std::size_t j = 0; j < n; ++j) {
          detail::accumulate(next, Monomial::variable(j) * s, tw.sigma(l, j, d));
        }
      }
      if (!tw.delta_is_zero()) detail::accumulate(next, s, tw.delta(l, d));
    }
    state = std::move(next);
  }
  return state;
}

// Right-coefficient expansion of c * w, i.e. the d_s with c w = sum_s s d_s.
template <RingContext R>
TermMap<typename R::Scalar> scalar_times_word(const TwistConfig<R>& tw, const typename R::Scalar& c,
                                              const Monomial& w) {
  using S = typename R::Scalar;
  if (!tw.left_capable()) throw NotLeftCapable("moving scalars rightwards needs phi^-1");
  // state holds sum over p of p * d_p * (w[k..))
  TermMap<S> state;
  detail::accumulate(state, Monomial(), c);
  const std::size_t n = tw.n();
  for (std::size_t k = 0; k < w.degree(); ++k) {
    const std::size_t l = w[k];
    TermMap<S> next;
    for (const auto& [p, d] : state) {
      if (tw.is_diagonal()) {
        detail::accumulate(next, p * Monomial::variable(l), tw.tilde_sigma(l, l, d));
      } else {
        const auto col = tw.phi_inv([&] {
          std::vector<S> e(n, tw.zero());
          e[l] = d;
          return e;
        }());
        for (std::size_t i = 0; i < n; ++i) detail::accumulate(next, p * Monomial::variable(i), col[i]);
      }
      if (!tw.delta_is_zero()) detail::accumulate(next, p, tw.tilde_delta(l, d));
    }
    state = std::move(next);
  }
  return state;
}

// Element of the free skew polynomial ring, stored as sum_m F_m m with left
// coefficients F_m.
template <RingContext R>
class Polynomial {
 public:
  using S = typename R::Scalar;
  using Twist = TwistConfig<R>;
  using Ptr = std::shared_ptr<const Twist>;

  Polynomial() = default;
  explicit Polynomial(Ptr tw) : tw_(std::move(tw)) {}
  Polynomial(Ptr tw, TermMap<S> terms) : tw_(std::move(tw)), terms_(std::move(terms)) {
    for (auto it = terms_.begin(); it != terms_.end();) {
      it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
    }
  }

  static Polynomial constant(Ptr tw, const S& c) { return monomial(std::move(tw), Monomial(), c); }
  static Polynomial monomial(Ptr tw, const Monomial& m, const S& c) {
    Polynomial p(std::move(tw));
    detail::accumulate(p.terms_, m, c);
    return p;
  }
  static Polynomial monomial(Ptr tw, const Monomial& m) {
    const S one = tw->one();
    return monomial(std::move(tw), m, one);
  }
  static Polynomial variable(Ptr tw, std::size_t i) { return monomial(std::move(tw), Monomial::variable(i)); }
  // x_i - c
  static Polynomial linear(Ptr tw, std::size_t i, const S& c) {
    Polynomial p = variable(tw, i);
    detail::accumulate(p.terms_, Monomial(), -c);
    return p;
  }
  // Builds sum_m m F'_m from right coefficients.
  static Polynomial from_right_coefficients(Ptr tw, const TermMap<S>& right) {
    Polynomial p(tw);
    for (const auto& [m, c] : right) {
      for (const auto& [s, d] : word_times_scalar(*tw, m, c)) detail::accumulate(p.terms_, s, d);
    }
    return p;
  }

  const Ptr& twist() const { return tw_; }
  const TermMap<S>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  Degree degree() const {
    return terms_.empty() ? Degree::neg_inf() : Degree(static_cast<long>(terms_.rbegin()->first.degree()));
  }
  S coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? tw_->zero() : it->second;
  }

  // The maximal monomial for the chosen order and its left coefficient.
  std::pair<Monomial, S> leading(Side order = Side::right) const {
    if (terms_.empty()) throw ZeroPolynomial("zero polynomial has no leading monomial");
    if (order == Side::right) return *terms_.rbegin();
    auto best = terms_.begin();
    for (auto it = terms_.begin(); it != terms_.end(); ++it) {
      if (compare_grlex(it->first, best->first, Side::left) > 0) best = it;
    }
    return *best;
  }

  // Coefficients F'_m with F = sum_m m F'_m.
  TermMap<S> right_coefficients() const {
    TermMap<S> out;
    for (const auto& [m, c] : terms_) {
      for (const auto& [s, d] : scalar_times_word(*tw_, c, m)) detail::accumulate(out, s, d);
    }
    return out;
  }

  Polynomial& operator+=(const Polynomial& o) {
    adopt(o);
    for (const auto& [m, c] : o.terms_) detail::accumulate(terms_, m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    adopt(o);
    for (const auto& [m, c] : o.terms_) detail::accumulate(terms_, m, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a) {
    Polynomial out(a.tw_);
    for (const auto& [m, c] : a.terms_) out.terms_.emplace(m, -c);
    return out;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    const Ptr tw = common(a, b);
    Polynomial out(tw);
    for (const auto& [u, fu] : a.terms_) {
      for (const auto& [w, gw] : b.terms_) {
        if (u.is_one()) {
          detail::accumulate(out.terms_, w, fu * gw);
          continue;
        }
        for (const auto& [s, d] : word_times_scalar(*tw, u, gw)) {
          detail::accumulate(out.terms_, s * w, fu * d);
        }
      }
    }
    return out;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator*(const S& lambda, const Polynomial& a) { return a.scaled_left(lambda); }
  friend Polynomial operator*(const Polynomial& a, const S& lambda) { return a.scaled_right(lambda); }

  Polynomial scaled_left(const S& lambda) const {
    Polynomial out(tw_);
    for (const auto& [m, c] : terms_) detail::accumulate(out.terms_, m, lambda * c);
    return out;
  }
  // The ring product F * lambda.
  Polynomial scaled_right(const S& lambda) const {
    Polynomial out(tw_);
    for (const auto& [m, c] : terms_) {
      for (const auto& [s, d] : word_times_scalar(*tw_, m, lambda)) detail::accumulate(out.terms_, s, c * d);
    }
    return out;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.tw_ && b.tw_ && a.tw_ != b.tw_) return false;
    return a.terms_ == b.terms_;
  }

 private:
  static Ptr common(const Polynomial& a, const Polynomial& b) {
    if (a.tw_ && b.tw_ && a.tw_ != b.tw_) throw TwistMismatch("polynomials belong to different rings");
    return a.tw_ ? a.tw_ : b.tw_;
  }
  void adopt(const Polynomial& o) { tw_ = common(*this, o); }

  Ptr tw_;
  TermMap<S> terms_;
};

namespace detail {

inline bool needs_parens(const std::string& s) {
  if (s.rfind("q(", 0) == 0) return false;
  return s.find_first_of("+-") != std::string::npos;
}

}  // namespace detail

// Canonical text: terms by descending right grlex order, each written as
// coefficient*word with the coefficient dropped when it is 1. A coefficient
// whose text starts with '-' is printed negated after a minus sign.
template <RingContext R>
std::string to_string(const Polynomial<R>& f) {
  if (f.is_zero()) return "0";
  const auto& ring = f.twist()->ring();
  const std::size_t n = f.twist()->n();
  std::string out;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    std::string cs = ring.format(c);
    const bool negative = !cs.empty() && cs[0] == '-';
    const auto mag = negative ? -c : c;
    if (negative) cs = ring.format(mag);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (detail::needs_parens(cs)) cs = "(" + cs + ")";
    if (m.is_one()) {
      out += cs;
    } else if (mag == ring.one()) {
      out += to_string(m, n);
    } else {
      out += cs + "*" + to_string(m, n);
    }
  }
  return out;
}

namespace detail {

// Recursive descent parser for sums of products of scalars, variables and
// parenthesized groups. Products are ring products, so "x*i" is rewritten to
// its left-coefficient form.
template <RingContext R>
class PolyParser {
 public:
  using P = Polynomial<R>;
  PolyParser(typename P::Ptr tw, std::string_view text) : tw_(std::move(tw)), s_(text) {}

  P parse_all() {
    P out = parse_sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return out;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial: " + what + " at column " + std::to_string(pos_ + 1));
  }

  P parse_sum() {
    skip();
    P out(tw_);
    bool first = true;
    for (;;) {
      skip();
      bool neg = false;
      if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
        neg = s_[pos_] == '-';
        ++pos_;
      } else if (!first) {
        break;
      }
      P term = parse_product();
      if (neg) out -= term; else out += term;
      first = false;
    }
    return out;
  }

  P parse_product() {
    P out = parse_power();
    for (;;) {
      skip();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        out = out * parse_power();
      } else {
        break;
      }
    }
    return out;
  }

  P parse_power() {
    P base = parse_atom();
    skip();
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      const std::size_t e = parse_uint();
      P out = P::constant(tw_, tw_->one());
      for (std::size_t k = 0; k < e; ++k) out = out * base;
      return out;
    }
    return base;
  }

  std::size_t parse_uint() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an exponent");
    return std::stoul(std::string(s_.substr(start, pos_ - start)));
  }

  std::size_t matching_paren(std::size_t open) const {
    int depth = 0;
    for (std::size_t k = open; k < s_.size(); ++k) {
      if (s_[k] == '(') ++depth;
      if (s_[k] == ')' && --depth == 0) return k;
    }
    throw ParseError("polynomial: unbalanced parenthesis at column " + std::to_string(open + 1));
  }

  P parse_atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      const std::size_t close = matching_paren(pos_);
      const std::string_view inner = s_.substr(pos_ + 1, close - pos_ - 1);
      P out(tw_);
      try {
        out = P::constant(tw_, tw_->ring().parse(inner));
      } catch (const std::exception&) {
        out = PolyParser(tw_, inner).parse_all();
      }
      pos_ = close + 1;
      return out;
    }
    if (c == 'x') {
      ++pos_;
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::size_t idx = 1;
      if (start == pos_) {
        if (tw_->n() != 1) fail("bare x needs a variable index when n > 1");
      } else {
        idx = std::stoul(std::string(s_.substr(start, pos_ - start)));
      }
      if (idx < 1 || idx > tw_->n()) fail("variable index out of range");
      return P::variable(tw_, idx - 1);
    }
    // Scalar literal: a maximal run up to an operator, or q(...) as a whole.
    std::size_t end = pos_;
    if (s_.substr(pos_, 2) == "q(") {
      end = matching_paren(pos_ + 1) + 1;
    } else {
      while (end < s_.size() && !std::isspace(static_cast<unsigned char>(s_[end])) &&
             std::string_view("+-*()").find(s_[end]) == std::string_view::npos) {
        // allow g^e inside field literals
        ++end;
      }
    }
    if (end == pos_) fail("expected a term");
    const std::string_view lit = s_.substr(pos_, end - pos_);
    try {
      P out = P::constant(tw_, tw_->ring().parse(lit));
      pos_ = end;
      return out;
    } catch (const ParseError& e) {
      fail(std::string("bad scalar '") + std::string(lit) + "'");
    }
  }

  typename P::Ptr tw_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

template <RingContext R>
Polynomial<R> parse_polynomial(std::shared_ptr<const TwistConfig<R>> tw, std::string_view text) {
  return detail::PolyParser<R>(std::move(tw), text).parse_all();
}

}  // namespace skew
