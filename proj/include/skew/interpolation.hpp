#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "skew/derivative.hpp"
#include "skew/matrix.hpp"

namespace skew {

// Points, one chain monomial per point, and the side on which values are
// read. Constraint t of point j is the derivative along the t-th chain word.
template <RingContext R>
class ConstraintSpec {
 public:
  using S = typename R::Scalar;
  using Ptr = std::shared_ptr<const TwistConfig<R>>;

  ConstraintSpec(Ptr tw, std::vector<Point<R>> points, std::vector<Monomial> chains, Side side)
      : tw_(std::move(tw)), points_(std::move(points)), chains_(std::move(chains)), side_(side) {
    if (points_.size() != chains_.size()) throw std::invalid_argument("one chain monomial per point");
    for (std::size_t j = 0; j < points_.size(); ++j) {
      if (points_[j].size() != tw_->n()) throw std::invalid_argument("point dimension differs from n");
      for (std::size_t l : chains_[j].letters()) {
        if (l >= tw_->n()) throw std::invalid_argument("chain letter out of range");
      }
      for (std::size_t i = 0; i < j; ++i) {
        if (points_[i] == points_[j]) throw std::invalid_argument("repeated point in constraint set");
      }
      total_ += chains_[j].degree() + 1;
    }
    if (side_ == Side::left) detail::require_left(*tw_);
  }

  const Ptr& twist() const { return tw_; }
  const std::vector<Point<R>>& points() const { return points_; }
  const std::vector<Monomial>& chains() const { return chains_; }
  Side side() const { return side_; }
  std::size_t size() const { return points_.size(); }
  // N: total number of scalar constraints.
  std::size_t total() const { return total_; }

  ConstraintSpec without(std::size_t j) const {
    auto p = points_;
    auto c = chains_;
    p.erase(p.begin() + static_cast<long>(j));
    c.erase(c.begin() + static_cast<long>(j));
    return ConstraintSpec(tw_, std::move(p), std::move(c), side_);
  }

  ConstraintSpec with(Point<R> a, Monomial m) const {
    auto p = points_;
    auto c = chains_;
    p.push_back(std::move(a));
    c.push_back(std::move(m));
    return ConstraintSpec(tw_, std::move(p), std::move(c), side_);
  }

  ConstraintSpec subset(const std::vector<std::size_t>& idx) const {
    std::vector<Point<R>> p;
    std::vector<Monomial> c;
    for (auto j : idx) {
      p.push_back(points_[j]);
      c.push_back(chains_[j]);
    }
    return ConstraintSpec(tw_, std::move(p), std::move(c), side_);
  }

  // The chain monomial of point j cut down to its first `len` chain words
  // (len >= 1); the remaining words are dropped.
  Monomial truncated_chain(std::size_t j, std::size_t len) const {
    const Monomial& m = chains_[j];
    return side_ == Side::right ? m.suffix(len - 1) : m.prefix(len - 1);
  }

 private:
  Ptr tw_;
  std::vector<Point<R>> points_;
  std::vector<Monomial> chains_;
  Side side_;
  std::size_t total_ = 0;
};

template <RingContext R>
struct InterpProblem {
  ConstraintSpec<R> constraints;
  // targets[j] has one value per chain word of point j.
  std::vector<std::vector<typename R::Scalar>> targets;

  InterpProblem(ConstraintSpec<R> spec, std::vector<std::vector<typename R::Scalar>> values)
      : constraints(std::move(spec)), targets(std::move(values)) {
    if (targets.size() != constraints.size()) throw std::invalid_argument("one target vector per point");
    for (std::size_t j = 0; j < targets.size(); ++j) {
      if (targets[j].size() != constraints.chains()[j].degree() + 1) {
        throw std::invalid_argument("target count differs from chain length at point " + std::to_string(j + 1));
      }
    }
  }

  std::vector<typename R::Scalar> flat_targets() const {
    std::vector<typename R::Scalar> out;
    for (const auto& t : targets) out.insert(out.end(), t.begin(), t.end());
    return out;
  }
};

// All N constraint values of F, point by point along each chain.
template <RingContext R>
std::vector<typename R::Scalar> constraint_values(const Polynomial<R>& f, const ConstraintSpec<R>& spec) {
  std::vector<typename R::Scalar> out;
  out.reserve(spec.total());
  for (std::size_t j = 0; j < spec.size(); ++j) {
    auto v = chain_values(f, spec.points()[j], spec.chains()[j], spec.side());
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

template <RingContext R>
bool ideal_member(const Polynomial<R>& f, const ConstraintSpec<R>& spec) {
  if (f.is_zero()) return true;
  for (const auto& v : constraint_values(f, spec)) {
    if (!v.is_zero()) return false;
  }
  return true;
}

namespace detail {

// Shared driver for both algorithms. letter_for(step) names the variable of
// the step-th linear factor; skip_zero keeps G unchanged when the value
// already vanishes instead of multiplying by the bare variable.
template <RingContext R, class LetterFor>
Polynomial<R> build_vanishing(const ConstraintSpec<R>& spec, LetterFor letter_for, bool skip_zero) {
  using P = Polynomial<R>;
  const auto& tw = spec.twist();
  const Side side = spec.side();
  P g = P::constant(tw, tw->one());
  std::size_t step = 0;
  for (std::size_t j = 0; j < spec.size(); ++j) {
    const auto& a = spec.points()[j];
    const Monomial& m = spec.chains()[j];
    const auto letters = chain_letters(m, side);
    for (std::size_t i = 0; i <= m.degree(); ++i, ++step) {
      // Derivative of G along the i-th chain word, evaluated at a.
      P cur = g;
      for (std::size_t t = 0; t < i; ++t) cur = divide(cur, a, side).quotients[letters[t]];
      const auto v = evaluate(cur, a, side);
      const std::size_t l = letter_for(step);
      if (v.is_zero()) {
        if (skip_zero) continue;
        const P x = P::variable(tw, l);
        g = side == Side::right ? x * g : g * x;
      } else {
        const auto alpha = conjugate(*tw, a, v, side)[l];
        const P factor = P::linear(tw, l, alpha);
        g = side == Side::right ? factor * g : g * factor;
      }
    }
  }
  return g;
}

}  // namespace detail

// A member of the constraint ideal of degree N whose leading monomial (in the
// side's order) is target. On the right the factors are taken from the last
// letter of target backwards, on the left from the first letter forwards.
template <RingContext R>
Polynomial<R> algorithm1(const ConstraintSpec<R>& spec, const Monomial& target) {
  const std::size_t total = spec.total();
  if (target.degree() != total) {
    throw BadLeadingMonomial("target monomial has degree " + std::to_string(target.degree()) +
                             ", expected " + std::to_string(total));
  }
  for (std::size_t l : target.letters()) {
    if (l >= spec.twist()->n()) throw BadLeadingMonomial("target letter out of range");
  }
  const Side side = spec.side();
  return detail::build_vanishing(
      spec, [&](std::size_t step) -> std::size_t { return side == Side::right ? target[total - 1 - step] : target[step]; },
      false);
}

// A member of the constraint ideal of degree <= N built from the single
// variable x_t (0-based index); factors are skipped when a value vanishes.
template <RingContext R>
Polynomial<R> algorithm2(const ConstraintSpec<R>& spec, std::size_t t = 0) {
  if (t >= spec.twist()->n()) throw std::out_of_range("variable index out of range");
  return detail::build_vanishing(spec, [t](std::size_t) { return t; }, true);
}

template <RingContext R>
struct VandermondeMatrix {
  std::size_t order = 0;
  Side side = Side::right;
  std::vector<Monomial> monomials;
  // r x N on the right, N x r on the left.
  Matrix<typename R::Scalar> matrix;
};

template <RingContext R>
VandermondeMatrix<R> build_vandermonde(const ConstraintSpec<R>& spec, std::size_t d) {
  using P = Polynomial<R>;
  const auto& tw = spec.twist();
  VandermondeMatrix<R> out;
  out.order = d;
  out.side = spec.side();
  out.monomials = words_below(tw->n(), d, spec.side());
  const std::size_t r = out.monomials.size();
  const std::size_t total = spec.total();
  out.matrix = spec.side() == Side::right ? Matrix<typename R::Scalar>(r, total, tw->one())
                                          : Matrix<typename R::Scalar>(total, r, tw->one());
  for (std::size_t t = 0; t < r; ++t) {
    const auto vals = constraint_values(P::monomial(tw, out.monomials[t]), spec);
    for (std::size_t c = 0; c < total; ++c) {
      if (spec.side() == Side::right) {
        out.matrix(t, c) = vals[c];
      } else {
        out.matrix(c, t) = vals[c];
      }
    }
  }
  return out;
}

// Solves coefficients z of F = sum z_t m'_t (right) or F = sum m'_t z_t (left)
// against the Vandermonde matrix.
template <RingContext R>
LinearSolution<typename R::Scalar> solve_vandermonde(const VandermondeMatrix<R>& v,
                                                      const std::vector<typename R::Scalar>& b) {
  return v.side == Side::right ? solve_row_system(v.matrix, b) : solve_col_system(v.matrix, b);
}

template <RingContext R>
Polynomial<R> polynomial_from_coordinates(const std::shared_ptr<const TwistConfig<R>>& tw,
                                          const std::vector<Monomial>& monomials,
                                          const std::vector<typename R::Scalar>& z, Side side) {
  TermMap<typename R::Scalar> terms;
  for (std::size_t t = 0; t < monomials.size(); ++t) detail::accumulate(terms, monomials[t], z[t]);
  return side == Side::right ? Polynomial<R>(tw, std::move(terms))
                             : Polynomial<R>::from_right_coefficients(tw, terms);
}

// Basis of the members of the constraint ideal of degree <= d, as
// coordinate vectors over the words of degree <= d.
template <RingContext R>
std::pair<std::vector<Monomial>, std::vector<std::vector<typename R::Scalar>>> ideal_basis(
    const ConstraintSpec<R>& spec, std::size_t d) {
  auto v = build_vandermonde(spec, d + 1);
  auto sol = solve_vandermonde(v, std::vector<typename R::Scalar>(spec.total(), spec.twist()->zero()));
  return {std::move(v.monomials), std::move(sol.nullspace)};
}

// Dimension of the members of the constraint ideal of degree <= d.
template <RingContext R>
std::size_t dim_V(const ConstraintSpec<R>& spec, std::size_t d) {
  return ideal_basis(spec, d).second.size();
}

// Dimension of the degree-d layer: the rank of the top-degree parts of the
// members of degree <= d.
template <RingContext R>
std::size_t dim_V_exact(const ConstraintSpec<R>& spec, std::size_t d) {
  const auto [words, basis] = ideal_basis(spec, d);
  std::vector<std::size_t> top;
  for (std::size_t t = 0; t < words.size(); ++t) {
    if (words[t].degree() == d) top.push_back(t);
  }
  if (basis.empty() || top.empty()) return 0;
  Matrix<typename R::Scalar> m(basis.size(), top.size(), spec.twist()->one());
  for (std::size_t b = 0; b < basis.size(); ++b) {
    for (std::size_t c = 0; c < top.size(); ++c) m(b, c) = basis[b][top[c]];
  }
  // Right-side coordinates form a left module and vice versa.
  return rank(m, spec.side() == Side::right ? Side::left : Side::right);
}

template <RingContext R>
bool is_dp_independent(const ConstraintSpec<R>& spec) {
  const std::size_t total = spec.total();
  const std::size_t whole = dim_V(spec, total);
  for (std::size_t j = 0; j < spec.size(); ++j) {
    if (dim_V(spec.without(j), total) != whole + spec.chains()[j].degree() + 1) return false;
  }
  return true;
}

// Independent check: for every j some member of degree <= N of the ideal of
// the other points has a nonzero value at a_j and vanishing higher chain
// derivatives there.
template <RingContext R>
bool dp_independent_by_witness(const ConstraintSpec<R>& spec) {
  const std::size_t total = spec.total();
  for (std::size_t j = 0; j < spec.size(); ++j) {
    const ConstraintSpec<R> rest = spec.without(j);
    const Monomial& m = spec.chains()[j];
    // Point j with its chain words beyond the first; expressed as the
    // value row plus the higher rows of the full chain.
    const ConstraintSpec<R> with_j = rest.with(spec.points()[j], m);
    auto v = build_vandermonde(with_j, total + 1);
    const std::size_t first = rest.total();  // column/row of the value at a_j
    const std::size_t r = v.monomials.size();
    // Drop the value constraint of a_j, keep the rest.
    const std::size_t kept = with_j.total() - 1;
    Matrix<typename R::Scalar> reduced = v.side == Side::right ? Matrix<typename R::Scalar>(r, kept, spec.twist()->one())
                                                               : Matrix<typename R::Scalar>(kept, r, spec.twist()->one());
    for (std::size_t c = 0, k = 0; c < with_j.total(); ++c) {
      if (c == first) continue;
      for (std::size_t t = 0; t < r; ++t) {
        if (v.side == Side::right) {
          reduced(t, k) = v.matrix(t, c);
        } else {
          reduced(k, t) = v.matrix(c, t);
        }
      }
      ++k;
    }
    const std::vector<typename R::Scalar> zeros(kept, spec.twist()->zero());
    const auto sol = v.side == Side::right ? solve_row_system(reduced, zeros) : solve_col_system(reduced, zeros);
    bool found = false;
    for (const auto& z : sol.nullspace) {
      typename R::Scalar val = spec.twist()->zero();
      for (std::size_t t = 0; t < r; ++t) {
        val += v.side == Side::right ? z[t] * v.matrix(t, first) : v.matrix(first, t) * z[t];
      }
      if (!val.is_zero()) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

// Interpolant of degree < N assembled from the normalized outputs of
// algorithm1 on the growing prefixes of the constraint list. Returns nullopt
// when no target monomial yields a usable pivot.
template <RingContext R>
std::optional<Polynomial<R>> hermite_dual_basis(const InterpProblem<R>& problem) {
  using P = Polynomial<R>;
  using S = typename R::Scalar;
  const auto& spec = problem.constraints;
  const auto& tw = spec.twist();
  const Side side = spec.side();
  const std::size_t total = spec.total();

  std::vector<P> basis;
  std::vector<std::vector<S>> values;
  std::size_t t = 0;
  for (std::size_t j = 0; j < spec.size(); ++j) {
    for (std::size_t i = 0; i <= spec.chains()[j].degree(); ++i, ++t) {
      std::vector<std::size_t> before(j);
      for (std::size_t q = 0; q < j; ++q) before[q] = q;
      ConstraintSpec<R> prefix = spec.subset(before);
      if (i > 0) prefix = prefix.with(spec.points()[j], spec.truncated_chain(j, i));
      bool found = false;
      for (const Monomial& target : words_of_degree(tw->n(), t, side)) {
        P g = algorithm1(prefix, target);
        auto vals = constraint_values(g, spec);
        if (vals[t].is_zero()) continue;
        const S inv = vals[t].inverse();
        if (side == Side::right) {
          g = inv * g;
          for (auto& x : vals) x = inv * x;
        } else {
          g = g * inv;
          for (auto& x : vals) x = x * inv;
        }
        basis.push_back(std::move(g));
        values.push_back(std::move(vals));
        found = true;
        break;
      }
      if (!found) return std::nullopt;
    }
  }

  // Clear the entries after each pivot, last pivots first.
  for (std::size_t u = total; u-- > 0;) {
    for (std::size_t w = u + 1; w < total; ++w) {
      const S c = values[u][w];
      if (c.is_zero()) continue;
      if (side == Side::right) {
        basis[u] -= c * basis[w];
        for (std::size_t q = 0; q < total; ++q) values[u][q] -= c * values[w][q];
      } else {
        basis[u] -= basis[w] * c;
        for (std::size_t q = 0; q < total; ++q) values[u][q] -= values[w][q] * c;
      }
    }
  }

  const auto b = problem.flat_targets();
  P out(tw);
  for (std::size_t u = 0; u < total; ++u) {
    if (b[u].is_zero()) continue;
    out += side == Side::right ? b[u] * basis[u] : basis[u] * b[u];
  }
  return out;
}

template <RingContext R>
struct HermiteSolution {
  Polynomial<R> vandermonde;
  std::optional<Polynomial<R>> dual_basis;
};

template <RingContext R>
bool meets_targets(const Polynomial<R>& f, const InterpProblem<R>& problem) {
  return constraint_values(f, problem.constraints) == problem.flat_targets() &&
         f.degree() < static_cast<long>(problem.constraints.total());
}

// Both constructions. Throws Infeasible when the Vandermonde system has no
// solution. Every returned polynomial has been checked against all targets.
template <RingContext R>
HermiteSolution<R> hermite_solve(const InterpProblem<R>& problem, bool with_dual = true) {
  const auto& spec = problem.constraints;
  const auto v = build_vandermonde(spec, spec.total());
  const auto sol = solve_vandermonde(v, problem.flat_targets());
  if (!sol.solution) throw Infeasible("interpolation system is inconsistent");
  HermiteSolution<R> out{polynomial_from_coordinates(spec.twist(), v.monomials, *sol.solution, spec.side()),
                         std::nullopt};
  if (!meets_targets(out.vandermonde, problem)) {
    throw std::logic_error("Vandermonde solution failed verification");
  }
  if (with_dual) {
    out.dual_basis = hermite_dual_basis(problem);
    if (out.dual_basis && !meets_targets(*out.dual_basis, problem)) {
      throw std::logic_error("dual-basis solution failed verification");
    }
  }
  return out;
}

template <RingContext R>
Polynomial<R> hermite_interpolate(const InterpProblem<R>& problem) {
  return hermite_solve(problem, false).vandermonde;
}

template <RingContext R>
Polynomial<R> lagrange_interpolate(std::shared_ptr<const TwistConfig<R>> tw, std::vector<Point<R>> points,
                                   const std::vector<typename R::Scalar>& values, Side side) {
  std::vector<Monomial> chains(points.size());
  std::vector<std::vector<typename R::Scalar>> targets;
  for (const auto& v : values) targets.push_back({v});
  return hermite_interpolate(InterpProblem<R>(ConstraintSpec<R>(std::move(tw), std::move(points), std::move(chains), side),
                                              std::move(targets)));
}

// Monic generator of the constraint ideal for one variable: the member of
// least degree, scaled on the side that keeps it a generator.
template <RingContext R>
Polynomial<R> univariate_minimal_polynomial(const ConstraintSpec<R>& spec) {
  using S = typename R::Scalar;
  const auto& tw = spec.twist();
  if (tw->n() != 1) throw std::invalid_argument("minimal polynomial needs exactly one variable");
  for (std::size_t d = 0; d <= spec.total(); ++d) {
    const auto [words, basis] = ideal_basis(spec, d);
    for (const auto& z : basis) {
      if (z[d].is_zero()) continue;
      const S inv = z[d].inverse();
      std::vector<S> scaled(z.size());
      for (std::size_t t = 0; t < z.size(); ++t) scaled[t] = spec.side() == Side::right ? inv * z[t] : z[t] * inv;
      return polynomial_from_coordinates(tw, words, scaled, spec.side());
    }
  }
  throw std::logic_error("no generator found up to degree N");
}

// True when every generator has vanishing chain derivatives at a.
template <RingContext R>
bool zero_set_member(const Point<R>& a, const std::vector<Polynomial<R>>& generators, const Monomial& chain,
                     Side side) {
  for (const auto& g : generators) {
    for (const auto& v : chain_values(g, a, chain, side)) {
      if (!v.is_zero()) return false;
    }
  }
  return true;
}

}  // namespace skew
