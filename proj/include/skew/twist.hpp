#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "skew/error.hpp"
#include "skew/scalar.hpp"

namespace skew {

// A ring automorphism together with its inverse.
template <class S>
struct Automorphism {
  std::string name;
  std::function<S(const S&)> forward;
  std::function<S(const S&)> backward;

  S operator()(const S& a) const { return forward(a); }
  S inverse(const S& a) const { return backward(a); }
  Automorphism inverted() const { return {name + "^-1", backward, forward}; }
};

template <class S>
Automorphism<S> identity_automorphism() {
  auto id = [](const S& a) { return a; };
  return {"identity", id, id};
}

inline Automorphism<GaussianRational> conjugation() {
  auto c = [](const GaussianRational& a) { return a.conj(); };
  return {"conj", c, c};
}

// a -> a^(p^k) on GF(p^m).
inline Automorphism<GFElement> frobenius(const GFRing& ring, std::uint32_t k) {
  const std::uint32_t m = ring.field->degree();
  const std::uint32_t kk = k % m;
  const std::uint32_t back = (m - kk) % m;
  return {"frobenius(" + std::to_string(k) + ")",
          [kk](const GFElement& a) { return a.frobenius(kk); },
          [back](const GFElement& a) { return a.frobenius(back); }};
}

// a -> c a c^-1.
template <class S>
Automorphism<S> inner_automorphism(const S& c, const std::string& label) {
  if (c.is_zero()) throw std::invalid_argument("inner automorphism needs a unit");
  const S ci = c.inverse();
  return {"inner(" + label + ")", [c, ci](const S& a) { return c * a * ci; },
          [c, ci](const S& a) { return ci * a * c; }};
}

// The pair (sigma, delta) acting on n variables: x_i a = sum_j sigma_ij(a) x_j + delta_i(a).
template <RingContext R>
class TwistConfig {
 public:
  using S = typename R::Scalar;
  using Vec = std::vector<S>;
  using Mat = std::vector<Vec>;
  using SigmaTable = std::function<S(std::size_t i, std::size_t j, const S& a)>;
  using PhiInverse = std::function<Vec(const Vec&)>;
  using DeltaTable = std::function<S(std::size_t i, const S& a)>;

  enum class DeltaKind { zero, inner, table };

  struct Delta {
    DeltaKind kind = DeltaKind::zero;
    Vec v;
    DeltaTable table;
    std::string label = "zero";

    static Delta zero() { return {}; }
    static Delta inner(Vec v) { return {DeltaKind::inner, std::move(v), {}, "inner"}; }
    static Delta plugin(DeltaTable t, std::string label = "table") {
      return {DeltaKind::table, {}, std::move(t), std::move(label)};
    }
  };

  static std::shared_ptr<const TwistConfig> diagonal(R ring, std::vector<Automorphism<S>> sigma,
                                                     Delta delta = Delta::zero()) {
    auto cfg = std::shared_ptr<TwistConfig>(new TwistConfig(std::move(ring)));
    if (sigma.empty()) throw std::invalid_argument("twist needs at least one variable");
    cfg->n_ = sigma.size();
    cfg->diag_ = std::move(sigma);
    cfg->set_delta(std::move(delta));
    return cfg;
  }

  // n copies of the identity with zero derivation.
  static std::shared_ptr<const TwistConfig> trivial(R ring, std::size_t n) {
    return diagonal(std::move(ring), std::vector<Automorphism<S>>(n, identity_automorphism<S>()));
  }

  // General matrix morphism given entrywise. Without phi_inverse the twist is
  // right-only.
  static std::shared_ptr<const TwistConfig> plugin(R ring, std::size_t n, SigmaTable sigma,
                                                   std::optional<PhiInverse> phi_inverse,
                                                   Delta delta = Delta::zero()) {
    auto cfg = std::shared_ptr<TwistConfig>(new TwistConfig(std::move(ring)));
    if (n == 0) throw std::invalid_argument("twist needs at least one variable");
    cfg->n_ = n;
    cfg->table_ = std::move(sigma);
    cfg->phi_inv_ = std::move(phi_inverse);
    cfg->set_delta(std::move(delta));
    return cfg;
  }

  const R& ring() const { return ring_; }
  std::size_t n() const { return n_; }
  S zero() const { return ring_.zero(); }
  S one() const { return one_; }
  bool is_diagonal() const { return !table_; }
  bool left_capable() const { return is_diagonal() || phi_inv_.has_value(); }
  bool delta_is_zero() const { return delta_.kind == DeltaKind::zero; }
  const Delta& delta_spec() const { return delta_; }
  const std::vector<Automorphism<S>>& diagonal_entries() const { return diag_; }

  S sigma(std::size_t i, std::size_t j, const S& a) const {
    if (table_) return (*table_)(i, j, a);
    return i == j ? diag_[i](a) : ring_.zero();
  }

  S delta(std::size_t i, const S& a) const {
    switch (delta_.kind) {
      case DeltaKind::zero:
        return ring_.zero();
      case DeltaKind::inner: {
        S out = -(delta_.v[i] * a);
        if (is_diagonal()) return out + diag_[i](a) * delta_.v[i];
        for (std::size_t j = 0; j < n_; ++j) out += sigma(i, j, a) * delta_.v[j];
        return out;
      }
      case DeltaKind::table:
        return delta_.table(i, a);
    }
    return ring_.zero();
  }

  Mat apply_sigma(const S& a) const {
    Mat out(n_, Vec(n_, ring_.zero()));
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) out[i][j] = sigma(i, j, a);
    }
    return out;
  }

  Vec apply_delta(const S& a) const {
    Vec out(n_);
    for (std::size_t i = 0; i < n_; ++i) out[i] = delta(i, a);
    return out;
  }

  // phi(g)_i = sum_j sigma_ji(g_j).
  Vec phi(const Vec& g) const {
    check_len(g);
    Vec out(n_, ring_.zero());
    for (std::size_t i = 0; i < n_; ++i) {
      if (is_diagonal()) {
        out[i] = diag_[i](g[i]);
        continue;
      }
      for (std::size_t j = 0; j < n_; ++j) out[i] += sigma(j, i, g[j]);
    }
    return out;
  }

  Vec phi_inv(const Vec& g) const {
    check_len(g);
    if (!left_capable()) throw NotLeftCapable("twist has no inverse for phi");
    if (!is_diagonal()) return (*phi_inv_)(g);
    Vec out(n_);
    for (std::size_t i = 0; i < n_; ++i) out[i] = diag_[i].inverse(g[i]);
    return out;
  }

  S psi(const Vec& c) const {
    check_len(c);
    S out = ring_.zero();
    for (std::size_t i = 0; i < n_; ++i) out += delta(i, c[i]);
    return out;
  }

  // Column k is phi^-1(lambda e_k).
  Mat tilde_sigma(const S& lambda) const {
    Mat out(n_, Vec(n_, ring_.zero()));
    for (std::size_t k = 0; k < n_; ++k) {
      const Vec col = phi_inv(unit_vector(k, lambda));
      for (std::size_t i = 0; i < n_; ++i) out[i][k] = col[i];
    }
    return out;
  }

  Vec tilde_delta(const S& lambda) const {
    Vec out(n_);
    for (std::size_t k = 0; k < n_; ++k) out[k] = tilde_delta(k, lambda);
    return out;
  }

  // Entry (i, k) of tilde_sigma without building the matrix.
  S tilde_sigma(std::size_t i, std::size_t k, const S& lambda) const {
    if (!left_capable()) throw NotLeftCapable("twist has no inverse for phi");
    if (is_diagonal()) return i == k ? diag_[k].inverse(lambda) : ring_.zero();
    return phi_inv(unit_vector(k, lambda))[i];
  }

  S tilde_delta(std::size_t k, const S& lambda) const {
    if (!left_capable()) throw NotLeftCapable("twist has no inverse for phi");
    if (delta_is_zero()) return ring_.zero();
    if (is_diagonal()) return -delta(k, diag_[k].inverse(lambda));
    return -psi(phi_inv(unit_vector(k, lambda)));
  }

  std::string describe() const {
    std::string s = ring_.name() + ", n=" + std::to_string(n_) + ", sigma=";
    if (is_diagonal()) {
      s += "diag(";
      for (std::size_t i = 0; i < n_; ++i) s += (i ? "," : "") + diag_[i].name;
      s += ")";
    } else {
      s += "table";
    }
    return s + ", delta=" + delta_.label;
  }

 private:
  explicit TwistConfig(R ring) : ring_(std::move(ring)), one_(ring_.one()) {}

  void set_delta(Delta d) {
    if (d.kind == DeltaKind::inner && d.v.size() != n_) {
      throw std::invalid_argument("inner derivation vector has wrong length");
    }
    delta_ = std::move(d);
  }

  void check_len(const Vec& g) const {
    if (g.size() != n_) throw std::invalid_argument("vector length differs from variable count");
  }

  Vec unit_vector(std::size_t k, const S& lambda) const {
    Vec e(n_, ring_.zero());
    e[k] = lambda;
    return e;
  }

  R ring_;
  S one_;
  std::size_t n_ = 0;
  std::vector<Automorphism<S>> diag_;
  std::optional<SigmaTable> table_;
  std::optional<PhiInverse> phi_inv_;
  Delta delta_;
};

template <RingContext R>
using TwistPtr = std::shared_ptr<const TwistConfig<R>>;

}  // namespace skew
