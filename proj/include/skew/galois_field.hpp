#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace skew {

// GF(p^m) realized as F_p[t]/(modulus). An element is encoded by the base-p
// digits of its least-degree representative (digit k is the coefficient of t^k).
class GFField {
 public:
  // modulus lists coefficients from t^0 up to t^m and must be monic of degree m.
  // When omitted, the first irreducible modulus in enumeration order for which
  // t is primitive is chosen.
  GFField(std::uint32_t p, std::uint32_t m,
          std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return m_; }
  std::uint32_t order() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  // Code of the primitive element printed as "g".
  std::uint32_t generator() const { return exp_[1]; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const;
  // a^(p^k).
  std::uint32_t frobenius(std::uint32_t a, std::uint32_t k) const;
  std::uint32_t power_of_generator(std::uint64_t e) const { return exp_[e % (q_ - 1)]; }
  // Discrete log base g; a must be nonzero.
  std::uint32_t log(std::uint32_t a) const { return log_[a]; }
  std::uint32_t from_integer(long v) const;

  static bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly);

 private:
  std::uint32_t poly_mul_mod(std::uint32_t a, std::uint32_t b) const;

  std::uint32_t p_, m_, q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
};

class GFElement {
 public:
  // The default element is zero and carries no field; arithmetic adopts the
  // field of the other operand.
  GFElement() = default;
  GFElement(std::shared_ptr<const GFField> f, std::uint32_t code) : f_(std::move(f)), c_(code) {}

  static GFElement parse(const std::shared_ptr<const GFField>& f, std::string_view text);

  bool is_zero() const { return c_ == 0; }
  std::uint32_t code() const { return c_; }
  const std::shared_ptr<const GFField>& field() const { return f_; }
  GFElement inverse() const;
  GFElement frobenius(std::uint32_t k) const;

  GFElement& operator+=(const GFElement& o);
  GFElement& operator-=(const GFElement& o);
  GFElement& operator*=(const GFElement& o);
  GFElement& operator/=(const GFElement& o) { return *this *= o.inverse(); }

  friend GFElement operator+(GFElement a, const GFElement& b) { return a += b; }
  friend GFElement operator-(GFElement a, const GFElement& b) { return a -= b; }
  friend GFElement operator*(GFElement a, const GFElement& b) { return a *= b; }
  friend GFElement operator/(GFElement a, const GFElement& b) { return a /= b; }
  friend GFElement operator-(const GFElement& a);
  friend bool operator==(const GFElement& a, const GFElement& b) { return a.c_ == b.c_; }

 private:
  const GFField& adopt(const GFElement& o);

  std::shared_ptr<const GFField> f_;
  std::uint32_t c_ = 0;
};

// "0", "1", "g", or "g^e" with 1 < e < q-1.
std::string to_string(const GFElement& a);

}  // namespace skew
