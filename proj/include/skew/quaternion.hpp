#pragma once

#include <string>
#include <string_view>

#include "skew/rational.hpp"

namespace skew {

// Rational Hamilton quaternion w + x i + y j + z k.
struct Quaternion {
  Rational w, x, y, z;

  Quaternion() = default;
  Quaternion(long r) : w(r) {}  // NOLINT(google-explicit-constructor)
  Quaternion(Rational w_, Rational x_, Rational y_, Rational z_)
      : w(std::move(w_)), x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}

  static Quaternion i() { return {Rational(0), Rational(1), Rational(0), Rational(0)}; }
  static Quaternion j() { return {Rational(0), Rational(0), Rational(1), Rational(0)}; }
  static Quaternion k() { return {Rational(0), Rational(0), Rational(0), Rational(1)}; }

  // Accepts "q(w,x,y,z)" or a plain rational.
  static Quaternion parse(std::string_view text);

  bool is_zero() const { return w.is_zero() && x.is_zero() && y.is_zero() && z.is_zero(); }
  Quaternion conj() const { return {w, -x, -y, -z}; }
  Rational norm() const { return w * w + x * x + y * y + z * z; }
  Quaternion inverse() const;

  Quaternion& operator+=(const Quaternion& o) {
    w += o.w; x += o.x; y += o.y; z += o.z;
    return *this;
  }
  Quaternion& operator-=(const Quaternion& o) {
    w -= o.w; x -= o.x; y -= o.y; z -= o.z;
    return *this;
  }
  Quaternion& operator*=(const Quaternion& o);
  Quaternion& operator/=(const Quaternion& o) { return *this *= o.inverse(); }

  friend Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
  friend Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
  friend Quaternion operator*(Quaternion a, const Quaternion& b) { return a *= b; }
  // Right division a * b^-1.
  friend Quaternion operator/(Quaternion a, const Quaternion& b) { return a /= b; }
  friend Quaternion operator-(const Quaternion& a) { return {-a.w, -a.x, -a.y, -a.z}; }
  friend bool operator==(const Quaternion&, const Quaternion&) = default;
};

std::string to_string(const Quaternion& q);

}  // namespace skew
