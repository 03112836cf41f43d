#include "skew/quaternion.hpp"

#include <cctype>
#include <stdexcept>
#include <vector>

#include "skew/error.hpp"

namespace skew {

Quaternion& Quaternion::operator*=(const Quaternion& o) {
  Quaternion r;
  r.w = w * o.w - x * o.x - y * o.y - z * o.z;
  r.x = w * o.x + x * o.w + y * o.z - z * o.y;
  r.y = w * o.y - x * o.z + y * o.w + z * o.x;
  r.z = w * o.z + x * o.y - y * o.x + z * o.w;
  *this = std::move(r);
  return *this;
}

Quaternion Quaternion::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  const Rational n = norm();
  return {w / n, -x / n, -y / n, -z / n};
}

Quaternion Quaternion::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.size() < 3 || s.rfind("q(", 0) != 0 || s.back() != ')') {
    return Quaternion(Rational::parse(s), Rational(), Rational(), Rational());
  }
  std::string inner = s.substr(2, s.size() - 3);
  std::vector<Rational> parts;
  std::size_t start = 0;
  for (std::size_t k = 0; k <= inner.size(); ++k) {
    if (k == inner.size() || inner[k] == ',') {
      parts.push_back(Rational::parse(std::string_view(inner).substr(start, k - start)));
      start = k + 1;
    }
  }
  if (parts.size() != 4) throw ParseError("quaternion literal needs 4 components: '" + s + "'");
  return {parts[0], parts[1], parts[2], parts[3]};
}

std::string to_string(const Quaternion& q) {
  if (q.x.is_zero() && q.y.is_zero() && q.z.is_zero()) return to_string(q.w);
  return "q(" + to_string(q.w) + "," + to_string(q.x) + "," + to_string(q.y) + "," +
         to_string(q.z) + ")";
}

}  // namespace skew
