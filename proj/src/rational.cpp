#include "skew/rational.hpp"

#include <cctype>
#include <stdexcept>

#include "skew/error.hpp"

namespace skew {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  if (s.empty()) throw ParseError("empty rational literal");
  // Reject anything mpq would accept that is not a plain p or p/q literal.
  std::size_t slash = s.find('/');
  auto digits_ok = [](std::string_view part, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !part.empty() && part[0] == '-') i = 1;
    if (i >= part.size()) return false;
    for (; i < part.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
    }
    return true;
  };
  std::string_view sv(s);
  if (slash == std::string::npos) {
    if (!digits_ok(sv, true)) throw ParseError("bad rational literal '" + s + "'");
  } else if (!digits_ok(sv.substr(0, slash), true) || !digits_ok(sv.substr(slash + 1), false)) {
    throw ParseError("bad rational literal '" + s + "'");
  }
  mpq_class v;
  if (v.set_str(s, 10) != 0) throw ParseError("bad rational literal '" + s + "'");
  if (v.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
  v.canonicalize();
  return Rational(v);
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return Rational(mpq_class(1 / v_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  v_ /= o.v_;
  return *this;
}

std::string to_string(const Rational& r) { return r.value().get_str(10); }

}  // namespace skew
