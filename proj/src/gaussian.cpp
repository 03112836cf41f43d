#include "skew/gaussian.hpp"

#include <cctype>
#include <stdexcept>

#include "skew/error.hpp"

namespace skew {

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  const Rational n = norm();
  return {re / n, -im / n};
}

namespace {

// Parses a signed real or imaginary chunk such as "-3/2", "+i", "1/2i".
void add_chunk(std::string_view chunk, GaussianRational& out, const std::string& whole) {
  if (chunk.empty()) throw ParseError("bad gaussian literal '" + whole + "'");
  const bool imag = chunk.back() == 'i';
  if (!imag) {
    out.re += Rational::parse(chunk);
    return;
  }
  std::string_view body = chunk.substr(0, chunk.size() - 1);
  if (body.empty() || body == "+") {
    out.im += Rational(1);
  } else if (body == "-") {
    out.im -= Rational(1);
  } else {
    if (body.back() == '*') body.remove_suffix(1);
    out.im += Rational::parse(body);
  }
}

}  // namespace

GaussianRational GaussianRational::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  if (s.empty()) throw ParseError("empty gaussian literal");
  for (char c : s) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '+' || c == '-' || c == '/' ||
          c == 'i' || c == '*')) {
      throw ParseError("bad gaussian literal '" + s + "'");
    }
  }
  GaussianRational out;
  std::size_t start = 0;
  int chunks = 0;
  for (std::size_t k = 1; k <= s.size(); ++k) {
    if (k == s.size() || s[k] == '+' || s[k] == '-') {
      add_chunk(std::string_view(s).substr(start, k - start), out, s);
      ++chunks;
      start = k;
    }
  }
  if (chunks > 2) throw ParseError("bad gaussian literal '" + s + "'");
  return out;
}

std::string to_string(const GaussianRational& z) {
  if (z.im.is_zero()) return to_string(z.re);
  std::string im;
  if (z.im == Rational(1)) {
    im = "i";
  } else if (z.im == Rational(-1)) {
    im = "-i";
  } else {
    im = to_string(z.im) + "i";
  }
  if (z.re.is_zero()) return im;
  std::string out = to_string(z.re);
  if (im.front() != '-') out += '+';
  return out + im;
}

}  // namespace skew
