#pragma once

#include <stdexcept>
#include <string>

namespace skew {

// Left-sided operations need phi (the transposed action of sigma on F^n) to
// be invertible. Raised whenever such an operation is requested on a twist
// that cannot supply phi^{-1}.
class NotLeftCapable : public std::logic_error {
 public:
  explicit NotLeftCapable(const std::string& what)
      : std::logic_error("not left-capable: " + what) {}
};

class TwistMismatch : public std::invalid_argument {
 public:
  TwistMismatch() : std::invalid_argument("operands belong to different skew polynomial rings") {}
  explicit TwistMismatch(const std::string& what) : std::invalid_argument(what) {}
};

class ZeroPolynomial : public std::domain_error {
 public:
  explicit ZeroPolynomial(const std::string& what) : std::domain_error(what) {}
};

class ZeroConjugator : public std::domain_error {
 public:
  ZeroConjugator() : std::domain_error("conjugation by zero") {}
  explicit ZeroConjugator(const std::string& what) : std::domain_error(what) {}
};

class BadLeadingMonomial : public std::invalid_argument {
 public:
  explicit BadLeadingMonomial(const std::string& what) : std::invalid_argument(what) {}
};

// The interpolation system has no solution for the requested targets.
class Infeasible : public std::runtime_error {
 public:
  explicit Infeasible(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public std::invalid_argument {
 public:
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace skew
