#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace skew {

// A word in the free monoid on x_1..x_n. Letters are stored 0-based; the empty
// word is the identity o.
class Monomial {
 public:
  Monomial() = default;
  Monomial(std::initializer_list<std::uint16_t> letters) : letters_(letters) {}
  explicit Monomial(std::vector<std::uint16_t> letters) : letters_(std::move(letters)) {}

  static Monomial variable(std::size_t i) { return Monomial({static_cast<std::uint16_t>(i)}); }
  // Builds a word from 1-based indices, as usually written.
  static Monomial from_indices(const std::vector<int>& one_based);

  std::size_t degree() const { return letters_.size(); }
  bool is_one() const { return letters_.empty(); }
  const std::vector<std::uint16_t>& letters() const { return letters_; }
  std::uint16_t operator[](std::size_t k) const { return letters_[k]; }
  std::uint16_t first() const { return letters_.front(); }
  std::uint16_t last() const { return letters_.back(); }

  Monomial prefix(std::size_t len) const;
  Monomial suffix(std::size_t len) const;
  Monomial without_first() const { return suffix(degree() - 1); }
  Monomial without_last() const { return prefix(degree() - 1); }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

  // Plain lexicographic order on the letter vector; only for containers that
  // need some total order.
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.letters_ < b.letters_; }

 private:
  std::vector<std::uint16_t> letters_;
};

enum class Side { right, left };

inline const char* side_name(Side s) { return s == Side::right ? "right" : "left"; }

// Graded lexicographic orders with x_1 < ... < x_n. At equal degree the right
// order reads letters from the last one backwards, the left order from the
// first one forwards; the larger index wins at the first difference.
std::strong_ordering compare_grlex(const Monomial& a, const Monomial& b, Side order);

struct RightGrlex {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return compare_grlex(a, b, Side::right) < 0;
  }
};

struct LeftGrlex {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return compare_grlex(a, b, Side::left) < 0;
  }
};

// All words of degree exactly d, ascending in the given order.
std::vector<Monomial> words_of_degree(std::size_t n, std::size_t d, Side order);
// All words of degree < d, ascending in the given order.
std::vector<Monomial> words_below(std::size_t n, std::size_t d, Side order);

// "1", "x", "x^2", "x1^2*x2". With n = 1 the letter prints as a bare x.
std::string to_string(const Monomial& m, std::size_t n);

}  // namespace skew
