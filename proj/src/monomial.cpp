#include "skew/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace skew {

Monomial Monomial::from_indices(const std::vector<int>& one_based) {
  std::vector<std::uint16_t> l;
  l.reserve(one_based.size());
  for (int i : one_based) {
    if (i < 1) throw std::invalid_argument("variable indices start at 1");
    l.push_back(static_cast<std::uint16_t>(i - 1));
  }
  return Monomial(std::move(l));
}

Monomial Monomial::prefix(std::size_t len) const {
  return Monomial(std::vector<std::uint16_t>(letters_.begin(), letters_.begin() + static_cast<long>(len)));
}

Monomial Monomial::suffix(std::size_t len) const {
  return Monomial(std::vector<std::uint16_t>(letters_.end() - static_cast<long>(len), letters_.end()));
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  std::vector<std::uint16_t> l = a.letters_;
  l.insert(l.end(), b.letters_.begin(), b.letters_.end());
  return Monomial(std::move(l));
}

std::strong_ordering compare_grlex(const Monomial& a, const Monomial& b, Side order) {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  const std::size_t d = a.degree();
  for (std::size_t k = 0; k < d; ++k) {
    const std::size_t pos = order == Side::right ? d - 1 - k : k;
    if (a[pos] != b[pos]) return a[pos] <=> b[pos];
  }
  return std::strong_ordering::equal;
}

std::vector<Monomial> words_of_degree(std::size_t n, std::size_t d, Side order) {
  std::vector<Monomial> out;
  std::vector<std::uint16_t> digits(d, 0);
  for (;;) {
    out.emplace_back(digits);
    // Odometer whose most significant digit is the one read first by the order.
    std::size_t k = 0;
    for (; k < d; ++k) {
      const std::size_t pos = order == Side::right ? k : d - 1 - k;
      if (++digits[pos] < n) break;
      digits[pos] = 0;
    }
    if (k == d) break;
  }
  return out;
}

std::vector<Monomial> words_below(std::size_t n, std::size_t d, Side order) {
  std::vector<Monomial> out;
  for (std::size_t t = 0; t < d; ++t) {
    auto w = words_of_degree(n, t, order);
    out.insert(out.end(), w.begin(), w.end());
  }
  return out;
}

std::string to_string(const Monomial& m, std::size_t n) {
  if (m.is_one()) return "1";
  std::string out;
  std::size_t k = 0;
  while (k < m.degree()) {
    std::size_t run = 1;
    while (k + run < m.degree() && m[k + run] == m[k]) ++run;
    if (!out.empty()) out += '*';
    out += n == 1 ? std::string("x") : "x" + std::to_string(m[k] + 1);
    if (run > 1) out += "^" + std::to_string(run);
    k += run;
  }
  return out;
}

}  // namespace skew
