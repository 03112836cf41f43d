#include "skew/galois_field.hpp"

#include <cctype>
#include <stdexcept>

#include "skew/error.hpp"

namespace skew {

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t r = 1, b = a % p;
  for (std::uint32_t e = p - 2; e; e >>= 1) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<std::uint32_t>(r);
}

// Remainder of a modulo b over F_p; b nonzero.
Poly poly_rem(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::uint32_t lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t f = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) {
      a[shift + k] = static_cast<std::uint32_t>((a[shift + k] + p - f * b[k] % p) % p);
    }
    trim(a);
  }
  return a;
}

Poly decode(std::uint32_t code, std::uint32_t p, std::uint32_t m) {
  Poly out(m, 0);
  for (std::uint32_t k = 0; k < m; ++k) {
    out[k] = code % p;
    code /= p;
  }
  return out;
}

std::uint32_t encode(const Poly& a, std::uint32_t p) {
  std::uint32_t code = 0;
  for (std::size_t k = a.size(); k-- > 0;) code = code * p + a[k];
  return code;
}

}  // namespace

bool GFField::is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly) {
  Poly f = poly;
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t m = f.size() - 1;
  if (m == 1) return true;
  // Trial division by every monic polynomial of degree 1..m/2.
  for (std::size_t d = 1; d <= m / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t k = 0; k < d; ++k) count *= p;
    for (std::uint64_t c = 0; c < count; ++c) {
      Poly g = decode(static_cast<std::uint32_t>(c), p, static_cast<std::uint32_t>(d));
      g.push_back(1);
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::uint32_t GFField::poly_mul_mod(std::uint32_t a, std::uint32_t b) const {
  const Poly x = decode(a, p_, m_), y = decode(b, p_, m_);
  Poly prod(2 * m_, 0);
  for (std::uint32_t i = 0; i < m_; ++i) {
    if (!x[i]) continue;
    for (std::uint32_t j = 0; j < m_; ++j) {
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(x[i]) * y[j]) % p_);
    }
  }
  return encode(poly_rem(prod, modulus_, p_), p_);
}

GFField::GFField(std::uint32_t p, std::uint32_t m, std::optional<std::vector<std::uint32_t>> modulus)
    : p_(p), m_(m), q_(1) {
  if (p < 2) throw std::invalid_argument("characteristic must be a prime");
  for (std::uint32_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) throw std::invalid_argument("characteristic must be a prime");
  }
  if (m < 1) throw std::invalid_argument("extension degree must be positive");
  for (std::uint32_t k = 0; k < m; ++k) {
    if (q_ > (1u << 20) / p) throw std::invalid_argument("field too large");
    q_ *= p;
  }

  auto build_tables = [&](std::uint32_t g) {
    exp_.assign(q_ - 1, 0);
    std::uint32_t cur = 1;
    for (std::uint32_t e = 0; e < q_ - 1; ++e) {
      if (e > 0 && cur == 1) return false;
      exp_[e] = cur;
      cur = poly_mul_mod(cur, g);
    }
    return cur == 1;
  };
  const std::uint32_t t_code = m == 1 ? 0 : p;  // the class of t

  if (modulus) {
    modulus_ = *modulus;
    trim(modulus_);
    if (modulus_.size() != m + 1 || modulus_.back() != 1) {
      throw std::invalid_argument("modulus must be monic of degree m");
    }
    for (auto c : modulus_) {
      if (c >= p) throw std::invalid_argument("modulus coefficients must lie in [0, p)");
    }
    if (!is_irreducible(p, modulus_)) throw std::invalid_argument("modulus is reducible");
  } else {
    const std::uint32_t count = q_;
    bool found = false;
    for (std::uint32_t c = 0; c < count && !found; ++c) {
      Poly cand = decode(c, p, m);
      cand.push_back(1);
      if (!is_irreducible(p, cand)) continue;
      modulus_ = cand;
      if (m == 1 || build_tables(t_code)) found = true;
    }
    if (!found) throw std::logic_error("no primitive modulus found");
  }

  bool ok = false;
  if (m > 1 && build_tables(t_code)) ok = true;
  for (std::uint32_t g = 2; !ok && g < q_; ++g) ok = build_tables(g);
  if (!ok && q_ == 2) ok = build_tables(1);
  if (!ok) throw std::logic_error("no primitive element found");
  log_.assign(q_, 0);
  for (std::uint32_t e = 0; e < q_ - 1; ++e) log_[exp_[e]] = e;
}

std::uint32_t GFField::add(std::uint32_t a, std::uint32_t b) const {
  std::uint32_t out = 0, scale = 1;
  for (std::uint32_t k = 0; k < m_; ++k) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

std::uint32_t GFField::neg(std::uint32_t a) const {
  std::uint32_t out = 0, scale = 1;
  for (std::uint32_t k = 0; k < m_; ++k) {
    out += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return out;
}

std::uint32_t GFField::mul(std::uint32_t a, std::uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[(static_cast<std::uint64_t>(log_[a]) + log_[b]) % (q_ - 1)];
}

std::uint32_t GFField::inv(std::uint32_t a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

std::uint32_t GFField::frobenius(std::uint32_t a, std::uint32_t k) const {
  if (a == 0) return 0;
  std::uint64_t e = log_[a];
  for (std::uint32_t r = 0; r < k % m_; ++r) e = e * p_ % (q_ - 1);
  return exp_[e];
}

std::uint32_t GFField::from_integer(long v) const {
  long r = v % static_cast<long>(p_);
  if (r < 0) r += p_;
  return static_cast<std::uint32_t>(r);
}

const GFField& GFElement::adopt(const GFElement& o) {
  if (!f_) f_ = o.f_;
  if (!f_) throw std::logic_error("field element without field");
  if (o.f_ && o.f_ != f_ && (o.f_->order() != f_->order() || o.f_->modulus() != f_->modulus())) {
    throw std::invalid_argument("elements of different fields");
  }
  return *f_;
}

GFElement& GFElement::operator+=(const GFElement& o) {
  if (o.c_ == 0) return *this;
  c_ = adopt(o).add(c_, o.c_);
  return *this;
}

GFElement& GFElement::operator-=(const GFElement& o) {
  if (o.c_ == 0) return *this;
  const GFField& f = adopt(o);
  c_ = f.add(c_, f.neg(o.c_));
  return *this;
}

GFElement& GFElement::operator*=(const GFElement& o) {
  if (c_ == 0) return *this;
  if (o.c_ == 0) {
    c_ = 0;
    return *this;
  }
  c_ = adopt(o).mul(c_, o.c_);
  return *this;
}

GFElement operator-(const GFElement& a) {
  if (a.c_ == 0) return a;
  return {a.f_, a.f_->neg(a.c_)};
}

GFElement GFElement::inverse() const {
  if (c_ == 0) throw std::domain_error("inverse of zero");
  return {f_, f_->inv(c_)};
}

GFElement GFElement::frobenius(std::uint32_t k) const {
  if (c_ == 0) return *this;
  return {f_, f_->frobenius(c_, k)};
}

GFElement GFElement::parse(const std::shared_ptr<const GFField>& f, std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw ParseError("empty field literal");
  bool neg = false;
  if (s.front() == '-') {
    neg = true;
    s.erase(0, 1);
  }
  GFElement out;
  auto all_digits = [](std::string_view v) {
    if (v.empty()) return false;
    for (char c : v) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
  };
  if (s == "g") {
    out = GFElement(f, f->generator());
  } else if (s.rfind("g^", 0) == 0 && all_digits(std::string_view(s).substr(2))) {
    out = GFElement(f, f->power_of_generator(std::stoull(s.substr(2))));
  } else if (all_digits(s)) {
    out = GFElement(f, f->from_integer(std::stol(s) % static_cast<long>(f->characteristic())));
  } else {
    throw ParseError("bad field literal '" + std::string(text) + "'");
  }
  return neg ? -out : out;
}

std::string to_string(const GFElement& a) {
  if (a.is_zero()) return "0";
  const std::uint32_t e = a.field()->log(a.code());
  if (e == 0) return "1";
  if (e == 1) return "g";
  return "g^" + std::to_string(e);
}

}  // namespace skew
