#include "rankcodes/gf.hpp"

#include <algorithm>

namespace rankcodes {

namespace {

using Poly = std::vector<std::uint32_t>;  // low-to-high, not necessarily trimmed

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod b over F_p, b monic
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    if (lead != 0) {
      for (std::size_t i = 0; i <= db; ++i) {
        std::uint64_t v = a[shift + i] + static_cast<std::uint64_t>(p) * p -
                          static_cast<std::uint64_t>(lead) * b[i] % p;
        a[shift + i] = static_cast<std::uint32_t>(v % p);
      }
    }
    a.pop_back();
    trim(a);
    if (a.size() <= db) break;
  }
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = static_cast<std::uint32_t>(
          (c[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
  return c;
}

std::uint64_t modpow_u64(std::uint64_t b, std::uint64_t e, std::uint64_t mod) {
  std::uint64_t r = 1 % mod;
  b %= mod;
  while (e) {
    if (e & 1) r = r * b % mod;
    b = b * b % mod;
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t q) {
  if (poly.size() < 2 || poly.back() != 1)
    throw std::invalid_argument("is_irreducible: polynomial must be monic of degree >= 1");
  const std::size_t m = poly.size() - 1;
  if (m == 1) return true;
  if (poly[0] == 0) return false;  // divisible by x
  // trial division by every monic polynomial of degree 1..m/2
  for (std::size_t d = 1; 2 * d <= m; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= q;
    for (std::uint64_t c = 0; c < count; ++c) {
      Poly div(d + 1);
      std::uint64_t v = c;
      for (std::size_t i = 0; i < d; ++i) {
        div[i] = static_cast<std::uint32_t>(v % q);
        v /= q;
      }
      div[d] = 1;
      if (poly_mod(poly, div, q).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> find_irreducible(std::uint32_t q, std::uint32_t m) {
  if (!is_prime(q)) throw std::invalid_argument("find_irreducible: q must be prime");
  if (m < 1) throw std::invalid_argument("find_irreducible: m must be positive");
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < m; ++i) count *= q;
  for (std::uint64_t c = 0; c < count; ++c) {
    std::vector<std::uint32_t> f(m + 1);
    std::uint64_t v = c;
    for (std::uint32_t i = 0; i < m; ++i) {
      f[i] = static_cast<std::uint32_t>(v % q);
      v /= q;
    }
    f[m] = 1;
    if (is_irreducible(f, q)) return f;
  }
  throw std::logic_error("find_irreducible: no irreducible found");  // unreachable
}

Field::Field(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus)
    : p_(p), m_(m), modulus_(std::move(modulus)) {
  if (!is_prime(p_)) throw std::invalid_argument("Field: q must be prime");
  if (m_ < 1) throw std::invalid_argument("Field: degree must be positive");
  std::uint64_t sz = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    sz *= p_;
    if (sz > (1u << 16)) throw std::invalid_argument("Field: q^m must be <= 2^16");
  }
  size_ = static_cast<std::uint32_t>(sz);
  if (m_ > 1) {
    if (modulus_.size() != m_ + 1 || modulus_.back() != 1)
      throw std::invalid_argument("Field: modulus must be monic of degree m");
    for (auto c : modulus_)
      if (c >= p_) throw std::invalid_argument("Field: modulus coefficient out of range");
    if (!is_irreducible(modulus_, p_))
      throw std::invalid_argument("Field: modulus is reducible");
    // exp/log tables from a primitive element
    exp_.assign(size_ - 1, 0);
    log_.assign(size_, 0);
    for (gfelem g = 2; g < size_; ++g) {
      gfelem e = 1;
      std::uint32_t ord = 0;
      bool primitive = true;
      for (std::uint32_t i = 0; i + 1 < size_; ++i) {
        exp_[i] = e;
        e = mul_poly(e, g);
        ++ord;
        if (e == 1 && ord + 1 < size_) {
          primitive = false;
          break;
        }
      }
      if (primitive && e == 1) {
        for (std::uint32_t i = 0; i + 1 < size_; ++i) log_[exp_[i]] = i;
        return;
      }
    }
    throw std::logic_error("Field: no primitive element found");  // unreachable
  }
}

FieldPtr Field::prime(std::uint32_t p) {
  return FieldPtr(new Field(p, 1, {}));
}

FieldPtr Field::extension(std::uint32_t p, std::uint32_t m) {
  if (m == 1) return prime(p);
  return extension(p, m, find_irreducible(p, m));
}

FieldPtr Field::extension(std::uint32_t p, std::uint32_t m,
                          std::vector<std::uint32_t> modulus) {
  return FieldPtr(new Field(p, m, std::move(modulus)));
}

gfelem Field::mul_poly(gfelem a, gfelem b) const {
  Poly pa(m_), pb(m_);
  gfelem va = a, vb = b;
  for (std::uint32_t i = 0; i < m_; ++i) {
    pa[i] = va % p_;
    va /= p_;
    pb[i] = vb % p_;
    vb /= p_;
  }
  Poly c = poly_mod(poly_mul(pa, pb, p_), modulus_, p_);
  gfelem r = 0;
  for (std::size_t i = c.size(); i-- > 0;) r = r * p_ + c[i];
  return r;
}

gfelem Field::add(gfelem a, gfelem b) const {
  if (m_ == 1) return (a + b) % p_;
  if (p_ == 2) return a ^ b;
  gfelem r = 0, mult = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    r += (a % p_ + b % p_) % p_ * mult;
    a /= p_;
    b /= p_;
    mult *= p_;
  }
  return r;
}

gfelem Field::neg(gfelem a) const {
  if (m_ == 1) return (p_ - a) % p_;
  if (p_ == 2) return a;
  gfelem r = 0, mult = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    r += (p_ - a % p_) % p_ * mult;
    a /= p_;
    mult *= p_;
  }
  return r;
}

gfelem Field::sub(gfelem a, gfelem b) const { return add(a, neg(b)); }

gfelem Field::mul(gfelem a, gfelem b) const {
  if (m_ == 1) return static_cast<gfelem>(static_cast<std::uint64_t>(a) * b % p_);
  if (a == 0 || b == 0) return 0;
  return exp_[(log_[a] + log_[b]) % (size_ - 1)];
}

gfelem Field::inv(gfelem a) const {
  if (a == 0) throw std::domain_error("Field::inv: zero has no inverse");
  if (m_ == 1) return pow(a, p_ - 2);
  return exp_[(size_ - 1 - log_[a]) % (size_ - 1)];
}

gfelem Field::pow(gfelem a, std::uint64_t e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  if (m_ == 1)
    return static_cast<gfelem>(modpow_u64(a, e % (p_ - 1), p_));
  return exp_[static_cast<std::uint32_t>(
      static_cast<std::uint64_t>(log_[a]) * (e % (size_ - 1)) % (size_ - 1))];
}

gfelem Field::frobenius(gfelem x, std::uint32_t i) const {
  if (m_ == 1 || x == 0) return x;  // x^q = x in the prime field
  std::uint64_t e = modpow_u64(p_, i, size_ - 1);
  return pow(x, e);
}

std::vector<gfelem> Field::to_coords(gfelem x) const {
  std::vector<gfelem> c(m_);
  for (std::uint32_t i = 0; i < m_; ++i) {
    c[i] = x % p_;
    x /= p_;
  }
  return c;
}

gfelem Field::from_coords(const std::vector<gfelem>& c) const {
  if (c.size() != m_) throw std::invalid_argument("from_coords: wrong length");
  gfelem r = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] >= p_) throw std::invalid_argument("from_coords: coordinate out of range");
    r = r * p_ + c[i];
  }
  return r;
}

}  // namespace rankcodes
