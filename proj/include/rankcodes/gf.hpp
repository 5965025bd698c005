#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

namespace rankcodes {

/// Canonical element encoding: integer in [0, q^m) whose base-q digits are
/// the polynomial-basis coordinates (low degree first).
using gfelem = std::uint32_t;

bool is_prime(std::uint32_t p);

/// Irreducibility over F_q by trial division (coefficients low-to-high, monic).
bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t q);

/// Lexicographically smallest monic irreducible of degree m over F_q,
/// scanning the low coefficients as a base-q counter.
std::vector<std::uint32_t> find_irreducible(std::uint32_t q, std::uint32_t m);

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// F_{p^m} with p prime. Prime fields are the m = 1 case; extensions carry a
/// monic irreducible modulus and use the polynomial basis {1, g, ..., g^{m-1}}
/// by default. Immutable after construction.
class Field {
 public:
  static FieldPtr prime(std::uint32_t p);
  static FieldPtr extension(std::uint32_t p, std::uint32_t m);
  static FieldPtr extension(std::uint32_t p, std::uint32_t m,
                            std::vector<std::uint32_t> modulus);

  std::uint32_t q() const { return p_; }  // base field size
  std::uint32_t degree() const { return m_; }
  std::uint32_t size() const { return size_; }
  std::uint32_t characteristic() const { return p_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  /// The polynomial-basis generator g (encoding q) for m > 1, 1 otherwise.
  gfelem gen() const { return m_ > 1 ? p_ : 1; }

  gfelem add(gfelem a, gfelem b) const;
  gfelem sub(gfelem a, gfelem b) const;
  gfelem neg(gfelem a) const;
  gfelem mul(gfelem a, gfelem b) const;
  gfelem inv(gfelem a) const;
  gfelem pow(gfelem a, std::uint64_t e) const;

  /// x^{q^i}, the i-fold Frobenius.
  gfelem frobenius(gfelem x, std::uint32_t i) const;

  /// Coordinates w.r.t. the polynomial basis (length m, low degree first).
  std::vector<gfelem> to_coords(gfelem x) const;
  gfelem from_coords(const std::vector<gfelem>& c) const;

  bool same_as(const Field& o) const {
    return p_ == o.p_ && m_ == o.m_ && modulus_ == o.modulus_;
  }

 private:
  Field(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus);
  gfelem mul_poly(gfelem a, gfelem b) const;

  std::uint32_t p_;
  std::uint32_t m_;
  std::uint32_t size_;
  std::vector<std::uint32_t> modulus_;
  std::vector<gfelem> exp_;  // exp_[i] = g^i, i in [0, size-1); m > 1 only
  std::vector<std::uint32_t> log_;
};

}  // namespace rankcodes
