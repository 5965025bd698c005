#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "rankcodes/gf.hpp"

namespace rankcodes {

using bigint = boost::multiprecision::cpp_int;
using bigrat = boost::multiprecision::cpp_rational;

/// Thrown when an enumeration would exceed the configured budget.
class budget_error : public std::runtime_error {
 public:
  budget_error(bigint required, bigint budget)
      : std::runtime_error("enumeration budget exceeded: " + required.str() +
                           " items, budget " + budget.str()),
        required_(std::move(required)),
        budget_(std::move(budget)) {}
  const bigint& required() const { return required_; }
  const bigint& budget() const { return budget_; }

 private:
  bigint required_;
  bigint budget_;
};

/// Thrown by theorem checks whose hypotheses the given code does not satisfy.
class hypothesis_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense matrix over an exact finite field. Immutable use after construction
/// is the norm; mutating helpers return new values.
class Mat {
 public:
  Mat(FieldPtr f, std::size_t rows, std::size_t cols)
      : f_(std::move(f)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  static Mat identity(FieldPtr f, std::size_t n);

  const FieldPtr& field() const { return f_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  gfelem& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  gfelem at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  const std::vector<gfelem>& data() const { return a_; }
  std::vector<gfelem>& data() { return a_; }

  Mat transpose() const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const Mat& o) const;
  Mat scaled(gfelem c) const;
  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  bool is_zero() const;
  std::size_t rank() const;
  /// Reduced row echelon form; optionally reports the rank.
  Mat rref(std::size_t* rank_out = nullptr) const;
  /// Basis of the right kernel {x : M x = 0}, as RREF rows of length cols().
  Mat kernel() const;
  /// Rows of this stacked over rows of o (same width).
  Mat stacked(const Mat& o) const;
  std::vector<gfelem> row(std::size_t i) const;

 private:
  FieldPtr f_;
  std::size_t rows_, cols_;
  std::vector<gfelem> a_;
};

/// Exact q-binomial coefficient; 0 outside 0 <= k <= n.
bigint gaussian_binomial(long n, long k, std::uint32_t q);

bigint int_pow(std::uint32_t base, std::uint64_t e);

/// Subspace of F^n in canonical form: basis rows in RREF, no zero rows.
class Subspace {
 public:
  Subspace(FieldPtr f, std::size_t ambient)
      : basis_(std::move(f), 0, ambient) {}
  /// Canonicalizes the row span of the given matrix.
  static Subspace span(const Mat& rows);

  std::size_t ambient() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  const Mat& basis() const { return basis_; }
  const FieldPtr& field() const { return basis_.field(); }

  bool contains(const std::vector<gfelem>& v) const;
  bool operator==(const Subspace& o) const { return basis_ == o.basis_; }

 private:
  explicit Subspace(Mat basis) : basis_(std::move(basis)) {}
  Mat basis_;
};

Subspace intersect(const Subspace& u, const Subspace& w);
Subspace subspace_sum(const Subspace& u, const Subspace& w);

/// Calls fn for each r-dimensional subspace of F_q^n exactly once, in
/// canonical order (pivot-column sets lexicographic, free entries as a
/// base-q counter). Throws budget_error if the count exceeds the budget.
void for_each_subspace(const FieldPtr& f, std::size_t n, std::size_t r,
                       const bigint& budget,
                       const std::function<void(const Subspace&)>& fn);

}  // namespace rankcodes
