#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rankcodes/linalg.hpp"

namespace rankcodes {

/// F_q-linear subspace of (F_q)_{n,m}, n <= m. Basis stored as the RREF of
/// the flattened nm-coordinate row vectors, so equal codes compare equal.
class MatrixCode {
 public:
  /// Span of explicit n x m generator matrices.
  static MatrixCode from_generators(FieldPtr f, std::size_t n, std::size_t m,
                                    const std::vector<Mat>& gens);
  /// Rows are flattened codewords (length n*m).
  static MatrixCode from_flat(FieldPtr f, std::size_t n, std::size_t m, const Mat& rows);

  const FieldPtr& field() const { return basis_.field(); }
  std::uint32_t q() const { return field()->q(); }
  std::size_t n() const { return n_; }
  std::size_t m() const { return m_; }
  std::size_t dim() const { return basis_.rows(); }
  const Mat& basis() const { return basis_; }
  bool trivial() const { return dim() == 0 || dim() == n_ * m_; }

  /// Codeword for a coefficient vector of length dim(), as an n x m matrix.
  Mat word(const std::vector<gfelem>& coeffs) const;
  Mat word_flat(const std::vector<gfelem>& coeffs) const;
  /// The i-th basis element as an n x m matrix.
  Mat basis_matrix(std::size_t i) const;

  bool contains(const Mat& w) const;
  bool operator==(const MatrixCode& o) const {
    return n_ == o.n_ && m_ == o.m_ && basis_ == o.basis_;
  }

 private:
  MatrixCode(std::size_t n, std::size_t m, Mat basis)
      : n_(n), m_(m), basis_(std::move(basis)) {}
  std::size_t n_, m_;
  Mat basis_;  // dim x (n*m), RREF
};

/// F_{q^m}-linear [n,k] code, n <= m, generator stored in RREF over F_{q^m}.
class VectorCode {
 public:
  static VectorCode from_generator(FieldPtr ext, const Mat& generator);

  const FieldPtr& field() const { return gen_.field(); }
  std::uint32_t q() const { return field()->q(); }
  std::size_t n() const { return gen_.cols(); }
  std::size_t m() const { return field()->degree(); }
  std::size_t dim() const { return gen_.rows(); }  // k
  const Mat& generator() const { return gen_; }
  bool trivial() const { return dim() == 0 || dim() == n(); }

  std::vector<gfelem> word(const std::vector<gfelem>& coeffs) const;

 private:
  explicit VectorCode(Mat gen) : gen_(std::move(gen)) {}
  Mat gen_;
};

/// Rank of v in F_{q^m}^n: dimension of the F_q-span of the coordinates.
std::size_t vector_rank(const Field& ext, const std::vector<gfelem>& v);

/// n x m coordinate matrix of v w.r.t. the polynomial basis (or the given one).
Mat coordinate_matrix(const Field& ext, const std::vector<gfelem>& v,
                      const std::optional<std::vector<gfelem>>& basis = std::nullopt);

/// Dual under the trace form <A,B> = Tr(B A^T) = sum A_ij B_ij.
MatrixCode dual(const MatrixCode& c);
/// Dual under the standard inner product over F_{q^m}.
VectorCode dual(const VectorCode& c);

/// lambda_B expansion: the associated mk-dimensional matrix code. The basis
/// defaults to the polynomial basis; any F_q-basis of F_{q^m} is accepted.
MatrixCode expand(const VectorCode& c,
                  const std::optional<std::vector<gfelem>>& basis = std::nullopt);

/// Gabidulin code generated by the Frobenius-power matrix of v; requires the
/// coordinates of v to be linearly independent over F_q.
VectorCode gabidulin(FieldPtr ext, std::size_t n, std::size_t k,
                     const std::vector<gfelem>& v);

/// Parity extension: append the negated coordinate sum. Needs n+1 <= m.
VectorCode extend(const VectorCode& c);

/// A t'-dimensional subcode whose basis contains a fixed minimum-rank word.
MatrixCode subcode_with_min_vector(const MatrixCode& c, std::size_t t_prime);

MatrixCode random_matrix_code(FieldPtr f, std::size_t n, std::size_t m,
                              std::size_t t, std::uint64_t seed);
VectorCode random_vector_code(FieldPtr ext, std::size_t n, std::size_t k,
                              std::uint64_t seed);

/// Builds a code from n x m generator matrices, transposing them first when
/// n > m so the result satisfies the standing n <= m assumption.
MatrixCode matrix_code_folded(FieldPtr f, std::size_t n, std::size_t m,
                              const std::vector<Mat>& gens);

}  // namespace rankcodes
