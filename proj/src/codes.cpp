#include "rankcodes/codes.hpp"

#include <algorithm>
#include <random>

namespace rankcodes {

namespace {

// inverse of a square matrix via [M | I] reduction
Mat inverse(const Mat& m) {
  const std::size_t n = m.rows();
  Mat aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  std::size_t r = 0;
  Mat e = aug.rref(&r);
  if (r < n) throw std::invalid_argument("inverse: singular matrix");
  Mat out(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.at(i, j) = e.at(i, n + j);
  return out;
}

}  // namespace

MatrixCode MatrixCode::from_flat(FieldPtr f, std::size_t n, std::size_t m,
                                 const Mat& rows) {
  if (n > m) throw std::invalid_argument("MatrixCode: requires n <= m");
  if (f->degree() != 1) throw std::invalid_argument("MatrixCode: field must be prime");
  if (rows.cols() != n * m) throw std::invalid_argument("MatrixCode: row length != n*m");
  std::size_t r = 0;
  Mat e = rows.rref(&r);
  if (r != rows.rows())
    throw std::invalid_argument("MatrixCode: generators are linearly dependent");
  Mat basis(f, r, n * m);
  std::copy(e.data().begin(), e.data().begin() + r * n * m, basis.data().begin());
  return MatrixCode(n, m, std::move(basis));
}

MatrixCode MatrixCode::from_generators(FieldPtr f, std::size_t n, std::size_t m,
                                       const std::vector<Mat>& gens) {
  Mat rows(f, gens.size(), n * m);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].rows() != n || gens[i].cols() != m)
      throw std::invalid_argument("MatrixCode: generator shape mismatch");
    std::copy(gens[i].data().begin(), gens[i].data().end(),
              rows.data().begin() + i * n * m);
  }
  return from_flat(std::move(f), n, m, rows);
}

Mat MatrixCode::word_flat(const std::vector<gfelem>& coeffs) const {
  if (coeffs.size() != dim()) throw std::invalid_argument("word: wrong coefficient count");
  const Field& f = *field();
  Mat w(field(), 1, n_ * m_);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < n_ * m_; ++j)
      w.at(0, j) = f.add(w.at(0, j), f.mul(coeffs[i], basis_.at(i, j)));
  }
  return w;
}

Mat MatrixCode::word(const std::vector<gfelem>& coeffs) const {
  Mat flat = word_flat(coeffs);
  Mat w(field(), n_, m_);
  w.data() = flat.data();
  return w;
}

Mat MatrixCode::basis_matrix(std::size_t i) const {
  Mat w(field(), n_, m_);
  std::copy(basis_.data().begin() + i * n_ * m_,
            basis_.data().begin() + (i + 1) * n_ * m_, w.data().begin());
  return w;
}

bool MatrixCode::contains(const Mat& w) const {
  Mat flat(field(), 1, n_ * m_);
  flat.data() = w.data();
  return basis_.stacked(flat).rank() == dim();
}

VectorCode VectorCode::from_generator(FieldPtr ext, const Mat& generator) {
  if (generator.cols() > ext->degree())
    throw std::invalid_argument("VectorCode: requires n <= m");
  std::size_t r = 0;
  Mat e = generator.rref(&r);
  if (r != generator.rows())
    throw std::invalid_argument("VectorCode: generator not full rank");
  Mat g(ext, r, generator.cols());
  std::copy(e.data().begin(), e.data().begin() + r * generator.cols(),
            g.data().begin());
  (void)ext;
  return VectorCode(std::move(g));
}

std::vector<gfelem> VectorCode::word(const std::vector<gfelem>& coeffs) const {
  if (coeffs.size() != dim()) throw std::invalid_argument("word: wrong coefficient count");
  const Field& f = *field();
  std::vector<gfelem> w(n(), 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < n(); ++j)
      w[j] = f.add(w[j], f.mul(coeffs[i], gen_.at(i, j)));
  }
  return w;
}

Mat coordinate_matrix(const Field& ext, const std::vector<gfelem>& v,
                      const std::optional<std::vector<gfelem>>& basis) {
  const std::size_t m = ext.degree();
  FieldPtr base = Field::prime(ext.q());
  Mat lam(base, v.size(), m);
  if (!basis) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      auto c = ext.to_coords(v[i]);
      for (std::size_t j = 0; j < m; ++j) lam.at(i, j) = c[j];
    }
    return lam;
  }
  if (basis->size() != m) throw std::invalid_argument("coordinate_matrix: basis size != m");
  // columns of B are the polynomial-basis coordinates of the basis elements
  Mat bmat(base, m, m);
  for (std::size_t j = 0; j < m; ++j) {
    auto c = ext.to_coords((*basis)[j]);
    for (std::size_t i = 0; i < m; ++i) bmat.at(i, j) = c[i];
  }
  Mat binv = inverse(bmat);
  for (std::size_t i = 0; i < v.size(); ++i) {
    auto c = ext.to_coords(v[i]);
    for (std::size_t j = 0; j < m; ++j) {
      gfelem s = 0;
      for (std::size_t l = 0; l < m; ++l)
        s = base->add(s, base->mul(binv.at(j, l), c[l]));
      lam.at(i, j) = s;
    }
  }
  return lam;
}

std::size_t vector_rank(const Field& ext, const std::vector<gfelem>& v) {
  return coordinate_matrix(ext, v).rank();
}

MatrixCode dual(const MatrixCode& c) {
  Mat k = c.basis().kernel();
  return MatrixCode::from_flat(c.field(), c.n(), c.m(), k);
}

VectorCode dual(const VectorCode& c) {
  Mat k = c.generator().kernel();
  return VectorCode::from_generator(c.field(), k);
}

MatrixCode expand(const VectorCode& c,
                  const std::optional<std::vector<gfelem>>& basis) {
  const Field& ext = *c.field();
  const std::size_t n = c.n(), m = c.m(), k = c.dim();
  FieldPtr base = Field::prime(ext.q());
  Mat rows(base, m * k, n * m);
  std::size_t out = 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const gfelem gamma = basis ? (*basis)[j] : ext.pow(ext.gen(), j);
      std::vector<gfelem> w(n);
      for (std::size_t l = 0; l < n; ++l) w[l] = ext.mul(gamma, c.generator().at(i, l));
      Mat lam = coordinate_matrix(ext, w, basis);
      std::copy(lam.data().begin(), lam.data().end(),
                rows.data().begin() + out * n * m);
      ++out;
    }
  }
  return MatrixCode::from_flat(base, n, m, rows);
}

VectorCode gabidulin(FieldPtr ext, std::size_t n, std::size_t k,
                     const std::vector<gfelem>& v) {
  if (k < 1 || k > n) throw std::invalid_argument("gabidulin: requires 1 <= k <= n");
  if (n > ext->degree()) throw std::invalid_argument("gabidulin: requires n <= m");
  if (v.size() != n) throw std::invalid_argument("gabidulin: v length != n");
  if (vector_rank(*ext, v) != n)
    throw std::invalid_argument("gabidulin: coordinates of v must be F_q-independent");
  Mat g(ext, k, n);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j)
      g.at(i, j) = ext->frobenius(v[j], static_cast<std::uint32_t>(i));
  return VectorCode::from_generator(std::move(ext), g);
}

VectorCode extend(const VectorCode& c) {
  const Field& f = *c.field();
  if (c.n() + 1 > c.m())
    throw std::invalid_argument("extend: requires n+1 <= m");
  Mat g(c.field(), c.dim(), c.n() + 1);
  for (std::size_t i = 0; i < c.dim(); ++i) {
    gfelem s = 0;
    for (std::size_t j = 0; j < c.n(); ++j) {
      g.at(i, j) = c.generator().at(i, j);
      s = f.add(s, c.generator().at(i, j));
    }
    g.at(i, c.n()) = f.neg(s);
  }
  return VectorCode::from_generator(c.field(), g);
}

MatrixCode subcode_with_min_vector(const MatrixCode& c, std::size_t t_prime) {
  const std::size_t t = c.dim();
  if (t_prime < 1 || t_prime > t)
    throw std::invalid_argument("subcode_with_min_vector: t' out of range");
  if (t_prime == t) return c;
  // minimum-rank word by full enumeration
  const std::uint32_t q = c.q();
  std::vector<gfelem> coeffs(t, 0);
  std::vector<gfelem> best;
  std::size_t best_rank = c.n() + 1;
  while (true) {
    std::size_t i = 0;
    while (i < t) {
      if (++coeffs[i] < q) break;
      coeffs[i] = 0;
      ++i;
    }
    if (i == t) break;
    const std::size_t r = c.word(coeffs).rank();
    if (r < best_rank) {
      best_rank = r;
      best = coeffs;
    }
  }
  Mat rows(c.field(), t_prime, c.n() * c.m());
  Mat w = c.word_flat(best);
  std::copy(w.data().begin(), w.data().end(), rows.data().begin());
  std::size_t have = 1;
  Mat acc = w;
  for (std::size_t i = 0; i < t && have < t_prime; ++i) {
    // append basis row i if it grows the span
    Mat rowi(c.field(), 1, c.n() * c.m());
    rowi.data() = c.basis().row(i);
    if (acc.stacked(rowi).rank() > have) {
      std::copy(rowi.data().begin(), rowi.data().end(),
                rows.data().begin() + have * c.n() * c.m());
      acc = acc.stacked(rowi);
      ++have;
    }
  }
  return MatrixCode::from_flat(c.field(), c.n(), c.m(), rows);
}

MatrixCode random_matrix_code(FieldPtr f, std::size_t n, std::size_t m,
                              std::size_t t, std::uint64_t seed) {
  if (t < 1 || t > n * m)
    throw std::invalid_argument("random_matrix_code: t out of range");
  std::mt19937_64 rng(seed);
  const std::uint32_t q = f->q();
  Mat acc(f, 0, n * m);
  while (acc.rows() < t) {
    Mat row(f, 1, n * m);
    for (std::size_t j = 0; j < n * m; ++j)
      row.at(0, j) = static_cast<gfelem>(rng() % q);
    Mat cand = acc.stacked(row);
    if (cand.rank() == cand.rows()) acc = cand;
  }
  return MatrixCode::from_flat(std::move(f), n, m, acc);
}

VectorCode random_vector_code(FieldPtr ext, std::size_t n, std::size_t k,
                              std::uint64_t seed) {
  if (k < 1 || k > n) throw std::invalid_argument("random_vector_code: k out of range");
  std::mt19937_64 rng(seed);
  const std::uint32_t sz = ext->size();
  Mat acc(ext, 0, n);
  while (acc.rows() < k) {
    Mat row(ext, 1, n);
    for (std::size_t j = 0; j < n; ++j) row.at(0, j) = static_cast<gfelem>(rng() % sz);
    Mat cand = acc.stacked(row);
    if (cand.rank() == cand.rows()) acc = cand;
  }
  return VectorCode::from_generator(std::move(ext), acc);
}

MatrixCode matrix_code_folded(FieldPtr f, std::size_t n, std::size_t m,
                              const std::vector<Mat>& gens) {
  if (n <= m) return MatrixCode::from_generators(std::move(f), n, m, gens);
  std::vector<Mat> t;
  t.reserve(gens.size());
  for (const Mat& g : gens) t.push_back(g.transpose());
  return MatrixCode::from_generators(std::move(f), m, n, t);
}

}  // namespace rankcodes
