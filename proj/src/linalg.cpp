#include "rankcodes/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace rankcodes {

Mat Mat::identity(FieldPtr f, std::size_t n) {
  Mat m(std::move(f), n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::transpose() const {
  Mat t(f_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Mat Mat::operator+(const Mat& o) const {
  Mat r(f_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_->add(a_[i], o.a_[i]);
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  Mat r(f_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_->sub(a_[i], o.a_[i]);
  return r;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("Mat::*: shape mismatch");
  Mat r(f_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const gfelem v = at(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        r.at(i, j) = f_->add(r.at(i, j), f_->mul(v, o.at(k, j)));
    }
  return r;
}

Mat Mat::scaled(gfelem c) const {
  Mat r(f_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_->mul(a_[i], c);
  return r;
}

bool Mat::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](gfelem x) { return x == 0; });
}

Mat Mat::rref(std::size_t* rank_out) const {
  Mat m = *this;
  const Field& f = *f_;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t piv = r;
    while (piv < rows_ && m.at(piv, c) == 0) ++piv;
    if (piv == rows_) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(piv, j), m.at(r, j));
    const gfelem s = f.inv(m.at(r, c));
    for (std::size_t j = c; j < cols_; ++j) m.at(r, j) = f.mul(m.at(r, j), s);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      const gfelem v = m.at(i, c);
      for (std::size_t j = c; j < cols_; ++j)
        m.at(i, j) = f.sub(m.at(i, j), f.mul(v, m.at(r, j)));
    }
    ++r;
  }
  if (rank_out) *rank_out = r;
  return m;
}

std::size_t Mat::rank() const {
  // forward elimination only
  Mat m = *this;
  const Field& f = *f_;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t piv = r;
    while (piv < rows_ && m.at(piv, c) == 0) ++piv;
    if (piv == rows_) continue;
    if (piv != r)
      for (std::size_t j = c; j < cols_; ++j) std::swap(m.at(piv, j), m.at(r, j));
    const gfelem s = f.inv(m.at(r, c));
    for (std::size_t i = r + 1; i < rows_; ++i) {
      if (m.at(i, c) == 0) continue;
      const gfelem v = f.mul(m.at(i, c), s);
      for (std::size_t j = c; j < cols_; ++j)
        m.at(i, j) = f.sub(m.at(i, j), f.mul(v, m.at(r, j)));
    }
    ++r;
  }
  return r;
}

Mat Mat::kernel() const {
  std::size_t r = 0;
  Mat e = rref(&r);
  const Field& f = *f_;
  std::vector<std::size_t> pivots;
  std::vector<bool> is_pivot(cols_, false);
  {
    std::size_t c = 0;
    for (std::size_t i = 0; i < r; ++i) {
      while (c < cols_ && e.at(i, c) == 0) ++c;
      pivots.push_back(c);
      is_pivot[c] = true;
    }
  }
  Mat k(f_, cols_ - r, cols_);
  std::size_t out = 0;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (is_pivot[c]) continue;
    k.at(out, c) = 1;
    for (std::size_t i = 0; i < r; ++i)
      k.at(out, pivots[i]) = f.neg(e.at(i, c));
    ++out;
  }
  return k.rref();
}

Mat Mat::stacked(const Mat& o) const {
  if (cols_ != o.cols_) throw std::invalid_argument("Mat::stacked: width mismatch");
  Mat r(f_, rows_ + o.rows_, cols_);
  std::copy(a_.begin(), a_.end(), r.a_.begin());
  std::copy(o.a_.begin(), o.a_.end(), r.a_.begin() + a_.size());
  return r;
}

std::vector<gfelem> Mat::row(std::size_t i) const {
  return std::vector<gfelem>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
}

bigint int_pow(std::uint32_t base, std::uint64_t e) {
  bigint r = 1;
  for (std::uint64_t i = 0; i < e; ++i) r *= base;
  return r;
}

bigint gaussian_binomial(long n, long k, std::uint32_t q) {
  if (q < 2) throw std::invalid_argument("gaussian_binomial: q must be >= 2");
  if (k < 0 || k > n) return 0;
  bigint num = 1, den = 1;
  for (long i = 0; i < k; ++i) {
    num *= int_pow(q, n - i) - 1;
    den *= int_pow(q, i + 1) - 1;
  }
  return num / den;
}

Subspace Subspace::span(const Mat& rows) {
  std::size_t r = 0;
  Mat e = rows.rref(&r);
  Mat basis(rows.field(), r, rows.cols());
  std::copy(e.data().begin(), e.data().begin() + r * rows.cols(),
            basis.data().begin());
  return Subspace(std::move(basis));
}

bool Subspace::contains(const std::vector<gfelem>& v) const {
  if (v.size() != ambient()) throw std::invalid_argument("Subspace::contains: length mismatch");
  Mat test(field(), dim() + 1, ambient());
  std::copy(basis_.data().begin(), basis_.data().end(), test.data().begin());
  std::copy(v.begin(), v.end(), test.data().begin() + dim() * ambient());
  return test.rank() == dim();
}

Subspace subspace_sum(const Subspace& u, const Subspace& w) {
  if (u.ambient() != w.ambient() || !u.field()->same_as(*w.field()))
    throw std::invalid_argument("subspace_sum: ambient mismatch");
  return Subspace::span(u.basis().stacked(w.basis()));
}

Subspace intersect(const Subspace& u, const Subspace& w) {
  if (u.ambient() != w.ambient() || !u.field()->same_as(*w.field()))
    throw std::invalid_argument("intersect: ambient mismatch");
  // Zassenhaus: reduce [U|U ; W|0]; rows with zero left block carry the
  // intersection in the right block.
  const std::size_t n = u.ambient();
  const FieldPtr& f = u.field();
  Mat z(f, u.dim() + w.dim(), 2 * n);
  for (std::size_t i = 0; i < u.dim(); ++i)
    for (std::size_t j = 0; j < n; ++j) {
      z.at(i, j) = u.basis().at(i, j);
      z.at(i, n + j) = u.basis().at(i, j);
    }
  for (std::size_t i = 0; i < w.dim(); ++i)
    for (std::size_t j = 0; j < n; ++j) z.at(u.dim() + i, j) = w.basis().at(i, j);
  std::size_t r = 0;
  Mat e = z.rref(&r);
  std::vector<std::vector<gfelem>> inter_rows;
  for (std::size_t i = 0; i < r; ++i) {
    bool left_zero = true;
    for (std::size_t j = 0; j < n && left_zero; ++j)
      if (e.at(i, j) != 0) left_zero = false;
    if (left_zero) inter_rows.push_back(
        std::vector<gfelem>(e.data().begin() + i * 2 * n + n,
                            e.data().begin() + (i + 1) * 2 * n));
  }
  Mat b(f, inter_rows.size(), n);
  for (std::size_t i = 0; i < inter_rows.size(); ++i)
    std::copy(inter_rows[i].begin(), inter_rows[i].end(),
              b.data().begin() + i * n);
  return Subspace::span(b);
}

void for_each_subspace(const FieldPtr& f, std::size_t n, std::size_t r,
                       const bigint& budget,
                       const std::function<void(const Subspace&)>& fn) {
  if (r > n) throw std::invalid_argument("for_each_subspace: r > n");
  const bigint count = gaussian_binomial(static_cast<long>(n),
                                         static_cast<long>(r), f->q());
  if (count > budget) throw budget_error(count, budget);
  if (r == 0) {
    fn(Subspace(f, n));
    return;
  }
  const std::uint32_t q = f->q();
  // pivot column sets in lexicographic order
  std::vector<std::size_t> piv(r);
  std::iota(piv.begin(), piv.end(), 0);
  while (true) {
    // free positions: (i, j) with j > piv[i], j not a pivot column; row-major
    std::vector<bool> is_piv(n, false);
    for (auto c : piv) is_piv[c] = true;
    std::vector<std::pair<std::size_t, std::size_t>> free_pos;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = piv[i] + 1; j < n; ++j)
        if (!is_piv[j]) free_pos.emplace_back(i, j);
    std::vector<gfelem> vals(free_pos.size(), 0);
    while (true) {
      Mat b(f, r, n);
      for (std::size_t i = 0; i < r; ++i) b.at(i, piv[i]) = 1;
      for (std::size_t k = 0; k < free_pos.size(); ++k)
        b.at(free_pos[k].first, free_pos[k].second) = vals[k];
      fn(Subspace::span(b));
      // base-q counter over free entries
      std::size_t k = 0;
      while (k < vals.size()) {
        if (++vals[k] < q) break;
        vals[k] = 0;
        ++k;
      }
      if (k == vals.size()) break;
      if (vals.empty()) break;
    }
    // next combination
    std::size_t i = r;
    while (i-- > 0) {
      if (piv[i] + 1 < n - (r - 1 - i)) {
        ++piv[i];
        for (std::size_t j = i + 1; j < r; ++j) piv[j] = piv[j - 1] + 1;
        break;
      }
      if (i == 0) return;
    }
  }
}

}  // namespace rankcodes
