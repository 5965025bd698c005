#include "rankcodes/genweights.hpp"

#include <algorithm>
#include <set>

namespace rankcodes {

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

// Flattened basis of the column-support anticode {M : colspace(M) <= W}.
Mat column_anticode_basis(const Subspace& w, std::size_t n, std::size_t m) {
  Mat rows(w.field(), m * w.dim(), n * m);
  std::size_t out = 0;
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t b = 0; b < w.dim(); ++b) {
      for (std::size_t i = 0; i < n; ++i)
        rows.at(out, i * m + j) = w.basis().at(b, i);
      ++out;
    }
  return rows;
}

// Row-support variant {M : rowspace(M) <= W}, admissible when n = m.
Mat row_anticode_basis(const Subspace& w, std::size_t n, std::size_t m) {
  Mat rows(w.field(), n * w.dim(), n * m);
  std::size_t out = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t b = 0; b < w.dim(); ++b) {
      for (std::size_t l = 0; l < m; ++l)
        rows.at(out, i * m + l) = w.basis().at(b, l);
      ++out;
    }
  return rows;
}

// dim = m * maxrk guard: dimension of the span plus an explicit max-rank member.
void assert_optimal_anticode(const Mat& basis, const Subspace& w, std::size_t n,
                             std::size_t m, bool column_support) {
  const std::size_t s = w.dim();
  if (basis.rank() != m * s)
    throw std::logic_error("optimal anticode: span dimension != m * maxrk");
  if (s == 0) return;
  Mat witness(w.field(), n, m);
  for (std::size_t b = 0; b < s; ++b) {
    if (column_support) {
      for (std::size_t i = 0; i < n; ++i) witness.at(i, b) = w.basis().at(b, i);
    } else {
      for (std::size_t l = 0; l < m; ++l) witness.at(b, l) = w.basis().at(b, l);
    }
  }
  if (witness.rank() != s)
    throw std::logic_error("optimal anticode: no member of rank maxrk");
}

std::size_t intersection_dim(const Mat& a, const Mat& b) {
  return a.rows() + b.rows() - a.stacked(b).rank();
}

}  // namespace

bool GenWeightProfile::qualifies(std::size_t i) const {
  if (matrix_kind) {
    const std::size_t t = dim;
    if (i < 1 || i > ceil_div(t, m)) return false;
    const std::size_t r = 1 + (i - 1) * m;
    return weight(r) ==
           static_cast<int>(n) -
               static_cast<int>(floor_div(static_cast<long>(t - r),
                                          static_cast<long>(m)));
  }
  if (i < 1 || i > dim) return false;
  return weight(i) == static_cast<int>(n) - static_cast<int>(dim) +
                          static_cast<int>(i);
}

std::size_t GenWeightProfile::i_range() const {
  return matrix_kind ? ceil_div(dim, m) : dim;
}

GenWeightProfile generalized_weights_matrix(const MatrixCode& c,
                                            const bigint& budget) {
  const std::size_t n = c.n(), m = c.m(), t = c.dim();
  GenWeightProfile p;
  p.matrix_kind = true;
  p.q = c.q();
  p.n = n;
  p.m = m;
  p.dim = t;
  // f[s] = max over optimal anticodes of maxrk s of dim(C cap A)
  std::vector<std::size_t> f(n + 1, 0);
  for (std::size_t s = 1; s <= n; ++s) {
    std::size_t best = 0;
    auto consider = [&](const Subspace& w, bool column_support) {
      Mat basis = column_support ? column_anticode_basis(w, n, m)
                                 : row_anticode_basis(w, n, m);
      assert_optimal_anticode(basis, w, n, m, column_support);
      best = std::max(best, intersection_dim(c.basis(), basis));
    };
    for_each_subspace(c.field(), n, s, budget,
                      [&](const Subspace& w) { consider(w, true); });
    if (n == m && s < n)
      for_each_subspace(c.field(), n, s, budget,
                        [&](const Subspace& w) { consider(w, false); });
    f[s] = best;
  }
  p.weights.resize(t);
  for (std::size_t r = 1; r <= t; ++r) {
    std::size_t s = 0;
    while (s <= n && f[s] < r) ++s;
    p.weights[r - 1] = static_cast<int>(s);
  }
  p.i_mrd = i_mrd_degree(p);
  return p;
}

GenWeightProfile generalized_weights_vector(const VectorCode& c,
                                            const bigint& budget) {
  const std::size_t n = c.n(), m = c.m(), k = c.dim();
  const FieldPtr& ext = c.field();
  GenWeightProfile p;
  p.matrix_kind = false;
  p.q = c.q();
  p.n = n;
  p.m = m;
  p.dim = k;
  FieldPtr base = Field::prime(c.q());
  // g[s] = max over Galois-closed V of dim s of dim(V cap C)
  std::vector<std::size_t> g(n + 1, 0);
  for (std::size_t s = 1; s <= n; ++s) {
    std::size_t best = 0;
    for_each_subspace(base, n, s, budget, [&](const Subspace& w) {
      // V = F_{q^m}-span of an F_q-rational basis; base-field elements keep
      // their canonical encoding in the extension
      Mat v(ext, s, n);
      for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < n; ++j) v.at(i, j) = w.basis().at(i, j);
      if (v.rank() != s) throw std::logic_error("Galois-closed span lost rank");
      // V^q = V check on the basis
      for (std::size_t i = 0; i < s; ++i) {
        Mat fr(ext, 1, n);
        for (std::size_t j = 0; j < n; ++j)
          fr.at(0, j) = ext->frobenius(v.at(i, j), 1);
        if (v.stacked(fr).rank() != s)
          throw std::logic_error("candidate subspace is not Galois-closed");
      }
      best = std::max(best, intersection_dim(c.generator(), v));
    });
    g[s] = best;
  }
  p.weights.resize(k);
  for (std::size_t r = 1; r <= k; ++r) {
    std::size_t s = 0;
    while (s <= n && g[s] < r) ++s;
    p.weights[r - 1] = static_cast<int>(s);
  }
  p.i_mrd = i_mrd_degree(p);
  return p;
}

std::optional<IMrdInfo> i_mrd_degree(const GenWeightProfile& p) {
  for (std::size_t i = 1; i <= p.i_range(); ++i)
    if (p.qualifies(i)) return IMrdInfo{i, i - 1};
  return std::nullopt;
}

bool domino_check(const GenWeightProfile& p) {
  bool seen = false;
  for (std::size_t i = 1; i <= p.i_range(); ++i) {
    const bool q = p.qualifies(i);
    if (seen && !q) return false;
    seen = seen || q;
  }
  return true;
}

WeiDualityResult wei_duality_check(const GenWeightProfile& pc,
                                   const GenWeightProfile& pd) {
  const std::size_t n = pc.n, m = pc.m, t = pc.dim;
  WeiDualityResult r;
  std::set<int> left, dual_set;
  for (std::size_t j = 1; j <= t / m; ++j)
    left.insert(static_cast<int>(n) + 1 - pc.weight(1 + t - j * m));
  for (std::size_t j = 0; j < ceil_div(pd.dim, m); ++j)
    dual_set.insert(pd.weight(1 + j * m));
  std::set<int> right;
  for (int v = 1; v <= static_cast<int>(n); ++v)
    if (!dual_set.count(v)) right.insert(v);
  r.left.assign(left.begin(), left.end());
  r.right.assign(right.begin(), right.end());
  r.ok = (left == right);
  return r;
}

WeiDualityResult wei_duality_check_vector(const GenWeightProfile& pc,
                                          const GenWeightProfile& pd) {
  const std::size_t n = pc.n;
  WeiDualityResult r;
  std::set<int> left, excl;
  for (std::size_t i = 1; i <= pc.dim; ++i) left.insert(pc.weight(i));
  for (std::size_t j = 1; j <= pd.dim; ++j)
    excl.insert(static_cast<int>(n) + 1 - pd.weight(j));
  std::set<int> right;
  for (int v = 1; v <= static_cast<int>(n); ++v)
    if (!excl.count(v)) right.insert(v);
  r.left.assign(left.begin(), left.end());
  r.right.assign(right.begin(), right.end());
  r.ok = (left == right);
  return r;
}

TripleEquivalence mk_equals_n_diagnostics(const GenWeightProfile& pc,
                                          const GenWeightProfile& pd) {
  TripleEquivalence e;
  e.some_i_mrd = i_mrd_degree(pc).has_value();
  if (pc.matrix_kind) {
    const std::size_t t = pc.dim, m = pc.m;
    e.top_weight_full =
        pc.weight(1 + (ceil_div(t, m) - 1) * m) == static_cast<int>(pc.n);
    // extremal dual index comes from the dual dimension t' = nm - t
    const long idx = static_cast<long>(pd.dim) + 1 -
                     static_cast<long>(pd.dim / m) * static_cast<long>(m);
    if (idx >= 1 && idx <= static_cast<long>(pd.dim))
      e.dual_first_not_one = pd.weight(static_cast<std::size_t>(idx)) != 1;
    else
      e.dual_first_not_one = e.top_weight_full;  // index outside dual hierarchy
  } else {
    e.top_weight_full = pc.weight(pc.dim) == static_cast<int>(pc.n);
    e.dual_first_not_one = pd.weight(1) != 1;
  }
  e.consistent = (e.top_weight_full == e.dual_first_not_one) &&
                 (e.top_weight_full == e.some_i_mrd);
  return e;
}

std::vector<CheckResult> degree_duality_checks(const GenWeightProfile& pc,
                                               const GenWeightProfile& pd,
                                               const CodeReport& rep) {
  std::vector<CheckResult> out;
  const std::size_t n = pc.n, m = pc.m;
  const auto deg = i_mrd_degree(pc);
  if (pc.matrix_kind) {
    const std::size_t t = pc.dim;
    const std::size_t ceil_tm = ceil_div(t, m);
    const bool top_full =
        pc.weight(1 + (ceil_tm - 1) * m) == static_cast<int>(n);
    const long dual_idx = static_cast<long>(pd.dim) + 1 -
                          static_cast<long>(pd.dim / m) * static_cast<long>(m);
    const bool dual_idx_ok = dual_idx >= 1 && dual_idx <= static_cast<long>(pd.dim);
    {
      CheckResult c{"thm5.5"};
      c.applicable = top_full && dual_idx_ok;
      if (c.applicable) {
        const int a_dual = pd.weight(static_cast<std::size_t>(dual_idx));
        c.ok = true;
        for (std::size_t i = 1; i <= ceil_tm; ++i) {
          const long r = 1 + static_cast<long>(i - 1) * m;
          const long thresh =
              2 + floor_div(static_cast<long>(t) - r, static_cast<long>(m));
          if (pc.qualifies(i) != (thresh <= a_dual)) c.ok = false;
          const bool is_deg = deg && deg->i == i;
          if (is_deg != (a_dual == static_cast<int>(ceil_tm - i + 2)))
            c.ok = false;
        }
      }
      out.push_back(c);
    }
    {
      CheckResult c{"thm5.7-1"};
      c.applicable = (rep.alpha == 0) && top_full && deg.has_value();
      if (c.applicable)
        c.ok = (rep.rdef_dual == static_cast<int>(deg->degree));
      out.push_back(c);
    }
    {
      CheckResult c{"thm5.7-2"};
      c.applicable = (rep.alpha == 0);
      if (c.applicable)
        c.ok = ((!top_full) == (rep.rdef_dual == static_cast<int>(t / m)));
      out.push_back(c);
    }
    {
      CheckResult c{"thm5.9-1"};
      c.applicable = (rep.alpha == 0) && top_full && rep.rdef >= 1 && 1 + m <= t;
      if (c.applicable) {
        c.ok = ((rep.rdef_dual == 1) ==
                (pc.weight(1 + m) == rep.d + rep.rdef + 1));
        if (rep.rdef == 1 &&
            rep.dually_amrd != (pc.weight(1 + m) == rep.d + 2))
          c.ok = false;
      }
      out.push_back(c);
    }
    {
      CheckResult c{"thm5.9-2"};
      c.applicable = (rep.alpha == 0) && !top_full;
      if (c.applicable) c.ok = ((rep.rdef_dual == 1) == (ceil_tm == 1));
      out.push_back(c);
    }
    {
      CheckResult c{"thm5.9-2b"};
      c.applicable = (rep.alpha == 0);
      if (c.applicable)
        c.ok = ((rep.dually_amrd && t / m == 1) ==
                (!top_full && rep.d == static_cast<int>(n) - 1));
      out.push_back(c);
    }
  } else {
    const std::size_t k = pc.dim;
    const bool top_full = pc.weight(k) == static_cast<int>(n);
    const int m1_dual = pd.weight(1);
    {
      CheckResult c{"cor5.6"};
      c.applicable = top_full;
      if (c.applicable) {
        c.ok = true;
        for (std::size_t i = 1; i <= k; ++i) {
          if (pc.qualifies(i) !=
              (static_cast<int>(k - i + 2) <= m1_dual))
            c.ok = false;
          const bool is_deg = deg && deg->i == i;
          if (is_deg != (m1_dual == static_cast<int>(k - i + 2))) c.ok = false;
        }
      }
      out.push_back(c);
    }
    {
      CheckResult c{"cor5.8-1"};
      c.applicable = top_full && deg.has_value();
      if (c.applicable) c.ok = (rep.rdef_dual == static_cast<int>(deg->degree));
      out.push_back(c);
    }
    {
      CheckResult c{"cor5.8-2"};
      c.ok = ((!top_full) == (rep.rdef_dual == static_cast<int>(k)));
      out.push_back(c);
    }
    {
      CheckResult c{"cor5.10-1"};
      c.applicable = top_full && rep.rdef >= 1 && k >= 2;
      if (c.applicable) {
        c.ok = ((rep.rdef_dual == 1) == (pc.weight(2) == rep.d + rep.rdef + 1));
        if (rep.rdef == 1 && rep.dually_amrd != (pc.weight(2) == rep.d + 2))
          c.ok = false;
      }
      out.push_back(c);
    }
    {
      CheckResult c{"cor5.10-2"};
      c.ok = ((rep.dually_amrd && k == 1) ==
              (!top_full && rep.d == static_cast<int>(n) - 1));
      out.push_back(c);
    }
  }
  return out;
}

TwoAmrdReport two_amrd_check(const GenWeightProfile& pc,
                             const GenWeightProfile& pd, const CodeReport& rep) {
  TwoAmrdReport r;
  r.dually_amrd = rep.dually_amrd;
  const bool two_mrd = pc.qualifies(2);
  r.two_amrd = (rep.rdef == 1) && two_mrd;
  if (pc.matrix_kind) {
    const std::size_t t = pc.dim, m = pc.m;
    const std::size_t ceil_tm = ceil_div(t, m);
    // both extremal dual indices come from the dual dimension t' = nm - t
    const long idx2 = static_cast<long>(pd.dim) + 1 -
                      static_cast<long>(pd.dim / m) * static_cast<long>(m);
    const long idx1 = idx2 + static_cast<long>(m);
    {
      CheckResult c{"2amrd-dual-weights"};
      c.applicable = r.two_amrd && idx2 >= 1 && idx2 <= static_cast<long>(pd.dim);
      if (c.applicable) {
        c.ok = pd.weight(static_cast<std::size_t>(idx2)) ==
               static_cast<int>(ceil_tm);
        if (idx1 <= static_cast<long>(pd.dim) &&
            pd.weight(static_cast<std::size_t>(idx1)) !=
                static_cast<int>(ceil_tm) + 2)
          c.ok = false;
      }
      r.checks.push_back(c);
    }
    {
      CheckResult c{"2amrd-dual-closed"};
      // the dual can only be 2-MRD when its own index range admits i = 2
      c.applicable = r.two_amrd && rep.alpha == 0 && pd.dim / m > 1;
      if (c.applicable)
        c.ok = (rep.rdef_dual == 1) && pd.qualifies(2);
      r.checks.push_back(c);
    }
    {
      CheckResult c{"2amrd-equiv"};
      c.applicable = (rep.alpha == 0);
      if (c.applicable)
        c.ok = (r.two_amrd == (rep.dually_amrd && t / m > 1));
      r.checks.push_back(c);
    }
  } else {
    CheckResult c{"2amrd-vec-equiv"};
    c.ok = (r.two_amrd == (rep.dually_amrd && pc.dim > 1));
    r.checks.push_back(c);
  }
  return r;
}

std::vector<CheckResult> profile_checks(const GenWeightProfile& p,
                                        const CodeReport& rep) {
  std::vector<CheckResult> out;
  const std::size_t n = p.n, m = p.m;
  if (p.matrix_kind) {
    const std::size_t t = p.dim;
    CheckResult c{"thm2.8-profile"};
    c.ok = p.weight(1) == rep.d && p.weight(t) <= static_cast<int>(n);
    for (std::size_t r = 1; r < t; ++r)
      if (p.weight(r) > p.weight(r + 1)) c.ok = false;
    for (std::size_t r = 1; r + m <= t; ++r)
      if (!(p.weight(r) < p.weight(r + m))) c.ok = false;
    for (std::size_t r = 1; r <= t; ++r)
      if (p.weight(r) > static_cast<int>(n) -
                            static_cast<int>(floor_div(
                                static_cast<long>(t - r), static_cast<long>(m))))
        c.ok = false;
    out.push_back(c);
  } else {
    const std::size_t k = p.dim;
    CheckResult c{"thm2.6-profile"};
    c.ok = p.weight(1) == rep.d && p.weight(k) <= static_cast<int>(n);
    for (std::size_t r = 1; r < k; ++r)
      if (!(p.weight(r) < p.weight(r + 1))) c.ok = false;
    for (std::size_t r = 1; r <= k; ++r)
      if (p.weight(r) > static_cast<int>(n - k + r)) c.ok = false;
    out.push_back(c);
  }
  {
    CheckResult c{"lemma5.2-domino"};
    c.ok = domino_check(p);
    out.push_back(c);
  }
  return out;
}

std::vector<CheckResult> compatibility_checks(const GenWeightProfile& vec_profile,
                                              const GenWeightProfile& mat_profile) {
  std::vector<CheckResult> out;
  CheckResult c{"thm2.9-compat"};
  const std::size_t k = vec_profile.dim, m = vec_profile.m;
  c.ok = (mat_profile.dim == m * k);
  if (c.ok)
    for (std::size_t r = 1; r <= k; ++r)
      for (std::size_t eps = 0; eps < m && eps < r * m; ++eps)
        if (vec_profile.weight(r) != mat_profile.weight(r * m - eps))
          c.ok = false;
  out.push_back(c);
  return out;
}

}  // namespace rankcodes
