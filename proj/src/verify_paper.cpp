#include "rankcodes/verify_paper.hpp"

#include <functional>
#include <sstream>

namespace rankcodes {

namespace {

Mat make_mat(const FieldPtr& f, std::size_t r, std::size_t c,
             std::initializer_list<int> vals) {
  Mat m(f, r, c);
  auto it = vals.begin();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = static_cast<gfelem>(*it++);
  return m;
}

MatrixCode code_3x3(std::uint32_t q, std::initializer_list<std::initializer_list<int>> gens) {
  FieldPtr f = Field::prime(q);
  std::vector<Mat> ms;
  for (const auto& g : gens) ms.push_back(make_mat(f, 3, 3, g));
  return MatrixCode::from_generators(f, 3, 3, ms);
}

bool dist_is(const RankDistribution& d, std::initializer_list<long> expected) {
  if (d.counts.size() != expected.size()) return false;
  auto it = expected.begin();
  for (const auto& c : d.counts)
    if (c != bigint(*it++)) return false;
  return true;
}

std::string dist_str(const RankDistribution& d) {
  std::ostringstream s;
  s << "(";
  for (std::size_t i = 0; i < d.counts.size(); ++i)
    s << (i ? "," : "") << d.counts[i];
  s << ")";
  return s.str();
}

struct Ctx {
  bool corrupt = false;
  bigint budget;
  bool pass = true;
  std::string detail;

  void check(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
  void check_all(const std::vector<CheckResult>& v, const std::string& label) {
    for (const auto& c : v)
      if (c.applicable && !c.ok)
        check(false, label + ":" + c.id + (c.detail.empty() ? "" : " (" + c.detail + ")"));
  }
};

struct Claim {
  std::string id;
  std::string description;
  std::function<void(Ctx&)> fn;
};

// Profiles plus report for one code, shared across the hierarchy claims.
struct CatalogEntry {
  CodeReport rep;
  GenWeightProfile profile;
};

struct CatalogPair {
  CatalogEntry primal, dual_entry;
};

std::vector<CatalogPair>& matrix_catalog() {
  static std::vector<CatalogPair> cat = [] {
    std::vector<CatalogPair> v;
    auto add = [&](const MatrixCode& c) {
      MatrixCode cd = dual(c);
      v.push_back({{classify(c), generalized_weights_matrix(c)},
                   {classify(cd), generalized_weights_matrix(cd)}});
    };
    add(builtin_dually_3x3_t4());
    add(builtin_dually_3x3_t3_q2());
    add(builtin_dually_3x3_t3_q3());
    add(builtin_amrd_3x3_t5());
    add(builtin_amrd_2x2());
    add(builtin_selfdual_2x3());
    add(builtin_diag_2x2());
    return v;
  }();
  return cat;
}

std::vector<CatalogPair>& vector_catalog() {
  static std::vector<CatalogPair> cat = [] {
    std::vector<CatalogPair> v;
    auto add = [&](const VectorCode& c) {
      VectorCode cd = dual(c);
      v.push_back({{classify(c), generalized_weights_vector(c)},
                   {classify(cd), generalized_weights_vector(cd)}});
    };
    add(builtin_onedim_f16());
    FieldPtr f8 = Field::extension(2, 3);
    add(gabidulin(f8, 3, 2, {1, f8->gen(), f8->mul(f8->gen(), f8->gen())}));
    return v;
  }();
  return cat;
}

// Both orientations of every catalog pair.
template <typename F>
void each_pair(const std::vector<CatalogPair>& cat, F f) {
  for (const auto& p : cat) {
    f(p.primal, p.dual_entry);
    f(p.dual_entry, p.primal);
  }
}

std::vector<MatrixCode> sample_matrix_codes() {
  std::vector<MatrixCode> out;
  FieldPtr f2 = Field::prime(2), f3 = Field::prime(3);
  for (std::size_t t = 3; t <= 5; ++t)
    for (std::uint64_t seed = 1; seed <= 4; ++seed)
      out.push_back(random_matrix_code(f2, 3, 3, t, seed));
  for (std::uint64_t seed = 1; seed <= 4; ++seed)
    out.push_back(random_matrix_code(f3, 2, 3, 3, seed));
  return out;
}

// ---- individual claims -----------------------------------------------------

void claim_singleton(Ctx& c) {
  for (const auto& code : sample_matrix_codes()) {
    CodeReport r = classify(code);
    c.check(r.d <= r.singleton_bound, "distance above the bound");
  }
  FieldPtr f16 = Field::extension(2, 4);
  for (std::size_t k = 1; k <= 3; ++k) {
    // rank_distribution also covers k = n, where the dual is trivial
    RankDistribution d = rank_distribution(random_vector_code(f16, 3, k, 11 + k));
    c.check(d.min_distance() <= static_cast<int>(3 - k + 1),
            "vector distance above n-k+1");
  }
}

void claim_gabidulin(Ctx& c) {
  FieldPtr f16 = Field::extension(2, 4);
  std::vector<gfelem> basis = {1, f16->gen(), f16->frobenius(f16->gen(), 1), 8};
  basis[3] = f16->mul(basis[1], basis[2]);  // g^3
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t k = 1; k <= n; ++k) {
      std::vector<gfelem> v(basis.begin(), basis.begin() + n);
      VectorCode g = gabidulin(f16, n, k, v);
      std::ostringstream tag;
      tag << "n=" << n << ",k=" << k;
      const int d = rank_distribution(g, c.budget).min_distance();
      c.check(d == static_cast<int>(n - k + 1), tag.str() + ": d != n-k+1");
      if (k < n) {  // k = n has a trivial dual, so classify does not apply
        CodeReport r = classify(g, c.budget);
        c.check(r.rdef == 0, tag.str() + ": nonzero rank defect");
        c.check(r.cls == "MRD", tag.str() + ": class " + r.cls);
      }
      GenWeightProfile p = generalized_weights_vector(g, c.budget);
      c.check(p.i_mrd && p.i_mrd->degree == 0, tag.str() + ": degree != 0");
    }
}

void claim_expansion(Ctx& c) {
  FieldPtr f8 = Field::extension(2, 3);
  gfelem g = f8->gen();
  VectorCode vc = gabidulin(f8, 3, 2, {1, g, f8->mul(g, g)});
  RankDistribution dv = rank_distribution(vc);
  MatrixCode m1 = expand(vc);
  c.check(m1.dim() == 6, "expanded dimension != m*k");
  RankDistribution d1 = rank_distribution(m1);
  c.check(dv.counts == d1.counts, "expansion changed the distribution");
  // non-standard basis {g, g+1, g^2}
  std::vector<gfelem> basis = {g, f8->add(g, 1), f8->mul(g, g)};
  MatrixCode m2 = expand(vc, basis);
  RankDistribution d2 = rank_distribution(m2);
  c.check(dv.counts == d2.counts, "distribution depends on the basis");
}

void claim_vector_profiles(Ctx& c) {
  for (const auto& p : vector_catalog()) {
    c.check_all(profile_checks(p.primal.profile, p.primal.rep), "primal");
    c.check_all(profile_checks(p.dual_entry.profile, p.dual_entry.rep), "dual");
  }
}

void claim_matrix_profiles(Ctx& c) {
  for (const auto& p : matrix_catalog()) {
    c.check_all(profile_checks(p.primal.profile, p.primal.rep), "primal");
    c.check_all(profile_checks(p.dual_entry.profile, p.dual_entry.rep), "dual");
  }
}

void claim_compatibility(Ctx& c) {
  FieldPtr f8 = Field::extension(2, 3);
  gfelem g = f8->gen();
  for (std::size_t k = 1; k <= 2; ++k) {
    VectorCode vc = gabidulin(f8, 3, k, {1, g, f8->mul(g, g)});
    GenWeightProfile pv = generalized_weights_vector(vc, c.budget);
    GenWeightProfile pm = generalized_weights_matrix(expand(vc), c.budget);
    c.check_all(compatibility_checks(pv, pm), "gabidulin");
  }
  VectorCode c5 = builtin_onedim_f16();
  GenWeightProfile pv = generalized_weights_vector(c5, c.budget);
  GenWeightProfile pm = generalized_weights_matrix(expand(c5), c.budget);
  c.check_all(compatibility_checks(pv, pm), "one-dim");
}

void claim_wei_duality(Ctx& c) {
  for (const auto& p : matrix_catalog())
    c.check(wei_duality_check(p.primal.profile, p.dual_entry.profile).ok,
            "matrix partition failed");
  for (const auto& p : vector_catalog())
    c.check(wei_duality_check_vector(p.primal.profile, p.dual_entry.profile).ok,
            "vector partition failed");
}

void claim_extended_gabidulin(Ctx& c) {
  FieldPtr f16 = Field::extension(2, 4);
  gfelem g = f16->gen();
  for (std::size_t k = 1; k <= 2; ++k) {
    VectorCode gc = gabidulin(f16, 3, k, {1, g, f16->mul(g, g)});
    VectorCode ext = extend(gc);
    CodeReport r = classify(ext, c.budget);
    c.check(r.d == static_cast<int>(3 - k + 1), "extension changed d");
    c.check(r.cls == "AMRD", "extended code not AMRD: " + r.cls);
    c.check(r.d_dual == 1, "dual distance != 1");
    // all-ones vector lies in the dual
    for (std::size_t i = 0; i < ext.dim(); ++i) {
      gfelem s = 0;
      for (std::size_t j = 0; j < ext.n(); ++j)
        s = f16->add(s, ext.generator().at(i, j));
      c.check(s == 0, "all-ones not orthogonal to the code");
    }
  }
}

void claim_subcode(Ctx& c) {
  MatrixCode base = builtin_dually_3x3_t3_q2();  // AMRD, m | t
  MatrixCode sub = subcode_with_min_vector(base, 2);
  CodeReport r = classify(sub, c.budget);
  c.check(sub.dim() == 2, "subcode dimension");
  c.check(r.d == 2, "subcode lost the minimum-rank word");
  c.check(r.cls == "AMRD", "subcode not AMRD: " + r.cls);
  c.check(r.t % r.m != 0, "subcode dimension still divisible by m");
}

void claim_example_3_5(Ctx& c) {
  CodeReport r = classify(builtin_amrd_2x2(), c.budget);
  c.check(r.d == 1 && r.cls == "AMRD", "primal not AMRD with d=1");
  c.check(r.d_dual == 1, "dual distance != 1");
  c.check(r.rdef_dual == 0 && !r.dually_amrd, "dual not QMRD");
  CodeReport rd = classify(dual(builtin_amrd_2x2()), c.budget);
  c.check(rd.cls == "QMRD", "dual classifies as " + rd.cls);
}

void claim_example_3_6(Ctx& c) {
  MatrixCode code = builtin_dually_3x3_t4();
  CodeReport r = classify(code, c.budget);
  const long a1 = c.corrupt ? 5 : 6;
  c.check(dist_is(r.dist, {1, a1, 7, 2}), "distribution " + dist_str(r.dist));
  c.check(dist_is(r.dist_dual, {1, 9, 18, 4}), "dual distribution " + dist_str(r.dist_dual));
  c.check(r.d == 1 && r.d_dual == 1, "distances");
  c.check(r.dually_amrd, "not dually AMRD");
  FieldPtr f2 = Field::prime(2);
  c.check(dual(code).contains(make_mat(f2, 3, 3, {0,0,0, 1,0,0, 0,0,0})),
          "E21 not in the dual");
}

void claim_prop_3_8(Ctx& c) {
  // exhaustive: every nontrivial code on 2x2 matrices over F_2
  FieldPtr f2 = Field::prime(2);
  for (std::size_t t = 1; t <= 3; ++t)
    for_each_subspace(f2, 4, t, c.budget, [&](const Subspace& s) {
      MatrixCode code = MatrixCode::from_flat(f2, 2, 2, s.basis());
      c.check_all(prop38_checks(classify(code, c.budget)), "2x2");
    });
  for (const auto& code : sample_matrix_codes())
    c.check_all(prop38_checks(classify(code, c.budget)), "sampled");
}

void claim_remark_3_9(Ctx& c) {
  MatrixCode code = builtin_qmrd_3x3_t7();
  CodeReport r = classify(code, c.budget);
  FieldPtr f2 = Field::prime(2);
  c.check(code.contains(make_mat(f2, 3, 3, {0,0,0, 1,0,0, 0,0,0})), "E21 missing");
  c.check(r.d == 1 && r.d_dual == 1, "distances");
  c.check(r.cls == "QMRD", "class " + r.cls);
  c.check(r.rdef_dual == 2, "dual rank defect != 2");
  c.check(!r.dually_amrd, "claimed dually AMRD");
}

void claim_remark_3_10(Ctx& c) {
  MatrixCode code = builtin_dually_3x3_t3_q2();
  CodeReport r = classify(code, c.budget);
  c.check(r.d == 2 && r.d_dual == 1, "d + d_dual != 2 + 1");
  c.check(r.dually_amrd, "not dually AMRD");
  // the seven listed nonzero codewords
  FieldPtr f2 = Field::prime(2);
  std::initializer_list<std::initializer_list<int>> words = {
      {1,0,0, 0,1,0, 0,0,0}, {0,1,0, 0,0,1, 1,0,0}, {0,0,1, 1,0,0, 0,1,0},
      {1,1,0, 0,1,1, 1,0,0}, {1,0,1, 1,1,0, 0,1,0}, {0,1,1, 1,0,1, 1,1,0},
      {1,1,1, 1,1,1, 1,1,0}};
  for (const auto& w : words)
    c.check(code.contains(make_mat(f2, 3, 3, w)), "listed word missing");
  c.check(code.dim() == 3, "dimension != 3");
}

void claim_existence_1dim(Ctx& c) {
  struct P { std::uint32_t q; std::size_t n; std::uint32_t m; };
  for (P p : {P{2, 4, 4}, P{3, 3, 3}, P{2, 3, 4}}) {
    FieldPtr f = Field::extension(p.q, p.m);
    std::vector<gfelem> v;
    gfelem x = 1;
    for (std::size_t i = 0; i + 1 < p.n; ++i) {
      v.push_back(x);
      x = f->mul(x, f->gen());
    }
    VectorCode ghat = extend(gabidulin(f, p.n - 1, 1, v));
    CodeReport r = classify(ghat, c.budget);
    c.check(ghat.dim() == 1 && r.dually_amrd, "no 1-dim dually AMRD witness");
  }
}

void claim_thm_4_1(Ctx& c) {
  std::vector<MatrixCode> codes = sample_matrix_codes();
  codes.push_back(builtin_dually_3x3_t4());
  codes.push_back(builtin_dually_3x3_t3_q3());
  codes.push_back(builtin_amrd_3x3_t5());
  for (const auto& code : codes) {
    CodeReport r = classify(code, c.budget);
    std::vector<bigint> head(r.dist.counts.begin(),
                             r.dist.counts.begin() + (r.n - r.d_dual + 1));
    std::vector<bigint> tail = predicted_tail(r.q, r.n, r.m, r.t, r.d, r.d_dual,
                                              r.cls == "MRD", head);
    for (std::size_t i = 0; i < tail.size(); ++i)
      c.check(tail[i] == r.dist.counts[r.n - r.d_dual + 1 + i],
              "tail mismatch");
  }
}

void claim_prop_4_2(Ctx& c) {
  for (MatrixCode code : {builtin_dually_3x3_t4(), builtin_dually_3x3_t3_q3(),
                          dual(builtin_dually_3x3_t3_q2())}) {
    CodeReport r = classify(code, c.budget);
    c.check(r.dually_amrd, "catalog code not dually AMRD");
    if (c.corrupt) r.dist.counts[r.d] += 1;
    auto rows = identity_checks(r);
    bool any = false;
    for (const auto& row : rows)
      if (row.id.rfind("prop4.2", 0) == 0 && row.applicable) {
        any = true;
        c.check(row.ok, row.id + (row.detail.empty() ? "" : " " + row.detail));
      }
    c.check(any, "no applicable recursion row");
  }
}

void claim_lemma_4_3(Ctx& c) {
  for (MatrixCode code : {builtin_dually_3x3_t4(), builtin_dually_3x3_t3_q3(),
                          builtin_dually_3x3_t3_q2()}) {
    CodeReport r = classify(code, c.budget);
    c.check(lemma43_a_d(r) == bigrat(r.dist.counts[r.d]), "closed form != A_d");
    if (r.alpha == 0)
      c.check(r.dist.counts[r.d] == r.dist_dual.counts[r.d_dual],
              "A_d != dual A_{d_dual}");
  }
}

void claim_thm_4_4(Ctx& c) {
  {
    CodeReport r = classify(builtin_dually_3x3_t4(), c.budget);
    CriterionEvidence e = dually_amrd_criterion(r);
    c.check(!e.branch_m_divides && e.verdict && e.agree, "m∤t branch");
  }
  {
    CodeReport r = classify(dual(builtin_dually_3x3_t3_q2()), c.budget);
    CriterionEvidence e = dually_amrd_criterion(r);
    c.check(e.branch_m_divides && e.verdict && e.agree, "m|t branch");
  }
  {
    CodeReport r = classify(builtin_amrd_3x3_t5(), c.budget);
    CriterionEvidence e = dually_amrd_criterion(r);
    c.check(e.formula_holds && !e.side_condition && !e.verdict && e.agree,
            "side-condition counterexample");
  }
}

void claim_example_4_5_1(Ctx& c) {
  CodeReport r = classify(builtin_dually_3x3_t4(), c.budget);
  c.check(dist_is(r.dist, {1, 6, 7, 2}), "distribution " + dist_str(r.dist));
  c.check(dist_is(r.dist_dual, {1, 9, 18, 4}), "dual " + dist_str(r.dist_dual));
  // A_1 = (1/4 - 1) [3,2] + 1/4 (2*9 + 18), with [3,2] = 7
  bigrat rhs = (bigrat(1, 4) - 1) * bigrat(gaussian_binomial(3, 2, 2)) +
               bigrat(1, 4) * (bigrat(gaussian_binomial(2, 1, 2)) * 9 + 18);
  c.check(rhs == bigrat(6), "rational identity RHS != 6");
  c.check(r.dually_amrd, "not dually AMRD");
}

void claim_example_4_5_2(Ctx& c) {
  MatrixCode code = builtin_dually_3x3_t3_q3();
  CodeReport r = classify(code, c.budget);
  c.check(r.d == 2 && r.d_dual == 1, "distances");
  c.check(r.dually_amrd, "not dually AMRD");
  c.check(r.dist.counts[2] == 6 && r.dist_dual.counts[1] == 6,
          "A_2 or dual A_1 != 6");
  FieldPtr f3 = Field::prime(3);
  c.check(dual(code).contains(make_mat(f3, 3, 3, {0,0,0, 0,0,0, 0,0,2})),
          "diag(0,0,2) not in dual");
}

void claim_remark_4_6(Ctx& c) {
  CodeReport r = classify(builtin_amrd_3x3_t5(), c.budget);
  c.check(dist_is(r.dist, {1, 1, 18, 12}), "distribution " + dist_str(r.dist));
  c.check(dist_is(r.dist_dual, {1, 0, 9, 6}), "dual " + dist_str(r.dist_dual));
  c.check(r.cls == "AMRD" && !r.dually_amrd, "classification");
  CriterionEvidence e = dually_amrd_criterion(r);
  c.check(e.formula_value == bigrat(1), "formula value != 1");
  c.check(e.formula_holds && !e.side_condition, "side condition not the culprit");
}

void claim_selfdual_lemma(Ctx& c) {
  c.check_all(self_dual_checks(builtin_selfdual_2x3(), c.budget), "2x3");
}

void claim_selfdual_char2_params(Ctx& c) {
  CodeReport r = classify(builtin_selfdual_2x3(), c.budget);
  c.check(r.n == 2 && r.t == r.m && r.d == 1, "parameters");
  // char 2: all-ones matrix in the code
  FieldPtr f2 = Field::prime(2);
  c.check(builtin_selfdual_2x3().contains(make_mat(f2, 2, 3, {1,1,1, 1,1,1})),
          "all-ones missing");
}

void claim_example_4_8(Ctx& c) {
  MatrixCode code = builtin_selfdual_2x3();
  c.check(dual(code) == code, "not self-dual");
  CodeReport r = classify(code, c.budget);
  c.check(code.dim() == 3 && r.cls == "AMRD" && r.d == 1, "not 3-dim AMRD d=1");
}

void claim_selfdual_vector(Ctx& c) {
  {
    FieldPtr f25 = Field::extension(5, 2);
    VectorCode code = VectorCode::from_generator(f25, make_mat(f25, 1, 2, {2, 1}));
    c.check_all(self_dual_vector_checks(code, c.budget), "f5");
    c.check(f25->mul(2, 2) == f25->neg(1), "alpha^2 != -1");
  }
  {
    FieldPtr f4 = Field::extension(2, 2);
    VectorCode code = VectorCode::from_generator(f4, make_mat(f4, 1, 2, {1, 1}));
    c.check_all(self_dual_vector_checks(code, c.budget), "char2");
    MatrixCode ex = expand(code);
    c.check(dual(ex) == ex, "expansion not self-dual");
  }
}

void claim_formal_selfdual(Ctx& c) {
  // dually AMRD with t = nm/2 = dm, not self-dual
  MatrixCode code = builtin_diag_2x2();
  c.check(!(dual(code) == code), "witness accidentally self-dual");
  CodeReport r = classify(code, c.budget);
  c.check(r.dually_amrd && r.t == r.n * r.m / 2 &&
              r.t == static_cast<std::size_t>(r.d) * r.m,
          "hypotheses");
  c.check(r.dist.counts == r.dist_dual.counts, "distributions differ");
  CodeReport r2 = classify(builtin_selfdual_2x3(), c.budget);
  c.check(r2.dist.counts == r2.dist_dual.counts, "self-dual case");
}

void claim_dim_cap(Ctx& c) {
  // over every nontrivial 2x2 code: dually AMRD, m | t, A_{d+1} = 0 => t <= nm/2
  FieldPtr f2 = Field::prime(2);
  for (std::size_t t = 1; t <= 3; ++t)
    for_each_subspace(f2, 4, t, c.budget, [&](const Subspace& s) {
      CodeReport r = classify(MatrixCode::from_flat(f2, 2, 2, s.basis()), c.budget);
      if (r.dually_amrd && r.alpha == 0 && r.dist.counts[r.d + 1] == 0)
        c.check(r.t <= r.n * r.m / 2, "cap violated");
    });
  for (const auto& p : matrix_catalog()) {
    const CodeReport& r = p.primal.rep;
    if (r.dually_amrd && r.alpha == 0 && r.dist.counts[r.d + 1] == 0)
      c.check(r.t <= r.n * r.m / 2, "cap violated on catalog");
  }
}

void claim_domino(Ctx& c) {
  each_pair(matrix_catalog(), [&](const CatalogEntry& a, const CatalogEntry&) {
    c.check(domino_check(a.profile), "gap in the qualifying set");
  });
  each_pair(vector_catalog(), [&](const CatalogEntry& a, const CatalogEntry&) {
    c.check(domino_check(a.profile), "gap in the qualifying set (vector)");
  });
}

void claim_triple_equiv(Ctx& c) {
  each_pair(matrix_catalog(), [&](const CatalogEntry& a, const CatalogEntry& b) {
    c.check(mk_equals_n_diagnostics(a.profile, b.profile).consistent,
            "matrix equivalence broken");
  });
  each_pair(vector_catalog(), [&](const CatalogEntry& a, const CatalogEntry& b) {
    c.check(mk_equals_n_diagnostics(a.profile, b.profile).consistent,
            "vector equivalence broken");
  });
}

void claim_degree_rows(Ctx& c, std::initializer_list<std::string> prefixes) {
  auto run = [&](const CatalogEntry& a, const CatalogEntry& b) {
    for (const auto& row : degree_duality_checks(a.profile, b.profile, a.rep))
      for (const auto& pre : prefixes)
        if (row.id.rfind(pre, 0) == 0 && row.applicable)
          c.check(row.ok, row.id);
  };
  each_pair(matrix_catalog(), run);
  each_pair(vector_catalog(), run);
}

void claim_two_amrd(Ctx& c) {
  each_pair(matrix_catalog(), [&](const CatalogEntry& a, const CatalogEntry& b) {
    c.check_all(two_amrd_check(a.profile, b.profile, a.rep).checks, "matrix");
  });
  each_pair(vector_catalog(), [&](const CatalogEntry& a, const CatalogEntry& b) {
    c.check_all(two_amrd_check(a.profile, b.profile, a.rep).checks, "vector");
  });
  // an explicit 2-AMRD witness: t = 6, m | t, t/m = 2 > 1, dually AMRD
  MatrixCode w = dual(builtin_dually_3x3_t3_q2());
  CodeReport r = classify(w, c.budget);
  GenWeightProfile pw = generalized_weights_matrix(w, c.budget);
  GenWeightProfile pd = generalized_weights_matrix(dual(w), c.budget);
  TwoAmrdReport rep = two_amrd_check(pw, pd, r);
  c.check(rep.two_amrd && rep.dually_amrd, "witness not 2-AMRD");
}

void claim_final_example(Ctx& c) {
  VectorCode code = builtin_onedim_f16();
  CodeReport r = classify(code, c.budget);
  c.check(r.d == 3 && r.d_dual == 1, "distances");
  c.check(r.dually_amrd, "not dually AMRD");
  c.check(code.generator().at(0, 3) == 0, "(0,0,0,1) not orthogonal");
  GenWeightProfile p = generalized_weights_vector(code, c.budget);
  c.check(p.weight(1) == 3 && p.weight(p.dim) == 3, "M_1 != 3");
  c.check(p.weight(p.dim) < 4, "top weight reaches n");
  GenWeightProfile pd = generalized_weights_vector(dual(code), c.budget);
  for (const auto& row : degree_duality_checks(p, pd, r))
    if (row.id == "cor5.10-2" && row.applicable) c.check(row.ok, row.id);
}

std::vector<Claim> make_claims() {
  return {
      {"thm-2.1-singleton", "Singleton bound on sampled matrix and vector codes",
       claim_singleton},
      {"gabidulin-mrd", "Frobenius-power generators give MRD codes (q=2, m=4)",
       claim_gabidulin},
      {"lambda-expansion", "expansion preserves dimension and rank distribution",
       claim_expansion},
      {"thm-2.6-profile", "vector weight hierarchy: monotone, bounded, M_1 = d",
       claim_vector_profiles},
      {"thm-2.8-profile", "matrix weight hierarchy: monotone, bounded, a_1 = d",
       claim_matrix_profiles},
      {"thm-2.9-compat", "vector weights equal expanded-code weights a_{rm-eps}",
       claim_compatibility},
      {"thm-2.10-wei", "duality partition of [n] from the two hierarchies",
       claim_wei_duality},
      {"lemma-3.2", "extended Frobenius-power code is AMRD with dual distance 1",
       claim_extended_gabidulin},
      {"lemma-3.3", "minimum-rank subcode is AMRD with m not dividing t'",
       claim_subcode},
      {"example-3.5", "2x2 one-dimensional code: AMRD with QMRD dual",
       claim_example_3_5},
      {"example-3.6", "3x3 four-dimensional code: distributions and flags",
       claim_example_3_6},
      {"prop-3.8", "distance/defect facts, exhaustive on 2x2 plus samples",
       claim_prop_3_8},
      {"remark-3.9", "d+d_dual = n-1 without dually AMRD (QMRD case)",
       claim_remark_3_9},
      {"remark-3.10", "3-dim dually AMRD code over F_2 with listed words",
       claim_remark_3_10},
      {"thm-3.11", "one-dimensional dually AMRD codes exist at all parameters",
       claim_existence_1dim},
      {"thm-4.1", "distribution tail determined by the head counts",
       claim_thm_4_1},
      {"prop-4.2", "dually AMRD recursion and A_d bounds",
       claim_prop_4_2},
      {"lemma-4.3", "closed form for A_d of a dually AMRD code",
       claim_lemma_4_3},
      {"thm-4.4", "dually AMRD characterization incl. the side condition",
       claim_thm_4_4},
      {"example-4.5-1", "rational identity for the 3x3 t=4 code",
       claim_example_4_5_1},
      {"example-4.5-2", "q=3 circulant code: A_2 = dual A_1 = 6",
       claim_example_4_5_2},
      {"remark-4.6", "formula holds but side condition fails",
       claim_remark_4_6},
      {"selfdual-amrd-lemma", "self-dual AMRD distance facts",
       claim_selfdual_lemma},
      {"selfdual-char2-params", "char-2 self-dual parameters and all-ones word",
       claim_selfdual_char2_params},
      {"example-4.8", "2x3 three-dimensional self-dual AMRD code",
       claim_example_4_8},
      {"selfdual-vector-thm", "self-dual vector codes: [2d,d,d], alpha^2 = -1",
       claim_selfdual_vector},
      {"lemma-4.9-formal-selfdual", "t = nm/2 = dm forces equal distributions",
       claim_formal_selfdual},
      {"lemma-4.10-dim-cap", "A_{d+1} = 0 forces t <= nm/2",
       claim_dim_cap},
      {"lemma-5.2-domino", "qualifying indices are upward closed",
       claim_domino},
      {"lemma-5.3-cor-5.4", "top weight = n, dual first weight, i-MRD agree",
       claim_triple_equiv},
      {"thm-5.5-cor-5.6", "degree determined by the dual first weight",
       [](Ctx& c) { claim_degree_rows(c, {"thm5.5", "cor5.6"}); }},
      {"thm-5.7-cor-5.8", "degree equals the dual rank defect",
       [](Ctx& c) { claim_degree_rows(c, {"thm5.7", "cor5.8"}); }},
      {"thm-5.9-cor-5.10", "dual AMRD via the weight a_{1+m} resp. M_2",
       [](Ctx& c) { claim_degree_rows(c, {"thm5.9", "cor5.10"}); }},
      {"thm-5.11-2amrd", "2-AMRD iff dually AMRD with t/m > 1 (m | t)",
       claim_two_amrd},
      {"example-5-final", "<(1,a,a^2,0)> over F_16: dually AMRD, M_1 = 3 < n",
       claim_final_example},
  };
}

}  // namespace

// ---- built-in codes --------------------------------------------------------

MatrixCode builtin_amrd_2x2() {
  FieldPtr f2 = Field::prime(2);
  return MatrixCode::from_generators(f2, 2, 2, {make_mat(f2, 2, 2, {0,0, 1,0})});
}

MatrixCode builtin_dually_3x3_t4() {
  return code_3x3(2, {{1,0,0, 0,0,0, 0,0,0},
                      {0,0,0, 0,1,0, 0,0,0},
                      {0,0,0, 0,0,0, 0,0,1},
                      {0,1,0, 0,0,0, 0,0,0}});
}

MatrixCode builtin_dually_3x3_t3_q2() {
  return code_3x3(2, {{1,0,0, 0,1,0, 0,0,0},
                      {0,1,0, 0,0,1, 1,0,0},
                      {0,0,1, 1,0,0, 0,1,0}});
}

MatrixCode builtin_dually_3x3_t3_q3() {
  return code_3x3(3, {{1,0,0, 0,1,0, 0,0,0},
                      {0,1,0, 0,0,1, 1,0,0},
                      {0,0,1, 1,0,0, 0,1,0}});
}

MatrixCode builtin_amrd_3x3_t5() {
  return code_3x3(2, {{1,0,0, 0,0,0, 0,0,1},
                      {0,1,0, 0,1,1, 0,1,0},
                      {0,0,1, 0,1,0, 0,0,0},
                      {0,0,0, 1,0,0, 0,1,0},
                      {0,0,0, 0,0,0, 1,0,0}});
}

MatrixCode builtin_qmrd_3x3_t7() {
  return dual(code_3x3(2, {{1,0,0, 0,0,0, 0,0,0},
                           {0,0,0, 0,1,0, 0,0,0}}));
}

MatrixCode builtin_selfdual_2x3() {
  FieldPtr f2 = Field::prime(2);
  return MatrixCode::from_generators(
      f2, 2, 3,
      {make_mat(f2, 2, 3, {1,1,0, 0,0,0}), make_mat(f2, 2, 3, {0,0,0, 1,1,0}),
       make_mat(f2, 2, 3, {0,0,1, 0,0,1})});
}

MatrixCode builtin_diag_2x2() {
  FieldPtr f2 = Field::prime(2);
  return MatrixCode::from_generators(
      f2, 2, 2, {make_mat(f2, 2, 2, {1,0, 0,0}), make_mat(f2, 2, 2, {0,0, 0,1})});
}

VectorCode builtin_onedim_f16() {
  FieldPtr f16 = Field::extension(2, 4, {1, 1, 0, 0, 1});
  gfelem a = f16->gen();
  return VectorCode::from_generator(
      f16, make_mat(f16, 1, 4, {1, static_cast<int>(a),
                                static_cast<int>(f16->mul(a, a)), 0}));
}

std::vector<std::string> paper_claim_ids() {
  std::vector<std::string> ids;
  for (const auto& cl : make_claims()) ids.push_back(cl.id);
  return ids;
}

std::vector<ClaimResult> paper_claims(const std::string& only,
                                      bool inject_failure, const bigint& budget) {
  std::vector<ClaimResult> out;
  bool matched = false;
  for (const auto& cl : make_claims()) {
    if (!only.empty() && cl.id != only) continue;
    matched = true;
    Ctx ctx;
    ctx.corrupt = inject_failure;
    ctx.budget = budget;
    try {
      cl.fn(ctx);
    } catch (const budget_error&) {
      throw;  // budget problems are the caller's concern, not a claim failure
    } catch (const std::exception& e) {
      ctx.check(false, std::string("exception: ") + e.what());
    }
    out.push_back({cl.id, cl.description, ctx.pass, ctx.detail});
  }
  if (!only.empty() && !matched)
    throw std::invalid_argument("unknown claim id: " + only);
  return out;
}

}  // namespace rankcodes
