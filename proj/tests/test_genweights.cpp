#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rankcodes/genweights.hpp"
#include "rankcodes/verify_paper.hpp"

using namespace rankcodes;

TEST_CASE("MRD vector codes meet the generalized Singleton bound at every r") {
  FieldPtr f16 = Field::extension(2, 4);
  gfelem g = f16->gen();
  std::vector<gfelem> v = {1, g, f16->mul(g, g)};
  for (std::size_t k = 1; k <= 3; ++k) {
    GenWeightProfile p = generalized_weights_vector(gabidulin(f16, 3, k, v));
    REQUIRE(p.weights.size() == k);
    for (std::size_t r = 1; r <= k; ++r)
      CHECK(p.weight(r) == static_cast<int>(3 - k + r));
    REQUIRE(p.i_mrd.has_value());
    CHECK(p.i_mrd->i == 1);
    CHECK(p.i_mrd->degree == 0);
  }
}

TEST_CASE("one-dimensional code over F_16 has M_1 = 3 < n and no i-MRD index") {
  VectorCode c = builtin_onedim_f16();
  GenWeightProfile p = generalized_weights_vector(c);
  REQUIRE(p.weights.size() == 1);
  CHECK(p.weight(1) == 3);
  CHECK_FALSE(p.i_mrd.has_value());
  // dual first weight must then be 1
  GenWeightProfile pd = generalized_weights_vector(dual(c));
  CHECK(pd.weight(1) == 1);
  TripleEquivalence e = mk_equals_n_diagnostics(p, pd);
  CHECK(e.consistent);
  CHECK_FALSE(e.top_weight_full);
}

TEST_CASE("diagonal 2x2 code: hierarchy (1,2), no qualifying index") {
  MatrixCode c = builtin_diag_2x2();
  GenWeightProfile p = generalized_weights_matrix(c);
  REQUIRE(p.weights.size() == 2);
  CHECK(p.weight(1) == 1);
  CHECK(p.weight(2) == 2);
  CHECK_FALSE(p.i_mrd.has_value());
  GenWeightProfile pd = generalized_weights_matrix(dual(c));
  CHECK(pd.weight(1) == 1);
  CHECK(pd.weight(2) == 2);
  WeiDualityResult w = wei_duality_check(p, pd);
  CHECK(w.ok);
  CHECK(w.left == std::vector<int>{2});
  TripleEquivalence e = mk_equals_n_diagnostics(p, pd);
  CHECK(e.consistent);
}

TEST_CASE("3x3 t=4 reference code: hierarchy (1,1,2,3), 2-MRD of degree 1") {
  MatrixCode c = builtin_dually_3x3_t4();
  GenWeightProfile p = generalized_weights_matrix(c);
  REQUIRE(p.weights.size() == 4);
  // a_1 = a_2 = 1: the anticode of column support <e1> already captures the
  // two-dimensional subcode spanned by E11 and E12
  CHECK(p.weights == std::vector<int>{1, 1, 2, 3});
  CHECK(p.qualifies(2));
  CHECK_FALSE(p.qualifies(1));
  REQUIRE(p.i_mrd.has_value());
  CHECK(p.i_mrd->i == 2);
  CHECK(p.i_mrd->degree == 1);
  CHECK(domino_check(p));

  CodeReport r = classify(c);
  CHECK(all_ok(profile_checks(p, r)));
  GenWeightProfile pd = generalized_weights_matrix(dual(c));
  CHECK(wei_duality_check(p, pd).ok);
  CHECK(mk_equals_n_diagnostics(p, pd).consistent);
  for (const auto& row : degree_duality_checks(p, pd, r))
    if (row.applicable) CHECK_MESSAGE(row.ok, row.id);
  TwoAmrdReport ta = two_amrd_check(p, pd, r);
  CHECK(ta.two_amrd);
  for (const auto& row : ta.checks)
    if (row.applicable) CHECK_MESSAGE(row.ok, row.id);
}

TEST_CASE("expansion compatibility M_r = a_{rm-eps}") {
  FieldPtr f8 = Field::extension(2, 3);
  gfelem g = f8->gen();
  for (std::size_t k = 1; k <= 2; ++k) {
    VectorCode c = gabidulin(f8, 3, k, {1, g, f8->mul(g, g)});
    GenWeightProfile pv = generalized_weights_vector(c);
    GenWeightProfile pm = generalized_weights_matrix(expand(c));
    auto rows = compatibility_checks(pv, pm);
    CHECK(all_ok(rows));
  }
}

TEST_CASE("dual of the 3-dim q=2 reference code is 2-AMRD") {
  MatrixCode w = dual(builtin_dually_3x3_t3_q2());
  CodeReport r = classify(w);
  GenWeightProfile p = generalized_weights_matrix(w);
  GenWeightProfile pd = generalized_weights_matrix(dual(w));
  TwoAmrdReport ta = two_amrd_check(p, pd, r);
  CHECK(ta.two_amrd);
  CHECK(ta.dually_amrd);
  for (const auto& row : ta.checks)
    if (row.applicable) CHECK_MESSAGE(row.ok, row.id);
}

TEST_CASE("profile serial order is stable under the budget guard") {
  CHECK_THROWS_AS(generalized_weights_matrix(builtin_dually_3x3_t4(), bigint(2)),
                  budget_error);
}
