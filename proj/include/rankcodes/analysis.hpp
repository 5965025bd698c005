#pragma once

#include <string>
#include <vector>

#include "rankcodes/codes.hpp"

namespace rankcodes {

inline constexpr std::uint64_t kDefaultBudget = 1ull << 24;

struct RankDistribution {
  std::uint32_t q = 0;
  std::size_t n = 0, m = 0, t = 0;
  std::vector<bigint> counts;  // A_0..A_n

  bigint total() const;
  /// First nonzero index >= 1; -1 for the zero code.
  int min_distance() const;
};

RankDistribution rank_distribution(const MatrixCode& c,
                                   const bigint& budget = kDefaultBudget);
RankDistribution rank_distribution(const VectorCode& c,
                                   const bigint& budget = kDefaultBudget);

struct CodeReport {
  std::uint32_t q = 0;
  std::size_t n = 0, m = 0, t = 0;
  int d = 0, d_dual = 0;
  int rdef = 0, rdef_dual = 0;
  int singleton_bound = 0;          // n - ceil(t/m) + 1
  std::size_t beta = 0, alpha = 0;  // t = beta*m + alpha, 0 <= alpha < m
  std::string cls;                  // MRD | QMRD | AMRD | A^sMRD
  int s = 0;                        // rank defect
  bool dually_amrd = false;
  int d_sum = 0;                    // d + d_dual, vs n / n-1 diagnostic
  RankDistribution dist, dist_dual;
};

CodeReport classify(const MatrixCode& c, const bigint& budget = kDefaultBudget);
CodeReport classify(const VectorCode& c, const bigint& budget = kDefaultBudget);

struct MacWilliamsResult {
  bool ok = false;
  std::vector<bigrat> residuals;  // one per nu = 0..n
};

/// Checks the q-analog MacWilliams identity between a distribution and the
/// independently enumerated distribution of the dual, for every nu.
MacWilliamsResult macwilliams_check(const RankDistribution& primal,
                                    const RankDistribution& dual_dist);

/// Tail of the rank distribution from the head counts A_0..A_{n-d_dual}.
/// Returns A_{n-d_dual+1}..A_n.
std::vector<bigint> predicted_tail(std::uint32_t q, std::size_t n, std::size_t m,
                                   std::size_t t, int d, int d_dual, bool mrd,
                                   const std::vector<bigint>& head);

struct CriterionEvidence {
  bool branch_m_divides = false;
  bigrat formula_value;       // characterization RHS
  bigint a_d;                 // enumerated A_d
  bool formula_holds = false;
  bool side_condition = false;  // A_beta^perp != 0 (true in the m | t branch)
  bool verdict = false;         // characterization verdict
  bool definition_verdict = false;
  bool agree = false;
};

/// Dually-AMRD characterization from the distributions; requires an AMRD
/// code with t > m.
CriterionEvidence dually_amrd_criterion(const CodeReport& r);

/// Closed form for A_d of a dually AMRD code.
bigrat lemma43_a_d(const CodeReport& r);

struct AdBounds {
  bigrat lower_proof;      // from A_{d+2} >= 0, denominator [n-d, 2]
  bigrat lower_statement;  // printed variant, denominator [n-2, 2]
  bigrat upper;            // from A_{d+1} >= 0
  bool holds = false;
  bool upper_attained = false;  // A_{d+1} = 0 case
  bool lower_attained = false;  // A_{d+2} = 0 case
};

/// Bounds on A_d for a dually AMRD code with m | t.
AdBounds a_d_bounds(const CodeReport& r);

struct CheckResult {
  std::string id;
  bool applicable = true;
  bool ok = true;
  std::string detail;
};

std::vector<CheckResult> self_dual_checks(const MatrixCode& c,
                                          const bigint& budget = kDefaultBudget);
std::vector<CheckResult> self_dual_vector_checks(const VectorCode& c,
                                                 const bigint& budget = kDefaultBudget);

/// Structural d / d_dual facts for a classified code.
std::vector<CheckResult> prop38_checks(const CodeReport& r);

/// Full identity battery over one classified matrix code: distribution
/// sanity, Singleton, MacWilliams, tail prediction, the dually-AMRD
/// characterizations and bounds where applicable, formal self-duality and
/// the dimension cap for the applicable subfamilies.
std::vector<CheckResult> identity_checks(const CodeReport& r);

bool all_ok(const std::vector<CheckResult>& v);

}  // namespace rankcodes
