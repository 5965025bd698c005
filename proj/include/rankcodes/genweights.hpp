#pragma once

#include <optional>

#include "rankcodes/analysis.hpp"

namespace rankcodes {

struct IMrdInfo {
  std::size_t i = 0;       // smallest qualifying i
  std::size_t degree = 0;  // i - 1
};

/// Weight hierarchy of one code: M_1..M_k (vector kind) or a_1..a_t (matrix
/// kind), 1-based weights stored at [r-1].
struct GenWeightProfile {
  bool matrix_kind = false;
  std::uint32_t q = 0;
  std::size_t n = 0, m = 0;
  std::size_t dim = 0;  // t (matrix) or k (vector)
  std::vector<int> weights;
  std::optional<IMrdInfo> i_mrd;

  int weight(std::size_t r) const { return weights.at(r - 1); }  // 1-based
  /// Whether the i-MRD condition holds at index i.
  bool qualifies(std::size_t i) const;
  /// Number of admissible i values: ceil(t/m) resp. k.
  std::size_t i_range() const;
};

GenWeightProfile generalized_weights_vector(const VectorCode& c,
                                            const bigint& budget = kDefaultBudget);
GenWeightProfile generalized_weights_matrix(const MatrixCode& c,
                                            const bigint& budget = kDefaultBudget);

std::optional<IMrdInfo> i_mrd_degree(const GenWeightProfile& p);

/// Lemma: the set of qualifying i is upward closed.
bool domino_check(const GenWeightProfile& p);

struct WeiDualityResult {
  bool ok = false;
  std::vector<int> left, right;  // both sides of the partition, sorted
};

/// Duality partition of [n] for matrix profiles (primal vs dual profile).
WeiDualityResult wei_duality_check(const GenWeightProfile& pc,
                                   const GenWeightProfile& pd);
/// Vector analog: {M_r(C)} = [n] \ {n+1-M_j(C_dual)}.
WeiDualityResult wei_duality_check_vector(const GenWeightProfile& pc,
                                          const GenWeightProfile& pd);

struct TripleEquivalence {
  bool top_weight_full = false;   // last hierarchy weight equals n
  bool dual_first_not_one = false;
  bool some_i_mrd = false;
  bool consistent = false;
};

/// The three equivalent "reaches n" conditions, evaluated independently.
TripleEquivalence mk_equals_n_diagnostics(const GenWeightProfile& pc,
                                          const GenWeightProfile& pd);

/// Degree / dual-first-weight / dual-rank-defect equivalences. Branches that
/// do not apply are flagged.
std::vector<CheckResult> degree_duality_checks(const GenWeightProfile& pc,
                                               const GenWeightProfile& pd,
                                               const CodeReport& rep);

struct TwoAmrdReport {
  bool two_amrd = false;
  bool dually_amrd = false;
  std::vector<CheckResult> checks;
};

TwoAmrdReport two_amrd_check(const GenWeightProfile& pc,
                             const GenWeightProfile& pd, const CodeReport& rep);

/// Profile shape properties (monotonicity, bounds, first weight = d).
std::vector<CheckResult> profile_checks(const GenWeightProfile& p,
                                        const CodeReport& rep);

/// Expansion compatibility: M_r(C) = a_{rm-eps}(expand(C)) for all eps.
std::vector<CheckResult> compatibility_checks(const GenWeightProfile& vec_profile,
                                              const GenWeightProfile& mat_profile);

}  // namespace rankcodes
