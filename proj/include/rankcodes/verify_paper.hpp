#pragma once

#include <string>
#include <vector>

#include "rankcodes/genweights.hpp"

namespace rankcodes {

struct ClaimResult {
  std::string id;
  std::string description;
  bool pass = false;
  std::string detail;  // failing sub-checks, empty on pass
};

/// Runs the built-in verification catalog. `only` restricts to a single claim
/// id (empty = all). `inject_failure` deliberately corrupts the reference
/// values so the negative path (nonzero exit) is testable.
std::vector<ClaimResult> paper_claims(const std::string& only = "",
                                      bool inject_failure = false,
                                      const bigint& budget = kDefaultBudget);

std::vector<std::string> paper_claim_ids();

// Built-in reference codes used by the catalog and the test suite.
MatrixCode builtin_amrd_2x2();            // q=2, n=m=2, t=1
MatrixCode builtin_dually_3x3_t4();       // q=2, n=m=3, t=4
MatrixCode builtin_dually_3x3_t3_q2();    // q=2, n=m=3, t=3 (7 nonzero words)
MatrixCode builtin_dually_3x3_t3_q3();    // q=3, n=m=3, t=3 (circulants)
MatrixCode builtin_amrd_3x3_t5();         // q=2, n=m=3, t=5, not dually AMRD
MatrixCode builtin_qmrd_3x3_t7();         // q=2, n=m=3, t=7 (dual of <E11,E22>)
MatrixCode builtin_selfdual_2x3();        // q=2, n=2, m=3, t=3, self-dual
MatrixCode builtin_diag_2x2();            // q=2, n=m=2, t=2, <E11,E22>
VectorCode builtin_onedim_f16();          // <(1,a,a^2,0)> over F_16, a^4=a+1

}  // namespace rankcodes
