// Verification suites: families of identities checked exhaustively on a
// system and reported one line per identity.  Shared by `htcli verify` and
// the acceptance driver.
#pragma once

#include <string>
#include <vector>

#include "ht/classify.h"
#include "ht/reps.h"

namespace ht {

// bar(c_w) = c_w for every w in W~, the KL inversion formula for all pairs,
// and agreement of the KL table with a canonical basis computed only from
// Hecke multiplication and bar invariance.
std::vector<CheckResult> hecke_checks(SysPtr sys);

// a constant on two-sided cells, a(e) = 0, a(w_0) = l(w_0), one
// distinguished involution per left cell, associativity of J (all triples)
// and the unit sum_d t_d.
std::vector<CheckResult> cell_checks(SysPtr sys);
// Number of eps-stable two-sided cells of W'_n against |bar X_n|.
CheckResult eps_stable_cell_count(int n);

// The trace identities on E^v and E^inf for every preferred extension:
// inversion, bar and dagger compatibility, the f-orthogonality relations,
// leading coefficients, eps-stability of c_E, the aleph sums and the
// recovery of aleph from leading coefficients.
std::vector<CheckResult> trace_checks(const RepData& rd);

// Restriction to every eps-stable proper parabolic: T- and t-trace
// decompositions and the cell comparisons under induction.
std::vector<CheckResult> induction_checks(std::shared_ptr<const RepData> big);
// <c(M,N,Phi,xi), c(M,N,Phi',xi')> = #{eta : eta|cc_Phi = xi, eta|cc_Phi' = xi'}
// for all pairs of arrangements on a bar-symbol.
CheckResult arrangement_counting(const BarSymbol& b);

// The five arrangements of {0..5} and the object count identity n = 2..nmax.
std::vector<CheckResult> symbol_checks(int nmax = 12);

// Names accepted by run_suite.
const std::vector<std::string>& suite_names();
// Runs a suite on the system (family, n).  Unknown suite names throw
// std::invalid_argument.  `heavy` allows the E6 Hecke-side computations.
std::vector<CheckResult> run_suite(const std::string& suite, const std::string& family, int n, bool heavy = false);

bool all_pass(const std::vector<CheckResult>& r);

}  // namespace ht
