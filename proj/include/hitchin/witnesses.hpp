#pragma once

#include <string>
#include <vector>

#include "hitchin/polar.hpp"

namespace hitchin {

// A constructed on-stratum parameter set landing on one branch of the case
// analysis.
struct BranchWitness {
  std::string branch;
  PolarData data;
};

// Exact parameter witnesses, one per reachable branch of the case.  The
// d31-ss two-cusp branch has no Gaussian-rational parameter point (its
// stratum is B = 0, L^2 = -3 M^2, and -3 is not a square in Q(i)), so that
// branch is absent here and is exercised at the invariant level instead.
const std::vector<BranchWitness>& branch_witnesses(CaseTag tag);

// Parameter record for the four-base-point semisimple cases from the paper's
// difference invariants: a = (0, A), b = (0, B), lambda = (-L/2, L/2),
// mu = (-M/2, M/2).  Satisfies the residue condition identically.
PolarData semisimple_params(CaseTag tag, const GaussianRational& A,
                            const GaussianRational& B,
                            const GaussianRational& L,
                            const GaussianRational& M);

}  // namespace hitchin
