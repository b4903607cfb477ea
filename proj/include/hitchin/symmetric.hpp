#pragma once

#include "hitchin/polar.hpp"
#include "hitchin/rational.hpp"

namespace hitchin {

// The two obstruction polynomials controlling how the singular points of the
// four root fibers distribute over values of the pencil parameter, together
// with the factored closed form of the first one.  T1 is the product of the
// simplified pairwise differences t_i - t_j over the four quartic roots,
// rewritten through elementary symmetric polynomials and evaluated with the
// Vieta substitution, so the result is exact in Q(i).  T2 sums the products
// of all factors but one.
struct SymmetricChecks {
  GaussianRational T1;
  GaussianRational T2;
  GaussianRational T1_factored;
};

// Only the two fully semisimple cases have the four-root quartic this
// analysis applies to.
SymmetricChecks symmetric_checks(const DerivedInvariants& inv, CaseTag tag);

}  // namespace hitchin
