#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hitchin/polar.hpp"
#include "hitchin/weights.hpp"

namespace hitchin {

// Full classification of one pencil: the fiber at infinity, the singular
// fibers with their Hitchin classes, which branch of the case analysis
// fired, and (for extended weights) how many walls the weight path crossed.
struct FiberReport {
  KodairaType infinity = KodairaType::Istar(2);
  std::string branch;
  std::vector<SingularFiberEntry> fibers;
  std::optional<long> walls_crossed;
};

// Weight vector used when the caller does not supply one: (3/10, 1/5,
// 3/10, 1/5).  Generic for both pairings of the puncture weights.
ParabolicWeights default_generic_weights();

FiberReport classify_with_weights(const DerivedInvariants& inv, CaseTag tag,
                                  const ParabolicWeights& w);

FiberReport classify(const DerivedInvariants& inv, CaseTag tag);

}  // namespace hitchin
