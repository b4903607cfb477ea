#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hitchin/polar.hpp"

namespace hitchin {

struct VerifyOptions {
  CaseTag tag = CaseTag::D22_Ss;
  long samples = 10000;
  std::uint64_t seed = 1;
  double tol = 1e-9;          // root-residual tolerance
  double cluster_tol = 1e-7;  // relative spectral-point clustering tolerance
};

struct SampleRecord {
  long index = 0;
  std::string branch;
  bool agree = false;
};

struct SampleDisagreement {
  long index = 0;
  std::string branch;
  std::string detail;
};

struct VerifySummary {
  long total = 0;
  long agree = 0;
  long rejected = 0;  // non-elliptic draws discarded during sampling
  std::vector<SampleRecord> records;
  std::vector<SampleDisagreement> disagreements;
  double seconds = 0.0;
};

// Draws one random parameter set for the case.  Numerators and denominators
// of every drawn rational are bounded; the final parameter in the case's
// list is then solved for exactly so the residue condition holds.  The draw
// for a given (seed, index) pair never depends on any other index, so the
// sample stream is identical no matter how the indices are scheduled.
// Non-elliptic draws are re-rolled; `rejected`, when given, counts them.
PolarData sample_polar_data(CaseTag tag, std::uint64_t seed, long index,
                            long* rejected = nullptr);

// Classifies one sample both ways and compares.  Empty result means the
// symbolic branch and the numeric configuration agree exactly.
struct SampleOutcome {
  std::string branch;
  std::string disagreement;  // empty on agreement
};
SampleOutcome check_sample(const PolarData& data, double tol, double cluster_tol);

// Parallel (OpenMP) verification run.
VerifySummary run_verification(const VerifyOptions& opt);

// Serial reference implementation; must produce the identical summary.
VerifySummary run_verification_serial(const VerifyOptions& opt);

}  // namespace hitchin
