#pragma once

#include <json.hpp>

#include "hitchin/classifier.hpp"
#include "hitchin/oracle.hpp"
#include "hitchin/polar.hpp"
#include "hitchin/verify.hpp"
#include "hitchin/weights.hpp"

namespace hitchin {

using Json = nlohmann::ordered_json;

// Rationals serialize as [num, den]; Gaussian rationals as
// [num_re, den_re, num_im, den_im].  Parsers throw SchemaError on anything
// malformed.
Json to_json(const Rational& r);
Json to_json(const GaussianRational& v);
Rational rational_from_json(const Json& j);
GaussianRational gaussian_from_json(const Json& j);

// {"case": "d22-ss", "params": {"a_plus": [0,1,0,1], ...}}
Json to_json(const PolarData& d);
PolarData polar_from_json(const Json& j);

// {"alpha": {"p1": [3,10], ...}, "extended_alpha_plus": [3,5]}  (optional)
Json to_json(const ParabolicWeights& w);
ParabolicWeights weights_from_json(const Json& j);

Json to_json(const GrothClass& c);
Json to_json(const SingularFiberEntry& e);
Json to_json(const FiberReport& r);
Json to_json(const OracleReport& r, double tol);

// Timing is deliberately left out so a (config, seed) pair always produces
// byte-identical output.
Json to_json(const VerifySummary& s, const VerifyOptions& opt);

}  // namespace hitchin
