#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "hitchin/kodaira.hpp"
#include "hitchin/poly.hpp"
#include "hitchin/polar.hpp"

namespace hitchin {

struct DegenerateSystem : std::runtime_error {
  explicit DegenerateSystem(const std::string& what)
      : std::runtime_error(what) {}
};

struct AmbiguousCluster : std::runtime_error {
  explicit AmbiguousCluster(const std::string& what)
      : std::runtime_error(what) {}
};

// One singular point of a pencil member.  Base-chart points live at
// (z, w) with w = -F(z)/2; blow-up points live on the exceptional locus,
// normally in its u-chart, or in the v-chart when the point quadratic
// degenerates and a root escapes to u = infinity.
struct SingularPoint {
  enum class Chart { Base, BlowupU, BlowupV };
  Chart chart = Chart::Base;
  std::complex<double> z;
  std::complex<double> w_or_v;
  std::complex<double> t;
  int root_multiplicity = 1;
};

struct TCluster {
  std::complex<double> t;            // mean of member t values
  std::vector<size_t> members;       // indices into OracleReport::points
};

struct OracleReport {
  std::vector<SingularPoint> points;
  std::vector<TCluster> t_clusters;
  std::vector<KodairaType> inferred;
  // Clusters whose composition matches no fiber type of the case analysis;
  // non-empty means the oracle refuses to certify the configuration.
  std::vector<std::string> unresolved;
  bool section_detected = false;
};

// The one-variable polynomial cutting out the base-chart singular points,
// built exactly from the local invariants; z = 0 factors (points on the
// excluded fiber or the blow-up center) are divided out.
Poly reduced_polynomial(const DerivedInvariants& inv, const PolarData& d);

std::vector<SingularPoint> singular_locus(const PolarData& d,
                                          double tol = 1e-9);

OracleReport infer_configuration(const std::vector<SingularPoint>& points,
                                 const PolarData& d,
                                 double cluster_tol = 1e-7);

}  // namespace hitchin
