#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hitchin/kodaira.hpp"
#include "hitchin/rational.hpp"

namespace hitchin {

struct InvalidWeights : std::runtime_error {
  explicit InvalidWeights(const std::string& what) : std::runtime_error(what) {}
};

struct OnWall : std::runtime_error {
  explicit OnWall(const std::string& what) : std::runtime_error(what) {}
};

struct InconsistentBookkeeping : std::runtime_error {
  explicit InconsistentBookkeeping(const std::string& what)
      : std::runtime_error(what) {}
};

struct UnsupportedFiberClass : std::runtime_error {
  explicit UnsupportedFiberClass(const std::string& what)
      : std::runtime_error(what) {}
};

// Weights alpha_+^1, alpha_-^1, alpha_+^2, alpha_-^2, each in [0,1), with an
// integral sum d in {0,1,2,3} (the class W_d).  extended_alpha_plus opts into
// the unrestricted wall-crossing range; when present it overrides the reduced
// alpha_+ wherever a single stability parameter is needed.
struct ParabolicWeights {
  Rational p1, m1, p2, m2;
  std::optional<Rational> extended_alpha_plus;
};

struct Bidegree {
  long dp = 0;
  long dm = 0;

  bool operator==(const Bidegree& o) const { return dp == o.dp && dm == o.dm; }
  bool operator!=(const Bidegree& o) const { return !(*this == o); }
};

// A spectral-sheaf invariant on a two-component curve: torsion length and
// the degrees of the two locally free restrictions.
struct SheafClass {
  int length = 0;
  Bidegree bidegree;
};

// One elementary modification.  comp says which of alpha_+/alpha_- drops by
// one (rises for the inverse); epsilon records how the drop splits between
// the two punctures, so a transform log can be replayed or inverted.
struct HeckeTransform {
  enum class Component { Plus, Minus };
  Component comp = Component::Plus;
  bool inverse = false;
  Rational epsilon;
};

struct HeckeReduction {
  ParabolicWeights reduced;
  std::vector<HeckeTransform> transforms;
};

struct WeightClass {
  bool generic = true;
  long wall = 0;  // meaningful only when generic is false
};

enum class Stability { Stable, StrictlySemistable, Unstable };

enum class WallVariant { Standard, Swapped };

struct FiberComponent {
  GrothClass cls;
  std::optional<Bidegree> bidegree;
};

struct SingularFiberEntry {
  std::optional<KodairaType> kodaira;
  GrothClass ss{0, 0};
  GrothClass s{0, 0};
  std::vector<FiberComponent> components;
  bool compact = false;
};

// Validates the component ranges and the integral-sum condition; returns d.
int degree_class(const ParabolicWeights& w);

// The two pairings of puncture weights into component weights.  Swapped
// exchanges the roles of alpha_+^2 and alpha_-^2 (the crosswise-section
// configuration L = +M).
ParabolicWeights swapped(const ParabolicWeights& w);

Rational raw_alpha_plus(const ParabolicWeights& w);
Rational raw_alpha_minus(const ParabolicWeights& w);

ParabolicWeights apply_hecke(const ParabolicWeights& w,
                             const HeckeTransform& t);
SheafClass apply_hecke(const SheafClass& sc, const HeckeTransform& t);

// Reduces w to W_1 by elementary modifications; the canonical epsilon is the
// current first-puncture weight of the component being reduced, except for
// W_0 where the inverse transform uses epsilon = 1/2.
HeckeReduction hecke_reduce(const ParabolicWeights& w);

WeightClass weight_class(const ParabolicWeights& w,
                         WallVariant variant = WallVariant::Standard);

// The two stable bidegrees at a non-integral alpha_+ (W_1 frame):
// delta_+ in {1 - ceil(a), 2 - ceil(a)}, delta_- = 1 - delta_+.
std::pair<Bidegree, Bidegree> stable_bidegrees(const Rational& alpha_plus);

Stability is_semistable(const SheafClass& sc, const ParabolicWeights& w);

// Per-fiber-type (semistable, stable) classes and component list.  Supported
// fiber arguments: I1, II (weight independent), I2 and III (plain or
// degenerate), I3 and IV (degenerate only).
SingularFiberEntry hitchin_class(const KodairaType& fiber,
                                 const ParabolicWeights& w,
                                 bool degenerate = false,
                                 WallVariant variant = WallVariant::Standard);

}  // namespace hitchin
