#include "hitchin/weights.hpp"

#include <array>

namespace hitchin {

namespace {

const Rational kZero(0);
const Rational kOne(1);

void check_component(const Rational& v, const char* name) {
  if (v < kZero || v >= kOne) {
    throw InvalidWeights(std::string(name) + " outside [0,1)");
  }
}

}  // namespace

int degree_class(const ParabolicWeights& w) {
  check_component(w.p1, "alpha_+^1");
  check_component(w.m1, "alpha_-^1");
  check_component(w.p2, "alpha_+^2");
  check_component(w.m2, "alpha_-^2");
  Rational sum = w.p1 + w.m1 + w.p2 + w.m2;
  if (!is_integer(sum)) {
    throw InvalidWeights("weight sum is not an integer");
  }
  long d = static_cast<long>(boost::multiprecision::numerator(sum));
  if (d < 0 || d > 3) {
    throw InvalidWeights("weight sum outside {0,1,2,3}");
  }
  return static_cast<int>(d);
}

ParabolicWeights swapped(const ParabolicWeights& w) {
  ParabolicWeights out = w;
  std::swap(out.p2, out.m2);
  return out;
}

Rational raw_alpha_plus(const ParabolicWeights& w) { return w.p1 + w.p2; }

Rational raw_alpha_minus(const ParabolicWeights& w) { return w.m1 + w.m2; }

ParabolicWeights apply_hecke(const ParabolicWeights& w,
                             const HeckeTransform& t) {
  ParabolicWeights out = w;
  Rational first = t.epsilon;
  Rational second = kOne - t.epsilon;
  if (t.inverse) {
    first = -first;
    second = -second;
  }
  if (t.comp == HeckeTransform::Component::Plus) {
    out.p1 -= first;
    out.p2 -= second;
  } else {
    out.m1 -= first;
    out.m2 -= second;
  }
  return out;
}

SheafClass apply_hecke(const SheafClass& sc, const HeckeTransform& t) {
  SheafClass out = sc;
  long shift = t.inverse ? -1 : 1;
  if (t.comp == HeckeTransform::Component::Plus) {
    out.bidegree.dp += shift;
  } else {
    out.bidegree.dm += shift;
  }
  return out;
}

HeckeReduction hecke_reduce(const ParabolicWeights& w) {
  int d = degree_class(w);
  HeckeReduction red;
  red.reduced = w;

  auto reduce_component = [&red](HeckeTransform::Component comp) {
    HeckeTransform t;
    t.comp = comp;
    t.inverse = false;
    t.epsilon = comp == HeckeTransform::Component::Plus ? red.reduced.p1
                                                        : red.reduced.m1;
    red.reduced = apply_hecke(red.reduced, t);
    red.transforms.push_back(t);
  };

  switch (d) {
    case 0: {
      // All weights vanish; raise alpha_+ to 1 by an inverse transform.
      HeckeTransform t;
      t.comp = HeckeTransform::Component::Plus;
      t.inverse = true;
      t.epsilon = Rational(1, 2);
      red.reduced = apply_hecke(red.reduced, t);
      red.transforms.push_back(t);
      break;
    }
    case 1:
      break;
    case 2:
      if (raw_alpha_plus(red.reduced) >= kOne) {
        reduce_component(HeckeTransform::Component::Plus);
      } else {
        reduce_component(HeckeTransform::Component::Minus);
      }
      break;
    case 3:
      // Both component sums lie in [1,2), so this order always works.
      reduce_component(HeckeTransform::Component::Plus);
      reduce_component(HeckeTransform::Component::Minus);
      break;
    default:
      throw InvalidWeights("unreachable degree class");
  }
  return red;
}

WeightClass weight_class(const ParabolicWeights& w, WallVariant variant) {
  ParabolicWeights base = variant == WallVariant::Swapped ? swapped(w) : w;
  degree_class(base);
  WeightClass out;
  if (base.extended_alpha_plus) {
    const Rational& a = *base.extended_alpha_plus;
    if (is_integer(a)) {
      out.generic = false;
      out.wall = static_cast<long>(boost::multiprecision::numerator(a));
    }
    return out;
  }
  Rational a = raw_alpha_plus(hecke_reduce(base).reduced);
  if (a == kZero || a == kOne) {
    out.generic = false;
    out.wall = a == kZero ? 0 : 1;
  }
  return out;
}

std::pair<Bidegree, Bidegree> stable_bidegrees(const Rational& alpha_plus) {
  if (is_integer(alpha_plus)) {
    throw OnWall("alpha_+ = " + to_string(alpha_plus) + " lies on a wall");
  }
  long c = static_cast<long>(rational_ceil(alpha_plus));
  Bidegree lo{1 - c, c};
  Bidegree hi{2 - c, c - 1};
  return {lo, hi};
}

Stability is_semistable(const SheafClass& sc, const ParabolicWeights& w) {
  int d = degree_class(w);
  if (sc.length < 0 || sc.length > 2) {
    throw InconsistentBookkeeping("sheaf torsion length outside {0,1,2}");
  }
  Rational ap, am;
  int frame = d;
  if (w.extended_alpha_plus) {
    ap = *w.extended_alpha_plus;
    am = kOne - ap;
    frame = 1;
  } else {
    ap = raw_alpha_plus(w);
    am = raw_alpha_minus(w);
  }
  long expected = 2 - frame - sc.length;
  if (sc.bidegree.dp + sc.bidegree.dm != expected) {
    throw InconsistentBookkeeping(
        "bidegree sum " + std::to_string(sc.bidegree.dp + sc.bidegree.dm) +
        " does not match 2 - d - l = " + std::to_string(expected));
  }
  Rational sp = Rational(sc.bidegree.dp) + ap;
  Rational sm = Rational(sc.bidegree.dm) + am;
  if (sp > kZero && sm > kZero) return Stability::Stable;
  if (sp >= kZero && sm >= kZero) return Stability::StrictlySemistable;
  return Stability::Unstable;
}

namespace {

SingularFiberEntry make_entry(const KodairaType& kod, GrothClass ss,
                              GrothClass s,
                              std::vector<FiberComponent> comps) {
  SingularFiberEntry e;
  e.kodaira = kod;
  e.ss = ss;
  e.s = s;
  e.components = std::move(comps);
  e.compact = ss == groth_class(kod);
  return e;
}

// The two open components of a two-piece fiber, labeled by the stable
// bidegrees on either side of the current chamber.
std::vector<FiberComponent> open_pair(const GrothClass& cls,
                                      const std::pair<Bidegree, Bidegree>& bd) {
  return {FiberComponent{cls, bd.first}, FiberComponent{cls, bd.second}};
}

}  // namespace

SingularFiberEntry hitchin_class(const KodairaType& fiber,
                                 const ParabolicWeights& w, bool degenerate,
                                 WallVariant variant) {
  const GrothClass kL = kClassL;
  const GrothClass kPt = kClassPt;

  // Single-component fibers carry no weight dependence.
  if (fiber == KodairaType::I(1)) {
    return make_entry(fiber, kL, kL, {FiberComponent{kL, std::nullopt}});
  }
  if (fiber == KodairaType::II_()) {
    GrothClass c = kL + kPt;
    return make_entry(fiber, c, c, {FiberComponent{c, std::nullopt}});
  }
  if (fiber == KodairaType::I(2) && degenerate) {
    GrothClass c = kL - kPt;
    return make_entry(fiber, c, c, {FiberComponent{c, std::nullopt}});
  }
  if (fiber == KodairaType::III_() && degenerate) {
    return make_entry(fiber, kL, kL, {FiberComponent{kL, std::nullopt}});
  }

  bool plain_pair = fiber == KodairaType::I(2) || fiber == KodairaType::III_();
  bool degen_pair = degenerate && (fiber == KodairaType::I(3) ||
                                   fiber == KodairaType::IV_());
  if (!plain_pair && !degen_pair) {
    throw UnsupportedFiberClass("no Hitchin class table for fiber " +
                                to_string(fiber) +
                                (degenerate ? " (degenerate)" : ""));
  }

  ParabolicWeights base = variant == WallVariant::Swapped ? swapped(w) : w;
  WeightClass wc = weight_class(base);

  if (!wc.generic) {
    // On a wall the extremal bidegrees collapse to one S-equivalence point;
    // one open family stays stable.
    if (fiber == KodairaType::I(2)) {
      return make_entry(fiber, kL, kL - kPt,
                        {FiberComponent{kL - kPt, std::nullopt},
                         FiberComponent{kPt, std::nullopt}});
    }
    return make_entry(fiber, kL + kPt, kL,
                      {FiberComponent{kL, std::nullopt},
                       FiberComponent{kPt, std::nullopt}});
  }

  Rational ap = base.extended_alpha_plus
                    ? *base.extended_alpha_plus
                    : raw_alpha_plus(hecke_reduce(base).reduced);
  auto bd = stable_bidegrees(ap);

  if (fiber == KodairaType::III_()) {
    auto comps = open_pair(kL, bd);
    comps.push_back(FiberComponent{kPt, std::nullopt});
    GrothClass c = 2 * kL + kPt;
    return make_entry(fiber, c, c, std::move(comps));
  }
  if (fiber == KodairaType::I(2)) {
    auto comps = open_pair(kL - kPt, bd);
    comps.push_back(FiberComponent{kPt, std::nullopt});
    comps.push_back(FiberComponent{kPt, std::nullopt});
    GrothClass c = 2 * kL;
    return make_entry(fiber, c, c, std::move(comps));
  }
  if (fiber == KodairaType::I(3)) {
    auto comps = open_pair(kL - kPt, bd);
    comps.push_back(FiberComponent{kPt, std::nullopt});
    GrothClass c = 2 * kL - kPt;
    return make_entry(fiber, c, c, std::move(comps));
  }
  // Degenerate IV: two affine lines, no extra point.
  GrothClass c = 2 * kL;
  return make_entry(fiber, c, c, open_pair(kL, bd));
}

}  // namespace hitchin
