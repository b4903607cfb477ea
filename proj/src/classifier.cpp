#include "hitchin/classifier.hpp"

#include <cassert>

namespace hitchin {

ParabolicWeights default_generic_weights() {
  ParabolicWeights w;
  w.p1 = Rational(3, 10);
  w.m1 = Rational(1, 5);
  w.p2 = Rational(3, 10);
  w.m2 = Rational(1, 5);
  return w;
}

namespace {

// Builders for the fiber entries of one report. The wall variant matters
// only for multi-component fibers; parity-dependent ones pass it through.
struct FiberKit {
  const ParabolicWeights& w;

  SingularFiberEntry i1() const {
    return hitchin_class(KodairaType::I(1), w);
  }
  SingularFiberEntry ii() const {
    return hitchin_class(KodairaType::II_(), w);
  }
  SingularFiberEntry i2(WallVariant v, bool degenerate = false) const {
    return hitchin_class(KodairaType::I(2), w, degenerate, v);
  }
  SingularFiberEntry iii(WallVariant v, bool degenerate = false) const {
    return hitchin_class(KodairaType::III_(), w, degenerate, v);
  }
  SingularFiberEntry i3_degenerate() const {
    return hitchin_class(KodairaType::I(3), w, true);
  }
  SingularFiberEntry iv_degenerate() const {
    return hitchin_class(KodairaType::IV_(), w, true);
  }
};

bool is_zero(const std::optional<GaussianRational>& v) {
  return v && v->is_zero();
}

void classify_d22_ss(const DerivedInvariants& inv, const FiberKit& kit,
                     FiberReport& rep) {
  rep.infinity = KodairaType::Istar(2);
  const GaussianRational& A = *inv.A;
  const GaussianRational& B = *inv.B;
  const GaussianRational& L = *inv.L;
  const GaussianRational& M = *inv.M;
  GaussianRational L2 = L * L, M2 = M * M;
  bool zero_LM = L.is_zero() && M.is_zero();
  // The parity-dependent wall: the crosswise sections appear at L = +M.
  WallVariant pv = L == M ? WallVariant::Swapped : WallVariant::Standard;

  if (is_zero(inv.delta)) {
    assert(!zero_LM);  // L = M = 0 forces delta = -256 A^3 B^3 != 0
    if (L2 == M2) {
      rep.branch = "iii+i1";
      rep.fibers = {kit.iii(pv), kit.i1()};
    } else if (L2 == -M2) {
      if (M2 * M == gr(8) * A * B * L) {
        rep.branch = "2ii";
        rep.fibers = {kit.ii(), kit.ii()};
      } else {
        rep.branch = "ii+2i1(L2=-M2)";
        rep.fibers = {kit.ii(), kit.i1(), kit.i1()};
      }
    } else {
      rep.branch = "ii+2i1";
      rep.fibers = {kit.ii(), kit.i1(), kit.i1()};
    }
    return;
  }
  if (zero_LM) {
    rep.branch = "2i2";
    rep.fibers = {kit.i2(WallVariant::Standard), kit.i2(WallVariant::Swapped)};
  } else if (L2 == M2) {
    rep.branch = "i2+2i1";
    rep.fibers = {kit.i2(pv), kit.i1(), kit.i1()};
  } else {
    rep.branch = "4i1";
    rep.fibers = {kit.i1(), kit.i1(), kit.i1(), kit.i1()};
  }
}

void classify_d22_sn(const DerivedInvariants& inv, const FiberKit& kit,
                     FiberReport& rep) {
  rep.infinity = KodairaType::Istar(3);
  if (is_zero(inv.delta)) {
    rep.branch = "ii+i1";
    rep.fibers = {kit.ii(), kit.i1()};
  } else {
    rep.branch = "3i1";
    rep.fibers = {kit.i1(), kit.i1(), kit.i1()};
  }
}

void classify_d22_nn(const FiberKit& kit, FiberReport& rep) {
  rep.infinity = KodairaType::Istar(4);
  rep.branch = "2i1";
  rep.fibers = {kit.i1(), kit.i1()};
}

void classify_d31_ss(const DerivedInvariants& inv, const FiberKit& kit,
                     FiberReport& rep) {
  rep.infinity = KodairaType::E6();
  const GaussianRational& A = *inv.A;
  const GaussianRational& B = *inv.B;
  const GaussianRational& M = *inv.M;
  GaussianRational B2 = B * B;

  if (inv.has_section) {
    // L = sM with M != 0; the crosswise configuration is s = +1.
    GaussianRational s = inv.parity == SectionParity::Plus ? gr(1) : gr(-1);
    WallVariant pv = inv.parity == SectionParity::Plus ? WallVariant::Swapped
                                                       : WallVariant::Standard;
    GaussianRational sAM = s * A * M;
    if (B2 == gr(4) * sAM) {
      rep.branch = "iii+i1";
      rep.fibers = {kit.iii(pv), kit.i1()};
    } else if (B2 == gr(-12) * sAM) {
      rep.branch = "ii+i2";
      rep.fibers = {kit.ii(), kit.i2(pv)};
    } else {
      rep.branch = "i2+2i1";
      rep.fibers = {kit.i2(pv), kit.i1(), kit.i1()};
    }
    return;
  }
  if (is_zero(inv.delta)) {
    if (B.is_zero()) {
      rep.branch = "2ii";
      rep.fibers = {kit.ii(), kit.ii()};
    } else {
      rep.branch = "ii+2i1";
      rep.fibers = {kit.ii(), kit.i1(), kit.i1()};
    }
  } else {
    rep.branch = "4i1";
    rep.fibers = {kit.i1(), kit.i1(), kit.i1(), kit.i1()};
  }
}

void classify_d31_sn(const DerivedInvariants& inv, const FiberKit& kit,
                     FiberReport& rep) {
  rep.infinity = KodairaType::E6();
  const GaussianRational& A = *inv.A;
  const GaussianRational& B = *inv.B;
  const GaussianRational& L = *inv.L;

  if (is_zero(inv.delta)) {
    if (L.is_zero()) {
      rep.branch = "iv";
      rep.fibers = {kit.iv_degenerate()};
    } else {
      rep.branch = "ii+i2";
      rep.fibers = {kit.ii(), kit.i2(WallVariant::Standard, true)};
    }
    return;
  }
  if (L.is_zero()) {
    rep.branch = "i3+i1";
    rep.fibers = {kit.i3_degenerate(), kit.i1()};
  } else if (B * B == gr(-2) * A * L) {
    rep.branch = "iii+i1";
    rep.fibers = {kit.iii(WallVariant::Standard, true), kit.i1()};
  } else {
    rep.branch = "i2+2i1";
    rep.fibers = {kit.i2(WallVariant::Standard, true), kit.i1(), kit.i1()};
  }
}

void classify_d31_ns(const DerivedInvariants& inv, const FiberKit& kit,
                     FiberReport& rep) {
  rep.infinity = KodairaType::E7();
  if (is_zero(inv.delta)) {
    rep.branch = "ii+i1";
    rep.fibers = {kit.ii(), kit.i1()};
  } else {
    rep.branch = "3i1";
    rep.fibers = {kit.i1(), kit.i1(), kit.i1()};
  }
}

void classify_d31_nn(const DerivedInvariants& inv, const FiberKit& kit,
                     FiberReport& rep) {
  rep.infinity = KodairaType::E7();
  if (inv.R && inv.R->is_zero()) {
    rep.branch = "iii";
    rep.fibers = {kit.iii(WallVariant::Standard, true)};
  } else {
    rep.branch = "i2+i1";
    rep.fibers = {kit.i2(WallVariant::Standard, true), kit.i1()};
  }
}

}  // namespace

FiberReport classify_with_weights(const DerivedInvariants& inv, CaseTag tag,
                                  const ParabolicWeights& w) {
  degree_class(w);
  CaseTag normalized = tag == CaseTag::D22_Ns ? CaseTag::D22_Sn : tag;
  if (normalized != inv.tag) {
    throw SchemaError("invariants were derived for case " +
                      to_string(inv.tag) + ", not " + to_string(tag));
  }

  FiberReport rep;
  if (w.extended_alpha_plus) {
    rep.walls_crossed =
        static_cast<long>(rational_ceil(*w.extended_alpha_plus)) - 1;
  }
  FiberKit kit{w};
  switch (normalized) {
    case CaseTag::D22_Ss:
      classify_d22_ss(inv, kit, rep);
      break;
    case CaseTag::D22_Sn:
      classify_d22_sn(inv, kit, rep);
      break;
    case CaseTag::D22_Nn:
      classify_d22_nn(kit, rep);
      break;
    case CaseTag::D31_Ss:
      classify_d31_ss(inv, kit, rep);
      break;
    case CaseTag::D31_Sn:
      classify_d31_sn(inv, kit, rep);
      break;
    case CaseTag::D31_Ns:
      classify_d31_ns(inv, kit, rep);
      break;
    case CaseTag::D31_Nn:
      classify_d31_nn(inv, kit, rep);
      break;
    case CaseTag::D22_Ns:
      break;  // unreachable, normalized above
  }
  return rep;
}

FiberReport classify(const DerivedInvariants& inv, CaseTag tag) {
  return classify_with_weights(inv, tag, default_generic_weights());
}

}  // namespace hitchin
