#include "hitchin/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "hitchin/roots.hpp"

namespace hitchin {

namespace {

PolarData normalized(const PolarData& d) {
  return d.tag == CaseTag::D22_Ns ? swap_poles(d) : d;
}

Poly make_poly(std::vector<GaussianRational> coeffs) {
  return Poly(std::move(coeffs));
}

}  // namespace

Poly reduced_polynomial(const DerivedInvariants& inv, const PolarData& d) {
  const GaussianRational two = gr(2), three = gr(3), four = gr(4);
  Poly p;
  switch (inv.tag) {
    case CaseTag::D22_Ss: {
      const GaussianRational &A = *inv.A, &B = *inv.B, &L = *inv.L,
                             &M = *inv.M;
      p = make_poly({-(A * A), -(A * L), GaussianRational{}, B * M, B * B});
      break;
    }
    case CaseTag::D22_Sn: {
      const GaussianRational &A = *inv.A, &L = *inv.L;
      p = make_poly({-(A * A), -(A * L), GaussianRational{},
                     two * d.at("b_m3")});
      break;
    }
    case CaseTag::D22_Nn:
      p = make_poly({-d.at("a_m3"), GaussianRational{}, d.at("b_m3")});
      break;
    case CaseTag::D31_Ss: {
      const GaussianRational &A = *inv.A, &B = *inv.B, &L = *inv.L,
                             &M = *inv.M;
      p = make_poly({-(M * M), GaussianRational{}, two * A * L + B * B,
                     four * A * B, three * A * A});
      break;
    }
    case CaseTag::D31_Sn: {
      const GaussianRational &A = *inv.A, &B = *inv.B, &L = *inv.L;
      p = make_poly({two * A * L + B * B, four * A * B, three * A * A});
      break;
    }
    case CaseTag::D31_Ns: {
      const GaussianRational &M = *inv.M;
      p = make_poly({-(M * M), GaussianRational{}, *inv.R, *inv.Q});
      break;
    }
    case CaseTag::D31_Nn:
      p = make_poly({GaussianRational{}, GaussianRational{}, *inv.R, *inv.Q});
      break;
    case CaseTag::D22_Ns:
      throw SchemaError("invariants carry an unnormalized case tag");
  }
  if (p.is_zero()) {
    throw DegenerateSystem("reduced polynomial vanishes identically");
  }
  // Roots at z = 0 sit on the excluded fiber (the blow-up center in the
  // degenerate families) and are not singular points of pencil members.
  while (!p.is_zero() && p[0].is_zero()) {
    p = Poly::exact_div(p, Poly::from({GaussianRational{}, gr(1)}));
  }
  if (p.degree() < 1) {
    // Nothing outside the excluded fiber (e.g. the degenerate IV family,
    // whose quadric collapses to 3A^2 z^2).
    return p;
  }
  return p;
}

std::vector<SingularPoint> singular_locus(const PolarData& d, double tol) {
  PolarData nd = normalized(d);
  DerivedInvariants inv = validate(nd);
  CurveData cd = curve_data(nd);

  Poly F = make_poly(cd.f);
  Poly G0 = make_poly(cd.g0);
  // d(chi)/dz at w = -F/2, with the pencil term split off:
  // t * k * z^(k-1) = g0' - F F' / 2.
  Poly t_num = G0.derivative() - GaussianRational(Rational(1, 2)) *
                                     (F * F.derivative());

  std::vector<SingularPoint> out;
  Poly reduced = reduced_polynomial(inv, nd);
  if (reduced.degree() >= 1) {
    for (const RootCluster& rc : roots_with_multiplicity(reduced, tol)) {
      SingularPoint pt;
      pt.chart = SingularPoint::Chart::Base;
      pt.z = rc.location;
      pt.w_or_v = -F.eval(rc.location) / 2.0;
      std::complex<double> denom = cd.t_power == 2
                                       ? 2.0 * rc.location
                                       : std::complex<double>(1.0, 0.0);
      pt.t = t_num.eval(rc.location) / denom;
      pt.root_multiplicity = rc.multiplicity;
      out.push_back(pt);
    }
  }

  if (inv.has_blowup) {
    std::complex<double> bt = inv.blow_t.to_complex();
    auto add = [&](SingularPoint::Chart chart, std::complex<double> coord,
                   int mult) {
      SingularPoint pt;
      pt.chart = chart;
      pt.z = coord;
      pt.w_or_v = {0.0, 0.0};
      pt.t = bt;
      pt.root_multiplicity = mult;
      out.push_back(pt);
    };
    const GaussianRational &a = inv.blow_a, &b = inv.blow_b, &c = inv.blow_c;
    if (!a.is_zero()) {
      if (inv.blow_disc.is_zero()) {
        add(SingularPoint::Chart::BlowupU, (-b / (gr(2) * a)).to_complex(), 2);
      } else {
        std::complex<double> sq = std::sqrt(inv.blow_disc.to_complex());
        std::complex<double> den = 2.0 * a.to_complex();
        add(SingularPoint::Chart::BlowupU, (-b.to_complex() + sq) / den, 1);
        add(SingularPoint::Chart::BlowupU, (-b.to_complex() - sq) / den, 1);
      }
    } else if (!b.is_zero()) {
      // Linear point equation: one root in the u-chart, one escaped to the
      // v-chart origin.
      add(SingularPoint::Chart::BlowupU, (-c / b).to_complex(), 1);
      add(SingularPoint::Chart::BlowupV, {0.0, 0.0}, 1);
    } else {
      add(SingularPoint::Chart::BlowupV, {0.0, 0.0}, 2);
    }
  }
  return out;
}

namespace {

// Connected components of the graph with an edge where |t_i - t_j| <= thr.
std::vector<int> components_by_t(const std::vector<SingularPoint>& pts,
                                 double thr) {
  size_t n = pts.size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      if (std::abs(pts[i].t - pts[j].t) <= thr) {
        parent[find(static_cast<int>(i))] = find(static_cast<int>(j));
      }
    }
  }
  std::vector<int> root(n);
  for (size_t i = 0; i < n; ++i) root[i] = find(static_cast<int>(i));
  return root;
}

std::vector<std::vector<size_t>> partition_from(const std::vector<int>& root) {
  std::map<int, std::vector<size_t>> groups;
  for (size_t i = 0; i < root.size(); ++i) groups[root[i]].push_back(i);
  std::vector<std::vector<size_t>> out;
  for (auto& [k, v] : groups) out.push_back(std::move(v));
  std::sort(out.begin(), out.end());
  return out;
}

std::string describe_mults(const std::vector<int>& m) {
  std::string s = "[";
  for (size_t i = 0; i < m.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(m[i]);
  }
  return s + "]";
}

}  // namespace

OracleReport infer_configuration(const std::vector<SingularPoint>& points,
                                 const PolarData& d, double cluster_tol) {
  if (!(cluster_tol > 0.0) || cluster_tol >= 1.0) {
    throw ToleranceOutOfRange(cluster_tol);
  }
  DerivedInvariants inv = validate(normalized(d));

  OracleReport rep;
  rep.points = points;
  rep.section_detected = inv.has_section;
  if (points.empty()) return rep;

  double spread = 0.0;
  for (size_t i = 0; i < points.size(); ++i) {
    for (size_t j = i + 1; j < points.size(); ++j) {
      spread = std::max(spread, std::abs(points[i].t - points[j].t));
    }
  }
  double thr = cluster_tol * std::max(1.0, spread);
  auto part = partition_from(components_by_t(points, thr));
  auto strict = partition_from(components_by_t(points, thr / 10.0));
  if (part != strict) {
    throw AmbiguousCluster(
        "t-clustering unstable between tolerance and tolerance/10");
  }

  for (const auto& members : part) {
    TCluster cl;
    cl.members = members;
    std::complex<double> sum{0.0, 0.0};
    for (size_t idx : members) sum += points[idx].t;
    cl.t = sum / static_cast<double>(members.size());
    rep.t_clusters.push_back(cl);
  }
  std::sort(rep.t_clusters.begin(), rep.t_clusters.end(),
            [](const TCluster& a, const TCluster& b) {
              if (a.t.real() != b.t.real()) return a.t.real() < b.t.real();
              return a.t.imag() < b.t.imag();
            });

  for (const TCluster& cl : rep.t_clusters) {
    std::vector<int> base, blow;
    for (size_t idx : cl.members) {
      const SingularPoint& p = points[idx];
      (p.chart == SingularPoint::Chart::Base ? base : blow)
          .push_back(p.root_multiplicity);
    }
    std::sort(base.begin(), base.end());
    std::sort(blow.begin(), blow.end());

    auto unresolved = [&](const char* why) {
      std::ostringstream os;
      os << "cluster at t=(" << cl.t.real() << "," << cl.t.imag()
         << "): base " << describe_mults(base) << " blowup "
         << describe_mults(blow) << ": " << why;
      rep.unresolved.push_back(os.str());
    };

    if (blow.empty()) {
      if (base == std::vector<int>{1}) {
        rep.inferred.push_back(KodairaType::I(1));
      } else if (base == std::vector<int>{2}) {
        rep.inferred.push_back(KodairaType::II_());
      } else if (base == std::vector<int>{3}) {
        if (inv.has_section) {
          rep.inferred.push_back(KodairaType::III_());
        } else {
          unresolved("triple point without a section");
        }
      } else if (base == std::vector<int>{1, 1}) {
        if (inv.has_section) {
          rep.inferred.push_back(KodairaType::I(2));
        } else {
          unresolved("two singular points on one fiber without a section");
        }
      } else {
        unresolved("no fiber type matches this composition");
      }
      continue;
    }
    if (blow == std::vector<int>{2} && base.empty()) {
      rep.inferred.push_back(inv.has_section ? KodairaType::IV_()
                                             : KodairaType::III_());
    } else if (blow == std::vector<int>{1, 1} && base.empty()) {
      rep.inferred.push_back(KodairaType::I(2));
    } else if (blow == std::vector<int>{1, 1} &&
               base == std::vector<int>{1}) {
      rep.inferred.push_back(KodairaType::I(3));
    } else {
      unresolved("no fiber type matches this exceptional-locus composition");
    }
  }
  std::sort(rep.inferred.begin(), rep.inferred.end());
  return rep;
}

}  // namespace hitchin
