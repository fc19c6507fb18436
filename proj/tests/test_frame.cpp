#include <cmath>

#include "doctest.h"
#include "mobius/catalog.hpp"
#include "mobius/frame.hpp"

using namespace mobius;

namespace {

// Worst violation of the six canonical frame constraints over the interior.
double frame_constraint_sup(const FrameField& f) {
  double worst = 0.0;
  for (int j = f.margin; j < f.chart.nv - f.margin; ++j)
    for (int i = f.margin; i < f.chart.nu - f.margin; ++i) {
      const Vec& y = f.Y(i, j);
      const CVec yz = f.Yz(i, j);
      const Vec& n = f.N(i, j);
      worst = std::max({worst, std::abs(inner(y, y)),
                        std::abs(inner(yz, yz)),
                        std::abs(inner(yz, CVec(yz.conjugate())) - 0.5),
                        std::abs(inner(n, n)), std::abs(inner(n, y) + 1.0),
                        std::abs(inner(CVec(yz), n))});
      if (!is_forward(y)) worst = std::max(worst, 1.0);
    }
  return worst;
}

double kappa_normality_sup(const FrameField& f) {
  double worst = 0.0;
  for (int j = f.margin; j < f.chart.nv - f.margin; ++j)
    for (int i = f.margin; i < f.chart.nu - f.margin; ++i) {
      const CVec& k = f.kappa(i, j);
      worst = std::max({worst, std::abs(inner(k, f.Y(i, j))),
                        std::abs(inner(k, f.N(i, j))),
                        std::abs(inner(k, f.Yz(i, j))),
                        std::abs(inner(k, CVec(f.Yz(i, j).conjugate())))});
    }
  return worst;
}

}  // namespace

TEST_CASE("canonical lift: round sphere closed form") {
  auto entry = catalog::get("round_sphere");
  FrameField f = build_frame(entry.immersion, entry.chart);
  // Y = ((1+|z|^2)/2) (1, f): check against the normalization directly.
  for (int j = f.margin; j < f.chart.nv - f.margin; j += 11)
    for (int i = f.margin; i < f.chart.nu - f.margin; i += 11) {
      const Complex z = f.chart.z(i, j);
      const double scale = (1.0 + std::norm(z)) / 2.0;
      Vec expect(5);
      expect[0] = scale;
      expect.tail(4) = scale * entry.immersion.f(z.real(), z.imag());
      CHECK((f.Y(i, j) - expect).norm() < 1e-12);
      CHECK(std::abs(inner(f.Yz(i, j), CVec(f.Yz(i, j).conjugate())) - 0.5) <
            1e-13);
    }
}

TEST_CASE("canonical lift: already-normalized input is fixed") {
  // The round-sphere lift composed with the normalizing factor is its own
  // canonical lift; rebuilding from the immersion must reproduce Y = F/e^w
  // with <Y_z,Y_zbar> = 1/2, so feeding a conformal chart with unit factor
  // (clifford torus scaled so |dF| = |dz|) returns Y = F.
  Immersion unit;
  unit.n = 3;
  const double r = 1.0 / std::sqrt(2.0);
  // f(u,v) = (cos(au), sin(au), cos(av), sin(av))/sqrt2 with a = sqrt2 has
  // |f_u| = |f_v| = 1 and so 2<F_z,F_zbar> = 1.
  const double a = std::sqrt(2.0);
  unit.f = [r, a](double u, double v) {
    Vec x(4);
    x << r * std::cos(a * u), r * std::sin(a * u), r * std::cos(a * v),
        r * std::sin(a * v);
    return x;
  };
  Chart c;
  c.nu = c.nv = 24;
  c.h = 1e-2;
  c.origin = Complex(0.1, 0.1);
  LiftJets jets = sample_lift(unit, c);
  FrameField f = build_frame(jets);
  for (int j = f.margin; j < c.nv - f.margin; j += 5)
    for (int i = f.margin; i < c.nu - f.margin; i += 5)
      CHECK((f.Y(i, j) - jets.F(i, j)).norm() < 1e-8);
}

TEST_CASE("canonical lift: chart dilation rescales Y") {
  auto entry = catalog::get("clifford_torus");
  const Immersion base = entry.immersion;
  Immersion dilated;
  dilated.n = 3;
  dilated.f = [base](double u, double v) { return base.f(u / 2, v / 2); };
  dilated.fu = [base](double u, double v) {
    return Vec(0.5 * base.fu(u / 2, v / 2));
  };
  dilated.fv = [base](double u, double v) {
    return Vec(0.5 * base.fv(u / 2, v / 2));
  };
  dilated.fuu = [base](double u, double v) {
    return Vec(0.25 * base.fuu(u / 2, v / 2));
  };
  dilated.fuv = [base](double u, double v) {
    return Vec(0.25 * base.fuv(u / 2, v / 2));
  };
  dilated.fvv = [base](double u, double v) {
    return Vec(0.25 * base.fvv(u / 2, v / 2));
  };

  Chart c0 = entry.chart;
  Chart c1 = c0;
  c1.origin = 2.0 * c0.origin;
  c1.h = 2.0 * c0.h;
  FrameField f0 = build_frame(base, c0);
  FrameField f1 = build_frame(dilated, c1);
  for (int j = f0.margin; j < c0.nv - f0.margin; j += 9)
    for (int i = f0.margin; i < c0.nu - f0.margin; i += 9)
      CHECK((f1.Y(i, j) - 2.0 * f0.Y(i, j)).norm() < 1e-10);
}

TEST_CASE("frame constraints hold on all catalog surfaces") {
  for (const auto& name : catalog::list()) {
    CAPTURE(name);
    auto entry = catalog::get(name);
    FrameField f = build_frame(entry.immersion, entry.chart);
    CHECK(frame_constraint_sup(f) < 1e-9);
    CHECK(kappa_normality_sup(f) < 1e-9);
    // Raw (pre-correction) jet consistency stays at the stencil level; the
    // bound scales with the surface's high-order derivatives.
    const double raw_tol = (name == std::string("enneper_s3")) ? 1e-7 : 1e-8;
    CHECK(f.raw.y_yzzb < raw_tol);
    CHECK(f.raw.yz_yzzb < raw_tol);
    CHECK(f.raw.y_yzz < raw_tol);
    CHECK(f.raw.yz_yzz < raw_tol);
    CHECK(f.raw.yzb_yzz < raw_tol);
  }
}

TEST_CASE("frame_N: c = 0 branch") {
  // Synthetic jet with <Y_zzb,Y_zzb> = 0 gives N = 2 Y_zzb exactly.
  // The round sphere in the stereographic chart has Y_zzb = (1,0,0,0,1)/2
  // pattern: <Y_zzb,Y_zzb> = 0 there (flat lift of a plane).
  auto entry = catalog::get("round_sphere");
  FrameField f = build_frame(entry.immersion, entry.chart);
  const int i = f.chart.nu / 2, j = f.chart.nv / 2;
  const double c = inner(f.Yzzb(i, j), f.Yzzb(i, j));
  CHECK(std::abs(c) < 1e-10);
  CHECK((f.N(i, j) - 2.0 * f.Yzzb(i, j)).norm() < 1e-8);
}

TEST_CASE("schwarzian and Hopf differential: round sphere") {
  // Symbolic oracle: Y is quadratic in (u,v), so Y_zz = 0 identically,
  // giving s = 0 and kappa = 0.
  auto entry = catalog::get("round_sphere");
  FrameField f = build_frame(entry.immersion, entry.chart);
  double s_sup = 0.0, k_sup = 0.0;
  for (int j = f.margin; j < f.chart.nv - f.margin; ++j)
    for (int i = f.margin; i < f.chart.nu - f.margin; ++i) {
      s_sup = std::max(s_sup, std::abs(f.s(i, j)));
      k_sup = std::max(k_sup, f.kappa(i, j).norm());
    }
  CHECK(s_sup < 1e-10);
  CHECK(k_sup < 1e-10);
}

TEST_CASE("schwarzian and Hopf differential: clifford torus") {
  // Closed form: s = 0 and <kappa,kappabar> = 1/8 in this parametrization.
  auto entry = catalog::get("clifford_torus");
  FrameField f = build_frame(entry.immersion, entry.chart);
  for (int j = f.margin; j < f.chart.nv - f.margin; j += 7)
    for (int i = f.margin; i < f.chart.nu - f.margin; i += 7) {
      CHECK(std::abs(f.s(i, j)) < 1e-10);
      CHECK(f.kappa_norm2(i, j) == doctest::Approx(0.125).epsilon(1e-8));
    }
}

TEST_CASE("cylinder invariants: closed form s = 1/4, |kappa|^2 = 1/16") {
  auto entry = catalog::get("cylinder");
  FrameField f = build_frame(entry.immersion, entry.chart);
  for (int j = f.margin; j < f.chart.nv - f.margin; j += 9)
    for (int i = f.margin; i < f.chart.nu - f.margin; i += 9) {
      CHECK(std::abs(f.s(i, j) - 0.25) < 1e-9);
      CHECK(f.kappa_norm2(i, j) == doctest::Approx(0.0625).epsilon(1e-7));
    }
}

TEST_CASE("central sphere: great sphere is its own congruence") {
  auto entry = catalog::get("round_sphere");
  FrameField f = build_frame(entry.immersion, entry.chart);
  const int i = 20, j = 25;
  SphereCongruence sc = central_sphere(f, i, j);
  REQUIRE(sc.Vperp.cols() == 1);
  // The plane z=0 maps to the equator x4 = 0: Vperp = span{(0,0,0,0,1)}.
  Vec m = sc.Vperp.col(0);
  Vec expect(5);
  expect << 0, 0, 0, 0, 1;
  CHECK(std::min((m - expect).norm(), (m + expect).norm()) < 1e-8);
}

TEST_CASE("central sphere: invariance under lift rescaling") {
  // V is built from the canonical frame; rescaling the immersion chart
  // origin reproduces the same spheres at matched points. Check the
  // projector against an independently assembled basis span{F,F_u,F_v,F_zzb}.
  auto entry = catalog::get("clifford_torus");
  LiftJets jets = sample_lift(entry.immersion, entry.chart);
  FrameField f = build_frame(jets);
  for (int k = 0; k < 3; ++k) {
    const int i = f.margin + 3 + 9 * k, j = f.margin + 5 + 8 * k;
    Mat flat(5, 4);
    const CVec fz = jets.Fz(i, j);
    flat.col(0) = jets.F(i, j);
    flat.col(1) = (fz + fz.conjugate()).real();
    flat.col(2) = (Complex(0, 1) * (fz - fz.conjugate())).real();
    flat.col(3) = jets.Fzzb(i, j);
    CHECK(subspace_equal(f.V_basis(i, j), flat, 1e-6));
  }
}

TEST_CASE("normal connection: product rule and unit sections") {
  auto entry = catalog::get("clifford_torus");
  FrameField f = build_frame(entry.immersion, entry.chart);
  // psi = smooth unit normal field (n=3: rank one).
  CVGrid psi = unit_normal_section(f);
  CVGrid dz_psi = normal_dz(f, psi, f.margin);
  // <D_z psi, psi> = (1/2) d_z <psi,psi> = 0 for unit sections.
  for (int j = f.margin + 2; j < f.chart.nv - f.margin - 2; j += 9)
    for (int i = f.margin + 2; i < f.chart.nu - f.margin - 2; i += 9)
      CHECK(std::abs(inner(dz_psi(i, j), psi(i, j))) < 1e-7);

  // Zero section maps to zero.
  CVGrid zero(f.chart.nu, f.chart.nv, CVec::Zero(5));
  CVGrid dz_zero = normal_dz(f, zero, f.margin);
  CHECK(dz_zero(f.chart.nu / 2, f.chart.nv / 2).norm() == 0.0);

  // Product rule d<psi,phi> = <D psi, phi> + <psi, D phi>.
  CVGrid phi(f.chart.nu, f.chart.nv, CVec::Zero(5));
  for (int j = f.margin; j < f.chart.nv - f.margin; ++j)
    for (int i = f.margin; i < f.chart.nu - f.margin; ++i) {
      const Complex w(std::sin(0.3 * i * f.chart.h), 0.2 * j * f.chart.h);
      phi(i, j) = w * psi(i, j);
    }
  CVGrid dz_phi = normal_dz(f, phi, f.margin);
  CGrid ip(f.chart.nu, f.chart.nv, Complex(0.0));
  for (int j = f.margin; j < f.chart.nv - f.margin; ++j)
    for (int i = f.margin; i < f.chart.nu - f.margin; ++i)
      ip(i, j) = inner(psi(i, j), phi(i, j));
  for (int j = f.margin + 2; j < f.chart.nv - f.margin - 2; j += 9)
    for (int i = f.margin + 2; i < f.chart.nu - f.margin - 2; i += 9) {
      const Complex lhs = wirtinger_dz(ip, i, j, f.chart.h);
      const Complex rhs =
          inner(dz_psi(i, j), phi(i, j)) + inner(psi(i, j), dz_phi(i, j));
      CHECK(std::abs(lhs - rhs) < 1e-7);
    }

  // Clifford torus has parallel Hopf differential: D_zbar kappa ~ 0.
  CVGrid dzb_kappa = normal_dzb(f, f.kappa, f.margin);
  for (int j = f.margin + 2; j < f.chart.nv - f.margin - 2; j += 9)
    for (int i = f.margin + 2; i < f.chart.nu - f.margin - 2; i += 9)
      CHECK(dzb_kappa(i, j).norm() < 1e-9);
}

TEST_CASE("normal connection: rejects tangential sections") {
  auto entry = catalog::get("clifford_torus");
  FrameField f = build_frame(entry.immersion, entry.chart);
  CVGrid bad(f.chart.nu, f.chart.nv, CVec::Zero(5));
  for (int j = 0; j < f.chart.nv; ++j)
    for (int i = 0; i < f.chart.nu; ++i) bad(i, j) = f.Y(i, j).cast<Complex>();
  CHECK_THROWS_AS((void)normal_dz(f, bad, f.margin), Error);
}

TEST_CASE("structure residuals: catalog surfaces, fault injection") {
  for (const auto& name : {"round_sphere", "clifford_torus", "cylinder"}) {
    CAPTURE(name);
    auto entry = catalog::get(name);
    FrameField f = build_frame(entry.immersion, entry.chart);
    StructureResiduals r = structure_residuals(f);
    CHECK(r.hill < 1e-10);
    CHECK(r.moveq2 < 1e-8);
    CHECK(r.moveq3 < 1e-8);
    CHECK(r.moveq4 < 1e-8);
    CHECK(r.gauss < 1e-8);
    CHECK(r.codazzi < 1e-8);
    CHECK(r.ricci < 1e-8);
  }

  // Corrupt N and watch the structure equations fail.
  auto entry = catalog::get("clifford_torus");
  FrameField f = build_frame(entry.immersion, entry.chart);
  for (int j = 0; j < f.chart.nv; ++j)
    for (int i = 0; i < f.chart.nu; ++i)
      f.N(i, j) += 0.1 * f.Y(i, j);
  StructureResiduals r = structure_residuals(f);
  CHECK(r.moveq3 > 1e-4);
}

TEST_CASE("structure residuals: second-order convergence under refinement") {
  // The torus of revolution and enneper have nontrivial residual fields;
  // the flatter catalog surfaces sit at the roundoff floor already.
  for (const auto& name : {"torus_of_revolution", "enneper_s3"}) {
    CAPTURE(name);
    auto entry = catalog::get(name);
    double m2[3], m3[3];
    const Complex center =
        entry.chart.z(entry.chart.nu / 2, entry.chart.nv / 2);
    for (int lvl = 0; lvl < 3; ++lvl) {
      Chart c;
      c.h = 1e-2 / (1 << lvl);
      c.nu = c.nv = 48 * (1 << lvl);
      c.margin = 2;
      c.origin =
          center - Complex(c.h * (c.nu - 1) / 2.0, c.h * (c.nv - 1) / 2.0);
      FrameField f = build_frame(entry.immersion, c);
      StructureResiduals r = structure_residuals(f);
      m2[lvl] = r.moveq2;
      m3[lvl] = r.moveq3;
    }
    // Single-derivative residuals saturate near 1e-15/h^2; check the order
    // only above that floor.
    for (int lvl = 0; lvl < 2; ++lvl) {
      const double h_fine = 1e-2 / (1 << (lvl + 1));
      const double floor = 1e-15 / (h_fine * h_fine);
      if (m2[lvl + 1] > floor) CHECK(std::log2(m2[lvl] / m2[lvl + 1]) > 2.0);
      if (m3[lvl + 1] > floor) CHECK(std::log2(m3[lvl] / m3[lvl + 1]) > 2.0);
    }
  }
}

TEST_CASE("differentiated conformality: <Y_zz, Y_zbar> = 0") {
  for (const auto& name : catalog::list()) {
    CAPTURE(name);
    auto entry = catalog::get(name);
    FrameField f = build_frame(entry.immersion, entry.chart);
    CHECK(f.raw.yzb_yzz < 1e-7);
  }
}

TEST_CASE("transform_coordinate: identity and Moebius maps") {
  auto entry = catalog::get("cylinder");
  FrameField f = build_frame(entry.immersion, entry.chart);

  HolomorphicMap ident{[](Complex z) { return z; },
                       [](Complex) { return Complex(1.0); },
                       [](Complex) { return Complex(0.0); },
                       [](Complex) { return Complex(0.0); }};
  TransformedInvariants t0 = transform_coordinate(f, ident);
  const int i = f.chart.nu / 2, j = f.chart.nv / 2;
  CHECK(std::abs(t0.s(i, j) - f.s(i, j)) < 1e-12);
  CHECK((t0.kappa(i, j) - f.kappa(i, j)).norm() < 1e-12);

  // Moebius map: S_z(w) = 0, so s' = s (dz/dw)^2.
  const Complex a(1.1, 0.0), b(0.05, 0.02), c(0.3, 0.0), d(1.0, 0.0);
  HolomorphicMap moeb{
      [=](Complex z) { return (a * z + b) / (c * z + d); },
      [=](Complex z) {
        const Complex den = c * z + d;
        return (a * d - b * c) / (den * den);
      },
      [=](Complex z) {
        const Complex den = c * z + d;
        return -2.0 * c * (a * d - b * c) / (den * den * den);
      },
      [=](Complex z) {
        const Complex den = c * z + d;
        return 6.0 * c * c * (a * d - b * c) / (den * den * den * den);
      }};
  CHECK(std::abs(classical_schwarzian(moeb, f.chart.z(i, j))) < 1e-10);
  TransformedInvariants t1 = transform_coordinate(f, moeb);
  const Complex zw = 1.0 / moeb.dw(f.chart.z(i, j));
  CHECK(std::abs(t1.s(i, j) - f.s(i, j) * zw * zw) < 1e-10);
}

TEST_CASE("transform_coordinate: two-path check on w = z^2 + z") {
  // Rebuild the surface in the w-chart and compare the invariants with the
  // transformation rules applied in the z-chart.
  auto entry = catalog::get("cylinder");
  FrameField f = build_frame(entry.immersion, entry.chart);
  HolomorphicMap wmap{[](Complex z) { return z * z + z; },
                      [](Complex z) { return 2.0 * z + 1.0; },
                      [](Complex) { return Complex(2.0); },
                      [](Complex) { return Complex(0.0); }};
  TransformedInvariants t = transform_coordinate(f, wmap);

  const Immersion base = entry.immersion;
  auto zofw = [](Complex w) {
    return 0.5 * (std::sqrt(1.0 + 4.0 * w) - 1.0);
  };
  Immersion in_w;
  in_w.n = 3;
  in_w.f = [base, zofw](double wu, double wv) {
    const Complex z = zofw(Complex(wu, wv));
    return base.f(z.real(), z.imag());
  };

  double worst_s = 0.0, worst_k = 0.0;
  for (int k = 0; k < 4; ++k) {
    const int i = f.margin + 4 + 9 * k, j = f.margin + 6 + 8 * k;
    const Complex w0 = wmap.w(f.chart.z(i, j));
    LocalFrame lf = eval_frame_at(in_w, w0, 2.5e-3);
    worst_s = std::max(worst_s, std::abs(lf.s - t.s(i, j)));
    // kappa fields are vector valued; compare norms of the difference
    // (the local frame shares the ambient coordinates).
    worst_k = std::max(worst_k, (lf.kappa - t.kappa(i, j)).norm());
  }
  CHECK(worst_s < 1e-5);
  CHECK(worst_k < 1e-5);
}

TEST_CASE("mean curvature oracle: geodesic sphere fact H = cot r") {
  // Standalone oracle: a geodesic sphere of radius r about m = e1 in S^3,
  // parametrized from the plane, has |H| = cot r and sphere vector s0.
  const double r = 0.9;
  Immersion sphere;
  sphere.n = 3;
  sphere.f = [r](double u, double v) {
    // Geodesic sphere about e1: p = cos(r) e1 + sin(r) q(u,v), with q a
    // unit vector field orthogonal to e1 (stereographic on the 2-sphere).
    const double d = 1.0 + u * u + v * v;
    Vec q(4);
    q << 0.0, (u * u + v * v - 1.0) / d, 2.0 * u / d, 2.0 * v / d;
    Vec e1(4);
    e1 << 1, 0, 0, 0;
    return Vec(std::cos(r) * e1 + std::sin(r) * q);
  };
  Chart c;
  c.nu = c.nv = 32;
  c.h = 1e-2;
  c.origin = Complex(0.3, 0.2);
  FrameField f = build_frame(sphere, c);
  MeanCurvatureOracle mc = mean_curvature_oracle_s3(sphere, f);
  const int i = c.nu / 2, j = c.nv / 2;
  CHECK(std::abs(std::abs(mc.H_surface(i, j)) - 1.0 / std::tan(r)) < 1e-5);
  CHECK(std::abs(std::abs(mc.H_sphere(i, j)) - 1.0 / std::tan(r)) < 1e-5);
}

TEST_CASE("mean curvature oracle: catalog comparisons") {
  // Great sphere and clifford torus are minimal in S^3; the cylinder is not,
  // but surface and sphere mean curvatures agree at tangency.
  for (const auto& name : {"round_sphere", "clifford_torus", "cylinder"}) {
    CAPTURE(name);
    auto entry = catalog::get(name);
    FrameField f = build_frame(entry.immersion, entry.chart);
    MeanCurvatureOracle mc = mean_curvature_oracle_s3(entry.immersion, f);
    double worst = 0.0, h_abs = 0.0;
    for (int j = mc.margin; j < f.chart.nv - mc.margin; j += 5)
      for (int i = mc.margin; i < f.chart.nu - mc.margin; i += 5) {
        worst = std::max(worst, std::abs(std::abs(mc.H_surface(i, j)) -
                                         std::abs(mc.H_sphere(i, j))));
        h_abs = std::max(h_abs, std::abs(mc.H_surface(i, j)));
      }
    CHECK(worst < 1e-6);
    if (std::string(name) != "cylinder") CHECK(h_abs < 1e-7);
    if (std::string(name) == "cylinder") CHECK(h_abs > 0.1);
  }
}
