#include "mobius/frame.hpp"

#include <cmath>

namespace mobius {

namespace {
const Complex kI(0.0, 1.0);
}

Mat FrameField::V_basis(int i, int j) const {
  Mat b(dim(), 4);
  b.col(0) = Y(i, j);
  b.col(1) = yu(i, j);
  b.col(2) = yv(i, j);
  b.col(3) = N(i, j);
  return b;
}

Mat FrameField::Vperp_basis(int i, int j) const {
  Mat raw = orthogonal_complement(V_basis(i, j));
  return orthonormalize(raw);
}

CVec FrameField::project_tangent(int i, int j, const CVec& w) const {
  const CVec yz = Yz(i, j);
  const CVec yzb = yz.conjugate();
  const CVec y = Y(i, j).cast<Complex>();
  const CVec nn = N(i, j).cast<Complex>();
  return -inner(w, N(i, j)) * y + 2.0 * inner(w, yzb) * yz +
         2.0 * inner(w, yz) * yzb - inner(w, Y(i, j)) * nn;
}

CVec FrameField::project_normal(int i, int j, const CVec& w) const {
  return w - project_tangent(i, j, w);
}

FrameField canonical_lift(const LiftJets& jets, double conformal_tol) {
  FrameField out;
  out.chart = jets.chart;
  out.n = jets.n;
  const int nu = jets.chart.nu, nv = jets.chart.nv;
  const int dim = jets.n + 2;
  const int m0 = jets.margin;  // F-jet validity beyond chart margin
  const double h = jets.chart.h;

  double conf = 0.0;
  for (int j = 0; j < nv; ++j)
    for (int i = 0; i < nu; ++i)
      if (in_margin(jets.chart, i, j, m0))
        conf = std::max(conf, jets.conformal_residual(i, j));
  out.raw.conformality = conf;
  if (conf > conformal_tol)
    fail(ErrorKind::NonConformalChart,
         "sup |<F_z,F_z>| = " + std::to_string(conf));

  out.Y = VGrid(nu, nv, Vec::Zero(dim));
  out.Yz = CVGrid(nu, nv, CVec::Zero(dim));
  for (int j = 0; j < nv; ++j)
    for (int i = 0; i < nu; ++i) {
      if (!in_margin(jets.chart, i, j, m0)) continue;
      const double q = jets.q(i, j);
      if (!(q > 1e-14))
        fail(ErrorKind::DegenerateMetric, "2<F_z,F_zb> <= 0");
      const double e = 1.0 / std::sqrt(q);  // e^{-w}
      out.Y(i, j) = e * jets.F(i, j);
      // w_z = d_z q / (2q) with d_z q = 2(<F_zz,F_zb> + <F_z,F_zzb>).
      const Complex qz = 2.0 * (inner(jets.Fzz(i, j),
                                      CVec(jets.Fz(i, j).conjugate())) +
                                inner(jets.Fz(i, j), jets.Fzzb(i, j)));
      const Complex wz = qz / (2.0 * q);
      out.Yz(i, j) = e * (jets.Fz(i, j) - wz * jets.F(i, j).cast<Complex>());
    }

  // Second jets of Y: one finite-difference level on the first jets.
  out.margin = m0 + 2;
  out.Yzz = dz_field(out.Yz, h, m0);
  out.Yzzb = VGrid(nu, nv, Vec::Zero(dim));
  for (int j = out.margin; j < nv - out.margin; ++j)
    for (int i = out.margin; i < nu - out.margin; ++i)
      out.Yzzb(i, j) = wirtinger_dzb(out.Yz, i, j, h).real();
  return out;
}

void frame_N(FrameField& f, double degenerate_tol) {
  const int nu = f.chart.nu, nv = f.chart.nv;
  const int dim = f.dim();
  f.N = VGrid(nu, nv, Vec::Zero(dim));

  for (int j = f.margin; j < nv - f.margin; ++j)
    for (int i = f.margin; i < nu - f.margin; ++i) {
      const Vec& y = f.Y(i, j);
      const CVec yz = f.Yz(i, j);
      Vec yzzb = f.Yzzb(i, j);

      const double p0 = inner(y, yzzb);
      f.raw.y_yzzb = std::max(f.raw.y_yzzb, std::abs(p0 + 0.5));
      if (std::abs(p0 + 0.5) > degenerate_tol)
        fail(ErrorKind::FrameDegenerate,
             "<Y,Y_zzb> = " + std::to_string(p0));

      // Restore the exact relations <Y,Y_zzb> = -1/2, <Y_z,Y_zzb> = 0;
      // the corrections are below the stencil truncation error.
      yzzb *= -0.5 / p0;
      const Complex p1 = inner(yz, yzzb);
      f.raw.yz_yzzb = std::max(f.raw.yz_yzzb, std::abs(p1));
      const Complex beta = -std::conj(p1) * 2.0;
      yzzb += (beta * yz + std::conj(beta) * yz.conjugate()).real();
      f.Yzzb(i, j) = yzzb;

      const double c = inner(yzzb, yzzb);
      f.N(i, j) = 2.0 * yzzb + 2.0 * c * y;
    }
}

void schwarzian_hopf(FrameField& f) {
  const int nu = f.chart.nu, nv = f.chart.nv;
  f.s = CGrid(nu, nv, Complex(0.0));
  f.kappa = CVGrid(nu, nv, CVec::Zero(f.dim()));
  f.kappa_norm2 = RGrid(nu, nv, 0.0);

  for (int j = f.margin; j < nv - f.margin; ++j)
    for (int i = f.margin; i < nu - f.margin; ++i) {
      const Vec& y = f.Y(i, j);
      const CVec yz = f.Yz(i, j);
      const CVec yzb = yz.conjugate();
      CVec yzz = f.Yzz(i, j);

      const Complex e0 = inner(yzz, y);
      const Complex e1 = inner(yzz, yz);
      const Complex e2 = inner(yzz, yzb);
      f.raw.y_yzz = std::max(f.raw.y_yzz, std::abs(e0));
      f.raw.yz_yzz = std::max(f.raw.yz_yzz, std::abs(e1));
      f.raw.yzb_yzz = std::max(f.raw.yzb_yzz, std::abs(e2));

      // Exact continuum identities: kill the spurious frame components.
      yzz += e0 * f.N(i, j).cast<Complex>() - 2.0 * e2 * yz - 2.0 * e1 * yzb;
      f.Yzz(i, j) = yzz;

      const Complex s = 2.0 * inner(yzz, f.N(i, j));
      f.s(i, j) = s;
      const CVec kappa = yzz + 0.5 * s * y.cast<Complex>();
      f.kappa(i, j) = kappa;
      f.kappa_norm2(i, j) =
          std::real(inner(kappa, CVec(kappa.conjugate())));
    }
}

FrameField build_frame(const LiftJets& jets) {
  FrameField f = canonical_lift(jets);
  frame_N(f);
  schwarzian_hopf(f);
  return f;
}

FrameField build_frame(const Immersion& f, const Chart& chart) {
  return build_frame(sample_lift(f, chart));
}

SphereCongruence central_sphere(const FrameField& f, int i, int j) {
  SphereCongruence out;
  out.V = f.V_basis(i, j);
  out.Vperp = f.Vperp_basis(i, j);
  auto sig = signature(out.V);
  if (sig.first != 3 || sig.second != 1)
    fail(ErrorKind::SignatureFailure, "central sphere V not (3,1)");
  auto sigp = signature(out.Vperp);
  if (sigp.first != f.n - 2 || sigp.second != 0)
    fail(ErrorKind::SignatureFailure, "Vperp not spacelike");
  return out;
}

namespace {

void check_normal(const FrameField& f, const CVGrid& psi, int psi_margin,
                  double tol) {
  double worst = 0.0, scale = 0.0;
  for (int j = 0; j < f.chart.nv; ++j)
    for (int i = 0; i < f.chart.nu; ++i) {
      if (!in_margin(f.chart, i, j, std::max(psi_margin, f.margin))) continue;
      const CVec& p = psi(i, j);
      scale = std::max(scale, p.norm());
      worst = std::max({worst, std::abs(inner(p, f.Y(i, j))),
                        std::abs(inner(p, f.N(i, j))),
                        std::abs(inner(p, f.Yz(i, j)))});
    }
  if (worst > tol * std::max(scale, 1e-12))
    fail(ErrorKind::NotNormal, "section has tangential component " +
                                   std::to_string(worst));
}

template <class PsiGrid>
CVGrid normal_derivative(const FrameField& f, const PsiGrid& psi,
                         int psi_margin, bool zbar) {
  const int nu = f.chart.nu, nv = f.chart.nv;
  CVGrid out(nu, nv, CVec::Zero(f.dim()));
  const int m = psi_margin + 2;
  for (int j = m; j < nv - m; ++j)
    for (int i = m; i < nu - m; ++i) {
      const CVec d = zbar ? wirtinger_dzb(psi, i, j, f.chart.h)
                          : wirtinger_dz(psi, i, j, f.chart.h);
      out(i, j) = f.project_normal(i, j, d);
    }
  return out;
}

CVGrid to_complex_grid(const VGrid& g) {
  CVGrid out(g.nu(), g.nv(), CVec::Zero(g(0, 0).size()));
  for (int j = 0; j < g.nv(); ++j)
    for (int i = 0; i < g.nu(); ++i) out(i, j) = g(i, j).cast<Complex>();
  return out;
}

}  // namespace

CVGrid normal_dz(const FrameField& f, const CVGrid& psi, int psi_margin,
                 double tol) {
  check_normal(f, psi, psi_margin, tol);
  return normal_derivative(f, psi, psi_margin, false);
}
CVGrid normal_dzb(const FrameField& f, const CVGrid& psi, int psi_margin,
                  double tol) {
  check_normal(f, psi, psi_margin, tol);
  return normal_derivative(f, psi, psi_margin, true);
}
CVGrid normal_dz(const FrameField& f, const VGrid& psi, int psi_margin,
                 double tol) {
  return normal_dz(f, to_complex_grid(psi), psi_margin, tol);
}
CVGrid normal_dzb(const FrameField& f, const VGrid& psi, int psi_margin,
                  double tol) {
  return normal_dzb(f, to_complex_grid(psi), psi_margin, tol);
}

CVGrid unit_normal_section(const FrameField& f) {
  const int nu = f.chart.nu, nv = f.chart.nv;
  CVGrid psi(nu, nv, CVec::Zero(f.dim()));
  const int m = f.margin;
  // Seed with a Vperp direction, then drag it across the grid by projecting
  // the neighbor's value; kernel bases alone are not continuous in (i,j).
  CVec seed = f.Vperp_basis(m, m).col(0).cast<Complex>();
  psi(m, m) = seed / seed.norm();
  for (int j = m; j < nv - m; ++j)
    for (int i = m; i < nu - m; ++i) {
      if (i == m && j == m) continue;
      const CVec& prev = (i == m) ? psi(m, j - 1) : psi(i - 1, j);
      CVec cand = f.project_normal(i, j, prev);
      if (cand.norm() < 0.5) {  // near-orthogonal flip; restart from kernel
        cand = f.Vperp_basis(i, j).col(0).cast<Complex>();
        if ((cand + prev).norm() < (cand - prev).norm()) cand = -cand;
      }
      psi(i, j) = cand / cand.norm();
    }
  return psi;
}

StructureResiduals structure_residuals(const FrameField& f) {
  StructureResiduals r;
  const int nu = f.chart.nu, nv = f.chart.nv;
  const double h = f.chart.h;
  const int m1 = f.margin + 2;  // first derivative of frame fields
  const int m2 = f.margin + 4;  // second derivative level
  r.margin = m2;

  CVGrid Dzb_kappa = normal_derivative(f, f.kappa, f.margin, true);
  CVGrid Dz_kappa = normal_derivative(f, f.kappa, f.margin, false);
  CVGrid Dzb2_kappa = normal_derivative(f, Dzb_kappa, m1, true);

  // Smooth test section of the normal bundle.
  CVGrid psi = unit_normal_section(f);
  CVGrid Dz_psi = normal_derivative(f, psi, f.margin, false);
  CVGrid Dzb_psi = normal_derivative(f, psi, f.margin, true);
  CVGrid DzbDz_psi = normal_derivative(f, Dz_psi, m1, true);
  CVGrid DzDzb_psi = normal_derivative(f, Dzb_psi, m1, false);

  for (int j = m2; j < nv - m2; ++j)
    for (int i = m2; i < nu - m2; ++i) {
      const Vec& y = f.Y(i, j);
      const CVec yz = f.Yz(i, j);
      const CVec yzb = yz.conjugate();
      const Complex s = f.s(i, j);
      const CVec kappa = f.kappa(i, j);
      const CVec kbar = kappa.conjugate();
      const double k2 = f.kappa_norm2(i, j);

      // Hill / first structure line.
      r.hill = std::max(r.hill, (f.Yzz(i, j) + 0.5 * s * y.cast<Complex>() -
                                 kappa)
                                    .norm());
      // Second line: the cross-check <Y_zzb,Y_zzb> = <kappa,kappabar>.
      r.moveq2 = std::max(
          r.moveq2, (f.Yzzb(i, j).cast<Complex>() + k2 * y.cast<Complex>() -
                     0.5 * f.N(i, j).cast<Complex>())
                        .norm());
      // Third line: N_z.
      const CVec nz = wirtinger_dz(f.N, i, j, h);
      r.moveq3 = std::max(
          r.moveq3,
          (nz + 2.0 * k2 * yz + s * yzb - 2.0 * Dzb_kappa(i, j)).norm());
      // Fourth line: flat derivative of a normal section.
      const CVec psi_z = wirtinger_dz(psi, i, j, h);
      const CVec pk = psi(i, j);
      r.moveq4 = std::max(
          r.moveq4,
          (psi_z - Dz_psi(i, j) -
           2.0 * inner(pk, Dzb_kappa(i, j)) * y.cast<Complex>() +
           2.0 * inner(pk, kappa) * yzb)
              .norm());
      // Gauss. D_z kappabar = conj(D_zbar kappa).
      const Complex szb = wirtinger_dzb(f.s, i, j, h);
      const CVec dz_kbar = Dzb_kappa(i, j).conjugate();
      r.gauss = std::max(
          r.gauss, std::abs(0.5 * szb - 3.0 * inner(dz_kbar, kappa) -
                            inner(kbar, Dz_kappa(i, j))));
      // Codazzi.
      const CVec codazzi = Dzb2_kappa(i, j) + 0.5 * std::conj(s) * kappa;
      r.codazzi = std::max(r.codazzi, codazzi.imag().norm());
      // Ricci.
      const CVec ricci = DzbDz_psi(i, j) - DzDzb_psi(i, j) -
                         2.0 * inner(pk, kappa) * kbar +
                         2.0 * inner(pk, kbar) * kappa;
      r.ricci = std::max(r.ricci, ricci.norm());
    }
  return r;
}

Complex classical_schwarzian(const HolomorphicMap& m, Complex z) {
  const Complex w1 = m.dw(z);
  const Complex w2 = m.d2w(z);
  const Complex w3 = m.d3w(z);
  return w3 / w1 - 1.5 * (w2 / w1) * (w2 / w1);
}

TransformedInvariants transform_coordinate(const FrameField& f,
                                           const HolomorphicMap& map,
                                           double critical_tol) {
  TransformedInvariants out;
  const int nu = f.chart.nu, nv = f.chart.nv;
  out.s = CGrid(nu, nv, Complex(0.0));
  out.kappa = CVGrid(nu, nv, CVec::Zero(f.dim()));

  // Branch-tracked (1/w')^{1/2} along rows from the first interior point.
  CGrid root(nu, nv, Complex(0.0));
  Complex prev_row_start(0.0);
  for (int j = f.margin; j < nv - f.margin; ++j) {
    Complex prev(0.0);
    for (int i = f.margin; i < nu - f.margin; ++i) {
      const Complex z = f.chart.z(i, j);
      const Complex w1 = map.dw(z);
      if (std::abs(w1) < critical_tol)
        fail(ErrorKind::CriticalPoint, "w' = 0 on chart");
      Complex r = std::sqrt(1.0 / w1);
      const Complex ref = (i == f.margin) ? prev_row_start : prev;
      if (std::abs(ref) > 0 && std::abs(r + ref) < std::abs(r - ref)) r = -r;
      if (i == f.margin) prev_row_start = r;
      prev = r;
      root(i, j) = r;
    }
  }

  for (int j = f.margin; j < nv - f.margin; ++j)
    for (int i = f.margin; i < nu - f.margin; ++i) {
      const Complex z = f.chart.z(i, j);
      const Complex zw = 1.0 / map.dw(z);  // dz/dw
      const Complex r = root(i, j);        // (dz/dw)^{1/2}, branch tracked
      out.s(i, j) = (f.s(i, j) - classical_schwarzian(map, z)) * zw * zw;
      // (dz/dw)^{3/2} * (dzbar/dwbar)^{-1/2}
      const Complex factor = zw * r / std::conj(r);
      out.kappa(i, j) = factor * f.kappa(i, j);
    }
  return out;
}

MeanCurvatureOracle mean_curvature_oracle_s3(const Immersion& f,
                                             const FrameField& frame) {
  if (f.n != 3) fail(ErrorKind::WrongCodimension, "oracle needs n = 3");
  MeanCurvatureOracle out;
  const int nu = frame.chart.nu, nv = frame.chart.nv;
  out.H_surface = RGrid(nu, nv, 0.0);
  out.H_sphere = RGrid(nu, nv, 0.0);
  out.margin = frame.margin;

  LiftJets jets;
  const bool analytic = f.has_partials();
  if (!analytic) jets = sample_lift(f, frame.chart);

  for (int j = frame.margin; j < nv - frame.margin; ++j)
    for (int i = frame.margin; i < nu - frame.margin; ++i) {
      const Complex z = frame.chart.z(i, j);
      const double u = z.real(), v = z.imag();
      Vec x, xu, xv, xuu, xuv, xvv;
      if (analytic) {
        x = f.f(u, v);
        xu = f.fu(u, v);
        xv = f.fv(u, v);
        xuu = f.fuu(u, v);
        xuv = f.fuv(u, v);
        xvv = f.fvv(u, v);
      } else {
        x = jets.F(i, j).tail(4);
        const CVec fz = jets.Fz(i, j);
        xu = (fz + fz.conjugate()).real().tail(4);
        xv = (kI * (fz - fz.conjugate())).real().tail(4);
        const CVec fzz = jets.Fzz(i, j);
        const Vec fzzb = jets.Fzzb(i, j);
        // Recover (uu, uv, vv) from (zz, zzb).
        xuu = (fzz + fzz.conjugate()).real().tail(4) + 2.0 * fzzb.tail(4);
        xvv = -(fzz + fzz.conjugate()).real().tail(4) + 2.0 * fzzb.tail(4);
        xuv = (kI * (fzz - fzz.conjugate())).real().tail(4);
      }

      Mat vperp = frame.Vperp_basis(i, j);
      Vec S = vperp.col(0);
      const double s0 = S[0];
      Vec svec = S.tail(4);
      Vec nu_vec = svec - s0 * x;  // unit tangent normal of S^3

      const double E = xu.dot(xu), F = xu.dot(xv), G = xv.dot(xv);
      const double L = xuu.dot(nu_vec), M = xuv.dot(nu_vec),
                   Nc = xvv.dot(nu_vec);
      const double det = E * G - F * F;
      if (det < 1e-14) fail(ErrorKind::DegenerateMetric, "oracle metric");
      out.H_surface(i, j) = (L * G - 2.0 * M * F + Nc * E) / (2.0 * det);
      out.H_sphere(i, j) = s0;
    }
  return out;
}

LocalFrame eval_frame_at(const Immersion& f, Complex z0, double h) {
  Chart local;
  local.h = h;
  local.nu = 13;
  local.nv = 13;
  local.margin = 2;
  const int c = 6;
  local.origin = z0 - Complex(c * h, c * h);
  FrameField fr = build_frame(f, local);
  LocalFrame out;
  out.Y = fr.Y(c, c);
  out.N = fr.N(c, c);
  out.Yz = fr.Yz(c, c);
  out.Yzz = fr.Yzz(c, c);
  out.Yzzb = fr.Yzzb(c, c);
  out.s = fr.s(c, c);
  out.kappa = fr.kappa(c, c);
  return out;
}

}  // namespace mobius
