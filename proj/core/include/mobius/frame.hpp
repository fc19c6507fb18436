// Canonical lift and Moebius frame of a conformal immersion.
//
// The frame satisfies, pointwise:
//   <Y,Y> = 0,  Y forward,  <Y_z,Y_z> = 0,  <Y_z,Y_zbar> = 1/2,
//   <N,N> = 0,  <N,Y> = -1,  <N,Y_z> = 0,
// and the Hill equation Y_zz + (s/2) Y = kappa defines the Schwarzian s and
// the normal-valued Hopf differential kappa.
//
// Second-order jets of Y come from one finite-difference level on the
// analytic first-order jets. After the raw consistency checks, the jets are
// nudged back onto the exact constraint set (the corrections live inside the
// truncation error); raw residuals are kept for diagnostics, and the
// structure-equation residuals below remain honest finite-difference
// content.
#pragma once

#include <optional>

#include "mobius/charts.hpp"

namespace mobius {

struct JetDiagnostics {
  double y_yzzb = 0.0;        // sup |<Y,Y_zzb> + 1/2| before polishing
  double yz_yzzb = 0.0;       // sup |<Y_z,Y_zzb>|
  double y_yzz = 0.0;         // sup |<Y,Y_zz>|
  double yz_yzz = 0.0;        // sup |<Y_z,Y_zz>|
  double yzb_yzz = 0.0;       // sup |<Y_zbar,Y_zz>|
  double conformality = 0.0;  // sup |<F_z,F_z>|
};

struct FrameField {
  Chart chart;
  int n = 3;
  int margin = 2;  // absolute cell margin where frame fields are valid

  VGrid Y;
  CVGrid Yz;    // Y_zbar = conj(Y_z)
  CVGrid Yzz;
  VGrid Yzzb;
  VGrid N;
  CGrid s;
  CVGrid kappa;
  RGrid kappa_norm2;  // <kappa, conj kappa>, real >= 0

  JetDiagnostics raw;

  int dim() const { return n + 2; }
  CVec yzb(int i, int j) const { return Yz(i, j).conjugate(); }
  Vec yu(int i, int j) const { return 2.0 * Yz(i, j).real(); }
  Vec yv(int i, int j) const { return -2.0 * Yz(i, j).imag(); }

  // V = span{Y, Y_u, Y_v, N} and its spacelike complement.
  Mat V_basis(int i, int j) const;
  Mat Vperp_basis(int i, int j) const;

  // Projection of an ambient vector onto the normal bundle at (i,j),
  // using the exact frame relations.
  CVec project_normal(int i, int j, const CVec& w) const;
  CVec project_tangent(int i, int j, const CVec& w) const;
};

// Stages of the frame construction. build_frame composes them.
FrameField canonical_lift(const LiftJets& jets, double conformal_tol = 1e-6);
void frame_N(FrameField& f, double degenerate_tol = 1e-2);
void schwarzian_hopf(FrameField& f);

FrameField build_frame(const Immersion& f, const Chart& chart);
FrameField build_frame(const LiftJets& jets);

struct SphereCongruence {
  Mat V;      // rank 4, signature (3,1)
  Mat Vperp;  // rank n-2, spacelike
};

// Central sphere congruence at a grid point; validates signatures.
SphereCongruence central_sphere(const FrameField& f, int i, int j);

// Normal connection: D psi = normal projection of the flat derivative.
// Fields valid on margin(frame)+2. NotNormal when psi has a V-component.
CVGrid normal_dz(const FrameField& f, const CVGrid& psi, int psi_margin,
                 double normal_tol = 1e-6);
CVGrid normal_dzb(const FrameField& f, const CVGrid& psi, int psi_margin,
                  double normal_tol = 1e-6);
CVGrid normal_dz(const FrameField& f, const VGrid& psi, int psi_margin,
                 double normal_tol = 1e-6);
CVGrid normal_dzb(const FrameField& f, const VGrid& psi, int psi_margin,
                  double normal_tol = 1e-6);

// A smooth unit section of the normal bundle (sign-aligned across the grid).
CVGrid unit_normal_section(const FrameField& f);

struct StructureResiduals {
  // Sup norms over the common interior.
  double hill = 0.0;       // Y_zz + (s/2)Y - kappa
  double moveq2 = 0.0;     // Y_zzb + <k,kbar>Y - N/2
  double moveq3 = 0.0;     // N_z + 2<k,kbar>Y_z + s Y_zbar - 2 D_zb kappa
  double moveq4 = 0.0;     // psi_z - D_z psi - 2<psi,D_zb k>Y + 2<psi,k>Y_zb
  double gauss = 0.0;      // s_zb/2 - 3<D_z kbar,k> - <kbar, D_z k>
  double codazzi = 0.0;    // Im(D_zb D_zb k + (sbar/2) k)
  double ricci = 0.0;      // R^D psi - 2<psi,k>kbar + 2<psi,kbar>k
  int margin = 0;          // absolute margin the sup norms were taken over
};

StructureResiduals structure_residuals(const FrameField& f);

// Moebius invariants under a holomorphic coordinate change w(z), evaluated
// at the original grid points. The map supplies w', w'', w''' analytically.
struct HolomorphicMap {
  std::function<Complex(Complex)> w, dw, d2w, d3w;
};

// Classical Schwarzian derivative S_z(w) = w'''/w' - (3/2)(w''/w')^2.
Complex classical_schwarzian(const HolomorphicMap& m, Complex z);

struct TransformedInvariants {
  CGrid s;      // s' = (s - S_z(w)) / w'^2
  CVGrid kappa; // kappa' = kappa * (1/w')^{3/2} * conj(1/w')^{-1/2}
};

TransformedInvariants transform_coordinate(const FrameField& f,
                                           const HolomorphicMap& map,
                                           double critical_tol = 1e-12);

// n=3 mean-curvature comparison: the surface's mean curvature in the round
// S^3 metric against the central sphere's, at each tangent point. The
// sphere {p . svec = s0} with (s0, svec) a unit spacelike vector has mean
// curvature of magnitude |s0|.
struct MeanCurvatureOracle {
  RGrid H_surface;
  RGrid H_sphere;
  int margin = 0;
};
MeanCurvatureOracle mean_curvature_oracle_s3(const Immersion& f,
                                             const FrameField& frame);

// Frame data at one arbitrary point, built from a local stencil around it.
struct LocalFrame {
  Vec Y, N;
  CVec Yz, Yzz;
  Vec Yzzb;
  Complex s;
  CVec kappa;
};
LocalFrame eval_frame_at(const Immersion& f, Complex z0, double h);

}  // namespace mobius
