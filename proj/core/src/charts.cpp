#include "mobius/charts.hpp"

namespace mobius {

namespace {
const Complex kI(0.0, 1.0);
}

Complex wirtinger_dz(const CGrid& g, int i, int j, double h) {
  return 0.5 * (d_u(g, i, j, h) - kI * d_v(g, i, j, h));
}
Complex wirtinger_dzb(const CGrid& g, int i, int j, double h) {
  return 0.5 * (d_u(g, i, j, h) + kI * d_v(g, i, j, h));
}
CVec wirtinger_dz(const CVGrid& g, int i, int j, double h) {
  return 0.5 * (d_u(g, i, j, h) - kI * d_v(g, i, j, h));
}
CVec wirtinger_dzb(const CVGrid& g, int i, int j, double h) {
  return 0.5 * (d_u(g, i, j, h) + kI * d_v(g, i, j, h));
}
CVec wirtinger_dz(const VGrid& g, int i, int j, double h) {
  return 0.5 * (d_u(g, i, j, h).cast<Complex>() -
                kI * d_v(g, i, j, h).cast<Complex>());
}
CVec wirtinger_dzb(const VGrid& g, int i, int j, double h) {
  return 0.5 * (d_u(g, i, j, h).cast<Complex>() +
                kI * d_v(g, i, j, h).cast<Complex>());
}

namespace {

template <class In, class Out, class Op>
Grid<Out> map_derivative(const Grid<In>& g, int margin, Out zero, Op op) {
  Grid<Out> out(g.nu(), g.nv(), zero);
  const int m = margin + 2;
  for (int j = m; j < g.nv() - m; ++j)
    for (int i = m; i < g.nu() - m; ++i) out(i, j) = op(i, j);
  return out;
}

}  // namespace

CGrid dz_field(const CGrid& g, double h, int margin) {
  return map_derivative(g, margin, Complex(0.0),
                        [&](int i, int j) { return wirtinger_dz(g, i, j, h); });
}
CGrid dzb_field(const CGrid& g, double h, int margin) {
  return map_derivative(g, margin, Complex(0.0), [&](int i, int j) {
    return wirtinger_dzb(g, i, j, h);
  });
}
CVGrid dz_field(const CVGrid& g, double h, int margin) {
  CVec zero = CVec::Zero(g(0, 0).size());
  return map_derivative(g, margin, zero,
                        [&](int i, int j) { return wirtinger_dz(g, i, j, h); });
}
CVGrid dzb_field(const CVGrid& g, double h, int margin) {
  CVec zero = CVec::Zero(g(0, 0).size());
  return map_derivative(g, margin, zero, [&](int i, int j) {
    return wirtinger_dzb(g, i, j, h);
  });
}
CVGrid dz_field(const VGrid& g, double h, int margin) {
  CVec zero = CVec::Zero(g(0, 0).size());
  return map_derivative(g, margin, zero,
                        [&](int i, int j) { return wirtinger_dz(g, i, j, h); });
}

LiftJets sample_lift(const Immersion& f, const Chart& chart) {
  LiftJets out;
  out.chart = chart;
  out.n = f.n;
  const int dim = f.n + 2;
  const int nu = chart.nu, nv = chart.nv;
  const double h = chart.h;

  auto lift = [&](const Vec& x) {
    Vec F(dim);
    F[0] = 1.0;
    F.tail(dim - 1) = x;
    return F;
  };
  auto lift0 = [&](const Vec& x) {
    Vec F = Vec::Zero(dim);
    F.tail(dim - 1) = x;
    return F;
  };

  out.F = VGrid(nu, nv, Vec::Zero(dim));
  for (int j = 0; j < nv; ++j)
    for (int i = 0; i < nu; ++i) {
      const Complex z = chart.z(i, j);
      out.F(i, j) = lift(f.f(z.real(), z.imag()));
    }

  VGrid Fu(nu, nv, Vec::Zero(dim)), Fv(nu, nv, Vec::Zero(dim));
  VGrid Fuu(nu, nv, Vec::Zero(dim)), Fuv(nu, nv, Vec::Zero(dim)),
      Fvv(nu, nv, Vec::Zero(dim));

  if (f.has_partials()) {
    out.margin = 0;
    for (int j = 0; j < nv; ++j)
      for (int i = 0; i < nu; ++i) {
        const Complex z = chart.z(i, j);
        const double u = z.real(), v = z.imag();
        Fu(i, j) = lift0(f.fu(u, v));
        Fv(i, j) = lift0(f.fv(u, v));
        Fuu(i, j) = lift0(f.fuu(u, v));
        Fuv(i, j) = lift0(f.fuv(u, v));
        Fvv(i, j) = lift0(f.fvv(u, v));
      }
  } else {
    out.margin = 2;
    for (int j = 2; j < nv - 2; ++j)
      for (int i = 2; i < nu - 2; ++i) {
        Fu(i, j) = d_u(out.F, i, j, h);
        Fv(i, j) = d_v(out.F, i, j, h);
        Fuu(i, j) = d_uu(out.F, i, j, h);
        Fvv(i, j) = d_vv(out.F, i, j, h);
      }
    for (int j = 4; j < nv - 4; ++j)
      for (int i = 4; i < nu - 4; ++i) Fuv(i, j) = d_v(Fu, i, j, h);
    out.margin = 4;  // Fuv costs a second level
  }

  out.Fz = CVGrid(nu, nv, CVec::Zero(dim));
  out.Fzz = CVGrid(nu, nv, CVec::Zero(dim));
  out.Fzzb = VGrid(nu, nv, Vec::Zero(dim));
  out.q = RGrid(nu, nv, 0.0);
  out.conformal_residual = RGrid(nu, nv, 0.0);

  for (int j = 0; j < nv; ++j)
    for (int i = 0; i < nu; ++i) {
      const CVec fz =
          0.5 * (Fu(i, j).cast<Complex>() - kI * Fv(i, j).cast<Complex>());
      const CVec fzz = 0.25 * (Fuu(i, j).cast<Complex>() -
                               Fvv(i, j).cast<Complex>() -
                               2.0 * kI * Fuv(i, j).cast<Complex>());
      const Vec fzzb = 0.25 * (Fuu(i, j) + Fvv(i, j));
      out.Fz(i, j) = fz;
      out.Fzz(i, j) = fzz;
      out.Fzzb(i, j) = fzzb;
      out.q(i, j) = 2.0 * std::real(inner(fz, CVec(fz.conjugate())));
      out.conformal_residual(i, j) = std::abs(inner(fz, fz));
    }
  return out;
}

RGrid conformality_residual(const Immersion& f, const Chart& chart) {
  return sample_lift(f, chart).conformal_residual;
}

double sup_interior(const RGrid& g, const Chart& chart, int m) {
  double sup = 0.0;
  for (int j = 0; j < g.nv(); ++j)
    for (int i = 0; i < g.nu(); ++i)
      if (in_margin(chart, i, j, m)) sup = std::max(sup, std::abs(g(i, j)));
  return sup;
}

FieldStats stats_interior(const RGrid& g, const Chart& chart, int m) {
  FieldStats st;
  bool first = true;
  double sum = 0.0;
  long count = 0;
  for (int j = 0; j < g.nv(); ++j)
    for (int i = 0; i < g.nu(); ++i) {
      if (!in_margin(chart, i, j, m)) continue;
      const double x = g(i, j);
      if (first) {
        st.min = st.max = x;
        first = false;
      }
      st.min = std::min(st.min, x);
      st.max = std::max(st.max, x);
      sum += x;
      ++count;
    }
  if (count > 0) st.mean = sum / static_cast<double>(count);
  return st;
}

}  // namespace mobius
