// Complex coordinate charts, grid fields, and Wirtinger-derivative jets.
//
// Charts are rectangular with uniform spacing; z(i,j) = origin + h*(i + I*j)
// with z = u + iv. Derivatives use 4th-order central stencils; fields carry
// a validity margin that grows by 2 per derivative level.
#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "mobius/minkowski.hpp"

namespace mobius {

struct Chart {
  Complex origin{0.0, 0.0};
  double h{1e-2};
  int nu{64};
  int nv{64};
  int margin{2};  // stencil half-width

  Complex z(int i, int j) const { return origin + Complex(h * i, h * j); }
  bool interior(int i, int j, int extra = 0) const {
    const int m = margin + extra;
    return i >= m && i < nu - m && j >= m && j < nv - m;
  }
};

// Cells at least m away from every edge (absolute margin).
inline bool in_margin(const Chart& c, int i, int j, int m) {
  return i >= m && i < c.nu - m && j >= m && j < c.nv - m;
}

template <class T>
class Grid {
 public:
  Grid() = default;
  Grid(int nu, int nv) : nu_(nu), nv_(nv), d_(static_cast<size_t>(nu) * nv) {}
  Grid(int nu, int nv, const T& init)
      : nu_(nu), nv_(nv), d_(static_cast<size_t>(nu) * nv, init) {}

  T& operator()(int i, int j) { return d_[static_cast<size_t>(j) * nu_ + i]; }
  const T& operator()(int i, int j) const {
    return d_[static_cast<size_t>(j) * nu_ + i];
  }
  int nu() const { return nu_; }
  int nv() const { return nv_; }
  bool empty() const { return d_.empty(); }

 private:
  int nu_ = 0, nv_ = 0;
  std::vector<T> d_;
};

using RGrid = Grid<double>;
using CGrid = Grid<Complex>;
using VGrid = Grid<Vec>;
using CVGrid = Grid<CVec>;

// 4th-order first and second central differences along u and v.
// Valid where the 2-cell stencil fits; callers track margins.
template <class T>
T d_u(const Grid<T>& g, int i, int j, double h) {
  return (g(i - 2, j) - 8.0 * g(i - 1, j) + 8.0 * g(i + 1, j) - g(i + 2, j)) /
         (12.0 * h);
}
template <class T>
T d_v(const Grid<T>& g, int i, int j, double h) {
  return (g(i, j - 2) - 8.0 * g(i, j - 1) + 8.0 * g(i, j + 1) - g(i, j + 2)) /
         (12.0 * h);
}
template <class T>
T d_uu(const Grid<T>& g, int i, int j, double h) {
  return (-g(i - 2, j) + 16.0 * g(i - 1, j) - 30.0 * g(i, j) +
          16.0 * g(i + 1, j) - g(i + 2, j)) /
         (12.0 * h * h);
}
template <class T>
T d_vv(const Grid<T>& g, int i, int j, double h) {
  return (-g(i, j - 2) + 16.0 * g(i, j - 1) - 30.0 * g(i, j) +
          16.0 * g(i, j + 1) - g(i, j + 2)) /
         (12.0 * h * h);
}

// Wirtinger operators on complex-valued grids: d_z = (d_u - i d_v)/2.
Complex wirtinger_dz(const CGrid& g, int i, int j, double h);
Complex wirtinger_dzb(const CGrid& g, int i, int j, double h);
CVec wirtinger_dz(const CVGrid& g, int i, int j, double h);
CVec wirtinger_dzb(const CVGrid& g, int i, int j, double h);
CVec wirtinger_dz(const VGrid& g, int i, int j, double h);
CVec wirtinger_dzb(const VGrid& g, int i, int j, double h);

// Whole-grid derivative maps. The outermost `margin+2` cells of the result
// are zero-filled and invalid.
CGrid dz_field(const CGrid& g, double h, int margin);
CGrid dzb_field(const CGrid& g, double h, int margin);
CVGrid dz_field(const CVGrid& g, double h, int margin);
CVGrid dzb_field(const CVGrid& g, double h, int margin);
CVGrid dz_field(const VGrid& g, double h, int margin);

// An immersed surface into S^n (unit sphere of R^{n+1}). Partials, when
// present, are exact; otherwise jets fall back to finite differences.
struct Immersion {
  int n = 3;
  std::function<Vec(double, double)> f;
  std::function<Vec(double, double)> fu, fv, fuu, fuv, fvv;
  bool has_partials() const { return static_cast<bool>(fu); }
};

// Order-2 jet of the flat lift F = (1, f) on a chart.
struct LiftJets {
  Chart chart;
  int n = 3;
  int margin = 0;  // extra margin on top of chart.margin (FD fallback)
  VGrid F;
  CVGrid Fz;       // F_zbar = conj(Fz)
  CVGrid Fzz;
  VGrid Fzzb;
  RGrid q;         // 2<F_z,F_zbar>, the conformal factor squared
  RGrid conformal_residual;  // |<F_z,F_z>|
};

LiftJets sample_lift(const Immersion& f, const Chart& chart);

// |<F_z,F_z>| for F = (1,f); ~0 exactly on conformal charts.
RGrid conformality_residual(const Immersion& f, const Chart& chart);

// Sup / statistics over cells at absolute margin >= m from the edges.
double sup_interior(const RGrid& g, const Chart& chart, int m);

struct FieldStats {
  double min = 0.0, max = 0.0, mean = 0.0;
};
FieldStats stats_interior(const RGrid& g, const Chart& chart, int m);

}  // namespace mobius
