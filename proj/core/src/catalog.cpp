#include "mobius/catalog.hpp"

#include <cmath>

namespace mobius {
namespace catalog {

Vec inverse_stereographic(const Vec& x) {
  const int m = static_cast<int>(x.size());
  const double r2 = x.squaredNorm();
  const double d = 1.0 + r2;
  Vec out(m + 1);
  out[0] = (r2 - 1.0) / d;
  out.tail(m) = (2.0 / d) * x;
  return out;
}

Jet2 compose_inverse_stereographic(const Jet2& in) {
  const int m = static_cast<int>(in.x.size());
  const double r2 = in.x.squaredNorm();
  const double d = 1.0 + r2;
  const double du = 2.0 * in.x.dot(in.xu);
  const double dv = 2.0 * in.x.dot(in.xv);
  const double duu = 2.0 * (in.xu.dot(in.xu) + in.x.dot(in.xuu));
  const double duv = 2.0 * (in.xu.dot(in.xv) + in.x.dot(in.xuv));
  const double dvv = 2.0 * (in.xv.dot(in.xv) + in.x.dot(in.xvv));

  Jet2 out;
  out.x = Vec(m + 1);
  out.xu = Vec(m + 1);
  out.xv = Vec(m + 1);
  out.xuu = Vec(m + 1);
  out.xuv = Vec(m + 1);
  out.xvv = Vec(m + 1);

  // First coordinate: 1 - 2/d.
  out.x[0] = (r2 - 1.0) / d;
  out.xu[0] = 2.0 * du / (d * d);
  out.xv[0] = 2.0 * dv / (d * d);
  out.xuu[0] = 2.0 * duu / (d * d) - 4.0 * du * du / (d * d * d);
  out.xuv[0] = 2.0 * duv / (d * d) - 4.0 * du * dv / (d * d * d);
  out.xvv[0] = 2.0 * dvv / (d * d) - 4.0 * dv * dv / (d * d * d);

  // Remaining coordinates: 2x/d.
  out.x.tail(m) = (2.0 / d) * in.x;
  out.xu.tail(m) = (2.0 / d) * in.xu - (2.0 * du / (d * d)) * in.x;
  out.xv.tail(m) = (2.0 / d) * in.xv - (2.0 * dv / (d * d)) * in.x;
  out.xuu.tail(m) = (2.0 / d) * in.xuu - (4.0 * du / (d * d)) * in.xu -
                    (2.0 * duu / (d * d)) * in.x +
                    (4.0 * du * du / (d * d * d)) * in.x;
  out.xuv.tail(m) = (2.0 / d) * in.xuv - (2.0 * du / (d * d)) * in.xv -
                    (2.0 * dv / (d * d)) * in.xu -
                    (2.0 * duv / (d * d)) * in.x +
                    (4.0 * du * dv / (d * d * d)) * in.x;
  out.xvv.tail(m) = (2.0 / d) * in.xvv - (4.0 * dv / (d * d)) * in.xv -
                    (2.0 * dvv / (d * d)) * in.x +
                    (4.0 * dv * dv / (d * d * d)) * in.x;
  return out;
}

Immersion immersion_from_r3(std::function<Jet2(double, double)> jet) {
  Immersion im;
  im.n = 3;
  auto at = [jet](double u, double v) {
    return compose_inverse_stereographic(jet(u, v));
  };
  im.f = [at](double u, double v) { return at(u, v).x; };
  im.fu = [at](double u, double v) { return at(u, v).xu; };
  im.fv = [at](double u, double v) { return at(u, v).xv; };
  im.fuu = [at](double u, double v) { return at(u, v).xuu; };
  im.fuv = [at](double u, double v) { return at(u, v).xuv; };
  im.fvv = [at](double u, double v) { return at(u, v).xvv; };
  return im;
}

namespace {

Vec v3(double a, double b, double c) {
  Vec x(3);
  x << a, b, c;
  return x;
}

Jet2 plane_jet(double u, double v) {
  Jet2 j;
  j.x = v3(u, v, 0.0);
  j.xu = v3(1, 0, 0);
  j.xv = v3(0, 1, 0);
  j.xuu = v3(0, 0, 0);
  j.xuv = v3(0, 0, 0);
  j.xvv = v3(0, 0, 0);
  return j;
}

Jet2 cylinder_jet(double u, double v) {
  Jet2 j;
  j.x = v3(std::cos(u), std::sin(u), v);
  j.xu = v3(-std::sin(u), std::cos(u), 0.0);
  j.xv = v3(0, 0, 1);
  j.xuu = v3(-std::cos(u), -std::sin(u), 0.0);
  j.xuv = v3(0, 0, 0);
  j.xvv = v3(0, 0, 0);
  return j;
}

// Scaled catenoid; the scale keeps high-order derivatives of the lift small
// on the default chart.
Jet2 catenoid_jet(double u, double v) {
  const double a = 0.4;
  const double ch = std::cosh(v), sh = std::sinh(v);
  const double cu = std::cos(u), su = std::sin(u);
  Jet2 j;
  j.x = a * v3(ch * cu, ch * su, v);
  j.xu = a * v3(-ch * su, ch * cu, 0.0);
  j.xv = a * v3(sh * cu, sh * su, 1.0);
  j.xuu = a * v3(-ch * cu, -ch * su, 0.0);
  j.xuv = a * v3(-sh * su, sh * cu, 0.0);
  j.xvv = a * v3(ch * cu, ch * su, 0.0);
  return j;
}

Jet2 enneper_jet(double u, double v) {
  const double a = 0.6;
  Jet2 j;
  j.x = a * v3(u - u * u * u / 3.0 + u * v * v, -v + v * v * v / 3.0 - u * u * v,
               u * u - v * v);
  j.xu = a * v3(1.0 - u * u + v * v, -2.0 * u * v, 2.0 * u);
  j.xv = a * v3(2.0 * u * v, -1.0 + v * v - u * u, -2.0 * v);
  j.xuu = a * v3(-2.0 * u, -2.0 * v, 2.0);
  j.xuv = a * v3(2.0 * v, -2.0 * u, 0.0);
  j.xvv = a * v3(2.0 * u, 2.0 * v, -2.0);
  return j;
}

Immersion clifford_immersion() {
  Immersion im;
  im.n = 3;
  const double s = 1.0 / std::sqrt(2.0);
  auto mk = [s](double u, double v, int du, int dv) {
    auto trig = [](double t, int d) {
      switch (d & 3) {
        case 0: return std::cos(t);
        case 1: return -std::sin(t);
        case 2: return -std::cos(t);
        default: return std::sin(t);
      }
    };
    Vec x(4);
    if (dv == 0) {
      x[0] = trig(u, du);
      x[1] = trig(u, du + 3);  // derivative order du of sin(u)
    } else {
      x[0] = 0.0;
      x[1] = 0.0;
    }
    if (du == 0) {
      x[2] = trig(v, dv);
      x[3] = trig(v, dv + 3);
    } else {
      x[2] = 0.0;
      x[3] = 0.0;
    }
    return Vec(s * x);
  };
  im.f = [mk](double u, double v) { return mk(u, v, 0, 0); };
  im.fu = [mk](double u, double v) { return mk(u, v, 1, 0); };
  im.fv = [mk](double u, double v) { return mk(u, v, 0, 1); };
  im.fuu = [mk](double u, double v) { return mk(u, v, 2, 0); };
  im.fuv = [mk](double, double) { return Vec(Vec::Zero(4)); };
  im.fvv = [mk](double u, double v) { return mk(u, v, 0, 2); };
  return im;
}

Chart centered_chart(Complex center, double h, int nu, int nv) {
  Chart c;
  c.h = h;
  c.nu = nu;
  c.nv = nv;
  c.margin = 2;
  c.origin = center - Complex(h * (nu - 1) / 2.0, h * (nv - 1) / 2.0);
  return c;
}

}  // namespace

CatalogEntry torus_of_revolution(double ratio) {
  if (!(ratio > 1.0)) fail(ErrorKind::InvalidInput, "torus ratio must be > 1");
  const double a = ratio;
  const double k = std::sqrt(a * a - 1.0);
  // Isothermal profile angle: phi' = a + cos(phi), phi(0) = 0.
  auto jet = [a, k](double u, double v) {
    const double t = std::tan(0.5 * k * v);
    const double phi = 2.0 * std::atan(std::sqrt((a + 1.0) / (a - 1.0)) * t);
    const double cp = std::cos(phi), sp = std::sin(phi);
    const double w = a + cp;       // = phi'
    const double wp = -sp * w;     // = phi''
    const double cu = std::cos(u), su = std::sin(u);
    Jet2 j;
    j.x = v3(w * cu, w * su, sp);
    j.xu = v3(-w * su, w * cu, 0.0);
    j.xv = v3(-sp * w * cu, -sp * w * su, cp * w);
    j.xuu = v3(-w * cu, -w * su, 0.0);
    j.xuv = v3(sp * w * su, -sp * w * cu, 0.0);
    // d/dv of xv: use phi'' = wp and product rule.
    j.xvv = v3(-(cp * w * w + sp * wp) * cu, -(cp * w * w + sp * wp) * su,
               -sp * w * w + cp * wp);
    return j;
  };
  CatalogEntry e;
  e.name = "torus_of_revolution";
  e.immersion = immersion_from_r3(jet);
  e.chart = centered_chart(Complex(0.08, 0.06), 1e-2, 64, 64);
  e.flags.isothermic = true;
  e.flags.willmore = false;
  return e;
}

const std::vector<std::string>& list() {
  static const std::vector<std::string> names = {
      "round_sphere",  "clifford_torus", "cylinder",
      "torus_of_revolution", "catenoid_s3", "enneper_s3"};
  return names;
}

CatalogEntry get(const std::string& name) {
  CatalogEntry e;
  e.name = name;
  if (name == "round_sphere") {
    e.immersion = immersion_from_r3(plane_jet);
    e.chart = centered_chart(Complex(0.07, 0.05), 1e-2, 64, 64);
    e.flags.isothermic = true;
    e.flags.willmore = true;
    e.flags.swillmore = true;
    e.flags.minimal_in = SpaceForm::S3;
    return e;
  }
  if (name == "clifford_torus") {
    e.immersion = clifford_immersion();
    e.chart = centered_chart(Complex(0.3, 0.2), 1e-2, 64, 64);
    e.flags.isothermic = true;
    e.flags.willmore = true;
    e.flags.swillmore = true;
    e.flags.minimal_in = SpaceForm::S3;
    return e;
  }
  if (name == "cylinder") {
    e.immersion = immersion_from_r3(cylinder_jet);
    e.chart = centered_chart(Complex(0.2, 0.1), 1e-2, 64, 64);
    e.flags.isothermic = true;
    return e;
  }
  if (name == "torus_of_revolution") return torus_of_revolution(3.0);
  if (name == "catenoid_s3") {
    e.immersion = immersion_from_r3(catenoid_jet);
    e.chart = centered_chart(Complex(0.15, 0.1), 1e-2, 64, 64);
    e.flags.isothermic = true;
    e.flags.willmore = true;
    e.flags.swillmore = true;
    e.flags.minimal_in = SpaceForm::R3;
    return e;
  }
  if (name == "enneper_s3") {
    e.immersion = immersion_from_r3(enneper_jet);
    e.chart = centered_chart(Complex(0.1, 0.08), 1e-2, 64, 64);
    e.flags.isothermic = true;
    e.flags.willmore = true;
    e.flags.swillmore = true;
    e.flags.minimal_in = SpaceForm::R3;
    return e;
  }
  fail(ErrorKind::UnknownSurface, name);
}

}  // namespace catalog
}  // namespace mobius
