// Built-in analytic test surfaces with exact low-order partials.
#pragma once

#include <string>
#include <vector>

#include "mobius/charts.hpp"

namespace mobius {

enum class SpaceForm { None, S3, R3 };

struct CatalogFlags {
  bool isothermic = false;
  bool willmore = false;
  bool swillmore = false;
  SpaceForm minimal_in = SpaceForm::None;
};

struct CatalogEntry {
  std::string name;
  Immersion immersion;
  Chart chart;  // default conformal chart
  CatalogFlags flags;
};

namespace catalog {

// sigma(x) = ((|x|^2-1)/(|x|^2+1), 2x/(|x|^2+1)); pole at infinity maps to
// (1, 0, ..., 0) in the limit.
Vec inverse_stereographic(const Vec& x);

// Order-2 jet of a map into R^m, for composing with the projection.
struct Jet2 {
  Vec x, xu, xv, xuu, xuv, xvv;
};

// Jet of sigma(x(u,v)) from the jet of x by the chain rule.
Jet2 compose_inverse_stereographic(const Jet2& in);

// Wraps an R^3-valued jet map as an immersion into S^3 with exact partials.
Immersion immersion_from_r3(std::function<Jet2(double, double)> jet);

const std::vector<std::string>& list();
CatalogEntry get(const std::string& name);

// Torus-of-revolution generator exposed for parameter studies; `ratio`
// is the (major radius)/(tube radius) ratio, > 1.
CatalogEntry torus_of_revolution(double ratio);

}  // namespace catalog
}  // namespace mobius
