#include "qumond/density.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "qumond/counterexamples.hpp"

namespace qumond::density {

namespace {

double primitive_value(const Primitive& p, double x, double y, double z) {
  const double dx = x - p.center.x, dy = y - p.center.y, dz = z - p.center.z;
  const double r2 = dx * dx + dy * dy + dz * dz;
  if (p.kind == Primitive::Kind::UniformBall)
    return r2 < p.p1 * p.p1 ? p.p0 : 0.0;
  // gaussian with total mass p0, width p1
  const double s2 = p.p1 * p.p1;
  const double norm = p.p0 / std::pow(2.0 * std::numbers::pi * s2, 1.5);
  return norm * std::exp(-0.5 * r2 / s2);
}

double primitive_mass(const Primitive& p) {
  if (p.kind == Primitive::Kind::UniformBall)
    return p.p0 * 4.0 / 3.0 * std::numbers::pi * p.p1 * p.p1 * p.p1;
  return p.p0;
}

bool primitive_centered(const Primitive& p) {
  return p.center.x == 0.0 && p.center.y == 0.0 && p.center.z == 0.0;
}

}  // namespace

bool DensityModel::is_spherical() const {
  switch (kind) {
    case Kind::Zero:
    case Kind::Dyadic:
    case Kind::Signed:
    case Kind::Profile:
      return true;
    case Kind::Primitives:
      for (const Primitive& p : primitives)
        if (!primitive_centered(p)) return false;
      return true;
  }
  return false;
}

double DensityModel::total_mass() const {
  switch (kind) {
    case Kind::Zero:
      return 0.0;
    case Kind::Dyadic:
      return counterexamples::DyadicDensity(dyadic_n).total_mass();
    case Kind::Signed:
      return 0.0;
    case Kind::Profile:
      return spherical::SphericalModel::from_profile(profile_data).total_mass;
    case Kind::Primitives: {
      double m = 0.0;
      for (const Primitive& p : primitives) m += primitive_mass(p);
      return m;
    }
  }
  return 0.0;
}

double DensityModel::support_radius() const {
  switch (kind) {
    case Kind::Zero:
      return 0.0;
    case Kind::Dyadic:
      return 1.0 + 1.0 / dyadic_n;
    case Kind::Signed:
      return counterexamples::SignedDensity(signed_N).model().support_radius;
    case Kind::Profile:
      return spherical::SphericalModel::from_profile(profile_data).support_radius;
    case Kind::Primitives: {
      double r = 0.0;
      for (const Primitive& p : primitives) {
        const double c = std::sqrt(p.center.x * p.center.x + p.center.y * p.center.y +
                                   p.center.z * p.center.z);
        // gaussian support taken as 6 sigma for box-sizing purposes
        r = std::max(r, c + (p.kind == Primitive::Kind::UniformBall ? p.p1 : 6.0 * p.p1));
      }
      return r;
    }
  }
  return 0.0;
}

double DensityModel::value(const Vec3& x) const {
  const double r = std::sqrt(x.x * x.x + x.y * x.y + x.z * x.z);
  switch (kind) {
    case Kind::Zero:
      return 0.0;
    case Kind::Dyadic:
      return counterexamples::DyadicDensity(dyadic_n).rho(r);
    case Kind::Signed:
      return counterexamples::SignedDensity(signed_N).rho(r);
    case Kind::Profile:
      return r > profile_data.radii().back() ? 0.0 : profile_data.interpolate(r);
    case Kind::Primitives: {
      double v = 0.0;
      for (const Primitive& p : primitives) v += primitive_value(p, x.x, x.y, x.z);
      return v;
    }
  }
  return 0.0;
}

ScalarGrid DensityModel::sample_grid(int n, double half_width) const {
  ScalarGrid g(n, half_width);
  const double h = g.spacing();
  // uniform balls (and the dyadic indicator) have jump discontinuities:
  // antialias any cell the discontinuity might cross by 4^3 subsampling
  const int sub = 4;
  const bool sharp = kind == Kind::Dyadic ||
                     (kind == Kind::Primitives && [this] {
                       for (const Primitive& p : primitives)
                         if (p.kind == Primitive::Kind::UniformBall) return true;
                       return false;
                     }());
#pragma omp parallel for collapse(2) schedule(static)
  for (int iz = 0; iz < n; ++iz) {
    for (int iy = 0; iy < n; ++iy) {
      for (int ix = 0; ix < n; ++ix) {
        const double x = g.coord(ix), y = g.coord(iy), z = g.coord(iz);
        if (!sharp) {
          g.at(ix, iy, iz) = value({x, y, z});
          continue;
        }
        double acc = 0.0;
        for (int a = 0; a < sub; ++a)
          for (int b = 0; b < sub; ++b)
            for (int c = 0; c < sub; ++c)
              acc += value({x + (a + 0.5) / sub * h - 0.5 * h,
                            y + (b + 0.5) / sub * h - 0.5 * h,
                            z + (c + 0.5) / sub * h - 0.5 * h});
        g.at(ix, iy, iz) = acc / (sub * sub * sub);
      }
    }
  }
  return g;
}

RadialProfile DensityModel::sample_profile(const std::vector<double>& radii) const {
  if (!is_spherical())
    throw std::invalid_argument("sample_profile: density is not spherically symmetric");
  std::vector<double> values(radii.size());
  for (std::size_t i = 0; i < radii.size(); ++i) values[i] = value({radii[i], 0.0, 0.0});
  return RadialProfile(radii, std::move(values));
}

spherical::SphericalModel DensityModel::spherical_model() const {
  if (!is_spherical())
    throw std::invalid_argument("spherical_model: density is not spherically symmetric");
  switch (kind) {
    case Kind::Dyadic:
      return counterexamples::DyadicDensity(dyadic_n).model();
    case Kind::Signed:
      return counterexamples::SignedDensity(signed_N).model();
    case Kind::Profile:
      return spherical::SphericalModel::from_profile(profile_data);
    case Kind::Zero: {
      spherical::SphericalModel m;
      m.rho = [](double) { return 0.0; };
      m.mass = [](double) { return 0.0; };
      return m;
    }
    case Kind::Primitives: {
      spherical::SphericalModel m;
      std::vector<Primitive> prims = primitives;
      m.rho = [prims](double r) {
        double v = 0.0;
        for (const Primitive& p : prims) v += primitive_value(p, r, 0.0, 0.0);
        return v;
      };
      m.mass = [prims](double r) {
        double acc = 0.0;
        for (const Primitive& p : prims) {
          if (p.kind == Primitive::Kind::UniformBall) {
            const double rc = std::min(r, p.p1);
            acc += p.p0 * 4.0 / 3.0 * std::numbers::pi * rc * rc * rc;
          } else {
            // mass inside r of a Gaussian: M [erf(t/sqrt2) - sqrt(2/pi) t e^{-t^2/2}]
            const double t = r / p.p1;
            acc += p.p0 * (std::erf(t / std::numbers::sqrt2) -
                           std::sqrt(2.0 / std::numbers::pi) * t * std::exp(-0.5 * t * t));
          }
        }
        return acc;
      };
      m.total_mass = total_mass();
      m.support_radius = support_radius();
      return m;
    }
  }
  throw std::logic_error("spherical_model: unreachable");
}

namespace {

std::vector<double> parse_numbers(const std::string& s, const std::string& what) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t pos = 0;
    double v;
    try {
      v = std::stod(tok, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("density: bad number '" + tok + "' in " + what);
    }
    if (pos != tok.size())
      throw std::invalid_argument("density: bad number '" + tok + "' in " + what);
    out.push_back(v);
  }
  return out;
}

Primitive parse_primitive(const std::string& name, const std::string& args) {
  Primitive p;
  if (name == "uniform-ball")
    p.kind = Primitive::Kind::UniformBall;
  else if (name == "gaussian")
    p.kind = Primitive::Kind::Gaussian;
  else
    throw std::invalid_argument("density: unknown primitive '" + name + "'");
  const std::vector<double> v = parse_numbers(args, name);
  if (v.size() != 2 && v.size() != 5)
    throw std::invalid_argument("density: " + name + " takes 2 or 5 parameters");
  p.p0 = v[0];
  p.p1 = v[1];
  if (!(p.p1 > 0.0))
    throw std::invalid_argument("density: " + name + " size parameter must be positive");
  if (v.size() == 5) p.center = {v[2], v[3], v[4]};
  return p;
}

}  // namespace

DensityModel parse_density(const std::string& spec) {
  DensityModel model;
  if (spec.empty()) throw std::invalid_argument("density: empty spec");
  if (spec == "zero") return model;

  std::stringstream ss(spec);
  std::string term;
  bool first = true;
  while (std::getline(ss, term, '+')) {
    const std::size_t colon = term.find(':');
    const std::string name = term.substr(0, colon);
    const std::string args = colon == std::string::npos ? "" : term.substr(colon + 1);
    if (name == "dyadic" || name == "signed" || name == "profile") {
      if (!first || ss.rdbuf()->in_avail() > 0)
        throw std::invalid_argument("density: '" + name + "' cannot be part of a sum");
      if (name == "profile") {
        if (args.empty()) throw std::invalid_argument("density: profile needs a file path");
        model.kind = DensityModel::Kind::Profile;
        model.profile_data = read_radial_csv(args);
        return model;
      }
      const std::vector<double> v = parse_numbers(args, name);
      if (v.size() != 1 || v[0] != std::floor(v[0]) || v[0] < 1)
        throw std::invalid_argument("density: '" + name + "' takes one positive integer");
      if (name == "dyadic") {
        model.kind = DensityModel::Kind::Dyadic;
        model.dyadic_n = static_cast<int>(v[0]);
      } else {
        model.kind = DensityModel::Kind::Signed;
        model.signed_N = static_cast<int>(v[0]);
      }
      return model;
    }
    model.primitives.push_back(parse_primitive(name, args));
    first = false;
  }
  if (model.primitives.empty()) throw std::invalid_argument("density: empty spec");
  model.kind = DensityModel::Kind::Primitives;
  return model;
}

}  // namespace qumond::density
