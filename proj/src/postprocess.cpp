#include "htx/postprocess.hpp"

#include "htx/specfun.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace htx {

FarField far_field(const NodeSet& nodes, double k1, const CVector& mu,
                   const CVector& sigma, int directions) {
  if (directions < 360)
    throw std::invalid_argument("far_field: need at least 360 directions");
  if (mu.size() != nodes.size() || sigma.size() != nodes.size())
    throw std::invalid_argument("far_field: density size mismatch");
  FarField ff;
  ff.angles.resize(directions);
  ff.amplitude.resize(directions);
  const Complex pref = std::exp(0.25 * kI * kPi) / std::sqrt(8.0 * kPi * k1);
  const double w = kPi / nodes.n;
  for (int i = 0; i < directions; ++i) {
    double theta = 2.0 * kPi * i / directions;
    Vec2 xhat(std::cos(theta), std::sin(theta));
    Complex acc = 0.0;
    for (int j = 0; j < nodes.size(); ++j) {
      Complex phase = std::exp(-kI * k1 * xhat.dot(nodes.x.col(j)));
      Complex dip = -kI * k1 * xhat.dot(nodes.normal.col(j)) * mu[j];
      acc += (dip - sigma[j]) * phase * nodes.jac[j];
    }
    ff.angles[i] = theta;
    ff.amplitude[i] = pref * w * acc;
  }
  return ff;
}

double far_field_error(const FarField& a, const FarField& b) {
  if (a.angles.size() != b.angles.size())
    throw std::invalid_argument("far_field_error: direction grids differ");
  if ((a.angles - b.angles).cwiseAbs().maxCoeff() > 1e-12)
    throw std::invalid_argument("far_field_error: direction grids differ");
  return (a.amplitude - b.amplitude).cwiseAbs().maxCoeff();
}

bool point_inside(const NodeSet& nodes, Vec2 p) {
  // winding number of the sampled boundary around p by the trapezoid rule
  double acc = 0.0;
  for (int j = 0; j < nodes.size(); ++j) {
    Vec2 d = nodes.x.col(j) - p;
    Vec2 v = nodes.xp.col(j);
    acc += (d.x() * v.y() - d.y() * v.x()) / d.squaredNorm();
  }
  double winding = acc * (kPi / nodes.n) / (2.0 * kPi) * nodes.orientation;
  return std::abs(winding) > 0.5;
}

NearFieldResult near_field(const NodeSet& nodes, double k1, double k2,
                           const FieldDensities& dens, const std::vector<Vec2>& points) {
  NearFieldResult out;
  const double w = kPi / nodes.n;
  for (Vec2 p : points) {
    double dist = 1e300;
    int nearest = 0;
    for (int j = 0; j < nodes.size(); ++j) {
      double d = (nodes.x.col(j) - p).norm();
      if (d < dist) {
        dist = d;
        nearest = j;
      }
    }
    // three local node spacings of clearance
    if (dist < 3.0 * w * nodes.jac[nearest])
      throw std::invalid_argument("near_field: point too close to the boundary");
    bool inside = point_inside(nodes, p);
    double k = inside ? k2 : k1;
    Complex acc = 0.0;
    for (int j = 0; j < nodes.size(); ++j) {
      Vec2 d = p - nodes.x.col(j);
      double r = d.norm();
      auto b = specfun::bessel01(Complex(k * r, 0.0));
      Complex G = 0.25 * kI * b.h0;
      Complex dG = 0.25 * kI * k * b.h1 * d.dot(nodes.normal.col(j)) / r;
      if (inside)
        acc += (-dG * dens.mu2[j] + G * dens.sigma2[j]) * nodes.jac[j];
      else
        acc += (dG * dens.mu[j] - G * dens.sigma[j]) * nodes.jac[j];
    }
    out.values.push_back(w * acc);
    out.interior.push_back(inside);
  }
  return out;
}

void write_far_field_csv(const FarField& ff, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  f << "angle,re,im,abs\n";
  char buf[160];
  for (int i = 0; i < ff.angles.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.12g,%.14e,%.14e,%.14e\n", ff.angles[i],
                  ff.amplitude[i].real(), ff.amplitude[i].imag(),
                  std::abs(ff.amplitude[i]));
    f << buf;
  }
}

} // namespace htx
