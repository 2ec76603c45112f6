#include "htx/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace htx {

ParamCurve make_circle() {
  ParamCurve c;
  c.name = "circle";
  c.position = [](double t) { return Vec2(std::cos(t), std::sin(t)); };
  c.d1 = [](double t) { return Vec2(-std::sin(t), std::cos(t)); };
  c.d2 = [](double t) { return Vec2(-std::cos(t), -std::sin(t)); };
  c.d3 = [](double t) { return Vec2(std::sin(t), -std::cos(t)); };
  return c;
}

ParamCurve make_kite() {
  ParamCurve c;
  c.name = "kite";
  c.position = [](double t) {
    return Vec2(std::cos(t) + 0.65 * std::cos(2 * t) - 0.65, 1.5 * std::sin(t));
  };
  c.d1 = [](double t) {
    return Vec2(-std::sin(t) - 1.3 * std::sin(2 * t), 1.5 * std::cos(t));
  };
  c.d2 = [](double t) {
    return Vec2(-std::cos(t) - 2.6 * std::cos(2 * t), -1.5 * std::sin(t));
  };
  c.d3 = [](double t) {
    return Vec2(std::sin(t) + 5.2 * std::sin(2 * t), -1.5 * std::cos(t));
  };
  return c;
}

namespace {
double cav_y(double t) { return std::sin(t) + std::sin(2 * t) + 0.5 * std::sin(3 * t); }
double cav_y1(double t) { return std::cos(t) + 2 * std::cos(2 * t) + 1.5 * std::cos(3 * t); }
double cav_y2(double t) { return -std::sin(t) - 4 * std::sin(2 * t) - 4.5 * std::sin(3 * t); }
double cav_y3(double t) { return -std::cos(t) - 8 * std::cos(2 * t) - 13.5 * std::cos(3 * t); }
double cav_s(double t) {
  return -4 * std::sin(t) + 7 * std::sin(2 * t) - 6 * std::sin(3 * t) + 2 * std::sin(4 * t);
}
double cav_s1(double t) {
  return -4 * std::cos(t) + 14 * std::cos(2 * t) - 18 * std::cos(3 * t) + 8 * std::cos(4 * t);
}
double cav_s2(double t) {
  return 4 * std::sin(t) - 28 * std::sin(2 * t) + 54 * std::sin(3 * t) - 32 * std::sin(4 * t);
}
double cav_s3(double t) {
  return 4 * std::cos(t) - 56 * std::cos(2 * t) + 162 * std::cos(3 * t) - 128 * std::cos(4 * t);
}
} // namespace

ParamCurve make_cavity() {
  ParamCurve c;
  c.name = "cavity";
  c.position = [](double t) {
    return Vec2((std::cos(t) + 2 * std::cos(2 * t)) / 2.5,
                cav_y(t) / 2.0 - cav_s(t) / 48.0);
  };
  c.d1 = [](double t) {
    return Vec2((-std::sin(t) - 4 * std::sin(2 * t)) / 2.5,
                cav_y1(t) / 2.0 - cav_s1(t) / 48.0);
  };
  c.d2 = [](double t) {
    return Vec2((-std::cos(t) - 8 * std::cos(2 * t)) / 2.5,
                cav_y2(t) / 2.0 - cav_s2(t) / 48.0);
  };
  c.d3 = [](double t) {
    return Vec2((std::sin(t) + 16 * std::sin(2 * t)) / 2.5,
                cav_y3(t) / 2.0 - cav_s3(t) / 48.0);
  };
  return c;
}

ParamCurve curve_by_name(const std::string& name) {
  if (name == "circle") return make_circle();
  if (name == "kite") return make_kite();
  if (name == "cavity") return make_cavity();
  throw std::invalid_argument("unknown geometry: " + name);
}

NodeSet sample(const ParamCurve& curve, int n) {
  if (n < 8) throw std::invalid_argument("sample: need n >= 8");
  NodeSet s;
  s.n = n;
  const int m = 2 * n;
  s.t.resize(m);
  s.x.resize(2, m);
  s.xp.resize(2, m);
  s.xpp.resize(2, m);
  s.xppp.resize(2, m);
  s.jac.resize(m);
  s.normal.resize(2, m);

  const double h = kPi / n;
  double area2 = 0.0;
  for (int j = 0; j < m; ++j) {
    double tj = h * j;
    s.t[j] = tj;
    Vec2 p = curve.position(tj), v = curve.d1(tj);
    s.x.col(j) = p;
    s.xp.col(j) = v;
    s.xpp.col(j) = curve.d2(tj);
    s.xppp.col(j) = curve.d3(tj);
    double a = v.norm();
    if (!(a > 0))
      throw std::invalid_argument("sample: parametrization is singular at a node");
    s.jac[j] = a;
    area2 += p.x() * v.y() - p.y() * v.x();
  }
  s.orientation = (area2 >= 0.0) ? 1.0 : -1.0;
  for (int j = 0; j < m; ++j) {
    Vec2 v = s.xp.col(j);
    s.normal.col(j) = s.orientation * Vec2(v.y(), -v.x()) / s.jac[j];
  }
  return s;
}

} // namespace htx
