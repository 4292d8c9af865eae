#include "teich2/octagon.hpp"

#include <cmath>

#include "teich2/errors.hpp"

namespace teich2 {

namespace {

const Complex kI(0.0, 1.0);

// i^k for integer k.
Complex quarter_turn(int k) { return std::polar(1.0, 0.5 * kPi * ((k % 4 + 4) % 4)); }

int wrap8(int k) { return (k % 8 + 8) % 8; }

double unit_angle(Complex t1, Complex t2) {
  return std::atan2(std::abs((std::conj(t1) * t2).imag()), (std::conj(t1) * t2).real());
}

}  // namespace

double lower_a_bound(double alpha_tilde) {
  return 1.0 / (std::sqrt(2.0) * std::cos(alpha_tilde));
}

OctagonParams OctagonParams::validate(double a, double alpha_tilde, double margin) {
  if (!(margin >= 0.0)) throw DomainError("domain margin must be nonnegative");
  const double alpha_bound = kPi / 4.0 - margin;
  if (!(std::abs(alpha_tilde) < alpha_bound)) {
    throw OutOfDomain(DomainBound::alpha_range, alpha_bound, std::abs(alpha_tilde));
  }
  const double lower = lower_a_bound(alpha_tilde) + margin;
  if (!(a > lower)) throw OutOfDomain(DomainBound::lower_a, lower, a);
  const double upper = 1.0 - margin;
  if (!(a < upper)) throw OutOfDomain(DomainBound::upper_a, upper, a);
  return OctagonParams(a, alpha_tilde, margin);
}

OctagonParams OctagonParams::regular() { return OctagonParams(std::pow(2.0, -0.25), 0.0, 0.0); }

double OctagonParams::b() const noexcept {
  return 1.0 / (std::sqrt(2.0) * a_ * std::cos(alpha_tilde_));
}

OctagonParams OctagonParams::dual() const { return validate(b(), -alpha_tilde_, 0.0); }

OctagonGeometry build_geometry(const OctagonParams& params) {
  const double a = params.a();
  const double at = params.alpha_tilde();
  const double a2 = a * a;
  const double tan_at = std::tan(at);
  const double cos2 = std::cos(at) * std::cos(at);
  const double b = params.b();
  const double alpha = params.alpha();

  const double t_plus = a2 + tan_at;
  const double t_minus = a2 - tan_at;
  const double one_minus_a2 = 1.0 - a2;
  const double r_plus = std::hypot(t_plus, one_minus_a2) / (2.0 * a);
  const double r_minus = std::hypot(t_minus, one_minus_a2) / (2.0 * a);
  const double phi_plus = std::atan(t_plus / (1.0 + a2));
  const double phi_minus = std::atan((1.0 + a2) / t_minus);
  const double beta = std::atan2(one_minus_a2 * 2.0 * a2 * cos2, 2.0 * a2 * cos2 - 1.0);

  std::array<DiskPoint, 8> vertices;
  for (int k = 0; k < 4; ++k) {
    vertices[2 * k] = DiskPoint(a * quarter_turn(k));
    vertices[2 * k + 1] = DiskPoint(std::polar(b, alpha + 0.5 * kPi * k));
  }

  const double b2 = b * b;
  const double den = 1.0 - a2 * b2;
  const Complex lead = std::polar(b, alpha) * one_minus_a2;
  const Complex omega_plus = (lead + a * (1.0 - b2)) / den;
  const Complex omega_minus = (lead + a * kI * (1.0 - b2)) / den;
  auto midpoint = [](Complex w) {
    return DiskPoint(w / (1.0 + std::sqrt((1.0 - std::abs(w)) * (1.0 + std::abs(w)))));
  };

  return OctagonGeometry{params,
                         b,
                         beta,
                         t_plus,
                         t_minus,
                         GeodesicArc::circular(r_plus, phi_plus),
                         GeodesicArc::circular(r_minus, phi_minus),
                         vertices,
                         omega_plus,
                         omega_minus,
                         midpoint(omega_plus),
                         midpoint(omega_minus),
                         2.0 * a / (1.0 + a2)};
}

GeodesicArc OctagonGeometry::side_arc(int k) const {
  k = wrap8(k);
  const GeodesicArc& base = (k % 2 == 0) ? arc_plus : arc_minus;
  return GeodesicArc::circular(base.radius(), base.phi() + 0.5 * kPi * (k / 2));
}

DiskPoint OctagonGeometry::side_midpoint(int k) const {
  k = wrap8(k);
  const Complex base = (k % 2 == 0) ? p_plus.z() : p_minus.z();
  return DiskPoint(base * quarter_turn(k / 2));
}

Complex OctagonGeometry::omega(int k) const {
  switch (k) {
    case 0: return omega_plus;
    case 1: return omega_minus;
    case 2: return kI * omega_plus;
    case 3: return kI * omega_minus;
    case 4: return Complex(omega4, 0.0);
    case 5: return Complex(0.0, 0.0);
    default: throw DomainError("omega index must be in 0..5");
  }
}

std::pair<DiskPoint, DiskPoint> OctagonGeometry::diagonal_endpoints() const {
  return {DiskPoint(-params.a(), 0.0), DiskPoint(params.a(), 0.0)};
}

bool OctagonGeometry::contains(Complex z) const {
  if (!(std::abs(z) < 1.0)) return false;
  for (int k = 0; k < 8; ++k) {
    const GeodesicArc arc = side_arc(k);
    if (!(std::abs(z - arc.center()) > arc.radius())) return false;
  }
  return true;
}

InteriorAngles interior_angles_numeric(const OctagonGeometry& geom) {
  // Tangent of side s_k at vertex v, oriented toward the other endpoint.
  auto tangent = [&](int side, int at, int other) {
    const Complex v = geom.vertices[wrap8(at)].z();
    const Complex w = geom.vertices[wrap8(other)].z();
    Complex t = kI * (v - geom.side_arc(side).center());
    if ((std::conj(t) * (w - v)).real() < 0.0) t = -t;
    return t;
  };
  auto angle_at = [&](int k) {
    return unit_angle(tangent(k - 1, k, k - 1), tangent(k, k, k + 1));
  };
  return InteriorAngles{angle_at(0), angle_at(1)};
}

double area_from_angles(const InteriorAngles& angles) {
  return 6.0 * kPi - 4.0 * (angles.at_a + angles.at_b);
}

double perimeter(const OctagonParams& params) {
  const double a2 = params.a() * params.a();
  const double b = params.b();
  const double b2 = b * b;
  const double x =
      (1.0 - a2 * b2 + std::hypot(1.0 - a2, 1.0 - b2)) / ((1.0 - a2) * (1.0 - b2));
  return 8.0 * std::acosh(x);
}

double side_length(const OctagonGeometry& geom, int k) {
  return dist(geom.vertices[wrap8(k)], geom.vertices[wrap8(k + 1)]);
}

double perimeter_numeric(const OctagonGeometry& geom) {
  double total = 0.0;
  for (int k = 0; k < 8; ++k) total += side_length(geom, k);
  return total;
}

}  // namespace teich2
