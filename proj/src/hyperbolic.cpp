#include "teich2/hyperbolic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "teich2/errors.hpp"

namespace teich2 {

namespace {

// 1 - |z|^2 without cancellation near the boundary.
double conformal_factor(Complex z) {
  const double r = std::abs(z);
  return (1.0 - r) * (1.0 + r);
}

constexpr double kRenormalizeLimit = 1e-9;
constexpr double kRoundoffDefect = 1e-14;

}  // namespace

DiskPoint::DiskPoint(Complex z) : z_(z) {
  if (!(std::abs(z) < 1.0)) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "point (%.17g, %.17g) is not inside the unit disk", z.real(),
                  z.imag());
    throw DomainError(buf);
  }
}

double dist(const DiskPoint& z, const DiskPoint& w) {
  // cosh d = 1 + 2 sinh^2(d/2) turns the arccosh form into a well-conditioned asinh.
  const double denom = std::sqrt(conformal_factor(z.z()) * conformal_factor(w.z()));
  return 2.0 * std::asinh(std::abs(z.z() - w.z()) / denom);
}

GeodesicArc GeodesicArc::circular(double radius, double phi) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw DomainError("geodesic arc radius must be positive and finite");
  }
  return GeodesicArc(Kind::circular, radius, phi);
}

GeodesicArc GeodesicArc::diameter(double phi) { return GeodesicArc(Kind::diameter, 0.0, phi); }

Complex GeodesicArc::center() const {
  return std::sqrt(1.0 + radius_ * radius_) * std::polar(1.0, phi_);
}

DiskPoint GeodesicArc::point(double s) const {
  if (kind_ == Kind::diameter) {
    return DiskPoint(std::tanh(0.5 * s) * std::polar(1.0, phi_));
  }
  const double c = std::cosh(s);
  const Complex num(c, radius_ * std::sinh(s));
  const double den = std::sqrt(1.0 + radius_ * radius_) * c + radius_;
  return DiskPoint(num / den * std::polar(1.0, phi_));
}

double GeodesicArc::residual(Complex z) const {
  if (kind_ == Kind::diameter) {
    // Distance from the line through 0 in direction phi.
    return std::abs((z * std::polar(1.0, -phi_)).imag());
  }
  return std::abs(std::abs(z - center()) - radius_);
}

const char* to_string(IsometryClass c) noexcept {
  switch (c) {
    case IsometryClass::elliptic: return "elliptic";
    case IsometryClass::parabolic: return "parabolic";
    case IsometryClass::hyperbolic: return "hyperbolic";
  }
  return "unknown";
}

Mobius::Mobius(Complex u, Complex v) : u_(u), v_(v) {
  const double scale = std::norm(u) + std::norm(v);
  const double det = std::norm(u) - std::norm(v);
  if (!std::isfinite(scale) || !(det > 0.0)) {
    throw DomainError("matrix is not in SU(1,1): |u|^2 - |v|^2 must be 1");
  }
  const double defect = std::abs(det - 1.0) / scale;
  if (defect > kRenormalizeLimit) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "matrix is not in SU(1,1): relative defect %.3g", defect);
    throw DomainError(buf);
  }
  if (defect > kRoundoffDefect) {
    const double k = 1.0 / std::sqrt(det);
    u_ *= k;
    v_ *= k;
  }
}

DiskPoint Mobius::apply(const DiskPoint& z) const { return DiskPoint(apply(z.z())); }

Complex Mobius::apply(Complex z) const {
  return (u_ * z + v_) / (std::conj(v_) * z + std::conj(u_));
}

Mobius Mobius::operator*(const Mobius& rhs) const {
  return Mobius(u_ * rhs.u_ + v_ * std::conj(rhs.v_), u_ * rhs.v_ + v_ * std::conj(rhs.u_),
                Unchecked{});
}

Mobius Mobius::inverse() const { return Mobius(std::conj(u_), -v_, Unchecked{}); }

Mobius Mobius::canonical() const {
  for (double c : components()) {
    if (c > 0.0) return *this;
    if (c < 0.0) return -*this;
  }
  return *this;
}

double Mobius::projective_distance(const Mobius& other) const noexcept {
  const auto a = components();
  const auto b = other.components();
  double plus = 0.0;
  double minus = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    plus = std::max(plus, std::abs(a[i] - b[i]));
    minus = std::max(minus, std::abs(a[i] + b[i]));
  }
  return std::min(plus, minus);
}

double Mobius::distance_to_identity() const noexcept {
  return std::max({std::abs(u_.real() - 1.0), std::abs(u_.imag()), std::abs(v_.real()),
                   std::abs(v_.imag())});
}

double Mobius::distance_to_minus_identity() const noexcept {
  return std::max({std::abs(u_.real() + 1.0), std::abs(u_.imag()), std::abs(v_.real()),
                   std::abs(v_.imag())});
}

IsometryClass classify(const Mobius& t, double tolerance) {
  const double tr = std::abs(t.trace());
  if (std::abs(tr - 2.0) <= tolerance) return IsometryClass::parabolic;
  return tr < 2.0 ? IsometryClass::elliptic : IsometryClass::hyperbolic;
}

Mobius half_turn(const DiskPoint& p) {
  const double r2 = std::norm(p.z());
  const double k = -1.0 / conformal_factor(p.z());
  return Mobius(Complex(k * (1.0 + r2), 0.0), 2.0 * k * p.z());
}

Mobius m_half_turn(Complex omega) {
  if (!(std::abs(omega) < 1.0)) throw DomainError("m_half_turn requires |omega| < 1");
  const Complex k = Complex(0.0, 1.0) / std::sqrt(conformal_factor(omega));
  return Mobius(k, -k * omega);
}

Mobius rotation(double phi) { return Mobius(std::polar(1.0, 0.5 * phi), Complex(0.0, 0.0)); }

}  // namespace teich2
