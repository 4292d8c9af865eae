#pragma once

// Poincare disk primitives: points, distance, geodesics and the SU(1,1)
// Mobius group acting on the disk.

#include <array>
#include <complex>

namespace teich2 {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

// Point of the open unit disk. Construction fails for |z| >= 1.
class DiskPoint {
 public:
  DiskPoint() = default;
  explicit DiskPoint(Complex z);
  DiskPoint(double x, double y) : DiskPoint(Complex(x, y)) {}

  Complex z() const noexcept { return z_; }
  double x() const noexcept { return z_.real(); }
  double y() const noexcept { return z_.imag(); }
  double modulus() const noexcept { return std::abs(z_); }

 private:
  Complex z_{0.0, 0.0};
};

// Hyperbolic distance in the disk metric 4|dz|^2 / (1 - |z|^2)^2.
double dist(const DiskPoint& z, const DiskPoint& w);

// A complete geodesic of the disk. Circular geodesics are arcs of the circle
// with radius R centred at sqrt(1 + R^2) e^{i phi}; diameters pass through the
// origin in direction phi.
class GeodesicArc {
 public:
  enum class Kind { circular, diameter };

  static GeodesicArc circular(double radius, double phi);
  static GeodesicArc diameter(double phi);

  Kind kind() const noexcept { return kind_; }
  double radius() const noexcept { return radius_; }
  double phi() const noexcept { return phi_; }

  // Euclidean centre; only meaningful for circular arcs.
  Complex center() const;

  // Unit-speed parametrisation; s = 0 is the point closest to the origin.
  DiskPoint point(double s) const;

  // Euclidean residual | |z - centre| - R | (circular) or distance from the
  // diameter line (diameter).
  double residual(Complex z) const;

 private:
  GeodesicArc(Kind kind, double radius, double phi) : kind_(kind), radius_(radius), phi_(phi) {}

  Kind kind_;
  double radius_;
  double phi_;
};

inline DiskPoint geodesic_point(const GeodesicArc& arc, double s) { return arc.point(s); }

enum class IsometryClass { elliptic, parabolic, hyperbolic };

const char* to_string(IsometryClass c) noexcept;

// Element of SU(1,1): the matrix [[u, v], [conj(v), conj(u)]] with
// |u|^2 - |v|^2 = 1, acting by z -> (u z + v) / (conj(v) z + conj(u)).
// Group equality is taken up to the global sign (PSU(1,1)).
class Mobius {
 public:
  // Identity.
  Mobius() = default;

  // Renormalises when the relative determinant defect is below 1e-9 and
  // throws DomainError otherwise.
  Mobius(Complex u, Complex v);

  static Mobius identity() { return {}; }

  Complex u() const noexcept { return u_; }
  Complex v() const noexcept { return v_; }

  double trace() const noexcept { return 2.0 * u_.real(); }
  double determinant() const noexcept { return std::norm(u_) - std::norm(v_); }

  DiskPoint apply(const DiskPoint& z) const;
  Complex apply(Complex z) const;

  Mobius operator*(const Mobius& rhs) const;
  Mobius inverse() const;
  Mobius operator-() const { return Mobius(-u_, -v_, Unchecked{}); }

  // Representative with the first nonzero of (Re u, Im u, Re v, Im v) positive.
  Mobius canonical() const;

  // Components (Re u, Im u, Re v, Im v).
  std::array<double, 4> components() const noexcept {
    return {u_.real(), u_.imag(), v_.real(), v_.imag()};
  }

  // Max-norm distance between the entries, minimised over the sign.
  double projective_distance(const Mobius& other) const noexcept;

  // Max-norm distance to +identity and to -identity.
  double distance_to_identity() const noexcept;
  double distance_to_minus_identity() const noexcept;

 private:
  struct Unchecked {};
  Mobius(Complex u, Complex v, Unchecked) : u_(u), v_(v) {}

  Complex u_{1.0, 0.0};
  Complex v_{0.0, 0.0};
};

inline Mobius mobius_compose(const Mobius& a, const Mobius& b) { return a * b; }
inline Mobius mobius_inverse(const Mobius& a) { return a.inverse(); }
inline DiskPoint mobius_apply(const Mobius& t, const DiskPoint& z) { return t.apply(z); }

// Classification by |Tr| against 2, parabolic within +-tolerance.
IsometryClass classify(const Mobius& t, double tolerance = 1e-9);

// H(p) = -1/(1 - |p|^2) [[1 + |p|^2, 2p], [2 conj(p), 1 + |p|^2]]: the half
// turn about the origin followed by the half turn about p, so H(p)[-p] = p.
Mobius half_turn(const DiskPoint& p);

// M(w) = i / sqrt(1 - |w|^2) [[1, -w], [conj(w), -1]], a trace-free element
// with M(w)^2 = -identity. Requires |w| < 1.
Mobius m_half_turn(Complex omega);

// diag(e^{i phi/2}, e^{-i phi/2}), acting as z -> e^{i phi} z.
Mobius rotation(double phi);

}  // namespace teich2
