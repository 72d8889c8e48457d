#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "desargues/involution.hpp"
#include "desargues/projective.hpp"

namespace desargues {

// A conic as the class of a symmetric form M up to nonzero scale:
// q(v) = v^T M v, phi(v, w) = v^T M w.
class Conic {
 public:
  // Symmetrizes m. Throws ZeroForm when the form vanishes.
  explicit Conic(const Mat3& m);
  // ax^2 + by^2 + cz^2 + dxy + exz + fyz = 0.
  static Conic from_coefficients(const std::array<Rat, 6>& c);
  static Conic unit_circle() { return from_coefficients({1, 1, -1, 0, 0, 0}); }

  // Canonical representative: first nonzero of (a, b, c, d, e, f) is 1.
  const Mat3& matrix() const { return m_; }
  std::array<Rat, 6> coefficients() const;
  int rank() const;

  Rat q(const Vec3& v) const;
  Rat phi(const Vec3& v, const Vec3& w) const;
  bool contains(const PPoint& p) const { return q(p.coords()).is_zero(); }

  // "x^2 + y^2 - z^2" with primitive integer coefficients.
  std::string str() const;

  friend bool operator==(const Conic&, const Conic&) = default;

 private:
  Mat3 m_;
};

enum class ConicKind {
  NondegenerateReal,
  Empty,
  DegenerateTwoLines,
  DegenerateDoubleLine
};

std::string_view to_string(ConicKind kind);

struct ConicClass {
  ConicKind kind;
  int rank;
  // Inertia (positive, negative) up to global sign, larger count first.
  std::array<int, 2> signature;
  // Rank 2 only: the vertex of the line pair (the point double).
  std::optional<PPoint> point_double;
};

// Throws DegeneratePointSet when the five points do not fix a unique conic.
Conic conic_from_five_points(const std::array<PPoint, 5>& points);

// Line with coefficients M m. Throws DegenerateConic for rank 1 and
// TotallyIsotropicPoint when M m = 0.
PLine polar(const Conic& c, const PPoint& m);
// adj(M) l. Throws DegenerateConic unless rank 3.
PPoint pole(const Conic& c, const PLine& l);
// pole(l) lies on l; rank 3 only.
bool is_tangent(const Conic& c, const PLine& l);

// Restriction of q to a line in its natural chart:
// q(s b0 + t b1) = A s^2 + 2 B s t + C t^2.
struct LineRestriction {
  Rat a;
  Rat b;
  Rat c;
  Rat discriminant() const { return b * b - a * c; }
};

LineRestriction restrict_to_line(const Conic& c, const PLine& l);

// Zero, one (tangency) or two points. Throws IrrationalIntersection when
// the roots are real but irrational, LineOnConic when l is a component.
std::vector<PPoint> line_intersect(const Conic& c, const PLine& l);

// Conjugation m -> meet(polar(m), l) in the natural chart of l. Throws
// DegenerateConic unless rank 3, TangentLine when l touches c.
InvolutionOnLine polarity_involution_on_line(const Conic& c, const PLine& l);

struct Tangent {
  PLine line;
  PPoint contact;
};

// Tangents from f with their contact points. A point of the conic yields
// its single tangent. Throws InteriorPoint when polar(f) misses c.
std::vector<Tangent> tangents_from(const Conic& c, const PPoint& f);

// Rank and inertia by rational congruence reduction. Throws ZeroForm.
ConicClass classify(const Conic& c);

enum class AffineKind { Ellipse, Parabola, Hyperbola };

std::string_view to_string(AffineKind kind);

struct AffineFeatures {
  AffineKind kind;
  PPoint center;
  // Discriminant of q restricted to the line at infinity.
  Rat discriminant;
  // Empty for an ellipse and when the points are irrational.
  std::vector<PPoint> infinite_points;
  std::vector<PLine> asymptotes;
  bool irrational_infinite_points = false;
};

// Throws DegenerateConic unless rank 3.
AffineFeatures affine_features(const Conic& c, const PLine& infinity);

// The image conic h(c): adj(H)^T M adj(H).
Conic transform(const Conic& c, const Homography& h);

// Points of c as second intersections of lines through `base` and the
// point t of a fixed line avoiding the base: the line at infinity (slope t,
// direction (1 : t : 0)) for a finite base, else x = 0 or y = 0.
class RationalParametrization {
 public:
  // Throws BasePointNotOnConic, DegenerateConic unless rank 3.
  RationalParametrization(Conic c, const PPoint& base);

  const Conic& conic() const { return c_; }
  const PPoint& base() const { return base_; }
  const LineChart& directions() const { return pencil_; }
  // The base itself when the direction is tangent there.
  PPoint point(const ExtRat& t) const;

 private:
  Conic c_;
  PPoint base_;
  LineChart pencil_;
};

inline RationalParametrization rational_parametrize(const Conic& c,
                                                    const PPoint& base) {
  return {c, base};
}

// Second intersection of c with the line through a point p of c and f.
// Returns p when the line is tangent at p. Throws NotOnConic.
PPoint second_intersection(const Conic& c, const PPoint& p, const PPoint& f);

// Searches points of small height on vertical and horizontal lines.
// Throws NoRationalPoint when nothing is found within the bound.
PPoint find_rational_point(const Conic& c, int height = 12);

}  // namespace desargues
