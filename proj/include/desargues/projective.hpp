#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "desargues/rational.hpp"

namespace desargues {

using Vec3 = std::array<Rat, 3>;
using Mat3 = std::array<std::array<Rat, 3>, 3>;

Vec3 cross(const Vec3& a, const Vec3& b);
Rat dot(const Vec3& a, const Vec3& b);
bool is_zero(const Vec3& v);
bool proportional(const Vec3& a, const Vec3& b);
// Scales so the first nonzero entry is 1. Throws ZeroVector on (0, 0, 0).
Vec3 canonical(const Vec3& v);
// Smallest integer multiple with positive first nonzero entry.
Vec3 primitive_integer(const Vec3& v);

Vec3 operator*(const Mat3& m, const Vec3& v);
Mat3 operator*(const Mat3& a, const Mat3& b);
Mat3 transpose(const Mat3& m);
Mat3 adjugate(const Mat3& m);
Rat determinant(const Mat3& m);
Mat3 identity3();

// A point of the projective plane. Points with z = 0 are the points at
// infinity and are ordinary values.
class PPoint {
 public:
  PPoint(const Rat& x, const Rat& y, const Rat& z);
  explicit PPoint(const Vec3& v);
  static PPoint affine(const Rat& x, const Rat& y) { return {x, y, 1}; }

  // Canonical representative: first nonzero coordinate equals 1.
  const Vec3& coords() const { return v_; }
  bool at_infinity() const { return v_[2].is_zero(); }
  // (x/z, y/z); throws std::domain_error for points at infinity.
  std::array<Rat, 2> affine_coords() const;

  // "(x, y, 1)" for finite points, primitive integers otherwise.
  std::string str() const;
  static PPoint parse(std::string_view text);

  friend bool operator==(const PPoint&, const PPoint&) = default;

 private:
  Vec3 v_;
};

// The line ux + vy + wz = 0.
class PLine {
 public:
  PLine(const Rat& u, const Rat& v, const Rat& w);
  explicit PLine(const Vec3& v);
  static PLine at_infinity() { return {0, 0, 1}; }

  const Vec3& coeffs() const { return v_; }
  bool is_at_infinity() const { return v_[0].is_zero() && v_[1].is_zero(); }

  // "[u, v, w]" as primitive integers with positive leading entry.
  std::string str() const;
  static PLine parse(std::string_view text);

  friend bool operator==(const PLine&, const PLine&) = default;

 private:
  Vec3 v_;
};

std::ostream& operator<<(std::ostream& os, const PPoint& p);
std::ostream& operator<<(std::ostream& os, const PLine& l);

struct PPointHash {
  std::size_t operator()(const PPoint& p) const;
};

bool incident(const PPoint& p, const PLine& l);
bool collinear(const PPoint& a, const PPoint& b, const PPoint& c);
bool concurrent(const PLine& a, const PLine& b, const PLine& c);

PLine join(const PPoint& p, const PPoint& q);
PPoint meet(const PLine& l, const PLine& m);

// Extended rational: a finite value or the point at infinity of a chart.
class ExtRat {
 public:
  ExtRat(const Rat& v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  ExtRat(int v) : v_(Rat(v)) {}    // NOLINT(google-explicit-constructor)
  static ExtRat infinity() { return ExtRat(); }
  // Value of t/s for a homogeneous pair (t : s), s = 0 giving infinity.
  static ExtRat from_homogeneous(const Rat& t, const Rat& s);

  bool is_infinite() const { return !v_.has_value(); }
  const Rat& value() const;
  // (t, s) with s in {0, 1}.
  std::array<Rat, 2> homogeneous() const;

  std::string str() const;  // "inf" for infinity
  static ExtRat parse(std::string_view text);

  friend bool operator==(const ExtRat&, const ExtRat&) = default;

 private:
  ExtRat() = default;
  std::optional<Rat> v_;
};

std::ostream& operator<<(std::ostream& os, const ExtRat& t);

// Coordinatizes a line: origin -> 0, unit -> 1, infinity_point -> inf.
class LineChart {
 public:
  LineChart(const PLine& line, const PPoint& origin, const PPoint& unit,
            const PPoint& infinity_point);

  // x-coordinate chart for non-vertical lines, y for vertical ones, slope
  // y/x on the line at infinity. Affine whenever the line is finite.
  static LineChart natural(const PLine& line);

  const PLine& line() const { return line_; }
  const PPoint& origin() const { return origin_; }
  const PPoint& unit() const { return unit_; }
  const PPoint& infinity_point() const { return infinity_; }
  // Vectors b0, b1 with point(t : s) = s * b0 + t * b1.
  std::array<Vec3, 2> basis() const { return {base0_, base1_}; }

  // Homogeneous chart coordinates (t : s); throws NotOnLine.
  std::array<Rat, 2> homogeneous(const PPoint& p) const;
  ExtRat coordinate(const PPoint& p) const;
  PPoint point(const Rat& t, const Rat& s) const;
  PPoint point(const ExtRat& t) const;
  bool contains(const PPoint& p) const { return incident(p, line_); }

 private:
  PLine line_;
  PPoint origin_;
  PPoint unit_;
  PPoint infinity_;
  // Scaled basis: point(t : s) = s * base0_ + t * base1_.
  Vec3 base0_;
  Vec3 base1_;
};

// (a, b; c, d) = ((a - c)(b - d)) / ((a - d)(b - c)); a, b, c pairwise distinct.
ExtRat cross_ratio(const ExtRat& a, const ExtRat& b, const ExtRat& c,
                   const ExtRat& d);
ExtRat cross_ratio(const PPoint& a, const PPoint& b, const PPoint& c,
                   const PPoint& d, const LineChart& chart);
// Uses the natural chart of the common line.
ExtRat cross_ratio(const PPoint& a, const PPoint& b, const PPoint& c,
                   const PPoint& d);

// The fourth harmonic d with (a, b; c, d) = -1.
ExtRat harmonic_conjugate(const ExtRat& c, const ExtRat& a, const ExtRat& b);
PPoint harmonic_conjugate(const PPoint& c, const PPoint& a, const PPoint& b);
PPoint harmonic_conjugate(const PPoint& c, const PPoint& a, const PPoint& b,
                          const LineChart& chart);

// Signed ratio AX/AY of three collinear points, computed as the cross-ratio
// (a, w; x, y) with w the point at infinity of the line. Equals 1 when a is
// itself at infinity.
Rat affine_ratio(const PPoint& a, const PPoint& x, const PPoint& y);

// An invertible projective transformation of the plane.
class Homography {
 public:
  explicit Homography(const Mat3& m);  // throws SingularMatrix
  static Homography identity() { return Homography(identity3()); }

  const Mat3& matrix() const { return m_; }
  Homography inverse() const;
  Homography compose(const Homography& inner) const;  // this after inner

  PPoint apply(const PPoint& p) const;
  PLine apply(const PLine& l) const;

  // Equality up to scale.
  friend bool operator==(const Homography& a, const Homography& b);

 private:
  Mat3 m_;
};

}  // namespace desargues
