#include "doctest.h"

#include "desargues/error.hpp"
#include "desargues/projective.hpp"
#include "test_support.hpp"

using namespace desargues;

namespace {

template <typename F>
ErrorKind error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::IoError;
}

// Chart-free cross-ratio from 3x3 brackets against a reference point off the
// line: [p, q] = det(o, p, q).
ExtRat bracket_cross_ratio(const PPoint& a, const PPoint& b, const PPoint& c,
                           const PPoint& d, const PPoint& o) {
  auto br = [&](const PPoint& p, const PPoint& q) {
    return dot(o.coords(), cross(p.coords(), q.coords()));
  };
  return ExtRat::from_homogeneous(br(a, c) * br(b, d), br(a, d) * br(b, c));
}

}  // namespace

TEST_CASE("join") {
  CHECK(join(PPoint(1, 0, 1), PPoint(0, 1, 1)) == PLine(1, 1, -1));
  CHECK(join(PPoint(1, 0, 0), PPoint(0, 1, 0)) == PLine::at_infinity());
  CHECK(error_of([] { join(PPoint(1, 0, 1), PPoint(2, 0, 2)); }) ==
        ErrorKind::CoincidentPoints);
}

TEST_CASE("meet") {
  CHECK(meet(PLine(1, 1, -1), PLine(1, -1, 0)) ==
        PPoint(Rat(1, 2), Rat(1, 2), 1));
  const PPoint but = meet(PLine(1, 1, -1), PLine(1, 1, 1));
  CHECK(but == PPoint(1, -1, 0));
  CHECK(but.at_infinity());
  CHECK(error_of([] { meet(PLine(1, 0, 0), PLine(1, 0, 0)); }) ==
        ErrorKind::CoincidentLines);
}

TEST_CASE("canonical equality is a congruence") {
  testing::Gen gen(11);
  for (int i = 0; i < 100; ++i) {
    const PPoint p = gen.point();
    const Rat k = gen.nonzero_rat();
    const Vec3& v = p.coords();
    CHECK(PPoint(v[0] * k, v[1] * k, v[2] * k) == p);
    CHECK(PPointHash{}(PPoint(v[0] * k, v[1] * k, v[2] * k)) == PPointHash{}(p));
  }
  CHECK(error_of([] { PPoint(0, 0, 0); }) == ErrorKind::ZeroVector);
}

TEST_CASE("text forms round-trip") {
  CHECK(PPoint(4, 6, 2).str() == "(2, 3, 1)");
  CHECK(PPoint(Rat(1, 2), Rat(1, 2), 1).str() == "(1/2, 1/2, 1)");
  CHECK(PPoint(-2, 2, 0).str() == "(1, -1, 0)");
  CHECK(PLine(1, 0, Rat(-1, 2)).str() == "[2, 0, -1]");
  CHECK(PLine(-3, -4, 5).str() == "[3, 4, -5]");
  testing::Gen gen(5);
  for (int i = 0; i < 50; ++i) {
    const PPoint p = gen.point();
    const PLine l = gen.line();
    CHECK(PPoint::parse(p.str()) == p);
    CHECK(PPoint::parse(p.str()).str() == p.str());
    CHECK(PLine::parse(l.str()) == l);
    CHECK(PLine::parse(l.str()).str() == l.str());
  }
  CHECK(error_of([] { PPoint::parse("(1, 2)"); }) == ErrorKind::ParseError);
  CHECK(error_of([] { PLine::parse("(1, 2, 3)"); }) == ErrorKind::ParseError);
  CHECK(error_of([] { PPoint::parse("(1/0, 2, 3)"); }) == ErrorKind::ParseError);
}

TEST_CASE("join/meet duality and reconstruction") {
  testing::Gen gen(7);
  for (int i = 0; i < 100; ++i) {
    const PPoint p = gen.point(), q = gen.point();
    if (p == q) continue;
    const PLine l = join(p, q);
    CHECK(incident(p, l));
    CHECK(incident(q, l));
    // Swapping roles of point and line triples.
    const PPoint dual = meet(PLine(p.coords()), PLine(q.coords()));
    CHECK(proportional(dual.coords(), l.coeffs()));
    // A second line through p only recovers p.
    PPoint r = gen.point();
    if (r == p || collinear(p, q, r)) continue;
    CHECK(meet(l, join(p, r)) == p);
  }
}

TEST_CASE("cross-ratio convention and examples") {
  CHECK(cross_ratio(ExtRat(-1), ExtRat(1), ExtRat(2), ExtRat(Rat(1, 2))) ==
        ExtRat(-1));
  // With this convention (0, inf; 1, t) = 1/t and (inf, 0; 1, t) = t.
  for (const Rat& t : {Rat(3), Rat(-2, 7)}) {
    CHECK(cross_ratio(ExtRat(0), ExtRat::infinity(), ExtRat(1), ExtRat(t)) ==
          ExtRat(t.inverse()));
    CHECK(cross_ratio(ExtRat::infinity(), ExtRat(0), ExtRat(1), ExtRat(t)) ==
          ExtRat(t));
  }
  CHECK(cross_ratio(ExtRat(0), ExtRat::infinity(), ExtRat(1), ExtRat(0)) ==
        ExtRat::infinity());
  CHECK(cross_ratio(ExtRat(0), ExtRat::infinity(), ExtRat(1),
                    ExtRat::infinity()) == ExtRat(0));
  CHECK(error_of([] { cross_ratio(ExtRat(1), ExtRat(2), ExtRat(1), ExtRat(3)); }) ==
        ErrorKind::DegenerateQuadruple);
}

TEST_CASE("cross-ratio on points checks incidence") {
  const LineChart x_axis = LineChart::natural(PLine(0, 1, 0));
  CHECK(cross_ratio(PPoint(-1, 0, 1), PPoint(1, 0, 1), PPoint(2, 0, 1),
                    PPoint(1, 0, 2), x_axis) == ExtRat(-1));
  CHECK(error_of([&] {
          cross_ratio(PPoint(-1, 0, 1), PPoint(1, 0, 1), PPoint(2, 1, 1),
                      PPoint(1, 0, 2), x_axis);
        }) == ErrorKind::NotOnLine);
}

TEST_CASE("cross-ratio is invariant under homographies and chart changes") {
  testing::Gen gen(2024);
  int checked = 0;
  while (checked < 100) {
    const PLine l = gen.line();
    const LineChart natural = LineChart::natural(l);
    const PPoint a = natural.point(ExtRat(gen.rat()));
    const PPoint b = natural.point(ExtRat(gen.rat()));
    const PPoint c = natural.point(ExtRat(gen.rat()));
    const PPoint d = natural.point(ExtRat(gen.rat()));
    if (a == b || a == c || b == c) continue;
    const ExtRat cr = cross_ratio(a, b, c, d, natural);

    // Independent oracle: bracket formula against a point off the line.
    PPoint o = gen.point();
    while (incident(o, l)) o = gen.point();
    CHECK(bracket_cross_ratio(a, b, c, d, o) == cr);

    // Another chart on the same line.
    PPoint o2 = natural.point(ExtRat(gen.rat())), u2 = natural.point(ExtRat(gen.rat())),
           i2 = natural.point(ExtRat(gen.rat()));
    if (o2 == u2 || o2 == i2 || u2 == i2) continue;
    const LineChart other(l, o2, u2, i2);
    CHECK(cross_ratio(a, b, c, d, other) == cr);

    const Homography h = gen.homography();
    CHECK(cross_ratio(h.apply(a), h.apply(b), h.apply(c), h.apply(d)) == cr);
    ++checked;
  }
}

TEST_CASE("harmonic conjugate") {
  CHECK(harmonic_conjugate(ExtRat(0), ExtRat(-1), ExtRat(1)) ==
        ExtRat::infinity());
  CHECK(harmonic_conjugate(ExtRat(2), ExtRat(-1), ExtRat(1)) ==
        ExtRat(Rat(1, 2)));
  CHECK(error_of([] { harmonic_conjugate(ExtRat(1), ExtRat(-1), ExtRat(1)); }) ==
        ErrorKind::ConjugateUndefined);

  // Plane version agrees with the chart version.
  CHECK(harmonic_conjugate(PPoint(2, 0, 1), PPoint(-1, 0, 1), PPoint(1, 0, 1)) ==
        PPoint(1, 0, 2));
  CHECK(harmonic_conjugate(PPoint(0, 0, 1), PPoint(-1, 0, 1), PPoint(1, 0, 1)) ==
        PPoint(1, 0, 0));

  testing::Gen gen(99);
  for (int i = 0; i < 100; ++i) {
    const ExtRat a(gen.rat()), b(gen.rat()), c(gen.rat());
    if (a == b || c == a || c == b) continue;
    const ExtRat d = harmonic_conjugate(c, a, b);
    CHECK(cross_ratio(a, b, c, d) == ExtRat(-1));
    CHECK(harmonic_conjugate(d, a, b) == c);
  }
}

TEST_CASE("affine ratio") {
  CHECK(affine_ratio(PPoint(0, 0, 1), PPoint(1, 0, 1), PPoint(-2, 0, 1)) ==
        Rat(-1, 2));
  CHECK(affine_ratio(PPoint(1, 1, 0), PPoint(1, 0, 1), PPoint(2, 1, 1)) == 1);
}

TEST_CASE("homographies") {
  const Homography id = Homography::identity();
  CHECK(id.apply(PPoint(2, 0, 1)) == PPoint(2, 0, 1));
  const Homography scale(Mat3{{{2, 0, 0}, {0, 1, 0}, {0, 0, 1}}});
  CHECK(scale.apply(PPoint(1, 0, 1)) == PPoint(2, 0, 1));
  CHECK(scale.apply(PLine(1, 0, -1)) == PLine(1, 0, -2));
  CHECK(error_of([] { Homography(Mat3{{{1, 2, 3}, {2, 4, 6}, {0, 0, 1}}}); }) ==
        ErrorKind::SingularMatrix);

  testing::Gen gen(3);
  for (int i = 0; i < 100; ++i) {
    const Homography h = gen.homography();
    const PPoint p = gen.point(), q = gen.point();
    if (p == q) continue;
    const PLine l = join(p, q);
    CHECK(incident(h.apply(p), h.apply(l)));
    CHECK(h.apply(l) == join(h.apply(p), h.apply(q)));
    CHECK(h.inverse().apply(h.apply(p)) == p);
    CHECK(h.compose(h.inverse()) == Homography::identity());
  }
}

TEST_CASE("line charts") {
  const LineChart vertical = LineChart::natural(PLine(5, 0, -3));  // x = 3/5
  CHECK(vertical.point(ExtRat(Rat(4, 5))) == PPoint(Rat(3, 5), Rat(4, 5), 1));
  CHECK(vertical.coordinate(PPoint(0, 1, 0)).is_infinite());
  const LineChart infinity = LineChart::natural(PLine::at_infinity());
  CHECK(infinity.coordinate(PPoint(1, 2, 0)) == ExtRat(2));
  CHECK(error_of([] {
          LineChart(PLine(0, 1, 0), PPoint(0, 0, 1), PPoint(0, 0, 1),
                    PPoint(1, 0, 0));
        }) == ErrorKind::InvalidChart);
  testing::Gen gen(8);
  for (int i = 0; i < 50; ++i) {
    const LineChart c = LineChart::natural(gen.line());
    const ExtRat t(gen.rat());
    CHECK(c.coordinate(c.point(t)) == t);
  }
}
