#include "desargues/projective.hpp"

#include <cctype>
#include <functional>
#include <stdexcept>
#include <vector>

#include "desargues/error.hpp"

namespace desargues {

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

Rat dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

bool is_zero(const Vec3& v) {
  return v[0].is_zero() && v[1].is_zero() && v[2].is_zero();
}

bool proportional(const Vec3& a, const Vec3& b) { return is_zero(cross(a, b)); }

Vec3 canonical(const Vec3& v) {
  for (const Rat& c : v) {
    if (!c.is_zero()) {
      const Rat inv = c.inverse();
      return {v[0] * inv, v[1] * inv, v[2] * inv};
    }
  }
  throw Error(ErrorKind::ZeroVector, "homogeneous triple (0, 0, 0)");
}

Vec3 primitive_integer(const Vec3& v) {
  mpz_class lcm = 1;
  for (const Rat& c : v) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.den().get_mpz_t());
  }
  std::array<mpz_class, 3> ints;
  mpz_class g = 0;
  for (int i = 0; i < 3; ++i) {
    ints[i] = v[i].num() * (lcm / v[i].den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
  }
  if (g == 0) throw Error(ErrorKind::ZeroVector, "homogeneous triple (0, 0, 0)");
  int lead = 0;
  for (const auto& z : ints) {
    if (z != 0) {
      lead = sgn(z);
      break;
    }
  }
  if (lead < 0) g = -g;
  return {Rat(mpz_class(ints[0] / g)), Rat(mpz_class(ints[1] / g)),
          Rat(mpz_class(ints[2] / g))};
}

Vec3 operator*(const Mat3& m, const Vec3& v) {
  return {dot(m[0], v), dot(m[1], v), dot(m[2], v)};
}

Mat3 operator*(const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j];
  return r;
}

Mat3 transpose(const Mat3& m) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = m[j][i];
  return r;
}

Mat3 adjugate(const Mat3& m) {
  Mat3 r;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
      const int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      r[i][j] = m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
    }
  }
  return r;
}

Rat determinant(const Mat3& m) { return dot(m[0], cross(m[1], m[2])); }

Mat3 identity3() {
  Mat3 m;
  for (int i = 0; i < 3; ++i) m[i][i] = 1;
  return m;
}

namespace {

// Splits "(a, b, c)" / "[a, b, c]" into three rationals.
Vec3 parse_triple(std::string_view text, char open, char close) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
      s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
      s.remove_suffix(1);
    return s;
  };
  std::string_view body = trim(text);
  if (body.size() < 2 || body.front() != open || body.back() != close) {
    throw Error(ErrorKind::ParseError,
                "expected " + std::string(1, open) + "a, b, c" +
                    std::string(1, close) + ", got '" + std::string(text) + "'");
  }
  body = body.substr(1, body.size() - 2);
  Vec3 out;
  for (int i = 0; i < 3; ++i) {
    const auto comma = body.find(',');
    if ((i < 2) != (comma != std::string_view::npos)) {
      throw Error(ErrorKind::ParseError,
                  "expected three components in '" + std::string(text) + "'");
    }
    out[i] = Rat::parse(trim(body.substr(0, comma)));
    if (i < 2) body.remove_prefix(comma + 1);
  }
  return out;
}

std::string format_triple(const Vec3& v, char open, char close) {
  return std::string(1, open) + v[0].str() + ", " + v[1].str() + ", " +
         v[2].str() + std::string(1, close);
}

}  // namespace

PPoint::PPoint(const Rat& x, const Rat& y, const Rat& z)
    : v_(canonical({x, y, z})) {}

PPoint::PPoint(const Vec3& v) : v_(canonical(v)) {}

std::array<Rat, 2> PPoint::affine_coords() const {
  if (at_infinity()) throw std::domain_error("point at infinity " + str());
  return {v_[0] / v_[2], v_[1] / v_[2]};
}

std::string PPoint::str() const {
  if (!at_infinity()) {
    const auto [x, y] = affine_coords();
    return format_triple({x, y, Rat(1)}, '(', ')');
  }
  return format_triple(primitive_integer(v_), '(', ')');
}

PPoint PPoint::parse(std::string_view text) {
  return PPoint(parse_triple(text, '(', ')'));
}

PLine::PLine(const Rat& u, const Rat& v, const Rat& w)
    : v_(canonical({u, v, w})) {}

PLine::PLine(const Vec3& v) : v_(canonical(v)) {}

std::string PLine::str() const {
  return format_triple(primitive_integer(v_), '[', ']');
}

PLine PLine::parse(std::string_view text) {
  return PLine(parse_triple(text, '[', ']'));
}

std::ostream& operator<<(std::ostream& os, const PPoint& p) {
  return os << p.str();
}

std::ostream& operator<<(std::ostream& os, const PLine& l) {
  return os << l.str();
}

std::size_t PPointHash::operator()(const PPoint& p) const {
  std::size_t h = 0;
  for (const Rat& c : p.coords()) h = h * 1000003u ^ c.hash();
  return h;
}

bool incident(const PPoint& p, const PLine& l) {
  return dot(p.coords(), l.coeffs()).is_zero();
}

bool collinear(const PPoint& a, const PPoint& b, const PPoint& c) {
  return dot(a.coords(), cross(b.coords(), c.coords())).is_zero();
}

bool concurrent(const PLine& a, const PLine& b, const PLine& c) {
  return dot(a.coeffs(), cross(b.coeffs(), c.coeffs())).is_zero();
}

PLine join(const PPoint& p, const PPoint& q) {
  if (p == q) throw Error(ErrorKind::CoincidentPoints, "join of " + p.str());
  return PLine(cross(p.coords(), q.coords()));
}

PPoint meet(const PLine& l, const PLine& m) {
  if (l == m) throw Error(ErrorKind::CoincidentLines, "meet of " + l.str());
  return PPoint(cross(l.coeffs(), m.coeffs()));
}

// ---------------------------------------------------------------------------

ExtRat ExtRat::from_homogeneous(const Rat& t, const Rat& s) {
  if (s.is_zero()) {
    if (t.is_zero()) throw Error(ErrorKind::ZeroVector, "homogeneous pair (0 : 0)");
    return infinity();
  }
  return ExtRat(t / s);
}

const Rat& ExtRat::value() const {
  if (!v_) throw std::domain_error("value of infinite coordinate");
  return *v_;
}

std::array<Rat, 2> ExtRat::homogeneous() const {
  if (!v_) return {Rat(1), Rat(0)};
  return {*v_, Rat(1)};
}

std::string ExtRat::str() const { return v_ ? v_->str() : "inf"; }

ExtRat ExtRat::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (text == "inf" || text == "-inf" || text == "+inf") return infinity();
  return ExtRat(Rat::parse(text));
}

std::ostream& operator<<(std::ostream& os, const ExtRat& t) {
  return os << t.str();
}

namespace {

int nonzero_index(const Vec3& v) {
  for (int k = 0; k < 3; ++k)
    if (!v[k].is_zero()) return k;
  return -1;
}

Rat det2(const std::array<Rat, 2>& p, const std::array<Rat, 2>& q) {
  return p[0] * q[1] - p[1] * q[0];
}

}  // namespace

LineChart::LineChart(const PLine& line, const PPoint& origin,
                     const PPoint& unit, const PPoint& infinity_point)
    : line_(line), origin_(origin), unit_(unit), infinity_(infinity_point) {
  if (!incident(origin, line) || !incident(unit, line) ||
      !incident(infinity_point, line)) {
    throw Error(ErrorKind::InvalidChart, "reference point not on " + line.str());
  }
  if (origin == unit || origin == infinity_point || unit == infinity_point) {
    throw Error(ErrorKind::InvalidChart, "reference points must be distinct");
  }
  // unit = lambda * origin + mu * infinity, solved via cross products.
  const Vec3& o = origin.coords();
  const Vec3& i = infinity_point.coords();
  const Vec3& u = unit.coords();
  const Vec3 oi = cross(o, i);
  const int k = nonzero_index(oi);
  const Rat lambda = cross(u, i)[k] / oi[k];
  const Rat mu = cross(o, u)[k] / oi[k];
  for (int c = 0; c < 3; ++c) {
    base0_[c] = o[c] * lambda;
    base1_[c] = i[c] * mu;
  }
}

LineChart LineChart::natural(const PLine& line) {
  const Vec3& c = line.coeffs();
  Vec3 o, i;
  if (c[0].is_zero() && c[1].is_zero()) {
    o = {1, 0, 0};
    i = {0, 1, 0};
  } else if (!c[1].is_zero()) {
    o = {0, -c[2] / c[1], 1};
    i = {1, -c[0] / c[1], 0};
  } else {
    o = {-c[2] / c[0], 0, 1};
    i = {0, 1, 0};
  }
  const Vec3 u{o[0] + i[0], o[1] + i[1], o[2] + i[2]};
  return LineChart(line, PPoint(o), PPoint(u), PPoint(i));
}

std::array<Rat, 2> LineChart::homogeneous(const PPoint& p) const {
  if (!incident(p, line_)) {
    throw Error(ErrorKind::NotOnLine, p.str() + " not on " + line_.str());
  }
  const Vec3 b01 = cross(base0_, base1_);
  const int k = nonzero_index(b01);
  const Rat s = cross(p.coords(), base1_)[k] / b01[k];
  const Rat t = cross(base0_, p.coords())[k] / b01[k];
  return {t, s};
}

ExtRat LineChart::coordinate(const PPoint& p) const {
  const auto [t, s] = homogeneous(p);
  return ExtRat::from_homogeneous(t, s);
}

PPoint LineChart::point(const Rat& t, const Rat& s) const {
  return PPoint(Vec3{s * base0_[0] + t * base1_[0], s * base0_[1] + t * base1_[1],
                     s * base0_[2] + t * base1_[2]});
}

PPoint LineChart::point(const ExtRat& t) const {
  const auto h = t.homogeneous();
  return point(h[0], h[1]);
}

ExtRat cross_ratio(const ExtRat& a, const ExtRat& b, const ExtRat& c,
                   const ExtRat& d) {
  if (a == b || a == c || b == c) {
    throw Error(ErrorKind::DegenerateQuadruple,
                "a, b, c must be pairwise distinct");
  }
  const auto ha = a.homogeneous(), hb = b.homogeneous(), hc = c.homogeneous(),
             hd = d.homogeneous();
  return ExtRat::from_homogeneous(det2(ha, hc) * det2(hb, hd),
                                  det2(ha, hd) * det2(hb, hc));
}

ExtRat cross_ratio(const PPoint& a, const PPoint& b, const PPoint& c,
                   const PPoint& d, const LineChart& chart) {
  return cross_ratio(chart.coordinate(a), chart.coordinate(b),
                     chart.coordinate(c), chart.coordinate(d));
}

ExtRat cross_ratio(const PPoint& a, const PPoint& b, const PPoint& c,
                   const PPoint& d) {
  if (a == b || a == c || b == c) {
    throw Error(ErrorKind::DegenerateQuadruple,
                "a, b, c must be pairwise distinct");
  }
  return cross_ratio(a, b, c, d, LineChart::natural(join(a, b)));
}

ExtRat harmonic_conjugate(const ExtRat& c, const ExtRat& a, const ExtRat& b) {
  if (a == b) throw Error(ErrorKind::ConjugateUndefined, "a = b");
  if (c == a || c == b) {
    throw Error(ErrorKind::ConjugateUndefined, c.str() + " is a base point");
  }
  const auto ha = a.homogeneous(), hb = b.homogeneous(), hc = c.homogeneous();
  // c = alpha a + beta b  =>  d = alpha a - beta b.
  const Rat ab = det2(ha, hb);
  const Rat alpha = det2(hc, hb) / ab;
  const Rat beta = det2(ha, hc) / ab;
  return ExtRat::from_homogeneous(alpha * ha[0] - beta * hb[0],
                                  alpha * ha[1] - beta * hb[1]);
}

PPoint harmonic_conjugate(const PPoint& c, const PPoint& a, const PPoint& b) {
  if (a == b) throw Error(ErrorKind::ConjugateUndefined, "a = b");
  if (c == a || c == b) {
    throw Error(ErrorKind::ConjugateUndefined, c.str() + " is a base point");
  }
  if (!collinear(a, b, c)) {
    throw Error(ErrorKind::NotOnLine, c.str() + " not on line through a, b");
  }
  const Vec3 &va = a.coords(), &vb = b.coords(), &vc = c.coords();
  const Vec3 ab = cross(va, vb);
  const int k = nonzero_index(ab);
  const Rat alpha = cross(vc, vb)[k] / ab[k];
  const Rat beta = cross(va, vc)[k] / ab[k];
  return PPoint(Vec3{alpha * va[0] - beta * vb[0], alpha * va[1] - beta * vb[1],
                     alpha * va[2] - beta * vb[2]});
}

PPoint harmonic_conjugate(const PPoint& c, const PPoint& a, const PPoint& b,
                          const LineChart& chart) {
  return chart.point(harmonic_conjugate(chart.coordinate(c),
                                        chart.coordinate(a),
                                        chart.coordinate(b)));
}

Rat affine_ratio(const PPoint& a, const PPoint& x, const PPoint& y) {
  if (a.at_infinity()) return Rat(1);
  if (x == a) {
    if (y == a) throw std::domain_error("affine ratio with x = y = a");
    return Rat(0);
  }
  const PLine line = join(a, x);
  if (!incident(y, line)) throw Error(ErrorKind::NotOnLine, y.str());
  const LineChart chart = LineChart::natural(line);
  const ExtRat ta = chart.coordinate(a), tx = chart.coordinate(x),
               ty = chart.coordinate(y);
  if (tx.is_infinite() && ty.is_infinite()) return Rat(1);
  if (tx.is_infinite() || ty.is_infinite() || ty == ta) {
    throw std::domain_error("affine ratio undefined");
  }
  return (tx.value() - ta.value()) / (ty.value() - ta.value());
}

// ---------------------------------------------------------------------------

Homography::Homography(const Mat3& m) : m_(m) {
  if (determinant(m).is_zero()) {
    throw Error(ErrorKind::SingularMatrix, "homography matrix is singular");
  }
}

Homography Homography::inverse() const { return Homography(adjugate(m_)); }

Homography Homography::compose(const Homography& inner) const {
  return Homography(m_ * inner.m_);
}

PPoint Homography::apply(const PPoint& p) const {
  return PPoint(m_ * p.coords());
}

PLine Homography::apply(const PLine& l) const {
  // Inverse-transpose action; adj(H) is H^{-1} up to scale.
  return PLine(transpose(adjugate(m_)) * l.coeffs());
}

bool operator==(const Homography& a, const Homography& b) {
  std::vector<Rat> va, vb;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      va.push_back(a.m_[i][j]);
      vb.push_back(b.m_[i][j]);
    }
  // Proportional 9-vectors: every 2x2 minor vanishes.
  for (std::size_t i = 0; i < 9; ++i)
    for (std::size_t j = i + 1; j < 9; ++j)
      if (va[i] * vb[j] != va[j] * vb[i]) return false;
  return true;
}

}  // namespace desargues
