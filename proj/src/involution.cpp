#include "desargues/involution.hpp"

#include <algorithm>

#include "desargues/error.hpp"

namespace desargues {

std::string PointPair::str() const {
  return "{" + first.str() + ", " + second.str() + "}";
}

PointPair PointPair::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  const auto comma = text.find(',');
  if (text.size() < 2 || text.front() != '{' || text.back() != '}' ||
      comma == std::string_view::npos) {
    throw Error(ErrorKind::ParseError,
                "expected {t1, t2}, got '" + std::string(text) + "'");
  }
  return {ExtRat::parse(text.substr(1, comma - 1)),
          ExtRat::parse(text.substr(comma + 1, text.size() - comma - 2))};
}

std::string_view to_string(InvolutionKind kind) {
  switch (kind) {
    case InvolutionKind::Hyperbolic: return "Hyperbolic";
    case InvolutionKind::HyperbolicIrrational: return "HyperbolicIrrational";
    case InvolutionKind::Elliptic: return "Elliptic";
  }
  return "Unknown";
}

namespace {

using Hom2 = std::array<Rat, 2>;

Rat det2(const Hom2& p, const Hom2& q) { return p[0] * q[1] - p[1] * q[0]; }

Hom2 act(const Mat2& m, const Hom2& v) {
  return {m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]};
}

Mat2 mul(const Mat2& a, const Mat2& b) {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return r;
}

// Row of the linear condition on (a, b, c) imposed by one couple.
Vec3 pair_condition(const PointPair& p) {
  const Hom2 u = p.first.homogeneous();
  const Hom2 v = p.second.homogeneous();
  return {-(u[0] * v[1] + v[0] * u[1]), -(u[1] * v[1]), u[0] * v[0]};
}

void require_finite(const std::array<PointPair, 3>& pairs) {
  for (const auto& p : pairs) {
    if (p.has_infinite()) {
      throw Error(ErrorKind::InfiniteNode,
                  "rectangle identities need finite nodes, got " + p.str());
    }
  }
}

// (x - p)(x - q) for a finite couple.
Rat rectangle(const Rat& x, const PointPair& p) {
  return (x - p.first.value()) * (x - p.second.value());
}

// Identity evaluated on the nodes (x, y) of `on`, comparing the rectangles of
// `left` and `right`:  R_left(y) / R_left(x) = R_right(y) / R_right(x).
RectangleIdentity identity_at(const Rat& y, const Rat& x,
                              const PointPair& left, const PointPair& right) {
  RectangleIdentity id;
  const Rat ly = rectangle(y, left), lx = rectangle(x, left);
  const Rat ry = rectangle(y, right), rx = rectangle(x, right);
  id.lhs_cross = ly * rx;
  id.rhs_cross = ry * lx;
  if (!lx.is_zero() && !rx.is_zero()) {
    id.lhs_ratio = ly / lx;
    id.rhs_ratio = ry / rx;
  }
  return id;
}

bool share_single_node(const PointPair& p, const PointPair& q) {
  if (p == q) return false;
  return p.first == q.first || p.first == q.second || p.second == q.first ||
         p.second == q.second;
}

}  // namespace

InvolutionOnLine::InvolutionOnLine(LineChart chart, const Mat2& matrix)
    : chart_(std::move(chart)), m_(matrix) {
  if (m_[0][0] + m_[1][1] != 0) {
    throw Error(ErrorKind::DegenerateInvolution, "trace must vanish");
  }
  if (m_[0][0].is_zero() && m_[0][1].is_zero() && m_[1][0].is_zero()) {
    throw Error(ErrorKind::DegenerateInvolution, "zero matrix");
  }
  if ((m_[0][0] * m_[1][1] - m_[0][1] * m_[1][0]).is_zero()) {
    throw Error(ErrorKind::DegenerateInvolution,
                "singular map: no parabolic involution exists");
  }
}

ExtRat InvolutionOnLine::image(const ExtRat& t) const {
  const Hom2 r = act(m_, t.homogeneous());
  return ExtRat::from_homogeneous(r[0], r[1]);
}

PPoint InvolutionOnLine::image(const PPoint& p) const {
  return chart_.point(image(chart_.coordinate(p)));
}

bool InvolutionOnLine::contains(const PointPair& pair) const {
  return image(pair.first) == pair.second;
}

Rat InvolutionOnLine::discriminant() const {
  return m_[0][0] * m_[0][0] + m_[0][1] * m_[1][0];
}

std::string InvolutionOnLine::str() const {
  const Vec3 abc = primitive_integer({m_[0][0], m_[0][1], m_[1][0]});
  return "[[" + abc[0].str() + ", " + abc[1].str() + "], [" + abc[2].str() +
         ", " + (-abc[0]).str() + "]] on " + chart_.line().str();
}

bool operator==(const InvolutionOnLine& a, const InvolutionOnLine& b) {
  if (!(a.chart_.line() == b.chart_.line())) return false;
  for (const ExtRat& t : {ExtRat(0), ExtRat(1), ExtRat::infinity()}) {
    const PPoint p = a.chart_.point(t);
    if (!(a.image(p) == b.image(p))) return false;
  }
  return true;
}

InvolutionOnLine involution_from_two_pairs(const PointPair& p1,
                                           const PointPair& p2,
                                           const LineChart& chart) {
  const Vec3 abc = cross(pair_condition(p1), pair_condition(p2));
  if (is_zero(abc)) {
    throw Error(ErrorKind::UnderdeterminedInvolution,
                p1.str() + " and " + p2.str() + " do not fix an involution");
  }
  const Mat2 m{{{abc[0], abc[1]}, {abc[2], -abc[0]}}};
  return InvolutionOnLine(chart, m);
}

InvolutionOnLine involution_with_fixed_points(const ExtRat& a, const ExtRat& b,
                                              const LineChart& chart) {
  return involution_from_two_pairs({a, a}, {b, b}, chart);
}

InvolutionClass classify_and_fixed_points(const InvolutionOnLine& inv) {
  const Mat2& m = inv.matrix();
  const Rat& a = m[0][0];
  const Rat& b = m[0][1];
  const Rat& c = m[1][0];
  InvolutionClass out{InvolutionKind::Elliptic, inv.discriminant(), {}};
  if (out.discriminant.sign() < 0) return out;
  // Fixed points solve c t^2 - 2 a t s - b s^2 = 0.
  const auto root = out.discriminant.exact_sqrt();
  if (!root) {
    out.kind = InvolutionKind::HyperbolicIrrational;
    return out;
  }
  out.kind = InvolutionKind::Hyperbolic;
  if (!c.is_zero()) {
    out.fixed_points = {ExtRat((a - *root) / c), ExtRat((a + *root) / c)};
  } else {
    out.fixed_points = {ExtRat(-b / (a + a)), ExtRat::infinity()};
  }
  return out;
}

bool interleaved(const PointPair& p, const PointPair& q) {
  if (p.has_infinite() || q.has_infinite()) {
    throw Error(ErrorKind::InfiniteNode, "interleaving needs finite nodes");
  }
  if (p.is_double() || q.is_double()) return false;
  const Rat lo = std::min(p.first.value(), p.second.value());
  const Rat hi = std::max(p.first.value(), p.second.value());
  auto inside = [&](const ExtRat& t) { return lo < t.value() && t.value() < hi; };
  auto outside = [&](const ExtRat& t) { return t.value() < lo || hi < t.value(); };
  return (inside(q.first) && outside(q.second)) ||
         (inside(q.second) && outside(q.first));
}

DesarguesCondition desargues_condition_check(
    const std::array<PointPair, 3>& pairs) {
  require_finite(pairs);
  const PointPair& bh = pairs[0];
  const PointPair& cg = pairs[1];
  const PointPair& df = pairs[2];
  DesarguesCondition out;
  out.identities[0] =
      identity_at(cg.second.value(), cg.first.value(), df, bh);
  out.identities[1] =
      identity_at(df.second.value(), df.first.value(), cg, bh);
  out.identities[2] =
      identity_at(bh.second.value(), bh.first.value(), cg, df);

  bool any = false, all = true, first = true, status = false;
  out.uniform_interleaving = true;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (pairs[i] == pairs[j]) continue;
      const bool s = interleaved(pairs[i], pairs[j]);
      any = any || s;
      all = all && s;
      if (first) {
        status = s;
        first = false;
      } else if (s != status) {
        out.uniform_interleaving = false;
      }
    }
  }
  out.all_interleaved = any && all;

  bool identities_hold = std::all_of(
      out.identities.begin(), out.identities.end(),
      [](const RectangleIdentity& id) { return id.holds(); });
  // Configurations the cross-multiplied identities cannot see: two couples
  // sharing exactly one node, or three distinct double nodes (an involution
  // has at most two fixed points).
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (share_single_node(pairs[i], pairs[j])) identities_hold = false;
  if (bh.is_double() && cg.is_double() && df.is_double() && !(bh == cg) &&
      !(bh == df) && !(cg == df)) {
    identities_hold = false;
  }
  out.holds = identities_hold && out.uniform_interleaving;
  return out;
}

ArbreCondition arbre_check(const Rat& souche,
                           const std::array<PointPair, 3>& pairs) {
  require_finite(pairs);
  ArbreCondition out;
  for (int i = 0; i < 3; ++i) {
    const Rat& b = pairs[i].first.value();
    const Rat& h = pairs[i].second.value();
    if (souche == b || souche == h) {
      throw Error(ErrorKind::InvalidSouche,
                  "souche " + souche.str() + " coincides with a node");
    }
    out.products[i] = (souche - b) * (souche - h);
    out.engaged[i] = out.products[i].sign() < 0;
  }
  out.holds = out.products[0] == out.products[1] &&
              out.products[1] == out.products[2] &&
              out.engaged[0] == out.engaged[1] &&
              out.engaged[1] == out.engaged[2];
  return out;
}

PPoint perspectivity(const PPoint& p, const PPoint& center,
                     const PLine& target) {
  if (p == center || incident(center, target)) {
    throw Error(ErrorKind::CenterOnLine, "center " + center.str());
  }
  const PLine ray = join(center, p);
  return meet(ray, target);
}

InvolutionOnLine ramee_project(const InvolutionOnLine& inv,
                               const PPoint& center, const LineChart& target) {
  const LineChart& source = inv.chart();
  if (source.contains(center)) {
    throw Error(ErrorKind::CenterOnLine,
                center.str() + " lies on source " + source.line().str());
  }
  if (target.contains(center)) {
    throw Error(ErrorKind::CenterOnLine,
                center.str() + " lies on target " + target.line().str());
  }
  auto image = [&](const Rat& t, const Rat& s) {
    return target.homogeneous(
        perspectivity(source.point(t, s), center, target.line()));
  };
  const Hom2 y_inf = image(1, 0);
  const Hom2 y0 = image(0, 1);
  const Hom2 y1 = image(1, 1);
  // T maps source (1:0), (0:1), (1:1) to the three images.
  const Rat d = det2(y_inf, y0);
  const Rat alpha = det2(y1, y0) / d;
  const Rat beta = det2(y_inf, y1) / d;
  const Mat2 t{{{alpha * y_inf[0], beta * y0[0]}, {alpha * y_inf[1], beta * y0[1]}}};
  const Mat2 t_adj{{{t[1][1], -t[0][1]}, {-t[1][0], t[0][0]}}};
  return InvolutionOnLine(target, mul(mul(t, inv.matrix()), t_adj));
}

}  // namespace desargues
