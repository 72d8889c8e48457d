#include "desargues/synthetic.hpp"

#include <algorithm>
#include <random>
#include <utility>

#include "desargues/error.hpp"

namespace desargues {

namespace {

void require_rank3(const Conic& c, const char* what) {
  if (c.rank() < 3) {
    throw Error(ErrorKind::DegenerateConic,
                std::string(what) + " needs a nondegenerate conic, got " + c.str());
  }
}

void require_on(const Conic& c, const PPoint& p) {
  if (!c.contains(p)) throw Error(ErrorKind::NotOnConic, p.str() + " is not on " + c.str());
}

void require_off(const Conic& c, const PPoint& p) {
  if (c.contains(p)) throw Error(ErrorKind::OnConic, p.str() + " is on " + c.str());
}

// Rationals of height <= h, ordered by height, then inf.
std::vector<ExtRat> parameters(int h) {
  std::vector<ExtRat> out;
  for (int height = 0; height <= h; ++height) {
    for (int den = 1; den <= std::max(height, 1); ++den) {
      for (int num = -height; num <= height; ++num) {
        if (std::max(std::abs(num), den) != height) continue;
        const Rat t(num, den);
        if (t.den() != den) continue;
        out.emplace_back(t);
      }
    }
  }
  out.push_back(ExtRat::infinity());
  return out;
}

}  // namespace

std::string Step::str() const {
  std::string out = name + " = " + op;
  if (!args.empty()) {
    out += "(";
    for (std::size_t i = 0; i < args.size(); ++i) out += (i ? ", " : "") + args[i];
    out += ")";
  }
  return out + " -> " + (is_point() ? point().str() : line().str());
}

PPoint Transcript::add(std::string name, std::string op,
                              std::vector<std::string> args, const PPoint& p) {
  steps_.push_back({std::move(name), std::move(op), std::move(args), p});
  return steps_.back().point();
}

PLine Transcript::add(std::string name, std::string op,
                             std::vector<std::string> args, const PLine& l) {
  steps_.push_back({std::move(name), std::move(op), std::move(args), l});
  return steps_.back().line();
}

void Transcript::append(const Transcript& other, const std::string& prefix) {
  for (Step s : other.steps_) {
    s.name = prefix + s.name;
    if (s.op != "point")
      for (auto& a : s.args) a = prefix + a;
    steps_.push_back(std::move(s));
  }
}

const Step* Transcript::find(const std::string& name) const {
  for (auto it = steps_.rbegin(); it != steps_.rend(); ++it)
    if (it->name == name) return &*it;
  return nullptr;
}

std::string Transcript::str() const {
  std::string out;
  for (const auto& s : steps_) out += s.str() + "\n";
  return out;
}

InscribedQuadrangle::InscribedQuadrangle(Conic conic, const PPoint& b,
                                         const PPoint& c, const PPoint& d,
                                         const PPoint& e)
    : conic_(std::move(conic)), p_{b, c, d, e}, diag_{b, b, b} {
  for (const auto& p : p_) require_on(conic_, p);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (p_[i] == p_[j])
        throw Error(ErrorKind::DegenerateQuadrangle, "repeated borne " + p_[i].str());
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int k = j + 1; k < 4; ++k)
        if (collinear(p_[i], p_[j], p_[k]))
          throw Error(ErrorKind::DegenerateQuadrangle,
                      "collinear bornes " + p_[i].str() + ", " + p_[j].str() +
                          ", " + p_[k].str());
  for (int k = 0; k < 3; ++k) {
    const auto lines = couple(k);
    diag_[k] = meet(lines[0], lines[1]);
  }
  if (diag_[0] == diag_[1] || diag_[1] == diag_[2] || diag_[0] == diag_[2] ||
      collinear(diag_[0], diag_[1], diag_[2])) {
    throw Error(ErrorKind::DegenerateQuadrangle, "diagonal points do not form a triangle");
  }
}

std::array<PLine, 2> InscribedQuadrangle::couple(int k) const {
  const auto& [b, c, d, e] = p_;
  switch (k) {
    case 0: return {join(b, c), join(d, e)};
    case 1: return {join(c, d), join(b, e)};
    default: return {join(b, d), join(c, e)};
  }
}

DiagonalTriangle diagonal_triangle(const InscribedQuadrangle& q) {
  return {q.f(), q.n(), q.g()};
}

PLine traversale_of(const InscribedQuadrangle& q) { return join(q.g(), q.n()); }

TraversaleConstruction construct_traversale(const Conic& c, const PPoint& f,
                                            const SecantSearch& search) {
  require_rank3(c, "traversale construction");
  require_off(c, f);
  PPoint base = f;
  if (search.base) {
    require_on(c, *search.base);
    base = *search.base;
  } else {
    try {
      base = find_rational_point(c, search.height);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NoRationalPoint) throw;
      throw Error(ErrorKind::NoRationalSecants,
                  "no rational point to start secants from: " + std::string(e.what()));
    }
  }
  const RationalParametrization param(c, base);
  auto ts = parameters(search.height);
  if (search.seed != 0) {
    std::mt19937_64 rng(search.seed);
    for (std::size_t i = ts.size(); i > 1; --i) std::swap(ts[i - 1], ts[rng() % i]);
  }
  struct Secant {
    ExtRat t;
    PPoint p;
    PPoint q;
    PLine line;
  };
  std::vector<Secant> secants;
  for (const auto& t : ts) {
    const PPoint p = param.point(t);
    const PPoint q = second_intersection(c, p, f);
    if (q == p) continue;
    const PLine line = join(p, f);
    if (!secants.empty() && secants.front().line == line) continue;
    secants.push_back({t, p, q, line});
    if (secants.size() == 2) break;
  }
  if (secants.size() < 2) {
    throw Error(ErrorKind::NoRationalSecants,
                "fewer than two rational secants through " + f.str());
  }
  Transcript tr;
  tr.add("F", "given", {}, f);
  const PPoint b = tr.add("B", "point", {secants[0].t.str()}, secants[0].p);
  const PPoint cc = tr.add("C", "second", {"B", "F"}, secants[0].q);
  const PPoint d = tr.add("D", "point", {secants[1].t.str()}, secants[1].p);
  const PPoint e = tr.add("E", "second", {"D", "F"}, secants[1].q);
  InscribedQuadrangle quad(c, b, cc, d, e);
  tr.add("BC", "join", {"B", "C"}, quad.couple(0)[0]);
  tr.add("DE", "join", {"D", "E"}, quad.couple(0)[1]);
  tr.add("CD", "join", {"C", "D"}, quad.couple(1)[0]);
  tr.add("BE", "join", {"B", "E"}, quad.couple(1)[1]);
  tr.add("N", "meet", {"CD", "BE"}, quad.n());
  tr.add("BD", "join", {"B", "D"}, quad.couple(2)[0]);
  tr.add("CE", "join", {"C", "E"}, quad.couple(2)[1]);
  tr.add("G", "meet", {"BD", "CE"}, quad.g());
  const PLine gn = tr.add("GN", "join", {"G", "N"}, traversale_of(quad));
  return {std::move(quad), gn, std::move(tr)};
}

PoleConstruction construct_pole(const Conic& c, const PLine& l,
                                const std::optional<std::array<PPoint, 2>>& hint,
                                const SecantSearch& search) {
  require_rank3(c, "pole construction");
  if (is_tangent(c, l)) {
    throw Error(ErrorKind::TangentLine, l.str() + " is tangent to " + c.str());
  }
  std::vector<PPoint> pts;
  if (hint) {
    for (const auto& p : *hint) {
      if (!incident(p, l)) throw Error(ErrorKind::NotOnLine, p.str() + " is not on " + l.str());
      require_off(c, p);
    }
    if ((*hint)[0] == (*hint)[1])
      throw Error(ErrorKind::CoincidentPoints, "pole construction needs two points");
    pts = {(*hint)[0], (*hint)[1]};
  } else {
    const LineChart chart = LineChart::natural(l);
    for (const auto& t : parameters(3)) {
      const PPoint p = chart.point(t);
      if (!c.contains(p)) pts.push_back(p);
      if (pts.size() == 2) break;
    }
  }
  Transcript tr;
  tr.add("l", "given", {}, l);
  std::array<PLine, 2> travs{l, l};
  for (int k = 0; k < 2; ++k) {
    const auto tc = construct_traversale(c, pts[k], search);
    tr.append(tc.transcript, std::to_string(k + 1) + ".");
    travs[k] = tc.traversale;
  }
  const PPoint p = tr.add("P", "meet", {"1.GN", "2.GN"}, meet(travs[0], travs[1]));
  return {{pts[0], pts[1]}, travs, p, std::move(tr)};
}

IncidenceLemma incidence_lemma(const Conic& c, const PPoint& f, const PPoint& n,
                               const PPoint& d, const PPoint& c_pt) {
  require_on(c, d);
  require_on(c, c_pt);
  require_off(c, f);
  const PPoint e = second_intersection(c, d, f);
  const PPoint p = meet(join(n, e), join(f, c_pt));
  return {c.contains(p), e, p};
}

PencilBase::PencilBase(const std::array<PPoint, 4>& pts, std::optional<Conic> m)
    : points(pts), member(std::move(m)) {
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      if (points[i] == points[j])
        throw Error(ErrorKind::DegenerateQuadrangle, "repeated base point " + points[i].str());
      for (int k = j + 1; k < 4; ++k)
        if (collinear(points[i], points[j], points[k]))
          throw Error(ErrorKind::DegenerateQuadrangle, "three collinear base points");
    }
  if (member)
    for (const auto& p : points) require_on(*member, p);
}

PencilInvolution pencil_involution(const PencilBase& base, const PLine& l) {
  for (const auto& p : base.points)
    if (incident(p, l))
      throw Error(ErrorKind::BasePointOnLine, p.str() + " lies on " + l.str());
  const auto& [b, c, d, e] = base.points;
  const std::array<std::array<PLine, 2>, 3> couples{
      {{join(b, c), join(d, e)}, {join(c, d), join(b, e)}, {join(b, d), join(c, e)}}};
  const LineChart chart = LineChart::natural(l);
  const PointPair none{ExtRat(0), ExtRat(0)};
  std::array<PointPair, 3> traces{none, none, none};
  for (int k = 0; k < 3; ++k) {
    traces[k] = {chart.coordinate(meet(couples[k][0], l)),
                 chart.coordinate(meet(couples[k][1], l))};
  }
  std::optional<InvolutionOnLine> inv;
  for (const auto& [i, j] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
    try {
      inv = involution_from_two_pairs(traces[i], traces[j], chart);
      break;
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::UnderdeterminedInvolution) throw;
    }
  }
  if (!inv) {
    throw Error(ErrorKind::UnderdeterminedInvolution,
                "bornale traces on " + l.str() + " do not span an involution");
  }
  PencilInvolution out{*inv, traces, true, std::nullopt, false};
  for (const auto& t : traces) out.traces_are_members = out.traces_are_members && inv->contains(t);
  if (base.member) {
    try {
      const auto pts = line_intersect(*base.member, l);
      if (!pts.empty()) {
        out.member_trace = PointPair{chart.coordinate(pts.front()),
                                     chart.coordinate(pts.back())};
        out.member_trace_is_member = inv->contains(*out.member_trace);
      }
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::IrrationalIntersection) throw;
    }
  }
  return out;
}

TwoInvolutions two_involutions(const Conic& c, const PPoint& f, const PLine& l) {
  require_rank3(c, "two involutions");
  require_off(c, f);
  if (!incident(f, l)) throw Error(ErrorKind::NotOnLine, f.str() + " is not on " + l.str());
  const InvolutionOnLine polar_inv = polarity_involution_on_line(c, l);
  const PPoint h = meet(l, polar(c, f));
  const LineChart& chart = polar_inv.chart();
  const InvolutionOnLine pencil =
      involution_with_fixed_points(chart.coordinate(f), chart.coordinate(h), chart);
  return {pencil, polar_inv, h, line_intersect(c, l)};
}

HarmonicTangent construct_tangent_via_harmonic(const Conic& c, const PPoint& a,
                                               const PPoint& f) {
  require_rank3(c, "tangent construction");
  require_on(c, a);
  require_off(c, f);
  Transcript tr;
  tr.add("A", "given", {}, a);
  tr.add("F", "given", {}, f);
  const PLine tau = tr.add("T", "polar", {"F"}, polar(c, f));
  const auto contacts = line_intersect(c, tau);
  if (contacts.size() < 2) {
    throw Error(ErrorKind::InteriorPoint,
                f.str() + " is not exterior to " + c.str());
  }
  const PPoint r = tr.add("R", "intersect", {"T"}, contacts[0]);
  const PPoint s = tr.add("S", "intersect", {"T"}, contacts[1]);
  tr.add("AF", "join", {"A", "F"}, join(a, f));
  const PPoint h = tr.add("H", "meet", {"AF", "T"}, meet(join(a, f), tau));
  if (h == r || h == s) {
    throw Error(ErrorKind::HarmonicUndefined,
                "the ordonnee through " + a.str() + " meets the traversale at a contact point");
  }
  const PPoint i = tr.add("I", "harmonic", {"H", "R", "S"}, harmonic_conjugate(h, r, s));
  const PLine t = tr.add("AI", "join", {"A", "I"}, join(a, i));
  return {t, r, s, h, i, std::move(tr)};
}

PLine conjugate_diameters(const Conic& c, const PLine& infinity, const PLine& d) {
  require_rank3(c, "conjugate diameters");
  const PPoint center = pole(c, infinity);
  if (incident(center, infinity)) {
    throw Error(ErrorKind::NotADiameter, c.str() + " has its center at infinity");
  }
  if (!incident(center, d)) {
    throw Error(ErrorKind::NotADiameter, d.str() + " misses the center " + center.str());
  }
  return join(center, pole(c, d));
}

Menelaus menelaus_check(const std::array<PPoint, 3>& t, const PLine& l) {
  for (const auto& v : t) {
    if (v.at_infinity())
      throw Error(ErrorKind::DegenerateQuadruple, "triangle vertex at infinity " + v.str());
    if (incident(v, l))
      throw Error(ErrorKind::VertexOnTransversal, v.str() + " lies on " + l.str());
  }
  if (collinear(t[0], t[1], t[2]))
    throw Error(ErrorKind::DegenerateQuadruple, "collinear triangle vertices");
  Menelaus out{{t[0], t[0], t[0]}, {}, 1, false};
  for (int k = 0; k < 3; ++k) {
    const PPoint& a = t[k];
    const PPoint& b = t[(k + 1) % 3];
    out.points[k] = meet(join(a, b), l);
    out.ratios[k] = -affine_ratio(out.points[k], a, b);
    out.product = out.product * out.ratios[k];
  }
  out.holds = out.product == Rat(-1);
  return out;
}

bool secteur_check(const PPoint& f, const PPoint& g, const PPoint& x,
                   const PPoint& y) {
  const Rat gr = affine_ratio(g, x, y);
  const Rat fr = affine_ratio(f, x, y);
  return gr * gr == fr * fr;
}

HarmonicRange harmonic_range(const InscribedQuadrangle& q) {
  const PLine fg = join(q.f(), q.g());
  const PPoint x = meet(fg, join(q.n(), q.c()));
  const PPoint y = meet(fg, join(q.n(), q.b()));
  if (x == y || x == q.f() || y == q.f() || x == q.g() || y == q.g()) {
    throw Error(ErrorKind::DegenerateQuadrangle, "X or Y coincides with F or G");
  }
  const ExtRat cr = cross_ratio(x, y, q.f(), q.g());
  return {x, y, cr, cr == ExtRat(-1), secteur_check(q.f(), q.g(), x, y)};
}

Homography homography_to_infinity(const PLine& lambda) {
  const Vec3& w = lambda.coeffs();
  for (const auto& [i, j] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
    Mat3 m{};
    m[0][i] = 1;
    m[1][j] = 1;
    m[2] = w;
    if (!determinant(m).is_zero()) return Homography(m);
  }
  throw Error(ErrorKind::ZeroVector, "no homography for " + lambda.str());
}

Transport transport_check(const Conic& c, const PLine& lambda, const Homography& h) {
  if (!h.apply(lambda).is_at_infinity()) {
    throw Error(ErrorKind::NotOnLine,
                "the homography does not send " + lambda.str() + " to infinity");
  }
  const PPoint image_center = pole(transform(c, h), PLine::at_infinity());
  const PPoint transported = h.apply(pole(c, lambda));
  return {image_center, transported, image_center == transported};
}

}  // namespace desargues
