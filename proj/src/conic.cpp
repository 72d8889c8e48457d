#include "desargues/conic.hpp"

#include <algorithm>
#include <utility>

#include "desargues/error.hpp"

namespace desargues {

namespace {

std::array<Rat, 6> coefficients_of(const Mat3& m) {
  return {m[0][0], m[1][1], m[2][2], m[0][1] * 2, m[0][2] * 2, m[1][2] * 2};
}

Mat3 matrix_of(const std::array<Rat, 6>& c) {
  const Rat d = c[3] / 2, e = c[4] / 2, f = c[5] / 2;
  return Mat3{{{c[0], d, e}, {d, c[1], f}, {e, f, c[2]}}};
}

int rank_of(Mat3 m) {
  int rank = 0;
  for (int col = 0; col < 3 && rank < 3; ++col) {
    int pivot = -1;
    for (int r = rank; r < 3; ++r)
      if (!m[r][col].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (int r = 0; r < 3; ++r) {
      if (r == rank || m[r][col].is_zero()) continue;
      const Rat f = m[r][col] / m[rank][col];
      for (int k = 0; k < 3; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

void require_rank3(const Conic& c, const char* what) {
  if (c.rank() < 3) {
    throw Error(ErrorKind::DegenerateConic,
                std::string(what) + " needs a nondegenerate conic, got " +
                    c.str());
  }
}

PPoint on_line(const LineChart& chart, const Rat& t, const Rat& s) {
  const auto b = chart.basis();
  Vec3 v;
  for (int i = 0; i < 3; ++i) v[i] = s * b[0][i] + t * b[1][i];
  return PPoint(v);
}

std::string monomial(const Rat& c, const char* name, bool first) {
  if (c.is_zero()) return "";
  std::string out;
  if (first) {
    if (c.sign() < 0) out += "-";
  } else {
    out += c.sign() < 0 ? " - " : " + ";
  }
  const Rat a = c.abs();
  if (a != Rat(1)) out += a.str();
  return out + name;
}

}  // namespace

Conic::Conic(const Mat3& m) {
  Mat3 sym;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) sym[i][j] = (m[i][j] + m[j][i]) / 2;
  auto c = coefficients_of(sym);
  const Rat* lead = nullptr;
  for (const auto& x : c)
    if (!x.is_zero()) {
      lead = &x;
      break;
    }
  if (lead == nullptr) throw Error(ErrorKind::ZeroForm, "the zero form is not a conic");
  const Rat scale = lead->inverse();
  for (auto& x : c) x = x * scale;
  m_ = matrix_of(c);
}

Conic Conic::from_coefficients(const std::array<Rat, 6>& c) {
  return Conic(matrix_of(c));
}

std::array<Rat, 6> Conic::coefficients() const { return coefficients_of(m_); }

int Conic::rank() const { return rank_of(m_); }

Rat Conic::q(const Vec3& v) const { return dot(v, m_ * v); }

Rat Conic::phi(const Vec3& v, const Vec3& w) const { return dot(v, m_ * w); }

std::string Conic::str() const {
  auto c = coefficients();
  // Primitive integers: scale by the lcm of denominators, then by the gcd.
  mpz_class l = 1;
  for (const auto& x : c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
  mpz_class g = 0;
  for (auto& x : c) {
    x = x * Rat(l);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.num().get_mpz_t());
  }
  for (auto& x : c) x = x / Rat(g);
  static const char* names[6] = {"x^2", "y^2", "z^2", "xy", "xz", "yz"};
  std::string out;
  for (int i = 0; i < 6; ++i) out += monomial(c[i], names[i], out.empty());
  return out;
}

std::string_view to_string(ConicKind kind) {
  switch (kind) {
    case ConicKind::NondegenerateReal: return "NondegenerateReal";
    case ConicKind::Empty: return "Empty";
    case ConicKind::DegenerateTwoLines: return "DegenerateTwoLines";
    case ConicKind::DegenerateDoubleLine: return "DegenerateDoubleLine";
  }
  return "Unknown";
}

std::string_view to_string(AffineKind kind) {
  switch (kind) {
    case AffineKind::Ellipse: return "Ellipse";
    case AffineKind::Parabola: return "Parabola";
    case AffineKind::Hyperbola: return "Hyperbola";
  }
  return "Unknown";
}

Conic conic_from_five_points(const std::array<PPoint, 5>& points) {
  // Rows (x^2, y^2, z^2, xy, xz, yz); reduced row echelon form.
  std::vector<std::array<Rat, 6>> rows;
  for (const auto& p : points) {
    const auto& v = p.coords();
    rows.push_back({v[0] * v[0], v[1] * v[1], v[2] * v[2], v[0] * v[1],
                    v[0] * v[2], v[1] * v[2]});
  }
  std::vector<int> pivots;
  std::size_t r = 0;
  for (int col = 0; col < 6 && r < rows.size(); ++col) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][col].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    const Rat inv = rows[r][col].inverse();
    for (auto& x : rows[r]) x = x * inv;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k == r || rows[k][col].is_zero()) continue;
      const Rat f = rows[k][col];
      for (int j = 0; j < 6; ++j) rows[k][j] -= f * rows[r][j];
    }
    pivots.push_back(col);
    ++r;
  }
  if (pivots.size() < 5) {
    throw Error(ErrorKind::DegeneratePointSet,
                "the five points lie on a pencil of conics");
  }
  int free_col = 0;
  while (free_col < 6 &&
         std::find(pivots.begin(), pivots.end(), free_col) != pivots.end())
    ++free_col;
  std::array<Rat, 6> c;
  c[free_col] = 1;
  for (std::size_t k = 0; k < pivots.size(); ++k) c[pivots[k]] = -rows[k][free_col];
  return Conic::from_coefficients(c);
}

PLine polar(const Conic& c, const PPoint& m) {
  if (c.rank() == 1) {
    throw Error(ErrorKind::DegenerateConic,
                "polars are not defined for the double line " + c.str());
  }
  const Vec3 v = c.matrix() * m.coords();
  if (is_zero(v)) {
    throw Error(ErrorKind::TotallyIsotropicPoint,
                m.str() + " is the point double of " + c.str());
  }
  return PLine(v);
}

PPoint pole(const Conic& c, const PLine& l) {
  require_rank3(c, "pole");
  return PPoint(adjugate(c.matrix()) * l.coeffs());
}

bool is_tangent(const Conic& c, const PLine& l) {
  return incident(pole(c, l), l);
}

LineRestriction restrict_to_line(const Conic& c, const PLine& l) {
  const auto b = LineChart::natural(l).basis();
  return {c.q(b[0]), c.phi(b[0], b[1]), c.q(b[1])};
}

std::vector<PPoint> line_intersect(const Conic& c, const PLine& l) {
  const LineChart chart = LineChart::natural(l);
  const LineRestriction r = restrict_to_line(c, l);
  if (r.a.is_zero() && r.b.is_zero() && r.c.is_zero()) {
    throw Error(ErrorKind::LineOnConic, l.str() + " is a component of " + c.str());
  }
  // A s^2 + 2 B s t + C t^2 = 0 in (t : s).
  const Rat d = r.discriminant();
  if (d.sign() < 0) return {};
  const auto root = d.exact_sqrt();
  if (!root) {
    throw Error(ErrorKind::IrrationalIntersection,
                l.str() + " meets " + c.str() +
                    " in irrational points (discriminant " + d.str() + ")");
  }
  std::vector<PPoint> out;
  if (!r.c.is_zero()) {
    out.push_back(on_line(chart, -r.b + *root, r.c));
    if (!root->is_zero()) out.push_back(on_line(chart, -r.b - *root, r.c));
  } else {
    out.push_back(on_line(chart, 1, 0));
    if (!r.b.is_zero()) out.push_back(on_line(chart, -r.a, r.b * 2));
  }
  return out;
}

InvolutionOnLine polarity_involution_on_line(const Conic& c, const PLine& l) {
  require_rank3(c, "polarity involution");
  const LineChart chart = LineChart::natural(l);
  const auto b = chart.basis();
  const Rat a = -c.phi(b[0], b[1]);
  const Rat bb = -c.q(b[0]);
  const Rat cc = c.q(b[1]);
  if ((a * a + bb * cc).is_zero()) {
    throw Error(ErrorKind::TangentLine,
                l.str() + " is tangent to " + c.str() + ": no involution");
  }
  return InvolutionOnLine(chart, Mat2{{{a, bb}, {cc, -a}}});
}

std::vector<Tangent> tangents_from(const Conic& c, const PPoint& f) {
  require_rank3(c, "tangents");
  const PLine p = polar(c, f);
  if (c.contains(f)) return {Tangent{p, f}};
  const auto contacts = line_intersect(c, p);
  if (contacts.empty()) {
    throw Error(ErrorKind::InteriorPoint,
                f.str() + " is interior to " + c.str() + ": its polar " +
                    p.str() + " misses the conic");
  }
  std::vector<Tangent> out;
  for (const auto& m : contacts) out.push_back({join(f, m), m});
  return out;
}

ConicClass classify(const Conic& c) {
  // Congruence reduction: pivot on a nonzero diagonal entry, creating one
  // from an off-diagonal entry when needed.
  std::vector<std::vector<Rat>> a(3, std::vector<Rat>(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a[i][j] = c.matrix()[i][j];
  int pos = 0, neg = 0;
  while (!a.empty()) {
    const std::size_t n = a.size();
    std::size_t piv = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!a[i][i].is_zero()) {
        piv = i;
        break;
      }
    if (piv == n) {
      std::size_t pi = n, pj = n;
      for (std::size_t i = 0; i < n && pi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (!a[i][j].is_zero()) {
            pi = i;
            pj = j;
            break;
          }
      if (pi == n) break;
      for (std::size_t k = 0; k < n; ++k) a[pi][k] += a[pj][k];
      for (std::size_t k = 0; k < n; ++k) a[k][pi] += a[k][pj];
      piv = pi;
    }
    const Rat p = a[piv][piv];
    (p.sign() > 0 ? pos : neg)++;
    std::vector<std::vector<Rat>> next;
    for (std::size_t k = 0; k < n; ++k) {
      if (k == piv) continue;
      std::vector<Rat> row;
      for (std::size_t l = 0; l < n; ++l) {
        if (l == piv) continue;
        row.push_back(a[k][l] - a[k][piv] * a[piv][l] / p);
      }
      next.push_back(std::move(row));
    }
    a = std::move(next);
  }
  const int rank = pos + neg;
  ConicClass out{ConicKind::NondegenerateReal, rank,
                 {std::max(pos, neg), std::min(pos, neg)}, std::nullopt};
  if (rank == 3) {
    out.kind = neg == 0 || pos == 0 ? ConicKind::Empty : ConicKind::NondegenerateReal;
  } else if (rank == 2) {
    out.kind = ConicKind::DegenerateTwoLines;
    const Mat3& m = c.matrix();
    for (const auto& [i, j] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
      const Vec3 k = cross(m[i], m[j]);
      if (!is_zero(k)) {
        out.point_double = PPoint(k);
        break;
      }
    }
  } else {
    out.kind = ConicKind::DegenerateDoubleLine;
  }
  return out;
}

AffineFeatures affine_features(const Conic& c, const PLine& infinity) {
  require_rank3(c, "affine features");
  const Rat d = restrict_to_line(c, infinity).discriminant();
  AffineFeatures out{d.sign() < 0    ? AffineKind::Ellipse
                     : d.is_zero()   ? AffineKind::Parabola
                                     : AffineKind::Hyperbola,
                     pole(c, infinity), d, {}, {}, false};
  if (out.kind == AffineKind::Ellipse) return out;
  try {
    out.infinite_points = line_intersect(c, infinity);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::IrrationalIntersection) throw;
    out.irrational_infinite_points = true;
    return out;
  }
  if (out.kind == AffineKind::Hyperbola) {
    for (const auto& p : out.infinite_points) out.asymptotes.push_back(polar(c, p));
  }
  return out;
}

Conic transform(const Conic& c, const Homography& h) {
  const Mat3 a = adjugate(h.matrix());
  return Conic(transpose(a) * c.matrix() * a);
}

RationalParametrization::RationalParametrization(Conic c, const PPoint& base)
    : c_(std::move(c)),
      base_(base),
      pencil_(LineChart::natural(!base.at_infinity()     ? PLine::at_infinity()
                                 : base.coords()[0].is_zero() ? PLine(0, 1, 0)
                                                              : PLine(1, 0, 0))) {
  require_rank3(c_, "rational parametrization");
  if (!c_.contains(base_)) {
    throw Error(ErrorKind::BasePointNotOnConic,
                base_.str() + " is not on " + c_.str());
  }
}

PPoint RationalParametrization::point(const ExtRat& t) const {
  const Vec3 w = pencil_.point(t).coords();
  const Vec3& v = base_.coords();
  const Rat qw = c_.q(w), pvw = c_.phi(v, w) * 2;
  Vec3 p;
  for (int i = 0; i < 3; ++i) p[i] = qw * v[i] - pvw * w[i];
  return is_zero(p) ? base_ : PPoint(p);
}

PPoint second_intersection(const Conic& c, const PPoint& p, const PPoint& f) {
  if (!c.contains(p)) {
    throw Error(ErrorKind::NotOnConic, p.str() + " is not on " + c.str());
  }
  if (p == f) throw Error(ErrorKind::CoincidentPoints, "second intersection through " + p.str());
  const Vec3& v = p.coords();
  const Vec3& w = f.coords();
  const Rat qw = c.q(w), pvw = c.phi(v, w) * 2;
  Vec3 r;
  for (int i = 0; i < 3; ++i) r[i] = qw * v[i] - pvw * w[i];
  if (is_zero(r)) {
    throw Error(ErrorKind::LineOnConic,
                join(p, f).str() + " is a component of " + c.str());
  }
  return PPoint(r);
}

PPoint find_rational_point(const Conic& c, int height) {
  for (const PPoint& v : {PPoint(1, 0, 0), PPoint(0, 1, 0), PPoint(0, 0, 1)})
    if (c.contains(v)) return v;
  auto try_line = [&](const PLine& l) -> std::optional<PPoint> {
    try {
      const auto pts = line_intersect(c, l);
      if (!pts.empty()) return pts.front();
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::LineOnConic) return LineChart::natural(l).point(ExtRat(0));
      if (e.kind() != ErrorKind::IrrationalIntersection) throw;
    }
    return std::nullopt;
  };
  if (auto p = try_line(PLine::at_infinity())) return *p;
  for (int den = 1; den <= height; ++den) {
    for (int num = -height; num <= height; ++num) {
      const Rat x0(num, den);
      if (x0.den() != den) continue;
      if (auto p = try_line(PLine(1, 0, -x0))) return *p;
      if (auto p = try_line(PLine(0, 1, -x0))) return *p;
    }
  }
  throw Error(ErrorKind::NoRationalPoint,
              "no rational point of height <= " + std::to_string(height) +
                  " on " + c.str());
}

}  // namespace desargues
