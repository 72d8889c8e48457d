#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "desargues/conic.hpp"
#include "desargues/involution.hpp"
#include "desargues/projective.hpp"

namespace desargues {

// One ruler step of a construction, with its exact result.
struct Step {
  std::string name;
  std::string op;  // given, join, meet, second, polar, harmonic, point
  std::vector<std::string> args;
  std::variant<PPoint, PLine> value;

  bool is_point() const { return std::holds_alternative<PPoint>(value); }
  const PPoint& point() const { return std::get<PPoint>(value); }
  const PLine& line() const { return std::get<PLine>(value); }
  // "G = meet(BD, CE) -> (1/2, 1, 1)"
  std::string str() const;
};

class Transcript {
 public:
  PPoint add(std::string name, std::string op,
                    std::vector<std::string> args, const PPoint& p);
  PLine add(std::string name, std::string op,
                   std::vector<std::string> args, const PLine& l);
  // Appends every step of `other`, prefixing names and arguments.
  void append(const Transcript& other, const std::string& prefix);

  const std::vector<Step>& steps() const { return steps_; }
  // Last step with this name, or nullptr.
  const Step* find(const std::string& name) const;
  std::string str() const;

 private:
  std::vector<Step> steps_;
};

// Four bornes B, C, D, E on a conic with couples {BC, DE}, {CD, BE},
// {BD, CE} and diagonal points F = BC.DE, N = CD.BE, G = BD.CE.
class InscribedQuadrangle {
 public:
  // Throws NotOnConic, or DegenerateQuadrangle for repeated bornes, three
  // collinear bornes or coincident diagonal points.
  InscribedQuadrangle(Conic conic, const PPoint& b, const PPoint& c,
                      const PPoint& d, const PPoint& e);

  const Conic& conic() const { return conic_; }
  const PPoint& b() const { return p_[0]; }
  const PPoint& c() const { return p_[1]; }
  const PPoint& d() const { return p_[2]; }
  const PPoint& e() const { return p_[3]; }
  const std::array<PPoint, 4>& bornes() const { return p_; }

  // Lines of couple k: 0 -> (BC, DE), 1 -> (CD, BE), 2 -> (BD, CE).
  std::array<PLine, 2> couple(int k) const;

  const PPoint& f() const { return diag_[0]; }
  const PPoint& n() const { return diag_[1]; }
  const PPoint& g() const { return diag_[2]; }

 private:
  Conic conic_;
  std::array<PPoint, 4> p_;
  std::array<PPoint, 3> diag_;
};

struct DiagonalTriangle {
  PPoint f;
  PPoint n;
  PPoint g;
};

DiagonalTriangle diagonal_triangle(const InscribedQuadrangle& q);

// join(G, N) of a quadrangle.
PLine traversale_of(const InscribedQuadrangle& q);

struct SecantSearch {
  // 0 enumerates parameters in order of height; other seeds shuffle them.
  std::uint64_t seed = 0;
  // Bound on parameter height; also bounds the rational point search.
  int height = 8;
  // Point of the conic to parametrize from; searched for when absent.
  std::optional<PPoint> base = std::nullopt;
};

struct TraversaleConstruction {
  InscribedQuadrangle quadrangle;
  PLine traversale;
  Transcript transcript;
};

// Builds an inscribed quadrangle whose couple {BC, DE} meets at f, from two
// secants through f, and returns join(G, N). Throws OnConic,
// DegenerateConic, NoRationalSecants.
TraversaleConstruction construct_traversale(const Conic& c, const PPoint& f,
                                            const SecantSearch& search = {});

inline PLine traversale_from_quadrangle(const Conic& c, const PPoint& f,
                                        const SecantSearch& search = {}) {
  return construct_traversale(c, f, search).traversale;
}

struct PoleConstruction {
  std::array<PPoint, 2> points;
  std::array<PLine, 2> traversales;
  PPoint pole;
  Transcript transcript;
};

// Meets the traversales of two points of l. Points are taken from `hint`
// when given, else chosen off the conic. Throws TangentLine,
// DegenerateConic, NoRationalSecants.
PoleConstruction construct_pole(const Conic& c, const PLine& l,
                                const std::optional<std::array<PPoint, 2>>& hint = {},
                                const SecantSearch& search = {});

inline PPoint pole_by_construction(const Conic& c, const PLine& l) {
  return construct_pole(c, l).pole;
}

struct IncidenceLemma {
  bool holds;
  PPoint e;  // second intersection of FD with the conic
  PPoint p;  // meet(NE, F cPt)
};

// Throws NotOnConic for d or cPt, OnConic for f.
IncidenceLemma incidence_lemma(const Conic& c, const PPoint& f, const PPoint& n,
                               const PPoint& d, const PPoint& c_pt);

inline bool incidence_lemma_check(const Conic& c, const PPoint& f,
                                  const PPoint& n, const PPoint& d,
                                  const PPoint& c_pt) {
  return incidence_lemma(c, f, n, d, c_pt).holds;
}

// Four base points of a pencil of conics, optionally with a member.
struct PencilBase {
  // Throws DegenerateQuadrangle, NotOnConic for a member missing a point.
  PencilBase(const std::array<PPoint, 4>& points,
             std::optional<Conic> member = std::nullopt);

  std::array<PPoint, 4> points;
  std::optional<Conic> member;
};

struct PencilInvolution {
  InvolutionOnLine involution;
  // Traces of {BC, DE}, {CD, BE}, {BD, CE} in the natural chart of l.
  std::array<PointPair, 3> traces;
  bool traces_are_members;
  // Trace of the member conic, when attached and rational.
  std::optional<PointPair> member_trace;
  bool member_trace_is_member = false;
};

// Throws BasePointOnLine, UnderdeterminedInvolution.
PencilInvolution pencil_involution(const PencilBase& base, const PLine& l);

inline InvolutionOnLine pencil_involution_on_line(const PencilBase& base,
                                                  const PLine& l) {
  return pencil_involution(base, l).involution;
}

struct TwoInvolutions {
  // Fixes f and H; swaps the conic points L, M.
  InvolutionOnLine pencil;
  // Conjugation by the conic; fixes L, M, swaps f and H.
  InvolutionOnLine polar;
  PPoint h;
  std::vector<PPoint> conic_points;
};

// l must pass through f. Throws OnConic, NotOnLine, TangentLine,
// IrrationalIntersection.
TwoInvolutions two_involutions(const Conic& c, const PPoint& f, const PLine& l);

struct HarmonicTangent {
  PLine tangent;
  PPoint r;
  PPoint s;
  PPoint h;
  PPoint i;
  Transcript transcript;
};

// I = harmonic conjugate of H = AF.polar(F) with respect to the contacts R,
// S of the tangents from f; returns join(A, I). Throws NotOnConic, OnConic,
// InteriorPoint, HarmonicUndefined.
HarmonicTangent construct_tangent_via_harmonic(const Conic& c, const PPoint& a,
                                               const PPoint& f);

inline PLine tangent_via_harmonic(const Conic& c, const PPoint& a,
                                  const PPoint& f) {
  return construct_tangent_via_harmonic(c, a, f).tangent;
}

// The diameter conjugate to d: the join of the center with pole(d). Throws
// NotADiameter when d misses the center or the center is at infinity.
PLine conjugate_diameters(const Conic& c, const PLine& infinity, const PLine& d);

struct Menelaus {
  // Intersections with the sides AB, BC, CA.
  std::array<PPoint, 3> points;
  // AX/XB, BY/YC, CZ/ZA; a point at infinity gives -1.
  std::array<Rat, 3> ratios;
  Rat product;
  bool holds;
};

// Finite triangle vertices. Throws VertexOnTransversal, DegenerateQuadruple
// for collinear or infinite vertices.
Menelaus menelaus_check(const std::array<PPoint, 3>& triangle,
                        const PLine& transversal);

// (GX/GY)^2 = (FX/FY)^2 for four collinear points.
bool secteur_check(const PPoint& f, const PPoint& g, const PPoint& x,
                   const PPoint& y);

struct HarmonicRange {
  PPoint x;  // FG.NC
  PPoint y;  // FG.NB
  ExtRat cross;  // (X, Y; F, G)
  bool holds;
  bool secteur;
};

// Throws DegenerateQuadrangle when X or Y is undefined.
HarmonicRange harmonic_range(const InscribedQuadrangle& q);

inline bool harmonic_range_FGXY_check(const InscribedQuadrangle& q) {
  return harmonic_range(q).holds;
}

// A homography with h(lambda) the line at infinity.
Homography homography_to_infinity(const PLine& lambda);

struct Transport {
  PPoint image_center;        // center of transform(c, h)
  PPoint transported_pole;    // h(pole(c, lambda))
  bool holds;
};

// Checks that the center of h(c) is h(pole(c, lambda)). Throws NotOnLine
// unless h sends lambda to the line at infinity.
Transport transport_check(const Conic& c, const PLine& lambda, const Homography& h);

}  // namespace desargues
