#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "desargues/projective.hpp"

namespace desargues {

// Unordered couple of nodes on a chart; first == second is a double node.
struct PointPair {
  ExtRat first;
  ExtRat second;

  bool is_double() const { return first == second; }
  bool has_infinite() const {
    return first.is_infinite() || second.is_infinite();
  }
  std::string str() const;  // "{t1, t2}"
  static PointPair parse(std::string_view text);

  friend bool operator==(const PointPair& a, const PointPair& b) {
    return (a.first == b.first && a.second == b.second) ||
           (a.first == b.second && a.second == b.first);
  }
};

enum class InvolutionKind { Hyperbolic, HyperbolicIrrational, Elliptic };

std::string_view to_string(InvolutionKind kind);

using Mat2 = std::array<std::array<Rat, 2>, 2>;

// An involutive homography of a chart's line. The matrix [[a, b], [c, -a]]
// acts on homogeneous pairs (t : s); its pairs satisfy
//   c t t' - a (t s' + t' s) - b s s' = 0.
class InvolutionOnLine {
 public:
  // Throws DegenerateInvolution unless trace = 0, det != 0 and M is not scalar.
  InvolutionOnLine(LineChart chart, const Mat2& matrix);

  const LineChart& chart() const { return chart_; }
  const Mat2& matrix() const { return m_; }

  ExtRat image(const ExtRat& t) const;
  PPoint image(const PPoint& p) const;
  bool contains(const PointPair& pair) const;

  // a^2 + bc: positive for hyperbolic, negative for elliptic.
  Rat discriminant() const;

  // "[[a, b], [c, d]] on <line>", matrix scaled to primitive integers.
  std::string str() const;

  // Same line and same map, independent of chart and scale.
  friend bool operator==(const InvolutionOnLine& a, const InvolutionOnLine& b);

 private:
  LineChart chart_;
  Mat2 m_;
};

struct InvolutionClass {
  InvolutionKind kind;
  Rat discriminant;
  // Both fixed points when kind == Hyperbolic, empty otherwise.
  std::vector<ExtRat> fixed_points;
};

InvolutionOnLine involution_from_two_pairs(const PointPair& p1,
                                           const PointPair& p2,
                                           const LineChart& chart);
// The involution with nodes moyens doubles a and b (harmonic conjugation).
InvolutionOnLine involution_with_fixed_points(const ExtRat& a, const ExtRat& b,
                                              const LineChart& chart);

inline bool contains_pair(const InvolutionOnLine& inv, const PointPair& p) {
  return inv.contains(p);
}

InvolutionClass classify_and_fixed_points(const InvolutionOnLine& inv);

// Both members of a cross-multiplied rectangle identity, plus the quotient
// form when its denominators do not vanish.
struct RectangleIdentity {
  Rat lhs_cross;
  Rat rhs_cross;
  std::optional<Rat> lhs_ratio;
  std::optional<Rat> rhs_ratio;
  bool holds() const { return lhs_cross == rhs_cross; }
};

struct DesarguesCondition {
  bool holds = false;
  // GD.GF/CD.CF = GB.GH/CB.CH, FC.FG/DC.DG = FB.FH/DB.DH,
  // HC.HG/BC.BG = HD.HF/BD.BF for couples B,H; C,G; D,F.
  std::array<RectangleIdentity, 3> identities;
  bool uniform_interleaving = false;
  bool all_interleaved = false;
};

// Rectangle-ratio characterization on finite nodes; throws InfiniteNode.
DesarguesCondition desargues_condition_check(
    const std::array<PointPair, 3>& pairs);

struct ArbreCondition {
  bool holds = false;
  std::array<Rat, 3> products;  // (A - B)(A - H), ...
  std::array<bool, 3> engaged;  // A strictly between the two nodes
};

// Throws InfiniteNode, or InvalidSouche when A coincides with a node.
ArbreCondition arbre_check(const Rat& souche,
                           const std::array<PointPair, 3>& pairs);

// True when one of the two couples has exactly one node strictly inside
// the other (finite nodes only).
bool interleaved(const PointPair& p, const PointPair& q);

// Central projection of a line onto another from `center`.
PPoint perspectivity(const PPoint& p, const PPoint& center, const PLine& target);

// Transports `inv` through the perspectivity from `center` onto target's
// line. Throws CenterOnLine.
InvolutionOnLine ramee_project(const InvolutionOnLine& inv,
                               const PPoint& center, const LineChart& target);

}  // namespace desargues
