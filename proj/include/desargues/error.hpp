#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace desargues {

enum class ErrorKind {
  // projective core
  CoincidentPoints,
  CoincidentLines,
  NotOnLine,
  DegenerateQuadruple,
  ConjugateUndefined,
  SingularMatrix,
  ZeroVector,
  InvalidChart,
  // involutions
  UnderdeterminedInvolution,
  DegenerateInvolution,
  InfiniteNode,
  InvalidSouche,
  CenterOnLine,
  // conics
  ZeroForm,
  DegeneratePointSet,
  TotallyIsotropicPoint,
  DegenerateConic,
  IrrationalIntersection,
  LineOnConic,
  TangentLine,
  InteriorPoint,
  BasePointNotOnConic,
  NoRationalPoint,
  // synthetic constructions
  DegenerateQuadrangle,
  NoRationalSecants,
  OnConic,
  NotOnConic,
  BasePointOnLine,
  HarmonicUndefined,
  NotADiameter,
  VertexOnTransversal,
  // harness
  ParseError,
  UnknownReference,
  DuplicateName,
  EmptyViewport,
  UnknownSuite,
  IoError,
};

std::string_view to_string(ErrorKind kind);

// Every failure in the library is reported through this type; `kind()` is the
// stable, testable part, `what()` carries a human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace desargues
