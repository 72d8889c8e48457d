#include "desargues/error.hpp"

namespace desargues {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CoincidentPoints: return "CoincidentPoints";
    case ErrorKind::CoincidentLines: return "CoincidentLines";
    case ErrorKind::NotOnLine: return "NotOnLine";
    case ErrorKind::DegenerateQuadruple: return "DegenerateQuadruple";
    case ErrorKind::ConjugateUndefined: return "ConjugateUndefined";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::InvalidChart: return "InvalidChart";
    case ErrorKind::UnderdeterminedInvolution: return "UnderdeterminedInvolution";
    case ErrorKind::DegenerateInvolution: return "DegenerateInvolution";
    case ErrorKind::InfiniteNode: return "InfiniteNode";
    case ErrorKind::InvalidSouche: return "InvalidSouche";
    case ErrorKind::CenterOnLine: return "CenterOnLine";
    case ErrorKind::ZeroForm: return "ZeroForm";
    case ErrorKind::DegeneratePointSet: return "DegeneratePointSet";
    case ErrorKind::TotallyIsotropicPoint: return "TotallyIsotropicPoint";
    case ErrorKind::DegenerateConic: return "DegenerateConic";
    case ErrorKind::IrrationalIntersection: return "IrrationalIntersection";
    case ErrorKind::LineOnConic: return "LineOnConic";
    case ErrorKind::TangentLine: return "TangentLine";
    case ErrorKind::InteriorPoint: return "InteriorPoint";
    case ErrorKind::BasePointNotOnConic: return "BasePointNotOnConic";
    case ErrorKind::NoRationalPoint: return "NoRationalPoint";
    case ErrorKind::DegenerateQuadrangle: return "DegenerateQuadrangle";
    case ErrorKind::NoRationalSecants: return "NoRationalSecants";
    case ErrorKind::OnConic: return "OnConic";
    case ErrorKind::NotOnConic: return "NotOnConic";
    case ErrorKind::BasePointOnLine: return "BasePointOnLine";
    case ErrorKind::HarmonicUndefined: return "HarmonicUndefined";
    case ErrorKind::NotADiameter: return "NotADiameter";
    case ErrorKind::VertexOnTransversal: return "VertexOnTransversal";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownReference: return "UnknownReference";
    case ErrorKind::DuplicateName: return "DuplicateName";
    case ErrorKind::EmptyViewport: return "EmptyViewport";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
      kind_(kind),
      detail_(detail) {}

}  // namespace desargues
