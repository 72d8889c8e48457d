#pragma once

#include <string>
#include <vector>

#include "desargues/scene.hpp"

namespace desargues {

// SVG of the visible scene objects. Coordinates are computed exactly and
// converted to floats only when printed (%.12g). Conics are sampled through
// a rational parametrization, adaptively refined. Throws EmptyViewport.
std::string render_svg(const Scene& scene, const Viewport& viewport,
                       const std::string& figspec);

struct IncidenceAudit {
  int checked = 0;
  double max_relative_error = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Re-reads emitted coordinates and checks every exact incidence of the scene
// (point on line, point on conic, conic samples on their conic) in floats.
IncidenceAudit audit_svg(const Scene& scene, const std::string& svg,
                         const Viewport& viewport, double tolerance = 1e-9);

}  // namespace desargues
