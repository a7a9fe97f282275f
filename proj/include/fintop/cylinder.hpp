#pragma once

// The non-Hausdorff mapping cylinder B(f) of a map f : X -> Y between T0
// spaces: X ⊔ Y with X's order, Y's order, and x <= y iff f(x) <= y.

#include <optional>
#include <vector>

#include "fintop/cofibration.hpp"
#include "fintop/maps.hpp"
#include "fintop/space.hpp"

namespace fintop {

struct CylinderSpace {
  FiniteSpace space;  // X-part first ("x:" labels), then Y-part ("y:" labels)
  Subspace x_part;
  Subspace y_part;
  SpaceMap source_map;
};

CylinderSpace build_cylinder(const SpaceMap& f);

// r : B(f) -> Y, r = f on the X-part and the identity on the Y-part.
// j_Y∘r >= Id, which makes j_Y^op a cofibration.
SpaceMap cylinder_retraction(const CylinderSpace& c);

struct PreimageCheck {
  Element y;                      // element of Y
  ElementSet preimage;            // f^{-1}(U_y), elements of X
  std::optional<Element> maximum;
};

struct JxDiagnostics {
  bool verdict = false;
  bool criterion_used = false;  // false when routed through the generic algorithm
  std::vector<PreimageCheck> preimages;
  CofibrationReport report;     // generic verdict on (B(f), x_part)
};

// j_X : X -> B(f) is a cofibration iff every f^{-1}(U_y) has a maximum
// (connected Y, nonempty X). Otherwise the generic algorithm decides.
JxDiagnostics jX_cofibration(const CylinderSpace& c);

// j_Y is never a cofibration once both parts are nonempty. Cross-checks the
// closed-subspace obstruction against the generic algorithm and returns true.
// Throws EmptyPart for an empty X or Y.
bool jY_not_cofibration_check(const CylinderSpace& c);

}  // namespace fintop
