#pragma once

#include "verify.hpp"

namespace morincob {

// Machine check of the explicit identities behind the vanishing of the fold
// class on the boundary of an isolated cusp: the normal vector of the
// image hypersurface, the singular set and its image, the double-point
// curve and the frame it induces, the embedded disc F bounding the singular
// image curve with a matching frame, and the positivity certificate for the
// frame matrix determinant. All arithmetic is exact rational; every check
// reduces to polynomial identities.
//
// `inject_defect` deliberately corrupts one expected value so the failure
// reporting path can be exercised; supported names: "det_expansion".
VerifyReport verify_disc_framing(const std::string& inject_defect = "");

}  // namespace morincob
