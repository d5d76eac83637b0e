#pragma once

#include <string>

#include "hurwitz/cover_model.hpp"
#include "hurwitz/deform.hpp"
#include "hurwitz/rational_function.hpp"

namespace hurwitz {

// Lifted family after the affine change of variable X <- s X + r with
// s = 1 + (2/n) alpha_{n/2-1}, r = -(2/n) alpha_{n/2-1}, which fixes X = 1,
// kills the subleading coefficient of the upper factor and keeps everything
// monic. parity is the gcd of all mu-orders appearing in the coefficient
// series (0 when nothing moves); it reports the ramification order of the
// parameter change mu -> t, and is informational only.
struct SeriesNormalization {
  NormalizedModel<TruncatedSeries> model;
  int parity = 0;
  int precision = 0;
};

// Throws non_unit_leading if s fails to be a unit, and verification_failure
// if the transformed residuals do not vanish to the carried precision.
SeriesNormalization normalize(const DeformationState& state);

struct ReconstructionResult {
  NormalizedModel<RationalFunction> model;
  std::string generator;  // which coefficient series became the parameter
};

// Recognizes every coefficient series as a rational function of one of them.
// The parameter is beta1 when its series is nonconstant (the expected case),
// otherwise the first usable fallback among beta0, gamma, and the top
// coefficient of b; if all are constant, throws generator_degenerate. Each
// coefficient is fitted by an exact kernel computation on a window of
// margin + 2d + 2 series orders, with the candidate fraction then checked
// against the full series; the degree bound d doubles on failure, and
// insufficient_precision signals that the carried order cannot support the
// next doubling (the caller should redo the lift at higher precision).
ReconstructionResult reconstruct(const SeriesNormalization& series, int margin = 8);

}  // namespace hurwitz
