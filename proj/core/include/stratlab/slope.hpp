#pragma once

#include <vector>

#include "stratlab/eo_seq.hpp"
#include "stratlab/rational.hpp"

namespace stratlab {

/// Full audit trace of the first-Newton-slope computation: the map Phi on
/// {1..2g}, its eventual image D, the upper-half part C, and |C|/|D|.
struct SlopeTrace {
  FinalSeq psi;
  std::vector<int> phi_map;  // Phi(1..2g)
  std::vector<int> D;        // eventual image, ascending
  std::vector<int> C;        // D intersected with {g+1..2g}
  Rational lambda;
};

/// Phi(i) = psi(i) when psi(i) != 0 and g+i otherwise; D is the stable set
/// of the iterated-image chain Im(Phi) >= Im(Phi^2) >= ...
SlopeTrace slope_trace(const ElementarySeq& phi);

Rational first_newton_slope(const ElementarySeq& phi);

}  // namespace stratlab
