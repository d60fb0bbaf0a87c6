#include "stratlab/slope.hpp"

#include <algorithm>

#include "stratlab/error.hpp"

namespace stratlab {

SlopeTrace slope_trace(const ElementarySeq& phi) {
  const int g = phi.g();
  const int d = 2 * g;
  FinalSeq psi = phi.stretch();

  std::vector<int> map(static_cast<std::size_t>(d), 0);
  for (int i = 1; i <= d; ++i) {
    map[static_cast<std::size_t>(i - 1)] = psi(i) != 0 ? psi(i) : g + i;
  }

  // Iterate image sets to the fixed point; finiteness bounds this by 2g
  // proper shrinks.
  std::vector<bool> current(static_cast<std::size_t>(d), true);
  int steps = 0;
  while (true) {
    std::vector<bool> next(static_cast<std::size_t>(d), false);
    for (int i = 1; i <= d; ++i) {
      if (current[static_cast<std::size_t>(i - 1)]) {
        next[static_cast<std::size_t>(map[static_cast<std::size_t>(i - 1)] - 1)] = true;
      }
    }
    if (next == current) break;
    current = std::move(next);
    require(++steps <= d + 1, ErrorCode::Internal, "image chain failed to stabilise");
  }

  SlopeTrace trace{std::move(psi), std::move(map), {}, {}, Rational()};
  for (int i = 1; i <= d; ++i) {
    if (current[static_cast<std::size_t>(i - 1)]) {
      trace.D.push_back(i);
      if (i > g) trace.C.push_back(i);
    }
  }
  trace.lambda = Rational(static_cast<std::int64_t>(trace.C.size()),
                          static_cast<std::int64_t>(trace.D.size()));
  return trace;
}

Rational first_newton_slope(const ElementarySeq& phi) { return slope_trace(phi).lambda; }

}  // namespace stratlab
