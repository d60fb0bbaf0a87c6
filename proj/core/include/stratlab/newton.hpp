#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stratlab/error.hpp"
#include "stratlab/rational.hpp"

namespace stratlab {

/// One coprime slope segment [m,n] with a multiplicity, slope n/(m+n).
struct NPSegment {
  int m = 0;
  int n = 0;
  int multiplicity = 1;

  Rational slope() const { return Rational(n, m + n); }

  friend bool operator==(const NPSegment&, const NPSegment&) = default;
};

/// Newton polygon as a slope-sorted multiset of coprime segments.
/// Equal segments are aggregated into one entry with a multiplicity, so
/// slope ties cannot occur between distinct entries.
class NewtonPolygon {
 public:
  explicit NewtonPolygon(std::vector<NPSegment> segments);

  /// Grammar: term ('+' term)*, term = [k]? '[' m ',' n ']'.
  static NewtonPolygon parse(std::string_view text);

  const std::vector<NPSegment>& segments() const { return segments_; }

  int height() const;     // sum of mult*(m+n)
  int dimension() const;  // sum of mult*m
  bool symmetric() const;

  int p_rank() const;            // multiplicity of [1,0]
  Rational first_slope() const;  // minimal slope
  /// Lattice points from (0,0) through one point per expanded segment.
  std::vector<std::pair<int, int>> break_points() const;
  /// Slopes expanded by multiplicity, ascending; used for the canonical order.
  std::vector<Rational> expanded_slopes() const;

  std::string str() const;      // compact "[2,1]+2[1,1]+[1,2]"
  std::string display() const;  // "[2,1] + 2[1,1] + [1,2]"

  friend bool operator==(const NewtonPolygon&, const NewtonPolygon&) = default;

 private:
  std::vector<NPSegment> segments_;
};

NewtonPolygon np_sum(const NewtonPolygon& a, const NewtonPolygon& b);

/// Canonical deterministic order: by p-rank, then lexicographically on the
/// expanded slope sequence.
bool np_order_less(const NewtonPolygon& a, const NewtonPolygon& b);

/// All symmetric Newton polygons of dimension g (height 2g), optionally of
/// one p-rank, in canonical order.
std::vector<NewtonPolygon> enumerate_symmetric_np(int g, std::optional<int> prank = std::nullopt);

}  // namespace stratlab
