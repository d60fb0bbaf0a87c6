#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stratlab/eo_seq.hpp"
#include "stratlab/error.hpp"

namespace stratlab {

/// Element of the Weyl group W_g of Sp_2g, i.e. a permutation w of
/// {1..2g} with w(i) + w(2g+1-i) = 2g+1.
class SymplecticPerm {
 public:
  SymplecticPerm(int g, std::vector<int> images);

  static SymplecticPerm identity(int g);

  int g() const { return g_; }
  /// w(i), 1-based.
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& images() const { return images_; }

  /// Membership in W_I: w({1..g}) = {1..g}.
  bool in_WI() const;

  friend bool operator==(const SymplecticPerm&, const SymplecticPerm&) = default;

 private:
  int g_;
  std::vector<int> images_;
};

/// The Weyl group element associated to an elementary sequence: positions
/// with phi(i) = phi(i-1) map to 1,2,... in order, positions with a step
/// map to g+1,g+2,..., and the symplectic condition fills the upper half.
SymplecticPerm weyl_element(const ElementarySeq& phi);

std::vector<SymplecticPerm> enumerate_W(int g);   // |W_g| = 2^g g!, g <= 7
std::vector<SymplecticPerm> enumerate_WI(int g);  // |W_I| = g!, g <= 10
SymplecticPerm w0I(int g);                        // i -> g+1-i on {1..g}

/// Prefix-maximum comparison over 1 <= d <= g.
bool bc_below(const SymplecticPerm& w1, const SymplecticPerm& w2);

/// Order in which permutation words are composed. RightToLeft evaluates
/// (x*y)(i) = x(y(i)); LeftToRight evaluates (x*y)(i) = y(x(i)).
enum class Convention { RightToLeft, LeftToRight };

constexpr Convention kDefaultConvention = Convention::RightToLeft;

/// Closure test: S_phi1 lies in the Zariski closure of S_phi2 iff some
/// u in W_I makes the composite u * w1 * (w0I * u * w0I) land below w2
/// in the prefix-maximum order.
bool closure_below(const ElementarySeq& phi1, const ElementarySeq& phi2,
                   Convention convention = kDefaultConvention);

struct ClosurePoset {
  int g = 0;
  std::optional<int> prank;
  std::vector<ElementarySeq> nodes;             // sorted by (dimension, lex)
  std::vector<std::vector<bool>> relation;      // relation[i][j]: node i below node j
  std::vector<std::pair<int, int>> hasse_edges; // (lower index, upper index)

  std::string to_dot() const;
};

ClosurePoset closure_poset(int g, std::optional<int> prank = std::nullopt,
                           Convention convention = kDefaultConvention);

}  // namespace stratlab
