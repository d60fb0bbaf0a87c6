#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stratlab/eo_seq.hpp"
#include "stratlab/error.hpp"
#include "stratlab/newton.hpp"
#include "stratlab/rational.hpp"

namespace stratlab {

/// Provenance of one position of a final type, kept across direct sums so
/// that merges of isomorphic cycles stay stable.
struct FinalTypeTag {
  int summand = 0;
  int position = 0;  // 1-based position in the original summand
};

/// Final type (B, delta): a totally ordered base set b_1 < ... < b_d with a
/// bit per element. The derived sequence psi(i) = i - sum_{j<=i} delta(b_j)
/// drives the induced permutation.
class FinalType {
 public:
  explicit FinalType(std::vector<std::uint8_t> delta, std::vector<FinalTypeTag> tags = {});

  int length() const { return static_cast<int>(delta_.size()); }
  /// delta(b_i), 1-based.
  int delta(int i) const { return delta_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<std::uint8_t>& bits() const { return delta_; }
  const std::vector<FinalTypeTag>& tags() const { return tags_; }

  /// psi(0..d).
  std::vector<int> psi() const;
  /// d = 2g with delta(b_i) + delta(b_{2g+1-i}) = 1.
  bool symmetric() const;

  std::string str() const;  // "(1,0,1,0)"

  friend bool operator==(const FinalType& a, const FinalType& b) { return a.delta_ == b.delta_; }

 private:
  std::vector<std::uint8_t> delta_;
  std::vector<FinalTypeTag> tags_;
};

/// delta(b_i) = 1 - psi(i) + psi(i-1) on the stretched final sequence.
FinalType final_type_of(const ElementarySeq& phi);

/// Inverse of final_type_of on symmetric types: phi = psi|_{1..g}.
ElementarySeq elementary_of(const FinalType& type);

/// The induced permutation pi_delta of {1..d}: i maps to psi(i) on
/// delta = 0 and to psi(d) + i - psi(i) on delta = 1.
std::vector<int> pi_map(const FinalType& type);

struct Cycle {
  std::vector<int> positions;       // orbit, starting at its least element
  std::vector<std::uint8_t> bits;   // delta read along the orbit
};

struct CycleDecomposition {
  std::vector<Cycle> cycles;  // sorted by least position
};

/// Orbits of pi_delta; the minimal invariant subsets of the final type.
CycleDecomposition cycles(const FinalType& type);

/// nu(b) = sum_l delta(pi^{-l}(b)) 2^{-l}, exact: a cycle of length c
/// contributes fractions with denominator 2^c - 1.
struct NuTable {
  std::vector<Rational> values;  // per position, 0-based storage

  const Rational& at(int position) const { return values[static_cast<std::size_t>(position - 1)]; }
};

NuTable nu_values(const FinalType& type);

/// Direct sum: both inputs decompose into pi-orbits, and all elements are
/// reordered by (nu value, summand, original position). Equal nu values are
/// legal only between isomorphic cycles; anything else is an internal error.
FinalType ft_sum(const FinalType& a, const FinalType& b);

/// Elementary sequence of the direct sum of the two classified objects.
ElementarySeq es_sum(const ElementarySeq& a, const ElementarySeq& b);

struct Decomposition {
  std::vector<ElementarySeq> factors;  // canonically sorted by (g, values)
  bool ambiguous = false;              // more than one factor multiset found

  /// "(1,1,1,2) = (0) + (1) + (0,1)" style rendering with a direct-sum sign.
  std::string str(const ElementarySeq& original) const;
};

/// Factor an elementary sequence into direct-sum-indecomposable pieces.
Decomposition es_decompose(const ElementarySeq& phi);  // g <= 10

/// The indecomposable final type of psi_{m,n} = (0,...,0,1,...,m) with n
/// leading zeroes; requires m >= n >= 0 coprime, not both zero.
FinalType base_type(int m, int n);

/// Harashita's minimal elementary sequence phi_xi of a symmetric Newton
/// polygon: S_{phi_xi} is contained in N(xi) and meets no other stratum.
ElementarySeq minimal_sequence(const NewtonPolygon& xi);

}  // namespace stratlab
