#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stratlab/error.hpp"

namespace stratlab {

class ElementarySeq;

/// Final sequence psi(0..2g) stretched from an elementary sequence:
/// psi(i) = phi(i) for i <= g and psi(2g-i) = g-i+phi(i).
class FinalSeq {
 public:
  FinalSeq(int g, std::vector<int> values);

  int g() const { return g_; }
  /// psi(i) for 0 <= i <= 2g.
  int operator()(int i) const { return values_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& values() const { return values_; }

  std::string str() const;

 private:
  int g_;
  std::vector<int> values_;  // indexed 0..2g
};

/// Elementary sequence phi of length g: phi(0)=0 and
/// phi(i) <= phi(i+1) <= phi(i)+1. The tuple (phi(1),...,phi(g)) is stored.
class ElementarySeq {
 public:
  static constexpr int kMaxLength = 16;

  explicit ElementarySeq(std::vector<int> values);

  /// Accepts comma-separated values ("0,1,1,2,2") or, for g <= 9, a
  /// contiguous digit string ("01122").
  static ElementarySeq parse(std::string_view text);

  int g() const { return static_cast<int>(values_.size()); }
  /// phi(i) for 0 <= i <= g (phi(0) = 0).
  int operator()(int i) const {
    return i == 0 ? 0 : values_[static_cast<std::size_t>(i - 1)];
  }
  const std::vector<int>& values() const { return values_; }

  int p_rank() const;     // max { i : phi(i) = i }, 0 if none
  int a_number() const;   // g - phi(g)
  int dimension() const;  // sum of phi(i)
  FinalSeq stretch() const;

  std::string str() const;      // canonical "0,1,1,2,2"
  std::string display() const;  // "(0,1,1,2,2)"

  friend bool operator==(const ElementarySeq&, const ElementarySeq&) = default;
  friend std::strong_ordering operator<=>(const ElementarySeq& a, const ElementarySeq& b) {
    if (a.g() != b.g()) return a.g() <=> b.g();
    return a.values_ <=> b.values_;
  }

 private:
  std::vector<int> values_;
};

/// All elementary sequences of length g in lexicographic order (2^g of
/// them), optionally filtered to a single p-rank.
std::vector<ElementarySeq> enumerate_elementary(int g, std::optional<int> prank = std::nullopt);

}  // namespace stratlab
