#include "stratlab/weyl_closure.hpp"

#include <algorithm>
#include <numeric>

namespace stratlab {

namespace {

constexpr int kMaxEnumerateW = 7;
constexpr int kMaxEnumerateWI = 10;
constexpr int kMaxClosureG = 7;

}  // namespace

SymplecticPerm::SymplecticPerm(int g, std::vector<int> images)
    : g_(g), images_(std::move(images)) {
  require(g_ >= 1, ErrorCode::InvariantViolation, "symplectic permutation needs g >= 1");
  const int d = 2 * g_;
  require(images_.size() == static_cast<std::size_t>(d), ErrorCode::InvariantViolation,
          "symplectic permutation needs 2g images");
  std::vector<bool> seen(static_cast<std::size_t>(d), false);
  for (int v : images_) {
    require(v >= 1 && v <= d && !seen[static_cast<std::size_t>(v - 1)],
            ErrorCode::InvariantViolation, "images must form a permutation of {1..2g}");
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
  for (int i = 1; i <= g_; ++i) {
    require((*this)(i) + (*this)(d + 1 - i) == d + 1, ErrorCode::InvariantViolation,
            "w(i) + w(2g+1-i) = 2g+1 fails at i=" + std::to_string(i));
  }
}

SymplecticPerm SymplecticPerm::identity(int g) {
  std::vector<int> images(static_cast<std::size_t>(2 * g));
  std::iota(images.begin(), images.end(), 1);
  return SymplecticPerm(g, std::move(images));
}

bool SymplecticPerm::in_WI() const {
  for (int i = 1; i <= g_; ++i) {
    if ((*this)(i) > g_) return false;
  }
  return true;
}

SymplecticPerm weyl_element(const ElementarySeq& phi) {
  const int g = phi.g();
  const int d = 2 * g;
  std::vector<int> images(static_cast<std::size_t>(d), 0);
  int flats = 0;
  int steps = 0;
  for (int i = 1; i <= g; ++i) {
    if (phi(i) == phi(i - 1)) {
      images[static_cast<std::size_t>(i - 1)] = ++flats;
    } else {
      images[static_cast<std::size_t>(i - 1)] = g + (++steps);
    }
  }
  for (int i = 1; i <= g; ++i) {
    images[static_cast<std::size_t>(d - i)] = d + 1 - images[static_cast<std::size_t>(i - 1)];
  }
  return SymplecticPerm(g, std::move(images));
}

std::vector<SymplecticPerm> enumerate_W(int g) {
  require(g >= 1 && g <= kMaxEnumerateW, ErrorCode::LengthCap,
          "enumerate_W supports g <= " + std::to_string(kMaxEnumerateW));
  const int d = 2 * g;
  std::vector<int> base(static_cast<std::size_t>(g));
  std::iota(base.begin(), base.end(), 1);
  std::vector<SymplecticPerm> out;
  out.reserve((std::size_t(1) << g) * [&] {
    std::size_t f = 1;
    for (int i = 2; i <= g; ++i) f *= static_cast<std::size_t>(i);
    return f;
  }());
  do {
    for (unsigned signs = 0; signs < (1u << g); ++signs) {
      std::vector<int> images(static_cast<std::size_t>(d), 0);
      for (int i = 1; i <= g; ++i) {
        const int target = base[static_cast<std::size_t>(i - 1)];
        const bool flip = (signs >> (i - 1)) & 1u;
        images[static_cast<std::size_t>(i - 1)] = flip ? d + 1 - target : target;
        images[static_cast<std::size_t>(d - i)] = flip ? target : d + 1 - target;
      }
      out.emplace_back(g, std::move(images));
    }
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

std::vector<SymplecticPerm> enumerate_WI(int g) {
  require(g >= 1 && g <= kMaxEnumerateWI, ErrorCode::LengthCap,
          "enumerate_WI supports g <= " + std::to_string(kMaxEnumerateWI));
  const int d = 2 * g;
  std::vector<int> base(static_cast<std::size_t>(g));
  std::iota(base.begin(), base.end(), 1);
  std::vector<SymplecticPerm> out;
  do {
    std::vector<int> images(static_cast<std::size_t>(d), 0);
    for (int i = 1; i <= g; ++i) {
      images[static_cast<std::size_t>(i - 1)] = base[static_cast<std::size_t>(i - 1)];
      images[static_cast<std::size_t>(d - i)] = d + 1 - base[static_cast<std::size_t>(i - 1)];
    }
    out.emplace_back(g, std::move(images));
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

SymplecticPerm w0I(int g) {
  const int d = 2 * g;
  std::vector<int> images(static_cast<std::size_t>(d), 0);
  for (int i = 1; i <= g; ++i) {
    images[static_cast<std::size_t>(i - 1)] = g + 1 - i;
    images[static_cast<std::size_t>(d - i)] = d + 1 - (g + 1 - i);
  }
  return SymplecticPerm(g, std::move(images));
}

bool bc_below(const SymplecticPerm& w1, const SymplecticPerm& w2) {
  require(w1.g() == w2.g(), ErrorCode::DimensionMismatch,
          "prefix-maximum comparison needs equal g");
  int max1 = 0;
  int max2 = 0;
  for (int d = 1; d <= w1.g(); ++d) {
    max1 = std::max(max1, w1(d));
    max2 = std::max(max2, w2(d));
    if (max1 > max2) return false;
  }
  return true;
}

namespace {

/// Composite of the word u * w1 * (w0I * u * w0I), evaluated right factor
/// first (RightToLeft) or left factor first (LeftToRight).
std::vector<int> shuffle_composite(const SymplecticPerm& u, const SymplecticPerm& w1,
                                   const SymplecticPerm& w0, Convention convention) {
  const int d = 2 * u.g();
  std::vector<int> images(static_cast<std::size_t>(d));
  for (int i = 1; i <= d; ++i) {
    int v = i;
    if (convention == Convention::RightToLeft) {
      v = w0(v);
      v = u(v);
      v = w0(v);
      v = w1(v);
      v = u(v);
    } else {
      v = u(v);
      v = w1(v);
      v = w0(v);
      v = u(v);
      v = w0(v);
    }
    images[static_cast<std::size_t>(i - 1)] = v;
  }
  return images;
}

}  // namespace

bool closure_below(const ElementarySeq& phi1, const ElementarySeq& phi2, Convention convention) {
  require(phi1.g() == phi2.g(), ErrorCode::DimensionMismatch,
          "closure test needs equal-length sequences");
  const int g = phi1.g();
  require(g <= kMaxClosureG, ErrorCode::LengthCap,
          "closure test supports g <= " + std::to_string(kMaxClosureG));
  const SymplecticPerm w1 = weyl_element(phi1);
  const SymplecticPerm w2 = weyl_element(phi2);
  const SymplecticPerm w0 = w0I(g);
  for (const SymplecticPerm& u : enumerate_WI(g)) {
    const SymplecticPerm composite(g, shuffle_composite(u, w1, w0, convention));
    if (bc_below(composite, w2)) return true;
  }
  return false;
}

ClosurePoset closure_poset(int g, std::optional<int> prank, Convention convention) {
  require(g >= 1 && g <= kMaxClosureG, ErrorCode::LengthCap,
          "closure poset supports g <= " + std::to_string(kMaxClosureG));
  ClosurePoset poset;
  poset.g = g;
  poset.prank = prank;
  poset.nodes = enumerate_elementary(g, prank);
  std::sort(poset.nodes.begin(), poset.nodes.end(), [](const ElementarySeq& a, const ElementarySeq& b) {
    if (a.dimension() != b.dimension()) return a.dimension() < b.dimension();
    return a < b;
  });

  const std::size_t n = poset.nodes.size();
  poset.relation.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      poset.relation[i][j] = closure_below(poset.nodes[i], poset.nodes[j], convention);
    }
  }

  // Transitive reduction of the strict relation.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !poset.relation[i][j]) continue;
      bool direct = true;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        if (poset.relation[i][k] && poset.relation[k][j]) {
          direct = false;
          break;
        }
      }
      if (direct) poset.hasse_edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  std::sort(poset.hasse_edges.begin(), poset.hasse_edges.end());
  return poset;
}

std::string ClosurePoset::to_dot() const {
  std::string out = "digraph closure {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  // Rank groups by dimension, ascending.
  int dim = -1;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].dimension() != dim) {
      if (dim >= 0) out += " }\n";
      dim = nodes[i].dimension();
      out += "  { rank=same;";
    }
    std::string label;
    for (int v : nodes[i].values()) label += std::to_string(v);
    out += " \"" + label + "\";";
  }
  if (dim >= 0) out += " }\n";
  for (const auto& [lo, hi] : hasse_edges) {
    std::string a;
    for (int v : nodes[static_cast<std::size_t>(lo)].values()) a += std::to_string(v);
    std::string b;
    for (int v : nodes[static_cast<std::size_t>(hi)].values()) b += std::to_string(v);
    out += "  \"" + a + "\" -> \"" + b + "\";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace stratlab
