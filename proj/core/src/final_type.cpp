#include "stratlab/final_type.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <tuple>

namespace stratlab {

namespace {

constexpr int kMaxDecomposeG = 10;

}  // namespace

FinalType::FinalType(std::vector<std::uint8_t> delta, std::vector<FinalTypeTag> tags)
    : delta_(std::move(delta)), tags_(std::move(tags)) {
  require(!delta_.empty(), ErrorCode::InvariantViolation, "final type needs d >= 1");
  for (std::uint8_t b : delta_) {
    require(b == 0 || b == 1, ErrorCode::InvariantViolation, "delta must be a bit sequence");
  }
  if (tags_.empty()) {
    tags_.reserve(delta_.size());
    for (int i = 1; i <= length(); ++i) tags_.push_back(FinalTypeTag{0, i});
  }
  require(tags_.size() == delta_.size(), ErrorCode::Internal, "tags must match delta length");
}

std::vector<int> FinalType::psi() const {
  std::vector<int> out(delta_.size() + 1, 0);
  for (std::size_t i = 0; i < delta_.size(); ++i) {
    out[i + 1] = out[i] + 1 - delta_[i];
  }
  return out;
}

bool FinalType::symmetric() const {
  const int d = length();
  if (d % 2 != 0) return false;
  for (int i = 1; i <= d / 2; ++i) {
    if (delta(i) + delta(d + 1 - i) != 1) return false;
  }
  return true;
}

std::string FinalType::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < delta_.size(); ++i) {
    if (i) out += ',';
    out += delta_[i] ? '1' : '0';
  }
  out += ')';
  return out;
}

FinalType final_type_of(const ElementarySeq& phi) {
  const FinalSeq psi = phi.stretch();
  const int d = 2 * phi.g();
  std::vector<std::uint8_t> delta(static_cast<std::size_t>(d));
  for (int i = 1; i <= d; ++i) {
    delta[static_cast<std::size_t>(i - 1)] = static_cast<std::uint8_t>(1 - psi(i) + psi(i - 1));
  }
  return FinalType(std::move(delta));
}

ElementarySeq elementary_of(const FinalType& type) {
  require(type.symmetric(), ErrorCode::NotSymmetric,
          "only symmetric final types correspond to elementary sequences");
  const int g = type.length() / 2;
  const std::vector<int> psi = type.psi();
  std::vector<int> values(psi.begin() + 1, psi.begin() + 1 + g);
  return ElementarySeq(std::move(values));
}

std::vector<int> pi_map(const FinalType& type) {
  const int d = type.length();
  const std::vector<int> psi = type.psi();
  std::vector<int> pi(static_cast<std::size_t>(d), 0);
  for (int i = 1; i <= d; ++i) {
    const int image = type.delta(i) == 0 ? psi[static_cast<std::size_t>(i)]
                                         : psi[static_cast<std::size_t>(d)] + i - psi[static_cast<std::size_t>(i)];
    pi[static_cast<std::size_t>(i - 1)] = image;
  }
  std::vector<bool> seen(static_cast<std::size_t>(d), false);
  for (int v : pi) {
    require(v >= 1 && v <= d && !seen[static_cast<std::size_t>(v - 1)], ErrorCode::NotBijective,
            "pi_delta is not a bijection; invalid delta pattern");
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
  return pi;
}

CycleDecomposition cycles(const FinalType& type) {
  const std::vector<int> pi = pi_map(type);
  const int d = type.length();
  std::vector<bool> used(static_cast<std::size_t>(d), false);
  CycleDecomposition out;
  for (int start = 1; start <= d; ++start) {
    if (used[static_cast<std::size_t>(start - 1)]) continue;
    Cycle cycle;
    int current = start;
    do {
      used[static_cast<std::size_t>(current - 1)] = true;
      cycle.positions.push_back(current);
      cycle.bits.push_back(static_cast<std::uint8_t>(type.delta(current)));
      current = pi[static_cast<std::size_t>(current - 1)];
    } while (current != start);
    out.cycles.push_back(std::move(cycle));
  }
  return out;
}

NuTable nu_values(const FinalType& type) {
  const CycleDecomposition decomposition = cycles(type);
  NuTable table;
  table.values.assign(static_cast<std::size_t>(type.length()), Rational());
  for (const Cycle& cycle : decomposition.cycles) {
    const std::size_t c = cycle.positions.size();
    require(c <= 62, ErrorCode::Internal, "cycle period too large for exact arithmetic");
    const std::int64_t den = (std::int64_t(1) << c) - 1;
    // For b at orbit index k, the inverse orbit reads the bits backwards:
    // nu(b) = sum_l bits[(k - l) mod c] 2^{c-l} / (2^c - 1).
    for (std::size_t k = 0; k < c; ++k) {
      std::int64_t num = 0;
      for (std::size_t l = 1; l <= c; ++l) {
        const std::size_t idx = (k + c - (l % c)) % c;
        num = num * 2 + cycle.bits[idx];
      }
      table.values[static_cast<std::size_t>(cycle.positions[k] - 1)] = Rational(num, den);
    }
  }
  return table;
}

namespace {

struct MergeElement {
  Rational nu;
  std::uint8_t bit = 0;
  int summand = 0;
  int position = 0;       // 1-based position within the summand
  std::size_t cycle_len = 0;
  std::vector<std::uint8_t> word;  // inverse-orbit bit word starting at this element
};

std::vector<MergeElement> merge_elements(const FinalType& type, int summand) {
  const CycleDecomposition decomposition = cycles(type);
  const NuTable nu = nu_values(type);
  std::vector<MergeElement> out;
  out.reserve(static_cast<std::size_t>(type.length()));
  for (const Cycle& cycle : decomposition.cycles) {
    const std::size_t c = cycle.positions.size();
    for (std::size_t k = 0; k < c; ++k) {
      MergeElement element;
      element.nu = nu.at(cycle.positions[k]);
      element.bit = cycle.bits[k];
      element.summand = summand;
      element.position = cycle.positions[k];
      element.cycle_len = c;
      element.word.reserve(c);
      for (std::size_t l = 1; l <= c; ++l) {
        element.word.push_back(cycle.bits[(k + c - (l % c)) % c]);
      }
      out.push_back(std::move(element));
    }
  }
  return out;
}

}  // namespace

FinalType ft_sum(const FinalType& a, const FinalType& b) {
  std::vector<MergeElement> elements = merge_elements(a, 1);
  {
    std::vector<MergeElement> more = merge_elements(b, 2);
    elements.insert(elements.end(), std::make_move_iterator(more.begin()),
                    std::make_move_iterator(more.end()));
  }
  std::stable_sort(elements.begin(), elements.end(), [](const MergeElement& x, const MergeElement& y) {
    if (x.nu != y.nu) return x.nu < y.nu;
    if (x.summand != y.summand) return x.summand < y.summand;
    return x.position < y.position;
  });
  // Equal nu values must come from isomorphic cycles at the same phase.
  for (std::size_t i = 1; i < elements.size(); ++i) {
    if (elements[i - 1].nu == elements[i].nu) {
      require(elements[i - 1].cycle_len == elements[i].cycle_len &&
                  elements[i - 1].word == elements[i].word,
              ErrorCode::Internal, "nu collision between non-isomorphic cycles");
    }
  }
  std::vector<std::uint8_t> delta;
  std::vector<FinalTypeTag> tags;
  delta.reserve(elements.size());
  tags.reserve(elements.size());
  for (const MergeElement& element : elements) {
    delta.push_back(element.bit);
    tags.push_back(FinalTypeTag{element.summand, element.position});
  }
  return FinalType(std::move(delta), std::move(tags));
}

ElementarySeq es_sum(const ElementarySeq& a, const ElementarySeq& b) {
  return elementary_of(ft_sum(final_type_of(a), final_type_of(b)));
}

namespace {

using FactorKey = std::vector<int>;

FactorKey key_of(const ElementarySeq& seq) { return seq.values(); }

bool multiset_less(const std::vector<FactorKey>& a, const std::vector<FactorKey>& b) {
  auto tuple_of = [](const FactorKey& k) { return std::make_pair(k.size(), k); };
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [&](const FactorKey& x, const FactorKey& y) {
                                        return tuple_of(x) < tuple_of(y);
                                      });
}

struct DecomposeMemo {
  std::map<FactorKey, std::pair<std::vector<FactorKey>, bool>> results;
};

std::pair<std::vector<FactorKey>, bool> decompose_impl(const ElementarySeq& phi, DecomposeMemo& memo) {
  const FactorKey key = key_of(phi);
  if (const auto it = memo.results.find(key); it != memo.results.end()) return it->second;

  std::vector<std::vector<FactorKey>> candidates;
  bool ambiguous = false;
  const int g = phi.g();
  for (int g1 = 1; g1 <= g / 2; ++g1) {
    for (const ElementarySeq& alpha : enumerate_elementary(g1)) {
      for (const ElementarySeq& beta : enumerate_elementary(g - g1)) {
        if (es_sum(alpha, beta) != phi) continue;
        const auto [left, left_amb] = decompose_impl(alpha, memo);
        const auto [right, right_amb] = decompose_impl(beta, memo);
        ambiguous = ambiguous || left_amb || right_amb;
        std::vector<FactorKey> merged = left;
        merged.insert(merged.end(), right.begin(), right.end());
        std::sort(merged.begin(), merged.end(), [](const FactorKey& x, const FactorKey& y) {
          return std::make_pair(x.size(), x) < std::make_pair(y.size(), y);
        });
        if (std::find(candidates.begin(), candidates.end(), merged) == candidates.end()) {
          candidates.push_back(std::move(merged));
        }
      }
    }
  }

  std::pair<std::vector<FactorKey>, bool> result;
  if (candidates.empty()) {
    result = {{key}, false};
  } else {
    std::sort(candidates.begin(), candidates.end(), multiset_less);
    result = {candidates.front(), ambiguous || candidates.size() > 1};
  }
  memo.results.emplace(key, result);
  return result;
}

}  // namespace

Decomposition es_decompose(const ElementarySeq& phi) {
  require(phi.g() <= kMaxDecomposeG, ErrorCode::LengthCap,
          "decomposition supports g <= " + std::to_string(kMaxDecomposeG));
  DecomposeMemo memo;
  const auto [keys, ambiguous] = decompose_impl(phi, memo);
  Decomposition out;
  out.ambiguous = ambiguous;
  for (const FactorKey& key : keys) out.factors.emplace_back(key);
  return out;
}

std::string Decomposition::str(const ElementarySeq& original) const {
  std::string out = original.display() + " = ";
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += " \xE2\x8A\x95 ";  // U+2295 circled plus
    out += factors[i].display();
  }
  return out;
}

FinalType base_type(int m, int n) {
  require(m >= n && n >= 0 && !(m == 0 && n == 0) && std::gcd(m, n) == 1,
          ErrorCode::InvalidPair, "base type needs coprime m >= n >= 0, not both zero");
  std::vector<std::uint8_t> delta;
  delta.reserve(static_cast<std::size_t>(m + n));
  for (int i = 0; i < n; ++i) delta.push_back(1);
  for (int i = 0; i < m; ++i) delta.push_back(0);
  return FinalType(std::move(delta));
}

ElementarySeq minimal_sequence(const NewtonPolygon& xi) {
  require(xi.symmetric(), ErrorCode::NotSymmetric,
          "minimal sequences are defined for symmetric Newton polygons");
  const int g = xi.dimension();

  // One segment of each symmetric pair with slope <= 1/2, [1,1] parts
  // aside: they only contribute trailing entries.
  int s = 0;
  std::vector<NPSegment> half;
  for (const NPSegment& segment : xi.segments()) {
    if (segment.m == 1 && segment.n == 1) {
      s = segment.multiplicity;
    } else if (segment.m > segment.n) {
      half.push_back(segment);
    }
  }

  int m = 0;
  int n = 0;
  for (const NPSegment& segment : half) {
    m += segment.multiplicity * segment.m;
    n += segment.multiplicity * segment.n;
  }

  std::vector<int> values;
  values.reserve(static_cast<std::size_t>(g));
  if (m > 0) {
    std::optional<FinalType> merged;
    for (const NPSegment& segment : half) {
      for (int k = 0; k < segment.multiplicity; ++k) {
        FinalType part = base_type(segment.m, segment.n);
        merged = merged ? ft_sum(*merged, part) : part;
      }
    }
    const std::vector<int> psi = merged->psi();
    for (int i = 1; i <= m; ++i) values.push_back(psi[static_cast<std::size_t>(i)]);
  }
  for (int i = 0; i < n + s; ++i) values.push_back(m - n);
  return ElementarySeq(std::move(values));
}

}  // namespace stratlab
