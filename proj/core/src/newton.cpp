#include "stratlab/newton.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>

namespace stratlab {

namespace {

constexpr int kMaxDimension = 16;

void check_segment(int m, int n) {
  require(m >= 0 && n >= 0, ErrorCode::MalformedInput, "segment entries must be non-negative");
  require(std::gcd(m, n) == 1, ErrorCode::NonCoprime,
          "[" + std::to_string(m) + "," + std::to_string(n) + "] is not a coprime pair");
}

}  // namespace

NewtonPolygon::NewtonPolygon(std::vector<NPSegment> segments) {
  std::map<std::pair<int, int>, int> counts;
  for (const NPSegment& s : segments) {
    check_segment(s.m, s.n);
    require(s.multiplicity >= 1, ErrorCode::MalformedInput, "segment multiplicity must be positive");
    counts[{s.m, s.n}] += s.multiplicity;
  }
  require(!counts.empty(), ErrorCode::MalformedInput, "Newton polygon needs at least one segment");
  for (const auto& [mn, mult] : counts) {
    segments_.push_back(NPSegment{mn.first, mn.second, mult});
  }
  std::sort(segments_.begin(), segments_.end(), [](const NPSegment& a, const NPSegment& b) {
    return a.slope() < b.slope();
  });
}

NewtonPolygon NewtonPolygon::parse(std::string_view text) {
  std::vector<NPSegment> segments;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_int = [&](const char* what) {
    skip_ws();
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    require(ec == std::errc() && ptr != text.data() + pos, ErrorCode::MalformedInput,
            std::string("expected ") + what + " in Newton polygon text");
    pos = static_cast<std::size_t>(ptr - text.data());
    return value;
  };
  auto expect = [&](char c) {
    skip_ws();
    require(pos < text.size() && text[pos] == c, ErrorCode::MalformedInput,
            std::string("expected '") + c + "' in Newton polygon text");
    ++pos;
  };

  while (true) {
    skip_ws();
    int mult = 1;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      mult = read_int("multiplier");
      require(mult >= 1, ErrorCode::MalformedInput, "segment multiplier must be positive");
    }
    expect('[');
    const int m = read_int("m");
    expect(',');
    const int n = read_int("n");
    expect(']');
    segments.push_back(NPSegment{m, n, mult});
    skip_ws();
    if (pos == text.size()) break;
    expect('+');
  }
  return NewtonPolygon(std::move(segments));
}

int NewtonPolygon::height() const {
  int h = 0;
  for (const NPSegment& s : segments_) h += s.multiplicity * (s.m + s.n);
  return h;
}

int NewtonPolygon::dimension() const {
  int d = 0;
  for (const NPSegment& s : segments_) d += s.multiplicity * s.m;
  return d;
}

bool NewtonPolygon::symmetric() const {
  for (const NPSegment& s : segments_) {
    const auto mirror = std::find_if(segments_.begin(), segments_.end(), [&](const NPSegment& t) {
      return t.m == s.n && t.n == s.m;
    });
    if (mirror == segments_.end() || mirror->multiplicity != s.multiplicity) return false;
  }
  return true;
}

int NewtonPolygon::p_rank() const {
  for (const NPSegment& s : segments_) {
    if (s.m == 1 && s.n == 0) return s.multiplicity;
  }
  return 0;
}

Rational NewtonPolygon::first_slope() const { return segments_.front().slope(); }

std::vector<std::pair<int, int>> NewtonPolygon::break_points() const {
  std::vector<std::pair<int, int>> points{{0, 0}};
  int x = 0;
  int y = 0;
  for (const NPSegment& s : segments_) {
    for (int k = 0; k < s.multiplicity; ++k) {
      x += s.m + s.n;
      y += s.n;
      points.emplace_back(x, y);
    }
  }
  return points;
}

std::vector<Rational> NewtonPolygon::expanded_slopes() const {
  std::vector<Rational> slopes;
  for (const NPSegment& s : segments_) {
    for (int k = 0; k < s.multiplicity; ++k) slopes.push_back(s.slope());
  }
  return slopes;
}

std::string NewtonPolygon::str() const {
  std::string out;
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    if (i) out += '+';
    const NPSegment& s = segments_[i];
    if (s.multiplicity > 1) out += std::to_string(s.multiplicity);
    out += '[' + std::to_string(s.m) + ',' + std::to_string(s.n) + ']';
  }
  return out;
}

std::string NewtonPolygon::display() const {
  std::string out;
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    if (i) out += " + ";
    const NPSegment& s = segments_[i];
    if (s.multiplicity > 1) out += std::to_string(s.multiplicity);
    out += '[' + std::to_string(s.m) + ',' + std::to_string(s.n) + ']';
  }
  return out;
}

NewtonPolygon np_sum(const NewtonPolygon& a, const NewtonPolygon& b) {
  std::vector<NPSegment> merged = a.segments();
  const auto& more = b.segments();
  merged.insert(merged.end(), more.begin(), more.end());
  return NewtonPolygon(std::move(merged));
}

bool np_order_less(const NewtonPolygon& a, const NewtonPolygon& b) {
  if (a.p_rank() != b.p_rank()) return a.p_rank() < b.p_rank();
  const auto sa = a.expanded_slopes();
  const auto sb = b.expanded_slopes();
  return std::lexicographical_compare(sa.begin(), sa.end(), sb.begin(), sb.end());
}

std::vector<NewtonPolygon> enumerate_symmetric_np(int g, std::optional<int> prank) {
  require(g >= 1 && g <= kMaxDimension, ErrorCode::LengthCap,
          "enumeration supports 1 <= g <= " + std::to_string(kMaxDimension));
  if (prank) {
    require(*prank >= 0 && *prank <= g, ErrorCode::InvariantViolation,
            "p-rank filter must lie in [0, g]");
  }

  // Coprime pairs m > n >= 1, each contributing the symmetric block
  // [m,n] + [n,m] of dimension m+n.
  std::vector<std::pair<int, int>> pairs;
  for (int m = 2; m <= g; ++m) {
    for (int n = 1; n < m && m + n <= g; ++n) {
      if (std::gcd(m, n) == 1) pairs.emplace_back(m, n);
    }
  }

  std::vector<NewtonPolygon> out;
  std::vector<NPSegment> chosen;
  auto assemble = [&](int f, int s) {
    std::vector<NPSegment> segments = chosen;
    if (f > 0) {
      segments.push_back(NPSegment{1, 0, f});
      segments.push_back(NPSegment{0, 1, f});
    }
    if (s > 0) segments.push_back(NPSegment{1, 1, s});
    for (const NPSegment& seg : chosen) segments.push_back(NPSegment{seg.n, seg.m, seg.multiplicity});
    out.emplace_back(std::move(segments));
  };
  auto pick = [&](auto&& self, std::size_t index, int f, int budget) -> void {
    if (index == pairs.size()) {
      assemble(f, budget);  // remaining budget becomes the [1,1] multiplicity
      return;
    }
    const auto [m, n] = pairs[index];
    const int weight = m + n;
    for (int mult = 0; mult * weight <= budget; ++mult) {
      if (mult > 0) {
        if (std::size_t(mult) == 1) {
          chosen.push_back(NPSegment{m, n, 1});
        } else {
          chosen.back().multiplicity = mult;
        }
      }
      self(self, index + 1, f, budget - mult * weight);
    }
    if (!chosen.empty() && chosen.back().m == m && chosen.back().n == n) chosen.pop_back();
  };

  const int f_lo = prank ? *prank : 0;
  const int f_hi = prank ? *prank : g;
  for (int f = f_lo; f <= f_hi; ++f) {
    pick(pick, 0, f, g - f);
  }
  std::sort(out.begin(), out.end(), np_order_less);
  return out;
}

}  // namespace stratlab
