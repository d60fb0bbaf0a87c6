#include "stratlab/eo_seq.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace stratlab {

FinalSeq::FinalSeq(int g, std::vector<int> values) : g_(g), values_(std::move(values)) {
  require(g_ >= 1, ErrorCode::InvariantViolation, "final sequence needs g >= 1");
  require(values_.size() == static_cast<std::size_t>(2 * g_ + 1),
          ErrorCode::InvariantViolation, "final sequence must have 2g+1 values");
  require(values_[0] == 0 && values_.back() == static_cast<int>(g_),
          ErrorCode::InvariantViolation, "final sequence must run from 0 to g");
  for (int i = 0; i < 2 * g_; ++i) {
    const int step = values_[i + 1] - values_[i];
    require(step == 0 || step == 1, ErrorCode::InvariantViolation,
            "final sequence steps must be 0 or 1");
  }
}

std::string FinalSeq::str() const {
  std::string out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values_[i]);
  }
  return out;
}

ElementarySeq::ElementarySeq(std::vector<int> values) : values_(std::move(values)) {
  require(!values_.empty(), ErrorCode::InvariantViolation, "elementary sequence needs g >= 1");
  require(g() <= kMaxLength, ErrorCode::LengthCap,
          "elementary sequence length capped at g <= " + std::to_string(kMaxLength));
  int prev = 0;  // phi(0)
  for (int i = 1; i <= g(); ++i) {
    const int v = (*this)(i);
    require(v == prev || v == prev + 1, ErrorCode::InvariantViolation,
            "phi(" + std::to_string(i) + ")=" + std::to_string(v) +
                " breaks phi(i) <= phi(i+1) <= phi(i)+1");
    require(v >= 0 && v <= i, ErrorCode::InvariantViolation,
            "phi(i) must stay within [0, i]");
    prev = v;
  }
}

ElementarySeq ElementarySeq::parse(std::string_view text) {
  // Trim surrounding whitespace.
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  require(!text.empty(), ErrorCode::MalformedInput, "empty elementary sequence text");

  std::vector<int> values;
  if (text.find(',') == std::string_view::npos) {
    // Compact digit form: unambiguous only for g <= 9.
    require(text.size() <= 9, ErrorCode::MalformedInput,
            "compact digit form limited to g <= 9; use comma-separated values");
    for (char c : text) {
      require(std::isdigit(static_cast<unsigned char>(c)), ErrorCode::MalformedInput,
              "non-digit in elementary sequence text");
      values.push_back(c - '0');
    }
  } else {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t comma = text.find(',', pos);
      if (comma == std::string_view::npos) comma = text.size();
      std::string_view token = text.substr(pos, comma - pos);
      while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front()))) token.remove_prefix(1);
      while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back()))) token.remove_suffix(1);
      require(!token.empty(), ErrorCode::MalformedInput, "empty value in elementary sequence text");
      int value = 0;
      const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      require(ec == std::errc() && ptr == token.data() + token.size() && value >= 0,
              ErrorCode::MalformedInput, "bad integer in elementary sequence text");
      values.push_back(value);
      pos = comma + 1;
      if (comma == text.size()) break;
    }
    require(values.size() <= static_cast<std::size_t>(kMaxLength), ErrorCode::LengthCap,
            "elementary sequence length capped at g <= " + std::to_string(kMaxLength));
  }
  return ElementarySeq(std::move(values));
}

int ElementarySeq::p_rank() const {
  int rank = 0;
  for (int i = 1; i <= g(); ++i) {
    if ((*this)(i) == i) rank = i;
  }
  return rank;
}

int ElementarySeq::a_number() const { return g() - (*this)(g()); }

int ElementarySeq::dimension() const {
  int sum = 0;
  for (int v : values_) sum += v;
  return sum;
}

FinalSeq ElementarySeq::stretch() const {
  const int n = g();
  std::vector<int> psi(static_cast<std::size_t>(2 * n + 1));
  for (int i = 0; i <= n; ++i) psi[static_cast<std::size_t>(i)] = (*this)(i);
  for (int i = 0; i <= n; ++i) psi[static_cast<std::size_t>(2 * n - i)] = n - i + (*this)(i);
  return FinalSeq(n, std::move(psi));
}

std::string ElementarySeq::str() const {
  std::string out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values_[i]);
  }
  return out;
}

std::string ElementarySeq::display() const { return "(" + str() + ")"; }

std::vector<ElementarySeq> enumerate_elementary(int g, std::optional<int> prank) {
  require(g >= 1 && g <= ElementarySeq::kMaxLength, ErrorCode::LengthCap,
          "enumeration supports 1 <= g <= " + std::to_string(ElementarySeq::kMaxLength));
  if (prank) {
    require(*prank >= 0 && *prank <= g, ErrorCode::InvariantViolation,
            "p-rank filter must lie in [0, g]");
  }
  std::vector<ElementarySeq> out;
  std::vector<int> values(static_cast<std::size_t>(g));
  auto extend = [&](auto&& self, int i, int prev) -> void {
    if (i > g) {
      ElementarySeq seq(values);
      if (!prank || seq.p_rank() == *prank) out.push_back(std::move(seq));
      return;
    }
    for (int v = prev; v <= prev + 1; ++v) {
      values[static_cast<std::size_t>(i - 1)] = v;
      self(self, i + 1, v);
    }
  };
  extend(extend, 1, 0);
  return out;
}

}  // namespace stratlab
