#include "kraus_symm/cycle_notation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "kraus_symm/errors.hpp"

namespace kraus_symm {

namespace {

// 1-based cycles exactly as written.
std::vector<std::vector<std::size_t>> tokenize_cycles(std::string_view text) {
  std::vector<std::vector<std::size_t>> cycles;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& what) {
    throw InvalidArgument("cycle notation '" + std::string(text) + "': " + what);
  };

  skip_space();
  if (pos == text.size()) fail("empty input");
  while (true) {
    skip_space();
    if (pos == text.size()) break;
    if (text[pos] != '(') fail("expected '(' at position " + std::to_string(pos));
    ++pos;
    std::vector<std::size_t> cycle;
    while (true) {
      skip_space();
      if (pos == text.size()) fail("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      std::size_t value = 0;
      auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
      if (ec != std::errc{} || ptr == text.data() + pos) fail("expected an index at position " + std::to_string(pos));
      if (value == 0) fail("indices are 1-based");
      pos = static_cast<std::size_t>(ptr - text.data());
      if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) && text[pos] != ')') {
        fail("indices must be whitespace separated");
      }
      cycle.push_back(value);
    }
    cycles.push_back(std::move(cycle));
  }

  std::vector<std::size_t> all;
  for (const auto& c : cycles) all.insert(all.end(), c.begin(), c.end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) fail("repeated index");
  return cycles;
}

}  // namespace

std::size_t max_cycle_index(std::string_view text) {
  std::size_t m = 0;
  for (const auto& c : tokenize_cycles(text)) {
    for (std::size_t v : c) m = std::max(m, v);
  }
  return m;
}

Permutation parse_cycles(std::string_view text, std::optional<std::size_t> degree) {
  auto cycles = tokenize_cycles(text);
  std::size_t largest = 0;
  for (const auto& c : cycles) {
    for (std::size_t v : c) largest = std::max(largest, v);
  }
  std::size_t n = degree.value_or(largest);
  if (!degree && largest == 0) {
    throw InvalidArgument("cycle notation '" + std::string(text) + "' needs an explicit degree");
  }
  if (largest > n) {
    throw InvalidArgument("cycle notation '" + std::string(text) + "' mentions index " + std::to_string(largest) +
                          " beyond degree " + std::to_string(n));
  }
  std::vector<std::vector<Index>> zero_based;
  for (const auto& c : cycles) {
    std::vector<Index> z;
    for (std::size_t v : c) z.push_back(static_cast<Index>(v - 1));
    zero_based.push_back(std::move(z));
  }
  return Permutation::from_cycles(n, zero_based);
}

std::string format_cycles(const Permutation& p) {
  auto cycles = cycle_decomposition(p).cycles();
  std::sort(cycles.begin(), cycles.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  std::string out;
  for (const auto& c : cycles) {
    if (c.size() < 2) continue;
    out += '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k > 0) out += ' ';
      out += std::to_string(c[k] + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::string format_partition(const IntegerPartition& mu) {
  std::string out = "(";
  for (std::size_t k = 0; k < mu.parts().size(); ++k) {
    if (k > 0) out += ',';
    out += std::to_string(mu.parts()[k]);
  }
  return out + ")";
}

std::string format_set_partition(const SetPartition& blocks) {
  std::string out = "{";
  for (std::size_t b = 0; b < blocks.blocks().size(); ++b) {
    if (b > 0) out += ',';
    out += '{';
    const auto& block = blocks.blocks()[b];
    for (std::size_t k = 0; k < block.size(); ++k) {
      if (k > 0) out += ',';
      out += std::to_string(block[k] + 1);
    }
    out += '}';
  }
  return out + "}";
}

}  // namespace kraus_symm
