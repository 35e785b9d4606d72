#include "nutforge/graph.hpp"

#include <stdexcept>

namespace nutforge {

namespace {

constexpr int kGraph6MaxOrder = 258047;

void append_bit_groups(std::string& out, const std::vector<bool>& bits) {
  for (std::size_t i = 0; i < bits.size(); i += 6) {
    int value = 0;
    for (std::size_t k = 0; k < 6; ++k) {
      value <<= 1;
      if (i + k < bits.size() && bits[i + k]) value |= 1;
    }
    out.push_back(static_cast<char>(63 + value));
  }
}

}  // namespace

std::string graph6_encode(const Graph& g) {
  if (g.n > kGraph6MaxOrder)
    throw std::invalid_argument("graph6_encode: order exceeds 258047");
  std::string out;
  if (g.n <= 62) {
    out.push_back(static_cast<char>(63 + g.n));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(63 + ((g.n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((g.n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (g.n & 63)));
  }
  // Upper triangle in column order: (0,1), (0,2), (1,2), (0,3), ...
  std::vector<bool> bits(static_cast<std::size_t>(g.n) * (g.n - 1) / 2, false);
  for (const auto& [u, v] : g.edges) {
    bits[static_cast<std::size_t>(v) * (v - 1) / 2 + u] = true;
  }
  append_bit_groups(out, bits);
  return out;
}

Graph graph6_decode(std::string_view text) {
  // Tolerate the optional format header and surrounding whitespace.
  constexpr std::string_view kHeader = ">>graph6<<";
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' ||
                           text.back() == ' ' || text.back() == '\t'))
    text.remove_suffix(1);
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t'))
    text.remove_prefix(1);
  if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
  if (text.empty()) throw std::invalid_argument("graph6_decode: empty input");

  for (char c : text) {
    if (c < 63 || c > 126)
      throw std::invalid_argument("graph6_decode: byte out of graph6 range");
  }

  std::size_t pos = 0;
  long n;
  if (text[0] != 126) {
    n = text[0] - 63;
    pos = 1;
  } else {
    if (text.size() >= 2 && text[1] == 126)
      throw std::invalid_argument("graph6_decode: order exceeds 258047");
    if (text.size() < 4)
      throw std::invalid_argument("graph6_decode: truncated order field");
    n = (static_cast<long>(text[1] - 63) << 12) |
        (static_cast<long>(text[2] - 63) << 6) | static_cast<long>(text[3] - 63);
    if (n > kGraph6MaxOrder)
      throw std::invalid_argument("graph6_decode: order exceeds 258047");
    pos = 4;
  }

  const std::size_t bit_count = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t group_count = (bit_count + 5) / 6;
  if (text.size() - pos != group_count)
    throw std::invalid_argument("graph6_decode: wrong length for order " +
                                std::to_string(n));

  std::vector<std::pair<int, int>> edges;
  std::size_t bit = 0;
  int u = 0, v = 1;
  for (std::size_t gidx = 0; gidx < group_count; ++gidx) {
    int value = text[pos + gidx] - 63;
    for (int k = 5; k >= 0; --k, ++bit) {
      const bool set = (value >> k) & 1;
      if (bit >= bit_count) {
        if (set)
          throw std::invalid_argument("graph6_decode: non-zero padding bits");
        continue;
      }
      if (set) edges.emplace_back(u, v);
      if (++u == v) {
        u = 0;
        ++v;
      }
    }
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

}  // namespace nutforge
