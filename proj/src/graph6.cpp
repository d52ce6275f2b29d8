// Copyright 2026 The gensat Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gensat/graph6.hpp"

#include <cstdint>

#include "gensat/errors.hpp"

namespace gensat {
namespace {

constexpr int kBias = 63;
constexpr char kLong = 126;
constexpr std::string_view kHeader = ">>graph6<<";

void push_groups(std::string& out, std::uint64_t value, int groups) {
  for (int i = groups - 1; i >= 0; --i) {
    out.push_back(static_cast<char>(((value >> (6 * i)) & 0x3f) + kBias));
  }
}

int sextet(std::string_view s, std::size_t pos, std::size_t base) {
  const int c = static_cast<unsigned char>(s[pos]);
  if (c < kBias || c > kBias + 63) {
    throw ParseError("byte outside graph6 range [63,126]", base + pos);
  }
  return c - kBias;
}

}  // namespace

std::string encode_graph6(const Graph& g) {
  const std::uint64_t n = static_cast<std::uint64_t>(g.order());
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back(kLong);
    push_groups(out, n, 3);
  } else {
    out.push_back(kLong);
    out.push_back(kLong);
    push_groups(out, n, 6);
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < g.order(); ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  }
  return out;
}

Graph decode_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.starts_with(kHeader)) {
    text.remove_prefix(kHeader.size());
    base = kHeader.size();
  }
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' ||
                           text.back() == ' ' || text.back() == '\t')) {
    text.remove_suffix(1);
  }
  if (text.empty()) throw ParseError("empty graph6 string", base);

  std::size_t pos = 0;
  std::uint64_t n = 0;
  if (text[0] != kLong) {
    n = static_cast<std::uint64_t>(sextet(text, 0, base));
    pos = 1;
  } else if (text.size() >= 2 && text[1] == kLong) {
    if (text.size() < 8) throw ParseError("truncated 8-byte order header", base + text.size());
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | sextet(text, i, base);
    pos = 8;
  } else {
    if (text.size() < 4) throw ParseError("truncated 4-byte order header", base + text.size());
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | sextet(text, i, base);
    pos = 4;
  }
  if (n > static_cast<std::uint64_t>(kMaxOrder)) {
    throw ParseError("order " + std::to_string(n) + " exceeds capacity " +
                         std::to_string(kMaxOrder),
                     base);
  }
  const int order = static_cast<int>(n);
  const std::size_t bits = n * (n == 0 ? 0 : n - 1) / 2;
  const std::size_t need = (bits + 5) / 6;
  if (text.size() - pos < need) {
    throw ParseError("truncated adjacency data: expected " +
                         std::to_string(need) + " bytes, found " +
                         std::to_string(text.size() - pos),
                     base + text.size());
  }
  if (text.size() - pos > need) {
    throw ParseError("trailing bytes after adjacency data", base + pos + need);
  }

  GraphBuilder b(order);
  std::size_t k = 0;
  int cur = 0;
  for (int j = 1; j < order; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if (k % 6 == 0) cur = sextet(text, pos + k / 6, base);
      if ((cur >> (5 - static_cast<int>(k % 6))) & 1) b.add_edge(i, j);
    }
  }
  if (k % 6 != 0) {
    const int pad_mask = (1 << (6 - static_cast<int>(k % 6))) - 1;
    if (cur & pad_mask) {
      throw ParseError("nonzero padding bits", base + pos + need - 1);
    }
  }
  return b.build();
}

}  // namespace gensat
