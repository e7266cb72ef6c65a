#include "ratiocert/constructions/witt.hpp"

#include <algorithm>
#include <bit>

#include "ratiocert/errors.hpp"

namespace ratiocert {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::kConstructionFailed, "witt: " + what);
}

}  // namespace

std::vector<std::uint32_t> lexicode(unsigned n, unsigned d) {
  if (n == 0 || n > 26 || d == 0) throw Error(ErrorKind::kDimension, "lexicode needs 1 <= n <= 26 and d >= 1");
  const std::uint32_t size = std::uint32_t{1} << n;
  std::vector<std::uint8_t> covered(size, 0);
  for (std::uint32_t x = 0; x < size; ++x) covered[x] = static_cast<unsigned>(std::popcount(x)) < d;
  std::vector<std::uint32_t> basis;
  for (std::uint32_t w = 0; w < size; ++w) {
    if (covered[w]) continue;
    basis.push_back(w);
    for (std::uint32_t x = 0; x < size; ++x)
      if (covered[x] == 1) covered[x ^ w] |= 2;
    for (auto& c : covered) c = c ? 1 : 0;
  }
  std::vector<std::uint32_t> code{0};
  for (auto b : basis) {
    const std::size_t m = code.size();
    for (std::size_t i = 0; i < m; ++i) code.push_back(code[i] ^ b);
  }
  std::sort(code.begin(), code.end());
  return code;
}

std::vector<std::uint32_t> lexicode_naive(unsigned n, unsigned d) {
  std::vector<std::uint32_t> code;
  for (std::uint32_t w = 0; w < (std::uint32_t{1} << n); ++w) {
    bool ok = true;
    for (auto c : code) ok = ok && static_cast<unsigned>(std::popcount(w ^ c)) >= d;
    if (ok) code.push_back(w);
  }
  return code;
}

std::string WittBlock::label() const {
  std::string out;
  for (int p : points) {
    if (!out.empty()) out += ',';
    out += std::to_string(p);
  }
  return out;
}

Witt build_witt() {
  Witt w;
  w.golay = lexicode(24, 8);
  require(w.golay.size() == 4096, "Golay code has " + std::to_string(w.golay.size()) + " words");
  std::array<std::size_t, 25> weights{};
  for (auto c : w.golay) ++weights[static_cast<std::size_t>(std::popcount(c))];
  require(weights[0] == 1 && weights[8] == 759 && weights[12] == 2576 && weights[16] == 759 && weights[24] == 1,
          "Golay weight distribution");

  const std::uint32_t top = (std::uint32_t{1} << 22) | (std::uint32_t{1} << 23);
  for (auto c : w.golay) {
    if (std::popcount(c) != 8 || (c & top) != top) continue;
    WittBlock b{};
    std::size_t t = 0;
    for (int bit = 0; bit < 22; ++bit)
      if (c >> bit & 1u) b.points[t++] = bit + 1;
    w.blocks.push_back(b);
  }
  std::sort(w.blocks.begin(), w.blocks.end());
  require(w.blocks.size() == 77, "derived design has " + std::to_string(w.blocks.size()) + " blocks");

  std::vector<std::uint32_t> masks;
  for (const auto& b : w.blocks) {
    std::uint32_t m = 0;
    for (int p : b.points) m |= std::uint32_t{1} << (p - 1);
    masks.push_back(m);
  }
  for (int p = 0; p < 22; ++p) {
    std::size_t on = 0;
    for (auto m : masks) on += m >> p & 1u;
    require(on == 21, "point " + std::to_string(p + 1) + " lies on " + std::to_string(on) + " blocks");
  }
  for (int a = 0; a < 22; ++a) {
    for (int b = a + 1; b < 22; ++b) {
      for (int c = b + 1; c < 22; ++c) {
        const std::uint32_t t = (1u << a) | (1u << b) | (1u << c);
        std::size_t hits = 0;
        for (auto m : masks) hits += (m & t) == t;
        require(hits == 1, "a 3-set lies in " + std::to_string(hits) + " blocks");
      }
    }
  }

  std::vector<std::string> labels;
  for (const auto& b : w.blocks) labels.push_back(b.label());
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < masks.size(); ++i)
    for (std::size_t j = i + 1; j < masks.size(); ++j)
      if (!(masks[i] & masks[j])) edges.emplace_back(i, j);
  w.graph = Graph::from_edges(std::move(labels), edges);
  w.M = ExactMatrix(masks.size(), 22);
  for (std::size_t i = 0; i < masks.size(); ++i)
    for (std::size_t p = 0; p < 22; ++p)
      if (masks[i] >> p & 1u) w.M(i, p) = Rational(1);
  return w;
}

}  // namespace ratiocert
