#include "ratiocert/graph_core/bitset.hpp"

namespace ratiocert {

void Bitset::set_all() noexcept {
  for (auto& w : words_) w = ~std::uint64_t{0};
  if (size_ & 63) words_.back() &= (std::uint64_t{1} << (size_ & 63)) - 1;
}

std::size_t Bitset::next(std::size_t from) const noexcept {
  if (from >= size_) return npos;
  std::size_t k = from >> 6;
  std::uint64_t w = words_[k] & (~std::uint64_t{0} << (from & 63));
  while (true) {
    if (w) return (k << 6) + static_cast<std::size_t>(std::countr_zero(w));
    if (++k == words_.size()) return npos;
    w = words_[k];
  }
}

std::vector<std::size_t> Bitset::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = first(); i != npos; i = next(i + 1)) out.push_back(i);
  return out;
}

Bitset Bitset::from_indices(std::size_t size, const std::vector<std::size_t>& idx) {
  Bitset b(size);
  for (auto i : idx) b.set(i);
  return b;
}

std::strong_ordering operator<=>(const Bitset& a, const Bitset& b) {
  std::size_t i = a.first(), j = b.first();
  while (i != Bitset::npos && j != Bitset::npos) {
    if (i != j) return i <=> j;
    i = a.next(i + 1);
    j = b.next(j + 1);
  }
  if (i == Bitset::npos && j == Bitset::npos) return a.size() <=> b.size();
  return i == Bitset::npos ? std::strong_ordering::less : std::strong_ordering::greater;
}

}  // namespace ratiocert
