#include "mixlab/gf2.hpp"

#include <algorithm>
#include <bit>

namespace mixlab::gf2 {

BitVec& BitVec::operator^=(const BitVec& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

bool BitVec::any() const noexcept {
  return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
}

std::size_t BitVec::lowest() const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
  }
  return nbits_;
}

bool BitVec::dot(const BitVec& other) const {
  unsigned parity = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    parity ^= static_cast<unsigned>(std::popcount(words_[i] & other.words_[i])) & 1U;
  }
  return parity != 0;
}

SparsePoly shifted_binomial(std::uint64_t a, std::uint64_t b) {
  SparsePoly out;
  out.reserve(std::size_t{1} << std::popcount(b));
  // enumerate submasks of b in increasing order
  std::uint64_t sub = 0;
  while (true) {
    out.push_back(a + sub);
    if (sub == b) break;
    sub = ((sub | ~b) + 1) & b;
  }
  return out;
}

SparsePoly add(const SparsePoly& p, const SparsePoly& q) {
  SparsePoly out;
  out.reserve(p.size() + q.size());
  std::set_symmetric_difference(p.begin(), p.end(), q.begin(), q.end(),
                                std::back_inserter(out));
  return out;
}

KernelBasis kernel(std::span<const SparsePoly> columns) {
  // compress the exponents that occur into dense row indices
  std::vector<std::uint64_t> support;
  for (const auto& c : columns) support.insert(support.end(), c.begin(), c.end());
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());

  const std::size_t n = columns.size();
  struct Row {
    BitVec vec;
    BitVec tag;
    std::size_t pivot;
  };
  std::vector<Row> basis;
  KernelBasis out;
  for (std::size_t i = 0; i < n; ++i) {
    BitVec v(support.size());
    for (auto e : columns[i]) {
      auto it = std::lower_bound(support.begin(), support.end(), e);
      v.flip(static_cast<std::size_t>(it - support.begin()));
    }
    BitVec tag(n);
    tag.set(i);
    for (const auto& row : basis) {
      if (v.get(row.pivot)) {
        v ^= row.vec;
        tag ^= row.tag;
      }
    }
    if (v.any()) {
      std::size_t pivot = v.lowest();
      // keep the basis fully reduced on pivot columns
      for (auto& row : basis) {
        if (row.vec.get(pivot)) {
          row.vec ^= v;
          row.tag ^= tag;
        }
      }
      basis.push_back({std::move(v), std::move(tag), pivot});
    } else {
      out.dependencies.push_back(std::move(tag));
    }
  }
  out.rank = basis.size();
  return out;
}

}  // namespace mixlab::gf2
