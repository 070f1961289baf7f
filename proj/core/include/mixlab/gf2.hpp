#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace mixlab::gf2 {

/// Dense bit vector over GF(2).
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  std::size_t size() const noexcept { return nbits_; }

  bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }

  BitVec& operator^=(const BitVec& other);

  bool any() const noexcept;
  /// Index of the lowest set bit, or size() when the vector is zero.
  std::size_t lowest() const noexcept;
  /// Parity of popcount(this & other).
  bool dot(const BitVec& other) const;

  friend bool operator==(const BitVec&, const BitVec&) = default;

 private:
  std::size_t nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Sparse element of GF(2)[t]: sorted exponents with coefficient 1.
using SparsePoly = std::vector<std::uint64_t>;

/// t^a (1+t)^b. Binomial coefficients mod 2 follow Lucas: C(b, i) is odd iff
/// i is a submask of b, so the result has 2^popcount(b) terms.
SparsePoly shifted_binomial(std::uint64_t a, std::uint64_t b);

/// Sum over GF(2) (symmetric difference of exponent sets).
SparsePoly add(const SparsePoly& p, const SparsePoly& q);

struct KernelBasis {
  std::size_t rank = 0;
  /// Each entry is a dependency c among the input vectors: sum of c_i v_i = 0.
  std::vector<BitVec> dependencies;
};

/// Linear dependencies among sparse polynomials viewed as vectors over GF(2).
KernelBasis kernel(std::span<const SparsePoly> columns);

}  // namespace mixlab::gf2
