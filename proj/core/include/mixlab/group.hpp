#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mixlab/exact.hpp"

namespace mixlab {

enum class GroupKind { Int, IntVec, FinSupportIntSeq };

std::string to_string(GroupKind kind);

/// One of the effective countable abelian groups: Z, Z^d, or the direct sum of
/// countably many copies of Z (finitely supported integer sequences).
struct GroupCtx {
  GroupKind kind = GroupKind::Int;
  std::size_t dim = 1;  // only meaningful for IntVec
  std::string label;

  static GroupCtx integers();
  static GroupCtx lattice(std::size_t d);
  static GroupCtx finite_support();

  /// Label is descriptive only and does not take part in equality.
  friend bool operator==(const GroupCtx& a, const GroupCtx& b) {
    return a.kind == b.kind && (a.kind != GroupKind::IntVec || a.dim == b.dim);
  }
};

std::string describe(const GroupCtx& ctx);

/// Coordinates of a group element. For FinSupportIntSeq the vector is kept in
/// canonical form (no trailing zeros, so the zero element is empty); position i
/// holds the (i+1)-th entry a_{i+1}.
class GroupElement {
 public:
  GroupElement() = default;
  explicit GroupElement(std::vector<BigInt> coords) : coords_(std::move(coords)) {}
  GroupElement(std::initializer_list<long> coords);

  const std::vector<BigInt>& coords() const noexcept { return coords_; }
  std::size_t size() const noexcept { return coords_.size(); }
  const BigInt& operator[](std::size_t i) const { return coords_[i]; }

  bool is_zero() const;

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.coords_ == b.coords_;
  }
  friend std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b);

 private:
  std::vector<BigInt> coords_;
};

std::string to_string(const GroupElement& g);

/// Validates shape against ctx and returns the canonical representative.
GroupElement make_element(const GroupCtx& ctx, std::vector<BigInt> coords);
GroupElement make_element(const GroupCtx& ctx, std::initializer_list<long> coords);
bool belongs_to(const GroupCtx& ctx, const GroupElement& g);
GroupElement zero(const GroupCtx& ctx);

enum class GroupOpMode { Add, Sub };

GroupElement group_op(const GroupCtx& ctx, const GroupElement& a, const GroupElement& b,
                      GroupOpMode mode);
GroupElement add(const GroupCtx& ctx, const GroupElement& a, const GroupElement& b);
GroupElement sub(const GroupCtx& ctx, const GroupElement& a, const GroupElement& b);
GroupElement neg(const GroupCtx& ctx, const GroupElement& g);
GroupElement scale(const GroupCtx& ctx, const BigInt& factor, const GroupElement& g);

/// Least k with g in F_k of the canonical Folner family of ctx (F_0 = {0}).
/// Z and Z^d: max-norm. Finite support: max(length of support, max |entry|).
BigInt escape_norm(const GroupCtx& ctx, const GroupElement& g);

// ---------------------------------------------------------------------------
// Homomorphisms

enum class HomKind { Scale, Matrix, Interleave, EvenSelect, PrimeSelect, Compose };

/// Endomorphisms used by the diagonal experiments. Scale is multiplication by
/// an integer and works on every group; Matrix acts on column vectors of Z^d;
/// the remaining kinds act on finitely supported sequences:
///   Interleave   (a1, a2, ...) -> (0, a1, 0, a2, ...)
///   EvenSelect   (a1, a2, ...) -> (a2, a4, a6, ...)
///   PrimeSelect  (a1, a2, ...) -> (a_p, a_{p^2}, a_{p^3}, ...)
/// Compose(outer, inner) is outer after inner.
class Homomorphism {
 public:
  static Homomorphism scale(const GroupCtx& ctx, BigInt factor);
  static Homomorphism matrix(std::vector<std::vector<BigInt>> rows);
  static Homomorphism interleave();
  static Homomorphism even_select();
  static Homomorphism prime_select(unsigned long p);
  static Homomorphism compose(const Homomorphism& outer, const Homomorphism& inner);

  HomKind kind() const noexcept { return kind_; }
  const GroupCtx& source() const noexcept { return source_; }
  const GroupCtx& target() const noexcept { return target_; }
  const BigInt& factor() const noexcept { return factor_; }
  const std::vector<std::vector<BigInt>>& rows() const noexcept { return rows_; }
  unsigned long prime() const noexcept { return prime_; }
  const Homomorphism& outer() const { return *outer_; }
  const Homomorphism& inner() const { return *inner_; }

  std::string describe() const;

 private:
  Homomorphism() = default;

  HomKind kind_ = HomKind::Scale;
  GroupCtx source_;
  GroupCtx target_;
  BigInt factor_ = 1;
  std::vector<std::vector<BigInt>> rows_;
  unsigned long prime_ = 2;
  std::shared_ptr<const Homomorphism> outer_;
  std::shared_ptr<const Homomorphism> inner_;
};

GroupElement hom_apply(const Homomorphism& phi, const GroupElement& g);

struct KernelReport {
  bool finite = false;
  std::optional<std::size_t> rank;                  // lattice homs only
  std::optional<std::vector<BigInt>> kernel_vector;  // primitive, first nonzero entry positive
  std::string reason;
};

/// Lattice homs (Scale on Z/Z^d, Matrix, and their compositions) are decided
/// by rank over Q. On finitely supported sequences every supported kind reads
/// each output coordinate from one input coordinate, so the kernel is finite
/// (indeed trivial) exactly when every input coordinate is read with a
/// nonzero coefficient: true for Interleave and nonzero Scale, false as soon
/// as an EvenSelect, PrimeSelect or Scale(0) factor is present.
KernelReport hom_kernel_finite(const Homomorphism& phi);

// ---------------------------------------------------------------------------
// Folner windows

enum class FolnerKind { Boxes, SupportBoxes };

struct FolnerFamily {
  GroupCtx ctx;
  FolnerKind kind = FolnerKind::Boxes;
  std::size_t max_index = 1;

  /// Boxes for Z and Z^d, SupportBoxes for finitely supported sequences.
  static FolnerFamily canonical(const GroupCtx& ctx, std::size_t max_index);
};

/// Largest window the library will materialize.
inline constexpr std::size_t kMaxWindowSize = 4'000'000;

BigInt folner_window_size(const FolnerFamily& fam, std::size_t k);

/// F_k in lexicographic order of its fixed-length coordinate tuples.
std::vector<GroupElement> folner_window(const FolnerFamily& fam, std::size_t k);

/// |(g + F_k) ∩ F_k| / |F_k|, in closed form.
Rational folner_overlap_ratio(const FolnerFamily& fam, std::size_t k, const GroupElement& g);

}  // namespace mixlab
