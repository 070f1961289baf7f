#pragma once

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mixlab/exact.hpp"
#include "mixlab/group.hpp"
#include "mixlab/subsets.hpp"

namespace mixlab {

/// Element of G^d, one GroupElement per component.
using Tuple = std::vector<GroupElement>;

/// The array g^{(j)}_{k,t} generating a (tilde-)Sigma_m set in G^d:
/// component j in [0, d), summand slot t in [0, m), index k in [1, K].
class SeedMatrix {
 public:
  /// entries[j][t][k-1]; every column must have the same length K >= m.
  static SeedMatrix from_columns(const GroupCtx& ctx,
                                 std::vector<std::vector<std::vector<GroupElement>>> entries);

  /// Generator form: f(j, t, k) with k 1-based.
  static SeedMatrix generate(const GroupCtx& ctx, std::size_t m, std::size_t d, std::size_t horizon,
                             const std::function<GroupElement(std::size_t, std::size_t,
                                                              std::size_t)>& f);

  const GroupCtx& ctx() const noexcept { return ctx_; }
  std::size_t m() const noexcept { return m_; }
  std::size_t d() const noexcept { return d_; }
  std::size_t horizon() const noexcept { return horizon_; }
  const GroupElement& at(std::size_t j, std::size_t t, std::size_t k) const;

 private:
  GroupCtx ctx_;
  std::size_t m_ = 1;
  std::size_t d_ = 1;
  std::size_t horizon_ = 0;
  std::vector<std::vector<std::vector<GroupElement>>> entries_;
};

/// sum_t g^{(j)}_{k_t, t} for alpha = {k_1 < ... < k_m}.
GroupElement seed_sum(const SeedMatrix& seed, std::size_t j, const IndexSet& alpha);
Tuple seed_tuple(const SeedMatrix& seed, const IndexSet& alpha);

struct SeedViolation {
  enum class Kind { NonDegenerate, EssentiallyDistinct } kind;
  std::size_t j = 0;
  std::size_t other_j = 0;  // second component for EssentiallyDistinct
  std::size_t t = 0;
  std::size_t k = 0;
  std::string message;
};

struct SeedValidation {
  bool ok = true;
  std::optional<SeedViolation> first_violation;
};

/// Finite proxies for "escapes to infinity": escape_norm of every column is
/// strictly increasing in k, and for every slot t and components j != j' the
/// difference g^{(j)}_{k,t} - g^{(j')}_{k,t} also has strictly increasing
/// escape_norm.
SeedValidation validate_seed(const SeedMatrix& seed);

struct SigmaElement {
  IndexSet alpha;
  Tuple value;
};

/// All C(K, m) sums in colex order of alpha, duplicates kept.
std::vector<SigmaElement> enumerate_sigma(const SeedMatrix& seed);

/// Generators h^{(j)}_k, j in [0, d), k in [1, K], of an (tilde-)IP set.
class FSFamily {
 public:
  static FSFamily from_generators(const GroupCtx& ctx, std::vector<std::vector<GroupElement>> gens);
  static FSFamily generate(const GroupCtx& ctx, std::size_t d, std::size_t horizon,
                           const std::function<GroupElement(std::size_t, std::size_t)>& f);

  const GroupCtx& ctx() const noexcept { return ctx_; }
  std::size_t d() const noexcept { return gens_.size(); }
  std::size_t horizon() const noexcept { return gens_.empty() ? 0 : gens_[0].size(); }
  const GroupElement& at(std::size_t j, std::size_t k) const { return gens_.at(j).at(k - 1); }

 private:
  GroupCtx ctx_;
  std::vector<std::vector<GroupElement>> gens_;
};

inline constexpr std::size_t kMaxFsHorizon = 20;

Tuple fs_value(const FSFamily& fam, const IndexSet& alpha);

/// All 2^K - 1 finite sums in colex order.
std::vector<SigmaElement> enumerate_fs(const FSFamily& fam);

using TuplePredicate = std::function<bool(std::span<const GroupElement>)>;
using ElementPredicate = std::function<bool(const GroupElement&)>;

enum class CertKind { RefutesSigmaStar, EvidenceSigmaStar, RefutesIPStar, EvidenceIPStar };

std::string to_string(CertKind kind);

struct SeedWitness {
  std::size_t seed_index = 0;
  IndexSet alpha;
  Tuple value;
};

/// Evidence: one witness per battery entry (colex-minimal alpha).
/// Refutation: the first battery entry with no witness, and its complete
/// enumeration, none of which satisfies the predicate.
struct LargenessCert {
  CertKind kind = CertKind::EvidenceSigmaStar;
  std::size_t m = 0;  // 0 for IP certificates
  std::size_t battery_size = 0;
  std::vector<SeedWitness> witnesses;
  std::size_t refuted_index = 0;
  std::size_t refuted_horizon = 0;
  std::vector<SigmaElement> refutation;

  bool is_refutation() const noexcept {
    return kind == CertKind::RefutesSigmaStar || kind == CertKind::RefutesIPStar;
  }
};

LargenessCert sigma_star_evidence(const TuplePredicate& pred, std::span<const SeedMatrix> battery);
LargenessCert ip_star_evidence(const TuplePredicate& pred, std::span<const FSFamily> battery);

/// Re-evaluates the predicate on every embedded witness, and checks a
/// refutation enumerates the whole generated set.
bool verify_certificate(const LargenessCert& cert, const TuplePredicate& pred);

// ---------------------------------------------------------------------------

enum class DensityVerdict { TendsToOne, TendsToZero, Inconclusive };

std::string to_string(DensityVerdict v);

struct DensityReport {
  FolnerFamily family;
  std::vector<std::pair<std::size_t, Rational>> ratios;  // (k, |E ∩ F_k| / |F_k|)
  std::vector<std::pair<std::size_t, BigInt>> counts;    // (k, |E ∩ F_k|)
  DensityVerdict verdict = DensityVerdict::Inconclusive;
  Rational delta;
};

/// Exact ratios for k = 1..k_max. Verdict TendsToOne when the last three
/// ratios exceed 1 - delta, TendsToZero when they are all below delta.
DensityReport folner_density(const ElementPredicate& pred, const FolnerFamily& fam,
                             std::size_t k_max, const Rational& delta = make_rational(1, 20));

// ---------------------------------------------------------------------------

struct FunctionalWitness {
  std::size_t j = 0;
  std::optional<std::size_t> i;  // pi_j - pi_i when set, pi_j otherwise
  std::optional<std::size_t> generator;  // index of a generator with nonzero image
};

struct AdmissibleReport {
  bool admissible = false;
  std::vector<FunctionalWitness> functionals;  // d projections then d(d-1) differences
  std::optional<FunctionalWitness> vanishing;  // first functional with zero image
};

/// Whether the lattice subgroup spanned by the given G^d tuples is admissible:
/// every pi_j(H) and every (pi_j - pi_i)(H) is nonzero (hence infinite).
AdmissibleReport admissible_check(const GroupCtx& ctx, const std::vector<Tuple>& generators);

/// Seed whose m slots all repeat the generator sequence of fam; its Sigma_m
/// sums are exactly the FS sums with |alpha| = m (checked before returning).
SeedMatrix sigma_from_ip(const FSFamily& fam, std::size_t m);

struct SumFreeResult {
  bool sum_free = true;
  std::optional<std::array<BigInt, 3>> witness;  // a <= b, a + b = c
};

inline constexpr std::size_t kMaxSumFreeSize = 100'000;

SumFreeResult sum_free_check(const std::vector<BigInt>& values);

struct PolynomialSigma2Witness {
  BigInt a;
  BigInt b;
  std::vector<BigInt> shifts;  // the n with a+n and b+n both polynomial values
};

inline constexpr std::int64_t kMaxPolynomialWindow = 1'000'000;

/// Evaluates p(i) = sum_j coeffs[j] i^j on every integer i with |p(i)| <= window.
std::vector<std::int64_t> polynomial_values(const std::vector<BigInt>& coeffs, std::int64_t window);

/// Looks for a < b and at least `repeats` distinct n with a+n and b+n both in
/// V = {p(i) : |p(i)| <= window}. Only b - a matters, so the returned witness
/// has a = 0 and the smallest difference b that occurs `repeats` times.
std::optional<PolynomialSigma2Witness> polynomial_sigma2_search(const std::vector<BigInt>& coeffs,
                                                                std::int64_t window,
                                                                std::size_t repeats = 3);

}  // namespace mixlab
