#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "mixlab/exact.hpp"
#include "mixlab/subsets.hpp"

namespace mixlab {

/// Values x_alpha for alpha in [N]^{(m)}, stored in colex order.
class SimplexArray {
 public:
  SimplexArray(std::size_t m, std::size_t n, std::vector<Rational> values);

  static SimplexArray generate(std::size_t m, std::size_t n,
                               const std::function<Rational(const IndexSet&)>& f);

  std::size_t m() const noexcept { return m_; }
  std::size_t n() const noexcept { return n_; }
  const Rational& at(const IndexSet& alpha) const;
  const std::vector<Rational>& values() const noexcept { return values_; }

  /// The array alpha -> x_{S(alpha)} on [|S|]^{(m)}, S given as a sorted subset of [N].
  SimplexArray restrict(const IndexSet& subset) const;

 private:
  std::size_t m_;
  std::size_t n_;
  std::vector<Rational> values_;
};

/// Total coloring of [N]^{(m)} by ids 0..r-1, colex order.
struct Coloring {
  std::size_t m = 1;
  std::size_t n = 1;
  std::size_t colors = 1;
  std::vector<std::uint32_t> color;
  /// For quantized colorings: color id -> cell index floor(x / width).
  std::vector<BigInt> cell;

  std::uint32_t at(const IndexSet& alpha) const;
};

/// color(alpha) = floor(x_alpha / width); cells are numbered by ascending cell index.
Coloring color_quantize(const SimplexArray& arr, const Rational& width);

struct HomogeneousCert {
  IndexSet subset;
  std::uint32_t color = 0;
  std::size_t size() const noexcept { return subset.size(); }
};

struct SearchOptions {
  std::uint64_t budget = 1'000'000;  // node expansions for the exact search
};

struct HomogeneousSearch {
  HomogeneousCert best;
  bool reached_target = false;
  bool exhaustive = false;  // exact search completed inside the budget
  std::uint64_t nodes = 0;
};

/// Largest S with S^{(m)} monochromatic; lexicographically smallest among the
/// largest found, then smallest color. Exact branch and bound runs when
/// C(N, m) <= budget, always alongside deterministic greedy restarts.
HomogeneousSearch find_homogeneous(const Coloring& col, std::size_t target,
                                   const SearchOptions& opts = {});

/// Exhaustive check that every alpha in S^{(m)} carries the certificate color.
bool verify_homogeneous(const Coloring& col, const HomogeneousCert& cert);

struct RLimitEstimate {
  IndexSet subset;
  Rational value;
  Rational epsilon;
  Rational max_deviation;
  bool exhaustive = false;

  std::size_t min_index() const { return subset.empty() ? 0 : subset.front(); }
};

/// Quantizes with cell width epsilon/2, extracts a homogeneous S and reports
/// v = (min + max)/2 of the values over S^{(m)}, so max deviation <= epsilon/4.
RLimitEstimate rlimit_estimate(const SimplexArray& arr, const Rational& epsilon,
                               const SearchOptions& opts = {});

bool verify_rlimit(const SimplexArray& arr, const RLimitEstimate& est);

struct LimitLevel {
  std::size_t level = 0;       // 1-based position of the index being limited
  IndexSet indices;            // indices of S used at this level
  Rational max_spread;         // largest tail spread seen at this level
};

struct IteratedLimitReport {
  std::vector<LimitLevel> levels;  // innermost first
  Rational value;
  Rational rlimit_value;
  Rational tolerance;
  bool agrees = false;
};

/// Empirical lim_{j_1} ... lim_{j_m} x_{j_1 ... j_m} along S. Each level takes
/// the last `window` admissible indices of its block and summarizes them by
/// the midpoint of their range.
IteratedLimitReport iterated_limit(const SimplexArray& arr, const IndexSet& subset,
                                   const Rational& tol, std::size_t window = 3,
                                   const SearchOptions& opts = {});

struct SliceLimit {
  std::size_t k = 0;
  Rational value;
  std::size_t slice_size = 0;
};

struct DecomposeReport {
  std::vector<SliceLimit> slices;
  Rational global_value;
  Rational epsilon;
  bool pass = false;
};

/// For an array of order m+1: y_k = R-limit of alpha -> x_{{k} ∪ alpha}
/// (alpha > k inside S) for k in the first half of S; passes when the last
/// `window` of them lie within 2 epsilon of the R-limit over S itself.
DecomposeReport decompose_verify(const SimplexArray& arr, const IndexSet& subset,
                                 const Rational& epsilon, std::size_t window = 3,
                                 const SearchOptions& opts = {});

}  // namespace mixlab
