#include "mixlab/ramsey.hpp"

#include <algorithm>
#include <map>

#include "mixlab/error.hpp"

namespace mixlab {

namespace {

void require_index_set(const IndexSet& alpha, std::size_t m, std::size_t n) {
  if (alpha.size() != m || !is_index_set(alpha, n)) {
    raise(ErrorKind::OutOfRange,
          "alpha " + to_string(alpha) + " is not an element of [" + std::to_string(n) + "]^(" +
              std::to_string(m) + ")");
  }
}

IndexSet image(const IndexSet& subset, const IndexSet& beta) {
  IndexSet out(beta.size());
  for (std::size_t i = 0; i < beta.size(); ++i) out[i] = subset[beta[i] - 1];
  return out;
}

}  // namespace

SimplexArray::SimplexArray(std::size_t m, std::size_t n, std::vector<Rational> values)
    : m_(m), n_(n), values_(std::move(values)) {
  if (m == 0 || n < m) {
    raise(ErrorKind::InvalidArgument, "simplex array needs 1 <= m <= N");
  }
  if (values_.size() != binomial(n, m)) {
    raise(ErrorKind::DimensionMismatch, "simplex array of order " + std::to_string(m) + " on [" +
                                            std::to_string(n) + "] needs " +
                                            std::to_string(binomial(n, m)) + " values");
  }
  for (auto& v : values_) v.canonicalize();
}

SimplexArray SimplexArray::generate(std::size_t m, std::size_t n,
                                    const std::function<Rational(const IndexSet&)>& f) {
  std::vector<Rational> values;
  for (const auto& alpha : all_subsets(n, m)) values.push_back(f(alpha));
  return SimplexArray(m, n, std::move(values));
}

const Rational& SimplexArray::at(const IndexSet& alpha) const {
  require_index_set(alpha, m_, n_);
  return values_[colex_rank(alpha)];
}

SimplexArray SimplexArray::restrict(const IndexSet& subset) const {
  if (subset.size() < m_ || !is_index_set(subset, n_)) {
    raise(ErrorKind::InvalidArgument, "restriction needs a sorted subset of [" +
                                          std::to_string(n_) + "] with at least m elements");
  }
  std::vector<Rational> values;
  for (const auto& beta : all_subsets(subset.size(), m_)) {
    values.push_back(values_[colex_rank(image(subset, beta))]);
  }
  return SimplexArray(m_, subset.size(), std::move(values));
}

std::uint32_t Coloring::at(const IndexSet& alpha) const {
  require_index_set(alpha, m, n);
  return color[colex_rank(alpha)];
}

Coloring color_quantize(const SimplexArray& arr, const Rational& width) {
  if (width <= 0) raise(ErrorKind::InvalidArgument, "quantization width must be positive");
  std::vector<BigInt> cells;
  cells.reserve(arr.values().size());
  for (const auto& x : arr.values()) cells.push_back(floor_div(Rational(x / width)));
  std::vector<BigInt> distinct = cells;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

  Coloring col;
  col.m = arr.m();
  col.n = arr.n();
  col.colors = distinct.size();
  col.color.reserve(cells.size());
  for (const auto& c : cells) {
    auto it = std::lower_bound(distinct.begin(), distinct.end(), c);
    col.color.push_back(static_cast<std::uint32_t>(it - distinct.begin()));
  }
  col.cell = std::move(distinct);
  return col;
}

// ---------------------------------------------------------------------------

namespace {

bool better(const HomogeneousCert& a, const HomogeneousCert& b) {
  if (a.size() != b.size()) return a.size() > b.size();
  if (a.subset != b.subset) return a.subset < b.subset;
  return a.color < b.color;
}

class Searcher {
 public:
  Searcher(const Coloring& col, std::uint32_t color) : col_(col), color_(color) {}

  // Candidates that may follow once s joins S: v > s with every m-subset made
  // of s, v and m-2 elements of S carrying the search color.
  std::vector<std::size_t> filter(const IndexSet& s_set, std::size_t s,
                                  const std::vector<std::size_t>& cand) const {
    const std::size_t m = col_.m;
    std::vector<std::size_t> out;
    if (m == 1) {
      for (auto v : cand)
        if (v > s) out.push_back(v);
      return out;
    }
    const bool constrained = s_set.size() + 2 >= m;
    const auto rests = constrained ? all_subsets(s_set.size(), m - 2) : std::vector<IndexSet>{};
    IndexSet alpha(m);
    for (auto v : cand) {
      if (v <= s) continue;
      bool ok = true;
      for (const auto& beta : rests) {
        for (std::size_t i = 0; i < beta.size(); ++i) alpha[i] = s_set[beta[i] - 1];
        alpha[m - 2] = s;
        alpha[m - 1] = v;
        if (col_.color[colex_rank(alpha)] != color_) {
          ok = false;
          break;
        }
      }
      if (ok) out.push_back(v);
    }
    return out;
  }

  std::vector<std::size_t> initial() const {
    std::vector<std::size_t> cand;
    for (std::size_t v = 1; v <= col_.n; ++v) {
      if (col_.m == 1 && col_.color[v - 1] != color_) continue;
      cand.push_back(v);
    }
    return cand;
  }

  IndexSet greedy(std::size_t start, std::vector<std::size_t> cand) const {
    IndexSet s_set;
    std::size_t next = start;
    for (;;) {
      auto filtered = filter(s_set, next, cand);
      s_set.push_back(next);
      if (filtered.empty()) return s_set;
      cand = std::move(filtered);
      next = cand.front();
    }
  }

  // Returns false when the node budget ran out.
  bool branch(IndexSet& s_set, const std::vector<std::size_t>& cand, IndexSet& best,
              std::size_t floor_size, std::uint64_t& nodes, std::uint64_t budget) const {
    for (std::size_t i = 0; i < cand.size(); ++i) {
      const std::size_t reach = s_set.size() + cand.size() - i;
      if (reach <= best.size() || reach < floor_size) return true;
      if (++nodes > budget) return false;
      const std::size_t s = cand[i];
      std::vector<std::size_t> rest(cand.begin() + static_cast<std::ptrdiff_t>(i), cand.end());
      auto next = filter(s_set, s, rest);
      s_set.push_back(s);
      if (s_set.size() > best.size()) best = s_set;
      bool ok = branch(s_set, next, best, floor_size, nodes, budget);
      s_set.pop_back();
      if (!ok) return false;
    }
    return true;
  }

 private:
  const Coloring& col_;
  std::uint32_t color_;
};

}  // namespace

HomogeneousSearch find_homogeneous(const Coloring& col, std::size_t target,
                                   const SearchOptions& opts) {
  if (target < col.m) {
    raise(ErrorKind::InvalidArgument, "target size must be at least m = " + std::to_string(col.m));
  }
  if (col.color.size() != binomial(col.n, col.m)) {
    raise(ErrorKind::DimensionMismatch, "coloring is not total on [N]^(m)");
  }
  HomogeneousSearch result;
  const std::uint32_t colors = static_cast<std::uint32_t>(col.colors);

  auto offer = [&](IndexSet subset, std::uint32_t c) {
    HomogeneousCert cert{std::move(subset), c};
    if (result.best.subset.empty() || better(cert, result.best)) result.best = std::move(cert);
  };

  for (std::uint32_t c = 0; c < colors; ++c) {
    Searcher search(col, c);
    auto cand = search.initial();
    for (std::size_t i = 0; i < cand.size(); ++i) {
      std::vector<std::size_t> rest(cand.begin() + static_cast<std::ptrdiff_t>(i), cand.end());
      offer(search.greedy(cand[i], std::move(rest)), c);
    }
  }

  if (binomial(col.n, col.m) <= opts.budget) {
    result.exhaustive = true;
    const std::size_t floor_size = result.best.size();
    for (std::uint32_t c = 0; c < colors; ++c) {
      Searcher search(col, c);
      IndexSet s_set;
      IndexSet best;
      bool done = search.branch(s_set, search.initial(), best, floor_size, result.nodes,
                                opts.budget);
      if (!best.empty()) offer(std::move(best), c);
      if (!done) {
        result.exhaustive = false;
        break;
      }
    }
  }

  // A set with fewer than m elements is vacuously homogeneous; report the
  // first m-subset instead so the certificate always carries a real color.
  if (result.best.size() < col.m && col.n >= col.m) {
    IndexSet first = first_subset(col.m);
    result.best = {first, col.color[colex_rank(first)]};
  }
  result.reached_target = result.best.size() >= target;
  return result;
}

bool verify_homogeneous(const Coloring& col, const HomogeneousCert& cert) {
  if (cert.color >= col.colors || !is_index_set(cert.subset, col.n)) return false;
  for (const auto& beta : all_subsets(cert.subset.size(), col.m)) {
    if (col.color[colex_rank(image(cert.subset, beta))] != cert.color) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

namespace {

std::pair<Rational, Rational> value_range(const SimplexArray& arr, const IndexSet& subset) {
  Rational lo;
  Rational hi;
  bool first = true;
  for (const auto& beta : all_subsets(subset.size(), arr.m())) {
    const Rational& x = arr.values()[colex_rank(image(subset, beta))];
    if (first || x < lo) lo = x;
    if (first || x > hi) hi = x;
    first = false;
  }
  return {lo, hi};
}

}  // namespace

RLimitEstimate rlimit_estimate(const SimplexArray& arr, const Rational& epsilon,
                               const SearchOptions& opts) {
  if (epsilon <= 0) raise(ErrorKind::InvalidArgument, "epsilon must be positive");
  const Coloring col = color_quantize(arr, Rational(epsilon / 2));
  const auto search = find_homogeneous(col, arr.m(), opts);
  RLimitEstimate est;
  est.subset = search.best.subset;
  est.epsilon = epsilon;
  est.exhaustive = search.exhaustive;
  auto [lo, hi] = value_range(arr, est.subset);
  est.value = (lo + hi) / 2;
  est.max_deviation = (hi - lo) / 2;
  return est;
}

bool verify_rlimit(const SimplexArray& arr, const RLimitEstimate& est) {
  if (est.subset.size() < arr.m() || !is_index_set(est.subset, arr.n())) return false;
  if (est.max_deviation > est.epsilon) return false;
  for (const auto& beta : all_subsets(est.subset.size(), arr.m())) {
    const Rational& x = arr.values()[colex_rank(image(est.subset, beta))];
    if (abs(Rational(x - est.value)) > est.max_deviation) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

namespace {

struct NestedEval {
  const SimplexArray& arr;
  const std::vector<IndexSet>& levels;  // outermost first
  std::vector<Rational>& spread;

  Rational eval(std::size_t level, IndexSet& prefix) const {
    Rational lo;
    Rational hi;
    bool first = true;
    for (auto j : levels[level]) {
      prefix.push_back(j);
      Rational x = level + 1 == levels.size() ? arr.at(prefix) : eval(level + 1, prefix);
      prefix.pop_back();
      if (first || x < lo) lo = x;
      if (first || x > hi) hi = x;
      first = false;
    }
    Rational width = hi - lo;
    if (width > spread[level]) spread[level] = width;
    return (lo + hi) / 2;
  }
};

}  // namespace

IteratedLimitReport iterated_limit(const SimplexArray& arr, const IndexSet& subset,
                                   const Rational& tol, std::size_t window,
                                   const SearchOptions& opts) {
  const std::size_t m = arr.m();
  if (window == 0) raise(ErrorKind::InvalidArgument, "stabilization window must be positive");
  if (!is_index_set(subset, arr.n()) || subset.size() < m + window) {
    raise(ErrorKind::InvalidArgument, "iterated_limit needs a subset of [N] with at least m + " +
                                          std::to_string(window) + " elements");
  }
  // Blocks B_1 < ... < B_m of S: the innermost index ranges over the last
  // `window` elements, outer indices over equal shares of the rest.
  std::vector<IndexSet> levels(m);
  levels[m - 1].assign(subset.end() - static_cast<std::ptrdiff_t>(window), subset.end());
  const std::size_t rest = subset.size() - window;
  std::size_t begin = 0;
  for (std::size_t i = 0; i + 1 < m; ++i) {
    const std::size_t outer = m - 1;
    const std::size_t share = rest / outer + (i >= outer - rest % outer ? 1 : 0);
    const std::size_t take = std::min(window, share);
    levels[i].assign(subset.begin() + static_cast<std::ptrdiff_t>(begin + share - take),
                     subset.begin() + static_cast<std::ptrdiff_t>(begin + share));
    begin += share;
  }

  std::vector<Rational> spread(m, Rational(0));
  IndexSet prefix;
  IteratedLimitReport report;
  report.value = NestedEval{arr, levels, spread}.eval(0, prefix);
  for (std::size_t i = m; i > 0; --i) {
    report.levels.push_back({i, levels[i - 1], spread[i - 1]});
  }
  report.tolerance = tol;
  report.rlimit_value = rlimit_estimate(arr.restrict(subset), tol, opts).value;
  report.agrees = abs(Rational(report.value - report.rlimit_value)) <= tol;
  return report;
}

DecomposeReport decompose_verify(const SimplexArray& arr, const IndexSet& subset,
                                 const Rational& epsilon, std::size_t window,
                                 const SearchOptions& opts) {
  if (arr.m() < 2) raise(ErrorKind::InvalidArgument, "decompose_verify needs an array of order >= 2");
  if (!is_index_set(subset, arr.n())) {
    raise(ErrorKind::InvalidArgument, "subset is not a sorted subset of [N]");
  }
  const std::size_t inner = arr.m() - 1;
  const std::size_t half = subset.size() / 2;
  if (window == 0 || half < window || subset.size() - half < inner) {
    raise(ErrorKind::InvalidArgument, "slices too small: |S| = " + std::to_string(subset.size()) +
                                          " for window " + std::to_string(window));
  }
  DecomposeReport report;
  report.epsilon = epsilon;
  for (std::size_t i = 0; i < half; ++i) {
    const std::size_t k = subset[i];
    IndexSet domain(subset.begin() + static_cast<std::ptrdiff_t>(i + 1), subset.end());
    std::vector<Rational> values;
    IndexSet alpha(arr.m());
    for (const auto& beta : all_subsets(domain.size(), inner)) {
      alpha[0] = k;
      for (std::size_t t = 0; t < inner; ++t) alpha[t + 1] = domain[beta[t] - 1];
      values.push_back(arr.values()[colex_rank(alpha)]);
    }
    SimplexArray slice(inner, domain.size(), std::move(values));
    report.slices.push_back({k, rlimit_estimate(slice, epsilon, opts).value, domain.size()});
  }
  report.global_value = rlimit_estimate(arr.restrict(subset), epsilon, opts).value;
  const Rational bound = 2 * epsilon;
  report.pass = std::all_of(report.slices.end() - static_cast<std::ptrdiff_t>(window),
                            report.slices.end(), [&](const SliceLimit& s) {
                              return abs(Rational(s.value - report.global_value)) <= bound;
                            });
  return report;
}

}  // namespace mixlab
