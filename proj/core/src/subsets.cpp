#include "mixlab/subsets.hpp"

#include <algorithm>
#include <limits>

#include "mixlab/error.hpp"

namespace mixlab {

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  __extension__ using u128 = unsigned __int128;
  u128 acc = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > std::numeric_limits<std::uint64_t>::max()) {
      raise(ErrorKind::Guard, "binomial C(" + std::to_string(n) + "," + std::to_string(k) +
                                  ") overflows 64 bits");
    }
  }
  return static_cast<std::uint64_t>(acc);
}

std::uint64_t colex_rank(const IndexSet& alpha) {
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < alpha.size(); ++i) r += binomial(alpha[i] - 1, i + 1);
  return r;
}

IndexSet colex_unrank(std::uint64_t rank, std::size_t m) {
  IndexSet alpha(m);
  for (std::size_t i = m; i > 0; --i) {
    // largest c with C(c, i) <= rank
    std::size_t c = i - 1;
    while (binomial(c + 1, i) <= rank) ++c;
    rank -= binomial(c, i);
    alpha[i - 1] = c + 1;
  }
  return alpha;
}

IndexSet first_subset(std::size_t m) {
  IndexSet alpha(m);
  for (std::size_t i = 0; i < m; ++i) alpha[i] = i + 1;
  return alpha;
}

bool next_colex(IndexSet& alpha, std::size_t n) {
  const std::size_t m = alpha.size();
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t limit = (i + 1 < m) ? alpha[i + 1] : n + 1;
    if (alpha[i] + 1 < limit) {
      ++alpha[i];
      for (std::size_t j = 0; j < i; ++j) alpha[j] = j + 1;
      return true;
    }
  }
  return false;
}

std::vector<IndexSet> all_subsets(std::size_t n, std::size_t m) {
  std::vector<IndexSet> out;
  if (m > n) return out;
  out.reserve(binomial(n, m));
  IndexSet alpha = first_subset(m);
  do {
    out.push_back(alpha);
  } while (next_colex(alpha, n));
  return out;
}

std::vector<IndexSet> all_nonempty_subsets(std::size_t n) {
  if (n > 20) raise(ErrorKind::Guard, "2^" + std::to_string(n) + " subsets exceeds the 2^20 guard");
  std::vector<IndexSet> out;
  out.reserve((std::size_t{1} << n) - 1);
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    IndexSet alpha;
    for (std::size_t k = 0; k < n; ++k) {
      if (mask & (std::uint32_t{1} << k)) alpha.push_back(k + 1);
    }
    out.push_back(std::move(alpha));
  }
  return out;
}

bool is_index_set(const IndexSet& alpha, std::size_t n) {
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] == 0 || alpha[i] > n) return false;
    if (i && alpha[i] <= alpha[i - 1]) return false;
  }
  return true;
}

std::string to_string(const IndexSet& alpha) {
  std::string s = "{";
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(alpha[i]);
  }
  return s + "}";
}

}  // namespace mixlab
