#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace mixlab {

/// Sorted, 1-based index set alpha = {k_1 < ... < k_m} ⊆ [N].
using IndexSet = std::vector<std::size_t>;

/// C(n, k); throws Guard on overflow of 64 bits.
std::uint64_t binomial(std::size_t n, std::size_t k);

/// Position of alpha in colex order of [N]^{(m)}: sum_i C(k_i - 1, i).
std::uint64_t colex_rank(const IndexSet& alpha);
IndexSet colex_unrank(std::uint64_t rank, std::size_t m);

/// First m-subset {1..m} of [n] in colex order.
IndexSet first_subset(std::size_t m);
/// Advances to the colex successor inside [n]; false when alpha was last.
bool next_colex(IndexSet& alpha, std::size_t n);

/// All m-subsets of [n] in colex order.
std::vector<IndexSet> all_subsets(std::size_t n, std::size_t m);

/// Nonempty subsets of [n] in colex order (ascending bitmask); n <= 20.
std::vector<IndexSet> all_nonempty_subsets(std::size_t n);

bool is_index_set(const IndexSet& alpha, std::size_t n);

std::string to_string(const IndexSet& alpha);

}  // namespace mixlab
