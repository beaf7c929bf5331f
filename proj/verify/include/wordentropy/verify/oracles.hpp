#pragma once

// Slow, independent reference implementations. Nothing here shares code with
// the algorithms it is used to check.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wordentropy/bigint.hpp"
#include "wordentropy/word.hpp"

namespace wordentropy::verify {

/// Number of binary words of length n (n <= 30) whose 1s are pairwise
/// separated by at least k zeros, by testing every bitmask.
std::uint64_t brute_force_gap_count(unsigned k, unsigned n);

/// F_1 .. F_count with F_1 = F_2 = 1; element i holds F_{i+1}.
std::vector<BigInt> fibonacci_numbers(std::size_t count);

/// Distinct length-n factors, collected in a std::set of strings.
std::uint64_t set_factor_count(const Word& w, std::size_t n);

/// Growth ratio z_n / z_{n-1} of z_0 = 1,
///   z_n = sum_j z_{n - r_j} + sum_{j = 2k}^{n} z_{n - j},
/// with terms of negative index dropped; values are rescaled as they grow.
double dp_growth_ratio(std::span<const std::uint64_t> gaps, std::uint64_t k,
                       std::size_t n);

/// log q_k(n) / n maximized over n in [k+1, 2(k+1)], using the state-walk
/// counts below.
double gamma_by_scan(unsigned k);

/// Counts of the gap language by a state walk over "zeros since last 1".
std::vector<BigInt> gap_counts_by_states(unsigned k, std::size_t horizon);

struct BlockTriple {
  std::string a;
  std::string b;
  unsigned s = 1;
  std::size_t skip = 0;
  std::size_t measure() const { return (s + 1) * a.size() + b.size(); }
};

/// Every (a, b, s) with |a|, |b| <= max_len, s <= max_s, distinct first
/// letters, |a| >= |b| and measure > k such that some w[skip..] with
/// skip < |a| + |b| + s|a| splits into blocks a and b a^s (allowing a
/// truncated final block). Only triples of least measure are returned.
std::vector<BlockTriple> exhaustive_block_search(const std::string& w,
                                                 unsigned k,
                                                 std::size_t max_len,
                                                 unsigned max_s);

}  // namespace wordentropy::verify
