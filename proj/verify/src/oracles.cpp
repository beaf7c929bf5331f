#include "wordentropy/verify/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

namespace wordentropy::verify {

std::uint64_t brute_force_gap_count(unsigned k, unsigned n) {
  if (n > 30) throw std::invalid_argument("brute force limited to n <= 30");
  std::uint64_t count = 0;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    bool ok = true;
    for (unsigned shift = 1; shift <= k && ok; ++shift) {
      ok = (mask & (mask >> shift)) == 0;
    }
    count += ok ? 1 : 0;
  }
  return count;
}

std::vector<BigInt> fibonacci_numbers(std::size_t count) {
  std::vector<BigInt> out;
  BigInt previous = 0;
  BigInt current = 1;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(current);
    BigInt next = previous + current;
    previous = current;
    current = next;
  }
  return out;
}

std::uint64_t set_factor_count(const Word& w, std::size_t n) {
  if (n > w.size()) throw std::out_of_range("factor length exceeds word");
  const std::string text = w.to_string();
  std::set<std::string> factors;
  for (std::size_t i = 0; i + n <= text.size(); ++i) {
    factors.insert(text.substr(i, n));
  }
  return factors.size();
}

double dp_growth_ratio(std::span<const std::uint64_t> gaps, std::uint64_t k,
                       std::size_t n) {
  if (n < 1) throw std::invalid_argument("dp needs n >= 1");
  const std::size_t cutoff = 2 * k;
  std::vector<double> z(n + 1, 0.0);
  z[0] = 1.0;
  for (std::size_t i = 1; i <= n; ++i) {
    double total = 0.0;
    for (std::uint64_t r : gaps) {
      if (r <= i) total += z[i - r];
    }
    for (std::size_t j = cutoff; j <= i; ++j) total += z[i - j];
    z[i] = total;
    if (total > 1e200) {
      for (std::size_t m = 0; m <= i; ++m) z[m] *= 1e-200;
    }
  }
  if (z[n - 1] == 0.0) return std::numeric_limits<double>::quiet_NaN();
  return z[n] / z[n - 1];
}

std::vector<BigInt> gap_counts_by_states(unsigned k, std::size_t horizon) {
  // State j counts zeros since the last 1, capped at k; a 1 needs state k.
  // Factors may start mid-gap, so every walk starts in the capped state.
  std::vector<BigInt> out;
  out.push_back(1);
  std::vector<BigInt> states(k + 1, 0);
  states[k] = 1;
  for (std::size_t n = 1; n <= horizon; ++n) {
    std::vector<BigInt> next(k + 1, 0);
    for (unsigned j = 0; j <= k; ++j) {
      if (states[j] == 0) continue;
      unsigned after_zero = j == k ? k : j + 1;
      next[after_zero] += states[j];
      if (j == k) next[0] += states[j];
    }
    states = std::move(next);
    BigInt total = 0;
    for (const BigInt& v : states) total += v;
    out.push_back(total);
  }
  return out;
}

double gamma_by_scan(unsigned k) {
  std::vector<BigInt> counts = gap_counts_by_states(k, 2 * (k + 1));
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t n = k + 1; n <= 2 * (k + 1); ++n) {
    best = std::max(best, std::log(counts[n].convert_to<double>()) /
                              static_cast<double>(n));
  }
  return best;
}

namespace {

bool splits(const std::string& w, std::size_t skip, const std::string& a,
            const std::string& block_b) {
  std::size_t pos = skip;
  while (pos < w.size()) {
    const std::string* block = nullptr;
    for (const std::string* candidate : {&a, &block_b}) {
      std::size_t len = std::min(candidate->size(), w.size() - pos);
      if (w.compare(pos, len, *candidate, 0, len) == 0) {
        block = candidate;
        break;
      }
    }
    if (block == nullptr) return false;
    pos += block->size();
  }
  return true;
}

void all_binary(std::size_t max_len, std::vector<std::string>& out) {
  for (std::size_t len = 1; len <= max_len; ++len) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << len); ++mask) {
      std::string s(len, '0');
      for (std::size_t i = 0; i < len; ++i) {
        if ((mask >> (len - 1 - i)) & 1U) s[i] = '1';
      }
      out.push_back(s);
    }
  }
}

}  // namespace

std::vector<BlockTriple> exhaustive_block_search(const std::string& w,
                                                 unsigned k,
                                                 std::size_t max_len,
                                                 unsigned max_s) {
  std::vector<std::string> words;
  all_binary(max_len, words);
  std::vector<BlockTriple> found;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const std::string& a : words) {
    for (const std::string& b : words) {
      if (a[0] == b[0] || a.size() < b.size()) continue;
      for (unsigned s = 1; s <= max_s; ++s) {
        BlockTriple t{a, b, s, 0};
        if (t.measure() <= k || t.measure() > best) continue;
        std::string block_b = b;
        for (unsigned i = 0; i < s; ++i) block_b += a;
        const std::size_t max_skip = a.size() + block_b.size();
        for (std::size_t skip = 0; skip < max_skip && skip < w.size(); ++skip) {
          if (!splits(w, skip, a, block_b)) continue;
          t.skip = skip;
          if (t.measure() < best) {
            best = t.measure();
            found.clear();
          }
          found.push_back(t);
          break;
        }
      }
    }
  }
  return found;
}

}  // namespace wordentropy::verify
