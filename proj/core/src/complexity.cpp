#include "wordentropy/complexity.hpp"

#include <algorithm>
#include <bitset>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "wordentropy/error.hpp"

namespace wordentropy {

namespace {

constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();

// Class ids of the windows of one length. Windows of length n starting at
// i = 0..|w|-n get ids in [0, count) with equal ids iff equal windows.
struct WindowClasses {
  std::vector<std::uint32_t> ids;
  std::size_t count = 1;
};

// Extends every window of length n to length n + 1 by its next letter. The
// pair (class, letter) is deduplicated through a direct-address table.
void extend_windows(const Word& w, std::size_t n, WindowClasses& classes,
                    std::vector<std::uint32_t>& table) {
  const std::size_t q = w.alphabet().size();
  const std::size_t windows = w.size() - n;  // windows of length n + 1
  table.assign(classes.count * q, kUnset);
  std::uint32_t next_id = 0;
  for (std::size_t i = 0; i < windows; ++i) {
    std::size_t key = classes.ids[i] * q + w[i + n];
    if (table[key] == kUnset) table[key] = next_id++;
    classes.ids[i] = table[key];
  }
  classes.ids.resize(windows);
  classes.count = next_id;
}

WindowClasses window_classes(const Word& w, std::size_t n) {
  WindowClasses classes;
  classes.ids.assign(w.size() + 1, 0);
  std::vector<std::uint32_t> table;
  for (std::size_t len = 0; len < n; ++len) extend_windows(w, len, classes, table);
  return classes;
}

std::vector<std::uint64_t> count_by_window_scan(const Word& w,
                                                std::size_t horizon) {
  std::vector<std::uint64_t> values(horizon + 1);
  values[0] = 1;
  WindowClasses classes;
  classes.ids.assign(w.size() + 1, 0);
  std::vector<std::uint32_t> table;
  for (std::size_t n = 0; n < horizon; ++n) {
    extend_windows(w, n, classes, table);
    values[n + 1] = classes.count;
  }
  return values;
}

// Suffix automaton over the whole word. Every state v stands for the
// substrings with lengths in (len(link(v)), len(v)], each occurring once
// among the distinct factors, so a difference array over lengths gives p(n).
std::vector<std::uint64_t> count_by_suffix_automaton(const Word& w,
                                                     std::size_t horizon) {
  const std::size_t q = w.alphabet().size();
  const std::size_t max_states = 2 * w.size() + 1;
  std::vector<std::int32_t> next(max_states * q, -1);
  std::vector<std::int32_t> link(max_states, -1);
  std::vector<std::size_t> len(max_states, 0);
  std::size_t states = 1;
  std::int32_t last = 0;

  for (Letter c : w) {
    auto cur = static_cast<std::int32_t>(states++);
    len[cur] = len[last] + 1;
    std::int32_t p = last;
    while (p != -1 && next[p * q + c] == -1) {
      next[p * q + c] = cur;
      p = link[p];
    }
    if (p == -1) {
      link[cur] = 0;
    } else {
      std::int32_t target = next[p * q + c];
      if (len[p] + 1 == len[target]) {
        link[cur] = target;
      } else {
        auto clone = static_cast<std::int32_t>(states++);
        len[clone] = len[p] + 1;
        std::copy_n(next.begin() + target * q, q, next.begin() + clone * q);
        link[clone] = link[target];
        while (p != -1 && next[p * q + c] == target) {
          next[p * q + c] = clone;
          p = link[p];
        }
        link[target] = clone;
        link[cur] = clone;
      }
    }
    last = cur;
  }

  std::vector<std::int64_t> delta(w.size() + 2, 0);
  for (std::size_t v = 1; v < states; ++v) {
    delta[len[link[v]] + 1] += 1;
    delta[len[v] + 1] -= 1;
  }
  std::vector<std::uint64_t> values(horizon + 1);
  values[0] = 1;
  std::int64_t running = 0;
  for (std::size_t n = 1; n <= horizon; ++n) {
    running += delta[n];
    values[n] = static_cast<std::uint64_t>(running);
  }
  return values;
}

}  // namespace

ComplexityProfile::ComplexityProfile(std::size_t source_length,
                                     std::vector<std::uint64_t> values)
    : source_length_(source_length), values_(std::move(values)) {
  if (values_.empty()) {
    throw Error(Errc::invalid_profile, "a profile needs at least p(0)");
  }
}

ComplexityProfile complexity_profile(const Word& w, std::size_t horizon,
                                     CountingBackend backend) {
  if (horizon > w.size()) {
    throw Error(Errc::out_of_range,
                fmt::format("horizon {} exceeds word length {}", horizon,
                            w.size()));
  }
  if (w.size() >= kUnset) {
    throw Error(Errc::out_of_range, "word too long for 32-bit window ids");
  }
  switch (backend) {
    case CountingBackend::window_scan:
      return ComplexityProfile(w.size(), count_by_window_scan(w, horizon));
    case CountingBackend::suffix_automaton:
      return ComplexityProfile(w.size(), count_by_suffix_automaton(w, horizon));
  }
  throw Error(Errc::invalid_argument, "unknown counting backend");
}

std::vector<Word> special_factors(const Word& w, std::size_t n) {
  if (n >= w.size()) {
    throw Error(Errc::out_of_range,
                fmt::format("special factors of length {} need a word longer "
                            "than {}",
                            n, w.size()));
  }
  WindowClasses classes = window_classes(w, n);
  std::vector<std::bitset<256>> extensions(classes.count);
  std::vector<std::size_t> first_position(classes.count,
                                          std::numeric_limits<std::size_t>::max());
  // windows that have a following letter: i + n < |w|
  for (std::size_t i = 0; i + n < w.size(); ++i) {
    std::uint32_t id = classes.ids[i];
    extensions[id].set(w[i + n]);
    first_position[id] = std::min(first_position[id], i);
  }
  std::vector<Word> out;
  for (std::size_t id = 0; id < classes.count; ++id) {
    if (extensions[id].count() >= 2) out.push_back(w.substr(first_position[id], n));
  }
  std::sort(out.begin(), out.end());
  return out;
}

EntropyEstimate entropy_upper(const ComplexityProfile& profile) {
  if (profile.horizon() < 1) {
    throw Error(Errc::invalid_profile, "entropy estimate needs horizon >= 1");
  }
  EntropyEstimate estimate;
  estimate.per_n.reserve(profile.horizon());
  estimate.best_upper = std::numeric_limits<double>::infinity();
  for (std::size_t n = 1; n <= profile.horizon(); ++n) {
    if (profile[n] == 0) {
      throw Error(Errc::invalid_profile, fmt::format("p({}) = 0", n));
    }
    double value = std::log(static_cast<double>(profile[n])) / static_cast<double>(n);
    estimate.per_n.push_back(value);
    if (value < estimate.best_upper) {
      estimate.best_upper = value;
      estimate.best_n = n;
    }
  }
  return estimate;
}

Admissibility is_admissible(const ComplexityProfile& profile,
                            const BoundFunction& f) {
  for (std::size_t n = 0; n <= profile.horizon(); ++n) {
    if (static_cast<double>(profile[n]) > f(n)) return {false, n};
  }
  return {};
}

void write_profile_csv(std::ostream& out, const ComplexityProfile& profile) {
  out << "n,p_n,log_p_n_over_n\n";
  for (std::size_t n = 0; n <= profile.horizon(); ++n) {
    out << n << ',' << profile[n] << ',';
    if (n > 0 && profile[n] > 0) {
      out << fmt::format("{:.12g}", std::log(static_cast<double>(profile[n])) /
                                        static_cast<double>(n));
    }
    out << '\n';
  }
}

}  // namespace wordentropy
