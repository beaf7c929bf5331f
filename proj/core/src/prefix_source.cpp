#include "wordentropy/prefix_source.hpp"

#include <charconv>
#include <limits>

#include "wordentropy/error.hpp"
#include "wordentropy/gaplang.hpp"

namespace wordentropy {

namespace {

constexpr std::size_t kSaturated = std::numeric_limits<std::size_t>::max();

std::size_t saturating_add(std::size_t a, std::size_t b) {
  return a > kSaturated - b ? kSaturated : a + b;
}

std::size_t saturating_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

unsigned parse_unsigned(std::string_view text, std::string_view what) {
  unsigned value = 0;
  auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw Error(Errc::invalid_argument, "bad " + std::string(what) + " '" +
                                            std::string(text) + "'");
  }
  return value;
}

std::vector<unsigned> parse_list(std::string_view text) {
  std::vector<unsigned> out;
  while (true) {
    auto comma = text.find(',');
    out.push_back(parse_unsigned(text.substr(0, comma), "coefficient"));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

PrefixSource::PrefixSource(Family family) : family_(std::move(family)) {
  std::visit(
      overloaded{
          [](const PeriodicFamily& f) {
            if (f.pattern.empty()) {
              throw Error(Errc::invalid_argument,
                          "periodic pattern must be nonempty");
            }
          },
          [](const ChampernowneFamily& f) { Alphabet check(f.q); },
          [](const SturmianFamily& f) {
            if (f.cf.empty()) {
              throw Error(Errc::invalid_argument, "sturmian needs coefficients");
            }
            for (unsigned a : f.cf) {
              if (a < 1) {
                throw Error(Errc::invalid_argument,
                            "sturmian coefficients must be >= 1");
              }
            }
          },
          [](const GapWordFamily& f) {
            if (f.k < 1) throw Error(Errc::invalid_argument, "gapword needs k >= 1");
          }},
      family_);
}

PrefixSource PrefixSource::parse(std::string_view spec) {
  auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw Error(Errc::invalid_argument,
                "family spec must look like name:params, got '" +
                    std::string(spec) + "'");
  }
  std::string_view name = spec.substr(0, colon);
  std::string_view params = spec.substr(colon + 1);
  if (name == "periodic") {
    return PrefixSource(PeriodicFamily{Word::from_string(params)});
  }
  if (name == "champernowne") {
    return PrefixSource(ChampernowneFamily{parse_unsigned(params, "q")});
  }
  if (name == "sturmian") {
    return PrefixSource(SturmianFamily{parse_list(params)});
  }
  if (name == "gapword") {
    return PrefixSource(GapWordFamily{parse_unsigned(params, "k")});
  }
  throw Error(Errc::invalid_argument,
              "unknown family '" + std::string(name) + "'");
}

Word PrefixSource::generate(std::size_t n) const {
  return std::visit(
      overloaded{
          [n](const PeriodicFamily& f) { return periodic_word(f.pattern, n); },
          [n](const ChampernowneFamily& f) {
            return champernowne_word(f.q, n);
          },
          [n](const SturmianFamily& f) { return sturmian_word(f.cf, n); },
          [n](const GapWordFamily& f) { return gap_word(f.k, n); }},
      family_);
}

Letter PrefixSource::at(std::size_t i) const { return generate(i + 1).back(); }

std::size_t PrefixSource::witness_length(std::size_t n) const {
  if (n == 0) return 0;
  return std::visit(
      overloaded{
          [n](const PeriodicFamily& f) { return f.pattern.size() + n - 1; },
          [n](const ChampernowneFamily& f) {
            // end of the level-n block
            std::size_t total = 0;
            std::size_t count = 1;
            for (std::size_t m = 1; m <= n; ++m) {
              count = saturating_mul(count, f.q);
              total = saturating_add(total, saturating_mul(count, m));
            }
            return total;
          },
          [n](const SturmianFamily& f) {
            // Standard-word lengths l_{-1} = l_0 = 1, l_{j+1} = a l_j + l_{j-1}.
            // With l_j <= n < l_{j+1}, every window of length
            // l_{j+1} + l_j + n - 1 contains all factors of length n.
            std::size_t prev = 1;
            std::size_t cur = 1;
            std::size_t j = 0;
            while (true) {
              std::size_t a = f.cf[j % f.cf.size()];
              std::size_t next = saturating_add(saturating_mul(cur, a), prev);
              ++j;
              if (next > n || next == kSaturated) {
                return saturating_add(saturating_add(next, cur), n - 1);
              }
              prev = cur;
              cur = next;
            }
          },
          [n](const GapWordFamily& f) {
            // end of the level-n block: sum over m <= n of q_k(m) (m + k)
            std::vector<std::size_t> q(n + 1);
            std::size_t total = 0;
            for (std::size_t m = 0; m <= n; ++m) {
              if (m <= f.k + 1) {
                q[m] = m + 1;
              } else {
                q[m] = saturating_add(q[m - 1], q[m - f.k - 1]);
              }
              if (m >= 1) {
                total = saturating_add(total, saturating_mul(q[m], m + f.k));
              }
            }
            return total;
          }},
      family_);
}

std::string PrefixSource::tag() const {
  return std::visit(overloaded{[](const PeriodicFamily&) { return "periodic"; },
                               [](const ChampernowneFamily&) {
                                 return "champernowne";
                               },
                               [](const SturmianFamily&) { return "sturmian"; },
                               [](const GapWordFamily&) { return "gapword"; }},
                    family_);
}

std::string PrefixSource::spec() const {
  return std::visit(
      overloaded{
          [](const PeriodicFamily& f) {
            return "periodic:" + f.pattern.to_string();
          },
          [](const ChampernowneFamily& f) {
            return "champernowne:" + std::to_string(f.q);
          },
          [](const SturmianFamily& f) {
            std::string out = "sturmian:";
            for (std::size_t i = 0; i < f.cf.size(); ++i) {
              if (i) out += ',';
              out += std::to_string(f.cf[i]);
            }
            return out;
          },
          [](const GapWordFamily& f) { return "gapword:" + std::to_string(f.k); }},
      family_);
}

}  // namespace wordentropy
