#pragma once

#include "burnside/state.hpp"

#include <cstdint>
#include <limits>
#include <random>
#include <vector>

namespace burnside {

// mt19937_64 seeded through std::seed_seq from (seed, stream). Both engine
// and seed_seq are fully specified by the standard, so a given
// (seed, stream, draw index) yields the same value on every platform.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream) : seed_(seed), stream_(stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    eng_.seed(seq);
  }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }
  std::uint64_t draws() const { return draws_; }

  std::uint64_t next() {
    ++draws_;
    return eng_();
  }

  // Uniform on {0, ..., bound-1} by rejection; no modulo bias.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t r;
    do r = next();
    while (r >= limit);
    return r % bound;
  }

  // Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t seed_, stream_;
  std::uint64_t draws_ = 0;
  std::mt19937_64 eng_;
};

template <class T>
void shuffle(std::vector<T>& v, RngStream& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng.below(i)]);
}

// One two-stage move: a uniform element of the stabilizer (independent
// uniform permutations of each value class), then a uniform fixed point of it
// (each cycle relabeled with a uniform value).
inline State burnside_step(const State& x, RngStream& rng) {
  const auto n = static_cast<std::size_t>(x.n);
  std::vector<int> sigma(n);
  std::vector<std::vector<int>> classes(static_cast<std::size_t>(x.k));
  for (int i = 0; i < x.n; ++i) classes[static_cast<std::size_t>(x[i])].push_back(i);
  for (auto& cls : classes) {
    std::vector<int> img = cls;
    shuffle(img, rng);
    for (std::size_t t = 0; t < cls.size(); ++t) sigma[static_cast<std::size_t>(cls[t])] = img[t];
  }
  State y = x;
  std::vector<char> seen(n, 0);
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    const int label = static_cast<int>(rng.below(static_cast<std::uint64_t>(x.k)));
    for (std::size_t c = start; !seen[c]; c = static_cast<std::size_t>(sigma[c])) {
      seen[c] = 1;
      y.digits[c] = label;
    }
  }
  return y;
}

inline std::vector<State> run_chain(const State& x0, std::size_t steps, RngStream& rng) {
  std::vector<State> path{x0};
  path.reserve(steps + 1);
  for (std::size_t s = 0; s < steps; ++s) path.push_back(burnside_step(path.back(), rng));
  return path;
}

// Uniform orbit (weak composition of n into k parts, stars and bars), then a
// uniform arrangement within it.
inline State sample_stationary(int n, int k, RngStream& rng) {
  const auto slots = static_cast<std::size_t>(n + k - 1);
  std::vector<int> pos(slots);
  for (std::size_t i = 0; i < slots; ++i) pos[i] = static_cast<int>(i);
  // partial Fisher-Yates: first k-1 entries are a uniform (k-1)-subset
  for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(k); ++i)
    std::swap(pos[i], pos[i + rng.below(slots - i)]);
  std::vector<char> bar(slots, 0);
  for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(k); ++i) bar[static_cast<std::size_t>(pos[i])] = 1;
  std::vector<int> digits;
  digits.reserve(static_cast<std::size_t>(n));
  int value = 0;
  for (std::size_t i = 0; i < slots; ++i) {
    if (bar[i])
      ++value;
    else
      digits.push_back(value);
  }
  shuffle(digits, rng);
  return State(k, std::move(digits));
}

}  // namespace burnside
