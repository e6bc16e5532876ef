#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace burnside {

// digits[i] is coordinate i+1. The state index is little-endian base k, so
// coordinate 1 is the least significant digit. Strings list coordinate 1 first.
struct State {
  int n = 0;
  int k = 2;
  std::vector<int> digits;

  State() = default;
  State(int n_, int k_) : n(n_), k(k_), digits(static_cast<std::size_t>(n_), 0) { validate_shape(); }
  State(int k_, std::vector<int> d) : n(static_cast<int>(d.size())), k(k_), digits(std::move(d)) {
    validate_shape();
    for (int v : digits)
      if (v < 0 || v >= k) throw std::invalid_argument("State: digit out of range");
  }

  static State from_index(std::uint64_t idx, int n, int k) {
    State s(n, k);
    for (int i = 0; i < n; ++i) {
      s.digits[i] = static_cast<int>(idx % static_cast<std::uint64_t>(k));
      idx /= static_cast<std::uint64_t>(k);
    }
    if (idx != 0) throw std::out_of_range("State::from_index: index too large");
    return s;
  }

  static State parse(std::string_view text, int k) {
    std::vector<int> d;
    for (char c : text) {
      if (c < '0' || c > '9') throw std::invalid_argument("State::parse: non-digit");
      d.push_back(c - '0');
    }
    return State(k, std::move(d));
  }

  std::uint64_t index() const {
    std::uint64_t idx = 0;
    for (int i = n - 1; i >= 0; --i) idx = idx * static_cast<std::uint64_t>(k) + static_cast<std::uint64_t>(digits[i]);
    return idx;
  }

  std::string str() const {
    std::string s;
    for (int v : digits) s.push_back(static_cast<char>('0' + v));
    return s;
  }

  int operator[](int i) const { return digits[static_cast<std::size_t>(i)]; }

  std::vector<int> counts() const {
    std::vector<int> c(static_cast<std::size_t>(k), 0);
    for (int v : digits) ++c[static_cast<std::size_t>(v)];
    return c;
  }

  int ones() const {
    int c = 0;
    for (int v : digits) c += (v == 1);
    return c;
  }

  friend bool operator==(const State&, const State&) = default;

 private:
  void validate_shape() const {
    if (n < 0) throw std::invalid_argument("State: negative length");
    if (k < 2 || k > 10) throw std::invalid_argument("State: alphabet size must be in [2, 10]");
  }
};

// k^n, saturating at UINT64_MAX so cap checks stay meaningful for large n.
inline std::uint64_t state_count(int n, int k) {
  constexpr std::uint64_t top = std::numeric_limits<std::uint64_t>::max();
  const auto kk = static_cast<std::uint64_t>(k);
  std::uint64_t c = 1;
  for (int i = 0; i < n; ++i) {
    if (c > top / kk) return top;
    c *= kk;
  }
  return c;
}

inline State complement(const State& x) {
  if (x.k != 2) throw std::invalid_argument("complement: k must be 2");
  State y = x;
  for (auto& v : y.digits) v = 1 - v;
  return y;
}

// Coordinate permutation: (sigma x)_{sigma(i)} = x_i, sigma given 0-based.
inline State permute(const State& x, const std::vector<int>& sigma) {
  State y = x;
  for (int i = 0; i < x.n; ++i) y.digits[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])] = x.digits[static_cast<std::size_t>(i)];
  return y;
}

// Single one at coordinate j (1-based).
inline State unit_state(int n, int j) {
  State x(n, 2);
  x.digits[static_cast<std::size_t>(j - 1)] = 1;
  return x;
}

// Orbit representative for k = 2: the last i coordinates are ones.
inline State orbit_representative(int n, int i) {
  State x(n, 2);
  for (int c = n - i; c < n; ++c) x.digits[static_cast<std::size_t>(c)] = 1;
  return x;
}

}  // namespace burnside
