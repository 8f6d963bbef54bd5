#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "voa/linear.hpp"

namespace voa {

/// Basis label of a graded space. `level` is the grading degree inside the
/// space (equal to the weight on a VOA), `lattice` holds the lattice point as
/// integer numerators over the lattice denominator (empty when there is no
/// lattice part), and `modes` is the monomial: a non-increasing partition for
/// Virasoro spaces, or packed oscillator codes (mode * 16 + direction) sorted
/// in decreasing order for free-boson spaces.
struct Key {
  int level = 0;
  std::vector<int> lattice;
  std::vector<int> modes;

  auto operator<=>(const Key&) const = default;
  bool operator==(const Key&) const = default;
};

struct KeyHash {
  std::size_t operator()(const Key& k) const noexcept {
    std::size_t h = std::hash<int>{}(k.level);
    auto mix = [&h](int v) { h ^= std::hash<int>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
    for (int v : k.lattice) mix(v);
    mix(-7777);
    for (int v : k.modes) mix(v);
    return h;
  }
};

using State = LinearCombination<Key>;

constexpr int kOscStride = 16;
inline int osc_code(int mode, int dir) { return mode * kOscStride + dir; }
inline int osc_mode(int code) { return code / kOscStride; }
inline int osc_dir(int code) { return code % kOscStride; }

/// Homogeneous components of a state by level.
std::map<int, State> split_levels(const State& s);

}  // namespace voa
