#pragma once

// Module instances: a graded space, optionally cut down to a theta-eigenspace,
// with chosen bases per level and coordinate extraction.

#include <map>
#include <memory>
#include <mutex>

#include "voa/lattice.hpp"
#include "voa/virasoro.hpp"

namespace voa {

class ModuleInstance {
 public:
  /// Whole space, levels as in the space.
  ModuleInstance(std::string name, std::shared_ptr<const Space> space);
  /// theta-eigenspace of a self-dual free-boson space; level 0 is the lowest
  /// level where the eigenspace is nonzero.
  ModuleInstance(std::string name, std::shared_ptr<const FreeBosonSpace> space, int sign);

  const std::string& name() const { return name_; }
  const Space& space() const { return *space_; }
  std::shared_ptr<const Space> space_ptr() const { return space_; }
  int sign() const { return sign_; }
  /// Space level of module level 0.
  int shift() const { return shift_; }

  const std::vector<State>& level_basis(int level) const;
  std::size_t dimension(int level) const { return level_basis(level).size(); }
  /// Replaces the basis of one level (must span the same space).
  void set_level_basis(int level, std::vector<State> basis);
  /// Coordinates of v in the level basis; InvalidSpec if v is outside.
  std::vector<Scalar> coordinates(int level, const State& v) const;

 private:
  struct Level {
    std::vector<State> basis;
    SubspaceBasis<Key> span{true};
  };
  const Level& level(int level) const;

  std::string name_;
  std::shared_ptr<const Space> space_;
  std::shared_ptr<const FreeBosonSpace> boson_;
  int sign_ = 0;
  int shift_ = 0;
  mutable std::mutex mu_;
  mutable std::map<int, std::unique_ptr<Level>> levels_;
};

/// Untwisted irreducible V_L^+ modules: V_L^{+/-}, V_{L+lambda}^{+/-} for
/// 2 lambda in L, and V_{L+lambda} for each pair {lambda, -lambda} otherwise.
std::vector<std::shared_ptr<ModuleInstance>> untwisted_plus_modules(const FreeBosonVoa& vl);

/// Irreducible V_L-modules V_{L+lambda}, one per coset.
std::vector<std::shared_ptr<ModuleInstance>> lattice_modules(const FreeBosonVoa& vl);

}  // namespace voa
