#pragma once

// Generic graded vertex operator algebra interface and the mode engine.
// Convention: Y(u, z) = sum_p u_p z^{-p-1}, so u_p maps level l to level
// l + wt u - p - 1.

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "voa/key.hpp"

namespace voa {

struct ModeRequestKey {
  Key u;
  std::int64_t p;
  Key w;
  bool operator==(const ModeRequestKey&) const = default;
};

struct ModeRequestHash {
  std::size_t operator()(const ModeRequestKey& r) const noexcept {
    KeyHash kh;
    std::size_t h = kh(r.u);
    h ^= std::hash<std::int64_t>{}(r.p) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= kh(r.w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

/// Memo of u_p w on basis keys. Lookups happen under the lock; computation
/// happens outside it, so concurrent callers may compute the same entry, but
/// both produce the same exact value.
class ModeMemo {
 public:
  std::optional<State> find(const ModeRequestKey& k) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = table_.find(k);
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }
  void store(const ModeRequestKey& k, const State& s) {
    std::lock_guard<std::mutex> lock(mu_);
    table_.emplace(k, s);
  }
  std::size_t size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return table_.size();
  }
  void clear() {
    std::lock_guard<std::mutex> lock(mu_);
    table_.clear();
  }

 private:
  mutable std::mutex mu_;
  std::unordered_map<ModeRequestKey, State, ModeRequestHash> table_;
};

/// A graded space on which a VOA acts: the algebra itself or a module.
class Space {
 public:
  explicit Space(std::string name) : name_(std::move(name)) {}
  virtual ~Space() = default;
  Space(const Space&) = delete;
  Space& operator=(const Space&) = delete;

  const std::string& name() const { return name_; }

  /// Conformal weight of level 0.
  virtual Scalar weight_offset() const = 0;
  /// Sorted basis of the given level.
  virtual std::vector<Key> basis(int level) const = 0;
  /// Mode of a generator (given by its key in the algebra) on a basis key.
  virtual State generator_mode(const Key& generator, std::int64_t p, const Key& w) const = 0;
  /// Direct L(n) when the space has a cheaper route than the engine.
  virtual std::optional<State> virasoro_mode(std::int64_t, const Key&) const { return std::nullopt; }
  virtual std::string render(const Key& k) const = 0;

  std::size_t dimension(int level) const { return basis(level).size(); }
  ModeMemo& memo() const { return memo_; }

 private:
  std::string name_;
  mutable ModeMemo memo_;
};

/// u = coeff * generator_j rest, with j < 0.
struct Peel {
  Key generator;
  std::int64_t j;
  Key rest;
  Scalar coeff;
};

class Voa {
 public:
  virtual ~Voa() = default;
  virtual std::string name() const = 0;
  /// The algebra as a module over itself.
  virtual const Space& space() const = 0;
  /// Decomposition of a non-generator, non-vacuum basis key; nullopt means the
  /// key is itself a generator.
  virtual std::optional<Peel> peel(const Key& u) const = 0;
  virtual Key vacuum_key() const = 0;
  virtual State omega() const = 0;
  virtual Scalar central_charge() const = 0;
  /// Generators whose modes generate the action, up to the given weight.
  virtual std::vector<Key> generators(int max_weight) const = 0;

  State vacuum() const { return State(vacuum_key()); }
};

/// Rational weight of a homogeneous state in a space.
Scalar weight(const Space& space, const State& s);
/// Common level of a homogeneous state; MixedWeight or ZeroState otherwise.
int level_of(const State& s);

State mode_apply(const Voa& V, const Key& u, std::int64_t p, const Space& M, const Key& w);
State mode_apply(const Voa& V, const State& u, std::int64_t p, const Space& M, const State& w);
State mode_apply(const Voa& V, const State& u, std::int64_t p, const State& w);

/// L(n) w = omega_{n+1} w.
State l_mode(const Voa& V, std::int64_t n, const Space& M, const State& w);
State l_mode(const Voa& V, std::int64_t n, const State& w);

/// Renders a state as "c*key + ..." in increasing key order.
std::string render(const Space& M, const State& s);

}  // namespace voa
