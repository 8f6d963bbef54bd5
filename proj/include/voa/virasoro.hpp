#pragma once

#include <memory>

#include "voa/engine.hpp"

namespace voa {

/// Non-increasing partitions of n with all parts >= min_part.
std::vector<std::vector<int>> partitions(int n, int min_part);

/// L(-n_1)...L(-n_k) v_h with n_1 >= ... >= n_k. The vacuum module uses
/// parts >= 2 (L(-1) kills the vacuum); a Verma module uses parts >= 1.
class VirasoroSpace : public Space {
 public:
  VirasoroSpace(std::string name, Scalar c, Scalar h, bool vacuum);

  Scalar weight_offset() const override { return h_; }
  std::vector<Key> basis(int level) const override;
  State generator_mode(const Key& generator, std::int64_t p, const Key& w) const override;
  std::optional<State> virasoro_mode(std::int64_t n, const Key& w) const override { return apply_l(n, w); }
  std::string render(const Key& k) const override;

  const Scalar& central_charge() const { return c_; }
  const Scalar& highest_weight() const { return h_; }
  bool is_vacuum() const { return vacuum_; }
  State apply_l(std::int64_t m, const Key& w) const;

 private:
  Scalar c_;
  Scalar h_;
  bool vacuum_;
};

class VirasoroVoa : public Voa {
 public:
  explicit VirasoroVoa(Scalar c);

  std::string name() const override;
  const Space& space() const override { return *space_; }
  std::optional<Peel> peel(const Key& u) const override;
  Key vacuum_key() const override { return Key{}; }
  State omega() const override { return State(omega_key()); }
  Scalar central_charge() const override { return c_; }
  std::vector<Key> generators(int max_weight) const override;

  static Key omega_key() { return Key{2, {}, {2}}; }
  /// Verma module M(c, h) over this algebra.
  std::shared_ptr<VirasoroSpace> verma(const Scalar& h) const;

 private:
  Scalar c_;
  std::unique_ptr<VirasoroSpace> space_;
};

std::shared_ptr<VirasoroVoa> make_virasoro(const Scalar& c);

/// Key of L(-n_1)...L(-n_k) applied to the bottom vector; parts are sorted.
Key virasoro_key(std::vector<int> parts);

}  // namespace voa
