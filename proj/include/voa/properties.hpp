#pragma once

// Sampled property suites for the engine and the zoo.

#include <cstdint>
#include <string>
#include <utility>

#include "voa/zhu.hpp"

namespace voa {

struct CheckResult {
  CheckResult() = default;
  explicit CheckResult(std::string n) : name(std::move(n)) {}

  std::string name;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::string counterexample;
  bool passed() const { return failures == 0 && checked > 0; }
  void record(bool ok, const std::string& detail);
};

struct SampleOptions {
  std::uint64_t seed = 1;
  std::size_t samples = 100;
  /// Largest weight of sampled algebra elements.
  int max_weight = 3;
  /// Largest level of sampled module vectors.
  int max_level = 2;
  /// Mode indices are drawn from [min_mode, max_mode].
  int min_mode = -3;
  int max_mode = 3;
};

/// u_{-1} 1 = u and u_n 1 = 0 for n >= 0.
CheckResult creation_axiom(const Voa& V, const SampleOptions& opt);
/// (L(-1) u)_n w = -n u_{n-1} w.
CheckResult derivative_property(const Voa& V, const Space& M, const SampleOptions& opt);
/// [u_m, v_n] w = sum_i C(m, i) (u_i v)_{m+n-i} w.
CheckResult commutator_identity(const Voa& V, const Space& M, const SampleOptions& opt);
/// theta(u_p w) = (theta u)_p (theta w) with w in a self-dual coset.
CheckResult theta_equivariance(const FreeBosonVoa& V, const FreeBosonSpace& M, const SampleOptions& opt);
/// theta(theta(w)) = w on sampled basis states of every registered coset.
CheckResult theta_involution(const FreeBosonVoa& V, const SampleOptions& opt);
/// phi(phi(u)) = u.
CheckResult phi_involution(const Voa& V, const SampleOptions& opt);
/// Every row certificate of an O-span and every membership certificate re-verifies.
CheckResult certificate_reverification(const OSpanResult& span, const SampleOptions& opt);
/// reduce(reduce(X)) = reduce(X) on sampled sets of states.
CheckResult reduce_idempotence(const Voa& V, const SampleOptions& opt);

}  // namespace voa
