#pragma once

// Contravariant pairing between a left module M(U*) and a right module M(U),
// computed by moving left modes across with the adjoint formula and ending on
// a bottom matrix. Gram matrices, radicals, Omega_n and singular vectors.

#include <map>

#include "voa/modules.hpp"

namespace voa {

/// sum_j ((-1)^{wt u} / j!) (L(1)^j u)_{-q + 2 wt u - j - 2} w, u homogeneous.
State adjoint_mode(const Voa& V, const State& u, std::int64_t q, const Space& M, const State& w);

/// Module level of a homogeneous state of M.
int module_level(const ModuleInstance& M, const State& w);

class Pairing {
 public:
  /// Without an explicit bottom matrix B, B is the one-dimensional solution of
  /// o'(u)^T B = B o(phi(u)) over u of weight <= 2, scaled so its first
  /// nonzero entry is 1.
  Pairing(const Voa& V, std::shared_ptr<const ModuleInstance> left, std::shared_ptr<const ModuleInstance> right,
          std::optional<Matrix> bottom = std::nullopt, bool reverse_peel = false);

  const Matrix& bottom() const { return bottom_; }
  const ModuleInstance& left() const { return *left_; }
  const ModuleInstance& right() const { return *right_; }
  /// G[i][j] = (b'_i, b_j) in the level bases.
  const Matrix& gram(int level) const;
  /// Zero for unequal levels.
  Scalar pair(const State& wl, const State& wr) const;

 private:
  Matrix compute_gram(int level) const;
  Matrix adjoint_matrix(const State& g, std::int64_t q, int from_level, int to_level) const;

  const Voa& V_;
  std::shared_ptr<const ModuleInstance> left_, right_;
  Matrix bottom_;
  bool reverse_;
  mutable std::mutex mu_;
  mutable std::map<int, Matrix> grams_;
};

struct InvarianceOutcome {
  bool passed = true;
  std::size_t checked = 0;
  std::string counterexample;
};

/// (u_q w', w) = (w', u^dagger_q w) for one pair of states.
bool invariance_holds(const Pairing& P, const Voa& V, const State& u, std::int64_t q, const State& wl, const State& wr);

/// Checks invariance for every generator u of weight <= max_weight, every q
/// with a nonzero left action, and all basis pairs at levels <= max_level.
InvarianceOutcome invariance_suite(const Pairing& P, const Voa& V, const std::vector<State>& elements, int max_level);

struct GramLevel {
  int level = 0;
  Matrix gram;
  Scalar determinant;
  std::size_t radical_dimension = 0;
  std::vector<State> radical;
  std::vector<State> singular;
};

struct GramReport {
  std::vector<GramLevel> levels;
  /// Generator modes keep the computed radical inside itself.
  bool submodule_stable = true;
  /// Radical equals the submodule generated by the singular vectors found.
  bool matches_singular_submodule = true;
  std::vector<std::size_t> radical_dims() const;
};

GramReport radical(const Pairing& P, const Voa& V, int max_level);

/// Classical Shapovalov form of a Virasoro Verma module at one level:
/// <L(-I) v, L(-J) v> = bottom coefficient of L(i_k)...L(i_1) L(-J) v.
Matrix shapovalov_gram(const VirasoroSpace& M, int level);

/// Generators used for module-level tests: all generators of weight <= bound.
std::vector<State> generator_states(const Voa& V, int max_weight);

/// Vectors at `level` killed by every generator mode lowering the level by more than n.
SubspaceBasis<Key> omega_n(const Voa& V, const ModuleInstance& M, int n, int level);

/// Positive level and killed by every lowering generator mode.
bool singular_check(const Voa& V, const ModuleInstance& M, const State& w);

/// Submodule generated by the seeds, level by level up to max_level.
std::map<int, SubspaceBasis<Key>> generated_submodule(const Voa& V, const ModuleInstance& M,
                                                      const std::vector<State>& seeds, int max_level);

}  // namespace voa
