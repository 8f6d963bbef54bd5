#pragma once

// Distinguished vectors of V_L^+ and the matrix units acting on V_L^-(0).
//
// Everything is written in the rational orthogonal frame a'_1..a'_d of the
// lattice core instead of an orthonormal basis: S'_ab(m,n) =
// a'_a(-m) a'_b(-n) / n_b. With h_a = a'_a / sqrt(n_a) this is the
// orthonormal S_ab(m,n) conjugated by diag(sqrt n_a), so every matrix-unit
// relation is unchanged and all coefficients stay rational. For frames with
// n_a = 2 (for instance Gram diag(2,2)) S' = S.

#include "voa/zhu.hpp"

namespace voa {

class FrameVectors {
 public:
  /// RankTooSmall for rank 1.
  explicit FrameVectors(std::shared_ptr<const FreeBosonVoa> vl);

  const FreeBosonVoa& voa() const { return *vl_; }
  int d() const { return d_; }
  int r() const { return static_cast<int>(vl_->core().roots().simple.size()); }
  int l() const { return static_cast<int>(vl_->core().roots().others.size()); }
  /// d + r + l.
  int size() const { return d_ + r() + l(); }

  /// alpha_1..alpha_{r+l} in lattice coordinates (1-based index i -> roots()[i-1]).
  std::vector<IntVec> roots() const;
  /// b_ik = (alpha_i, a'_k) / n_k, so alpha_i(-1) = sum_k b_ik a'_k(-1). 1-based.
  Scalar b(int i, int k) const;
  /// k_i: the last k <= r with b_{r+i,k} != 0. 1-based.
  int k_index(int i) const;

  // Indices a, b are 1-based frame directions.
  State S(int a, int b, int m, int n) const;
  State E_u(int a, int b) const;
  State Ebar_u(int b, int a) const;
  State E_t(int a, int b) const;
  State Ebar_t(int b, int a) const;
  State Lambda(int a, int b) const;
  /// omega_a = a'_a(-1)^2 / (2 n_a).
  State omega(int a) const;
  /// omega_alpha = alpha(-1)^2 / (2 (alpha, alpha)).
  State omega_root(const IntVec& alpha) const;
  /// alpha(-1) 1.
  State root_oscillator(const IntVec& alpha) const;
  /// E^alpha = e^alpha + e^{-alpha}.
  State E_alpha(const IntVec& alpha) const;
  /// E^u_aa = E^u_ab *_0 E^u_ba with the given b != a.
  State E_u_diag(int a, int b) const;

  /// Every distinguished vector with a label, for the theta-fixedness check.
  std::vector<std::pair<std::string, State>> catalogue() const;

  /// V_L^- as a module (shift 1) and its basis e^1..e^{d+r+l} as states:
  /// e^k = a'_k(-1) and e^{d+j} = o(E^{alpha_j}) alpha_j(-1).
  std::shared_ptr<const ModuleInstance> minus_module() const { return minus_; }
  std::vector<State> minus_basis() const;

 private:
  std::shared_ptr<const FreeBosonVoa> vl_;
  int d_;
  std::shared_ptr<const ModuleInstance> minus_;
};

/// o-actions of the matrix units E^u_ij (1-based, i, j <= d+r+l) on targets.
/// For i, j <= d they are images of the vectors themselves (E^u_aa through
/// the product with b = first index != a); the extended units follow the
/// defining products, evaluated as products of action matrices.
class MatrixUnits {
 public:
  MatrixUnits(const FrameVectors& fv, std::vector<ActionTarget> targets);

  const Matrix& unit(int i, int j) const { return units_.at(i - 1).at(j - 1); }
  const std::vector<ActionTarget>& targets() const { return targets_; }
  /// Block-diagonal o-action of any state of V_L^+.
  Matrix image(const State& v) const { return action_image(frame_.voa(), v, targets_); }
  /// Row/column offset of a target's level-0 block.
  std::size_t offset(std::size_t target) const { return offsets_.at(target); }

 private:
  const FrameVectors& frame_;
  std::vector<ActionTarget> targets_;
  std::vector<std::size_t> offsets_;
  std::vector<std::vector<Matrix>> units_;
};

}  // namespace voa
